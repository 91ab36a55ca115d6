#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qalg/scalars.hpp"

namespace qalg {

/// Sparse square matrix over a commutative coefficient ring K.
template <class K>
class SparseMat {
public:
    explicit SparseMat(int dim) : dim_(dim) {}
    static SparseMat identity(int dim) {
        SparseMat m(dim);
        for (int i = 0; i < dim; ++i) m.set(i, i, K(1));
        return m;
    }

    int dim() const { return dim_; }
    bool is_zero() const { return e_.empty(); }
    const std::map<std::pair<int, int>, K>& entries() const { return e_; }

    void set(int r, int c, K v) {
        if (v.is_zero()) e_.erase({r, c});
        else e_[{r, c}] = std::move(v);
    }
    void add(int r, int c, const K& v) {
        if (v.is_zero()) return;
        auto [it, fresh] = e_.emplace(std::make_pair(r, c), v);
        if (!fresh) {
            it->second += v;
            if (it->second.is_zero()) e_.erase(it);
        }
    }
    K at(int r, int c) const {
        auto it = e_.find({r, c});
        return it == e_.end() ? K(0) : it->second;
    }

    SparseMat operator*(const SparseMat& o) const {
        SparseMat out(dim_);
        for (const auto& [rc, v] : e_)
            for (int k = 0; k < dim_; ++k) {
                auto it = o.e_.find({rc.second, k});
                if (it == o.e_.end()) continue;
                K p = v;
                p *= it->second;
                out.add(rc.first, k, p);
            }
        return out;
    }
    SparseMat operator-(const SparseMat& o) const {
        SparseMat out = *this;
        for (const auto& [rc, v] : o.e_) out.add(rc.first, rc.second, -v);
        return out;
    }
    SparseMat operator+(const SparseMat& o) const {
        SparseMat out = *this;
        for (const auto& [rc, v] : o.e_) out.add(rc.first, rc.second, v);
        return out;
    }
    SparseMat scaled(const K& c) const {
        SparseMat out(dim_);
        for (const auto& [rc, v] : e_) {
            K p = v;
            p *= c;
            out.add(rc.first, rc.second, p);
        }
        return out;
    }
    bool operator==(const SparseMat& o) const { return dim_ == o.dim_ && e_ == o.e_; }

private:
    int dim_;
    std::map<std::pair<int, int>, K> e_;
};

/// Operator on the twofold tensor space (k^n)^(x2); rows and columns are
/// indexed by pairs (i,s), flattened lexicographically.
struct TensorOperator {
    int n;
    SparseMat<Scalar> mat;

    explicit TensorOperator(int n_) : n(n_), mat(n_ * n_) {}

    static int flat(int n, int i, int s) { return (i - 1) * n + (s - 1); }
    Scalar entry(int i, int s, int j, int t) const {
        return mat.at(flat(n, i, s), flat(n, j, t));
    }
};

/// The standard R-matrix of the vector representation.
TensorOperator build_r(int n);
/// Flip composed with R: (r_hat)^{is}_{jt} = R^{si}_{jt}.
TensorOperator build_r_hat(int n);

struct OperatorCheck {
    bool ok;
    SparseMat<Scalar> residual;
};

/// (R_hat - q)(R_hat + q^{-1}) = 0, exactly.
OperatorCheck check_hecke(int n);
/// Braid relation on the threefold tensor space, exactly.
OperatorCheck check_braid(int n);

/// Kronecker helpers on flattened tensor indices.
SparseMat<Scalar> kron_left(const SparseMat<Scalar>& a, int n);   // a (x) Id_n
SparseMat<Scalar> kron_right(int n, const SparseMat<Scalar>& a);  // Id_n (x) a

} // namespace qalg
