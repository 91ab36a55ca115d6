#include "qalg/rmatrix.hpp"

#include "qalg/errors.hpp"

namespace qalg {

TensorOperator build_r(int n) {
    if (n < 1) throw invalid_parameter_error("build_r: n must be >= 1");
    TensorOperator r(n);
    Scalar q = Scalar::q();
    Scalar mu = q - Scalar::q_power(-1);
    for (int i = 1; i <= n; ++i)
        for (int s = 1; s <= n; ++s)
            for (int j = 1; j <= n; ++j)
                for (int t = 1; t <= n; ++t) {
                    Scalar v;
                    if (i == j && s == t && i == s) v = q;
                    else if (i == j && s == t) v = Scalar(1);
                    else if (i > j && i == t && j == s) v = mu;
                    else continue;
                    r.mat.set(TensorOperator::flat(n, i, s), TensorOperator::flat(n, j, t), v);
                }
    return r;
}

TensorOperator build_r_hat(int n) {
    TensorOperator r = build_r(n);
    TensorOperator rh(n);
    for (const auto& [rc, v] : r.mat.entries()) {
        int i = rc.first / n + 1, s = rc.first % n + 1;
        rh.mat.set(TensorOperator::flat(n, s, i), rc.second, v);
    }
    return rh;
}

OperatorCheck check_hecke(int n) {
    TensorOperator rh = build_r_hat(n);
    int d = n * n;
    SparseMat<Scalar> id = SparseMat<Scalar>::identity(d);
    SparseMat<Scalar> a = rh.mat - id.scaled(Scalar::q());
    SparseMat<Scalar> b = rh.mat + id.scaled(Scalar::q_power(-1));
    SparseMat<Scalar> res = a * b;
    return {res.is_zero(), res};
}

SparseMat<Scalar> kron_left(const SparseMat<Scalar>& a, int n) {
    SparseMat<Scalar> out(a.dim() * n);
    for (const auto& [rc, v] : a.entries())
        for (int k = 0; k < n; ++k) out.set(rc.first * n + k, rc.second * n + k, v);
    return out;
}

SparseMat<Scalar> kron_right(int n, const SparseMat<Scalar>& a) {
    SparseMat<Scalar> out(n * a.dim());
    for (const auto& [rc, v] : a.entries())
        for (int k = 0; k < n; ++k)
            out.set(k * a.dim() + rc.first, k * a.dim() + rc.second, v);
    return out;
}

OperatorCheck check_braid(int n) {
    TensorOperator rh = build_r_hat(n);
    SparseMat<Scalar> r12 = kron_left(rh.mat, n);
    SparseMat<Scalar> r23 = kron_right(n, rh.mat);
    SparseMat<Scalar> lhs = r12 * r23 * r12;
    SparseMat<Scalar> rhs = r23 * r12 * r23;
    SparseMat<Scalar> res = lhs - rhs;
    return {res.is_zero(), res};
}

} // namespace qalg
