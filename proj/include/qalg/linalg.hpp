#pragma once

#include <map>
#include <vector>

namespace qalg {

/// Sparse row vector over a field K, indexed by dense column ids.
template <class K>
using SparseRow = std::map<int, K>;

/// Incremental exact Gaussian elimination over a field K. Rows are kept
/// fully reduced against each other with unit pivots; insertion order is
/// irrelevant to the resulting rank.
template <class K>
class Eliminator {
public:
    long rank() const { return static_cast<long>(basis_.size()); }

    /// Reduce r against the current basis (in place); the result has no
    /// support on any pivot column.
    void reduce(SparseRow<K>& r) const {
        auto it = r.begin();
        while (it != r.end()) {
            auto b = basis_.find(it->first);
            if (b == basis_.end()) {
                ++it;
                continue;
            }
            K f = it->second;
            r.erase(it);
            // basis rows carry a unit pivot; their rest columns lie past it
            for (const auto& [col, v] : b->second) {
                K d = f;
                d *= v;
                auto [slot, fresh] = r.emplace(col, -d);
                if (!fresh) {
                    slot->second -= d;
                    if (slot->second.is_zero()) r.erase(slot);
                }
            }
            it = r.upper_bound(b->first);
        }
    }

    /// Insert a row; returns true when it increased the rank.
    bool insert(SparseRow<K> r) {
        reduce(r);
        if (r.empty()) return false;
        // pivot on the smallest column; scale to a unit pivot
        auto pivot = r.begin()->first;
        K inv = r.begin()->second.inv();
        SparseRow<K> row;
        for (auto& [col, v] : r) {
            if (col == pivot) continue;
            v *= inv;
            row.emplace(col, std::move(v));
        }
        // back-substitute into existing basis rows
        for (auto& [p, b] : basis_) {
            auto hit = b.find(pivot);
            if (hit == b.end()) continue;
            K f = hit->second;
            b.erase(hit);
            for (const auto& [col, v] : row) {
                K d = f;
                d *= v;
                auto [slot, fresh] = b.emplace(col, -d);
                if (!fresh) {
                    slot->second -= d;
                    if (slot->second.is_zero()) b.erase(slot);
                }
            }
        }
        basis_.emplace(pivot, std::move(row));
        return true;
    }

    /// Membership in the row span.
    bool contains(SparseRow<K> r) const {
        reduce(r);
        return r.empty();
    }

private:
    // pivot column -> rest of the unit-pivot row (pivot entry omitted)
    std::map<int, SparseRow<K>> basis_;
};

} // namespace qalg
