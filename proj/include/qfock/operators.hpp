#pragma once

// Graded operators on the fixed-point module: materialized per-degree sparse
// blocks over RatFun2, so compositions and commutators are plain sparse
// matrix algebra and every check is replayable from the stored blocks.

#include <map>
#include <vector>
#include <functional>
#include <optional>

#include "qfock/partition.hpp"
#include "qfock/ratfun2.hpp"
#include "qfock/fock_coeffs.hpp"

namespace qfock {

// Vector in the module: sparse map Partition -> coefficient.
using FockVector = std::map<Partition, RatFun2>;

inline void fv_add(FockVector& v, const Partition& lam, const RatFun2& c) {
    if (c.is_zero()) return;
    auto it = v.find(lam);
    if (it == v.end()) {
        v.emplace(lam, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) v.erase(it);
    }
}

inline bool fv_equal(const FockVector& a, const FockVector& b) {
    // coefficients are canonical but compare via op== anyway
    if (a.size() != b.size()) {
        // sizes can differ only if some entry is zero, which fv_add prevents
        return false;
    }
    for (auto& [lam, c] : a) {
        auto it = b.find(lam);
        if (it == b.end() || !(it->second == c)) return false;
    }
    return true;
}

// Sparse block: (row partition, col partition) -> entry.
using SparseBlock = std::map<std::pair<Partition, Partition>, RatFun2>;

class GradedOperator {
  public:
    GradedOperator() : shift_(0) {}
    explicit GradedOperator(int shift) : shift_(shift) {}

    // Materialize from a column action: action(lam) lists the image of [lam].
    static GradedOperator build(int shift, int n_max,
                                const std::function<FockVector(const Partition&)>& action) {
        GradedOperator op(shift);
        for (int n = 0; n <= n_max; ++n) {
            if (n + shift < 0) {
                // target space is zero-dimensional: record an explicit zero
                // block so compositions and sums still cover this degree
                op.blocks_.emplace(n, SparseBlock{});
                continue;
            }
            SparseBlock blk;
            for (auto& lam : partitions_of(n))
                for (auto& [mu, c] : action(lam)) blk.emplace(std::make_pair(mu, lam), c);
            op.blocks_.emplace(n, std::move(blk));
        }
        return op;
    }

    static GradedOperator from_blocks(int shift, std::map<int, SparseBlock> blocks) {
        GradedOperator r(shift);
        r.blocks_ = std::move(blocks);
        return r;
    }

    static GradedOperator e_op(int r, int n_max) {
        return build(1, n_max, [r](const Partition& lam) {
            FockVector v;
            for (int k : addable_rows(lam)) fv_add(v, add_row(lam, k), e_coeff(lam, k, r));
            return v;
        });
    }

    static GradedOperator f_op(int r, int n_max) {
        return build(-1, n_max, [r](const Partition& lam) {
            FockVector v;
            for (int k : removable_rows(lam)) fv_add(v, remove_row(lam, k), f_coeff(lam, k, r));
            return v;
        });
    }

    int shift() const { return shift_; }
    const std::map<int, SparseBlock>& blocks() const { return blocks_; }

    bool has_block(int n) const { return blocks_.count(n) != 0; }

    FockVector apply_basis(int n, const Partition& lam) const {
        FockVector v;
        auto it = blocks_.find(n);
        if (it == blocks_.end()) return v;
        for (auto& [rc, c] : it->second)
            if (rc.second == lam) fv_add(v, rc.first, c);
        return v;
    }

    FockVector apply(const FockVector& v) const {
        FockVector out;
        for (auto& [lam, c] : v) {
            for (auto& [mu, e] : apply_basis(part_size(lam), lam)) fv_add(out, mu, e * c);
        }
        return out;
    }

    // Composition this∘other (apply other first). Defined on source degrees
    // where both needed blocks exist.
    GradedOperator compose(const GradedOperator& other) const {
        GradedOperator r(shift_ + other.shift_);
        for (auto& [n, oblk] : other.blocks_) {
            if (n + other.shift_ < 0) {
                // intermediate space is zero-dimensional, composition vanishes
                r.blocks_.emplace(n, SparseBlock{});
                continue;
            }
            auto it = blocks_.find(n + other.shift_);
            if (it == blocks_.end()) continue;
            SparseBlock out;
            // group the left block rows by column for the join
            for (auto& [rc2, c2] : oblk) {
                for (auto& [rc1, c1] : it->second) {
                    if (rc1.second != rc2.first) continue;
                    RatFun2 prod = c1 * c2;
                    if (prod.is_zero()) continue;
                    auto key = std::make_pair(rc1.first, rc2.second);
                    auto jt = out.find(key);
                    if (jt == out.end()) {
                        out.emplace(key, prod);
                    } else {
                        jt->second += prod;
                        if (jt->second.is_zero()) out.erase(jt);
                    }
                }
            }
            r.blocks_.emplace(n, std::move(out));
        }
        return r;
    }

    GradedOperator operator*(const RatFun2& c) const {
        GradedOperator r(shift_);
        for (auto& [n, blk] : blocks_) {
            SparseBlock out;
            for (auto& [rc, e] : blk) {
                RatFun2 p = e * c;
                if (!p.is_zero()) out.emplace(rc, p);
            }
            r.blocks_.emplace(n, std::move(out));
        }
        return r;
    }

    GradedOperator operator+(const GradedOperator& o) const {
        if (shift_ != o.shift_) throw std::invalid_argument("operator+: shift mismatch");
        GradedOperator r(shift_);
        for (auto& [n, blk] : blocks_) {
            auto it = o.blocks_.find(n);
            if (it == o.blocks_.end()) continue;  // keep only degrees known to both
            SparseBlock out = blk;
            for (auto& [rc, e] : it->second) {
                auto jt = out.find(rc);
                if (jt == out.end()) {
                    out.emplace(rc, e);
                } else {
                    jt->second += e;
                    if (jt->second.is_zero()) out.erase(jt);
                }
            }
            r.blocks_.emplace(n, std::move(out));
        }
        return r;
    }

    GradedOperator operator-(const GradedOperator& o) const { return *this + (o * RatFun2(-1L)); }

    bool same_as(const GradedOperator& o) const {
        if (shift_ != o.shift_) return false;
        for (auto& [n, blk] : blocks_) {
            auto it = o.blocks_.find(n);
            if (it == o.blocks_.end()) continue;
            if (blk.size() != it->second.size()) return false;
            for (auto& [rc, e] : blk) {
                auto jt = it->second.find(rc);
                if (jt == it->second.end() || !(jt->second == e)) return false;
            }
        }
        return true;
    }

    bool is_zero_on_known_blocks() const {
        for (auto& [n, blk] : blocks_)
            if (!blk.empty()) return false;
        return true;
    }

    // For shift 0: true if every off-diagonal entry vanishes; on success
    // fills diag with the eigenvalue per partition.
    bool diagonal_entries(std::map<Partition, RatFun2>& diag,
                          std::optional<std::pair<Partition, Partition>>* witness = nullptr) const {
        diag.clear();
        for (auto& [n, blk] : blocks_) {
            for (auto& lam : partitions_of(n)) diag.emplace(lam, RatFun2());
            for (auto& [rc, e] : blk) {
                if (rc.first != rc.second) {
                    if (witness) *witness = rc;
                    return false;
                }
                diag[rc.first] = e;
            }
        }
        return true;
    }

  private:
    int shift_;
    std::map<int, SparseBlock> blocks_;
};

}  // namespace qfock
