#pragma once

// Graded operators with CycRat entries: the compute vehicle for composition
// chains and operator identities. All arithmetic is gcd-free (numerators are
// expanded, denominators stay factored); entries are reduced or expanded to
// canonical RatFun2 form only when an operator is materialized for output.

#include <map>
#include <limits>
#include <utility>
#include <functional>

#include "qfock/partition.hpp"
#include "qfock/factored.hpp"
#include "qfock/fock_coeffs.hpp"
#include "qfock/operators.hpp"

namespace qfock {

struct CycOp {
    int shift = 0;
    std::map<int, std::map<std::pair<Partition, Partition>, CycRat>> blocks;

    // Composition this∘other (apply other first), on source degrees where
    // both needed blocks exist.
    CycOp compose(const CycOp& other) const {
        CycOp r;
        r.shift = shift + other.shift;
        for (auto& [n, oblk] : other.blocks) {
            if (n + other.shift < 0) {
                // intermediate space is zero-dimensional, composition vanishes
                r.blocks.emplace(n, std::map<std::pair<Partition, Partition>, CycRat>{});
                continue;
            }
            auto it = blocks.find(n + other.shift);
            if (it == blocks.end()) continue;
            std::map<std::pair<Partition, Partition>, CycRat> out;
            for (auto& [rc2, c2] : oblk)
                for (auto& [rc1, c1] : it->second) {
                    if (rc1.second != rc2.first) continue;
                    out[{rc1.first, rc2.second}].add_scaled(c1 * c2, BigRat(1));
                }
            for (auto it2 = out.begin(); it2 != out.end();)
                it2 = it2->second.is_zero() ? out.erase(it2) : std::next(it2);
            r.blocks.emplace(n, std::move(out));
        }
        return r;
    }

    void scale(const BigRat& c) {
        for (auto& [n, blk] : blocks)
            for (auto& [rc, e] : blk) e.scale(c);
    }

    // this += c * o, on degrees known to both (other degrees are dropped)
    void add_scaled(const CycOp& o, const BigRat& c) {
        for (auto it = blocks.begin(); it != blocks.end();) {
            auto jt = o.blocks.find(it->first);
            if (jt == o.blocks.end()) {
                it = blocks.erase(it);
                continue;
            }
            auto& blk = it->second;
            for (auto& [rc, e] : jt->second) blk[rc].add_scaled(e, c);
            for (auto it2 = blk.begin(); it2 != blk.end();)
                it2 = it2->second.is_zero() ? blk.erase(it2) : std::next(it2);
            ++it;
        }
    }

    // this += c * o with a rational-function coefficient
    void add_scaled(const CycOp& o, const CycRat& c) {
        for (auto it = blocks.begin(); it != blocks.end();) {
            auto jt = o.blocks.find(it->first);
            if (jt == o.blocks.end()) {
                it = blocks.erase(it);
                continue;
            }
            auto& blk = it->second;
            for (auto& [rc, e] : jt->second) blk[rc].add_scaled(e * c, BigRat(1));
            for (auto it2 = blk.begin(); it2 != blk.end();)
                it2 = it2->second.is_zero() ? blk.erase(it2) : std::next(it2);
            ++it;
        }
    }

    void reduce_entries() {
        for (auto& [n, blk] : blocks)
            for (auto& [rc, e] : blk) e.reduce();
    }

    // Entries are exact (zero iff the expanded numerator is zero), so this is
    // an exact zero test on all stored blocks up to the given source degree.
    bool zero_up_to(int max_degree, std::pair<Partition, Partition>* witness = nullptr) const {
        for (auto& [n, blk] : blocks) {
            if (n > max_degree) continue;
            for (auto& [rc, e] : blk)
                if (!e.is_zero()) {
                    if (witness) *witness = rc;
                    return false;
                }
        }
        return true;
    }

    bool zero_on_known_blocks(std::pair<Partition, Partition>* witness = nullptr) const {
        return zero_up_to(std::numeric_limits<int>::max(), witness);
    }

    GradedOperator to_graded() const {
        std::map<int, SparseBlock> out;
        for (auto& [n, blk] : blocks) {
            SparseBlock b;
            for (auto& [rc, e] : blk) {
                RatFun2 v = e.to_ratfun();
                if (!v.is_zero()) b.emplace(rc, v);
            }
            out.emplace(n, std::move(b));
        }
        return GradedOperator::from_blocks(shift, std::move(out));
    }

    // Materialize from a column action given in factored form.
    static CycOp build(int shift, int n_max,
                       const std::function<std::map<Partition, FactoredRat>(const Partition&)>& action) {
        CycOp op;
        op.shift = shift;
        for (int n = 0; n <= n_max; ++n) {
            auto& blk = op.blocks[n];
            if (n + shift < 0) continue;  // zero-dimensional target: empty block
            for (auto& lam : partitions_of(n))
                for (auto& [mu, c] : action(lam)) {
                    CycRat v = CycRat::from_factored(c);
                    if (!v.is_zero()) blk.emplace(std::make_pair(mu, lam), std::move(v));
                }
        }
        return op;
    }

    static CycOp e_op(int r, int n_max) {
        return build(1, n_max, [r](const Partition& lam) {
            std::map<Partition, FactoredRat> v;
            for (int k : addable_rows(lam)) v.emplace(add_row(lam, k), e_coeff_factored(lam, k, r));
            return v;
        });
    }

    static CycOp f_op(int r, int n_max) {
        return build(-1, n_max, [r](const Partition& lam) {
            std::map<Partition, FactoredRat> v;
            for (int k : removable_rows(lam)) v.emplace(remove_row(lam, k), f_coeff_factored(lam, k, r));
            return v;
        });
    }
};

}  // namespace qfock
