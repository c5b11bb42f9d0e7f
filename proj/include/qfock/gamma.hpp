#pragma once

// The diagonal eigenvalue family gamma_s = [e_0, f_s] on [lambda], computed
// by three independent routes:
//   1. directly as the commutator of matrix coefficients,
//   2. as the corner/hole weighted sum,
//   3. from the row-product formula, with both infinite products truncated at
//      a common bound M, the stabilized tails telescoped in closed form with
//      U := t2^M kept formal, and the exact value read off as the U^0
//      coefficient of the expansion at U = infinity (normalized by 1-t1*t2).

#include "qfock/partition.hpp"
#include "qfock/fock_coeffs.hpp"
#include "qfock/useries.hpp"

namespace qfock {

inline RatFun2 gamma_commutator(const Partition& lam, int s) {
    return ef_commutator_diag(lam, 0, s);
}

namespace detail {

// Shared product over the companion boxes of a corner/hole at (k, jb);
// arms/legs measured in `ref` (the diagram containing the pivot box).
inline RatFun2 corner_hole_weight(const Partition& boxes_of_diagram, const Partition& ref,
                                  int k, int jb) {
    Laurent2 num = Laurent2::one(), den = Laurent2::one();
    for (auto& b : row_boxes_before(boxes_of_diagram, k, jb)) {
        int l = leg(ref, b.i, b.j), a = arm(ref, b.i, b.j);
        num *= one_minus(l + 1, -a) * one_minus(-l + 1, a + 1);
        den *= one_minus(l, -a) * one_minus(-l, a + 1);
    }
    for (auto& b : col_boxes_above(boxes_of_diagram, k, jb)) {
        int l = leg(ref, b.i, b.j), a = arm(ref, b.i, b.j);
        num *= one_minus(-l, a + 1) * one_minus(l + 1, -a + 1);
        den *= one_minus(-l, a) * one_minus(l + 1, -a);
    }
    return RatFun2(num, den);
}

}  // namespace detail

inline RatFun2 gamma_corner_hole(const Partition& lam, int s) {
    RatFun2 acc;
    for (int k : removable_rows(lam)) {
        int jb = part_get(lam, k);  // corner box (k, lam_k)
        RatFun2 w = detail::corner_hole_weight(lam, lam, k, jb);
        RatFun2 chi_pow(Laurent2::monomial((s - 1) * (jb - 1), (s - 1) * (k - 1)));
        acc += w * chi_pow;
    }
    for (int k : addable_rows(lam)) {
        int jb = part_get(lam, k) + 1;  // hole box (k, lam_k + 1)
        Partition ref = add_row(lam, k);
        RatFun2 w = detail::corner_hole_weight(lam, ref, k, jb);
        RatFun2 chi_pow(Laurent2::monomial((s - 1) * (jb - 1), (s - 1) * (k - 1)));
        acc -= w * chi_pow;
    }
    return acc * RatFun2(Laurent2::one(), one_minus(1, 0) * one_minus(0, 1));
}

inline RatFun2 gamma_row_product(const Partition& lam, int s) {
    int L = (int)lam.size() + 1;
    RatFun2 acc;
    for (int i = 1; i <= L; ++i) {
        int li = part_get(lam, i);
        // finite parts of the two products, j = 1..L, j != i
        Laurent2 anum = Laurent2::one(), aden = Laurent2::one();
        Laurent2 bnum = Laurent2::one(), bden = Laurent2::one();
        for (int j = 1; j <= L; ++j) {
            if (j == i) continue;
            int lj = part_get(lam, j);
            anum *= one_minus(li - lj, i - j + 1) * one_minus(lj - li + 1, j - i + 1);
            aden *= one_minus(li - lj, i - j) * one_minus(lj - li + 1, j - i);
            bnum *= one_minus(lj - li, j - i + 1) * one_minus(li - lj + 1, i - j + 1);
            bden *= one_minus(lj - li, j - i) * one_minus(li - lj + 1, i - j);
        }
        // Telescoped tail of the j > L part of either product, truncated at a
        // common bound M with U := t2^M formal (u = t1^ue, v = t1^ve):
        //   (1 - u t2^{i-L})(1 - v U t2^{1-i}) / ((1 - u t2^i/U)(1 - v t2^{L+1-i}))
        // As U -> infinity the Laurent expansion of each summand has constant
        // term (1 - u t2^{i-L})(1 - uv t2) / (1 - v t2^{L+1-i}); here
        // uv t2 = t1 t2 for both products, and dividing the total by the
        // universal factor (1 - t1 t2) recovers gamma_s exactly.
        auto tail_const = [&](int ue, int ve) {
            return RatFun2(one_minus(ue, i - L), one_minus(ve, L + 1 - i));
        };
        acc += RatFun2(anum * Laurent2::monomial((s - 1) * (li - 1), (s - 1) * (i - 1)), aden) *
               tail_const(li, 1 - li);
        acc -= RatFun2(bnum * Laurent2::monomial((s - 1) * li, (s - 1) * (i - 1)), bden) *
               tail_const(li + 1, -li);
    }
    Laurent2 omt1 = one_minus(1, 0);
    return acc * RatFun2(Laurent2::one(), omt1 * omt1);
}

}  // namespace qfock
