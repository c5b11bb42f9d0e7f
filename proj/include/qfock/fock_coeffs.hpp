#pragma once

// Matrix coefficients of the raising/lowering families on the fixed-point
// basis. e_coeff(lam,k,r) is the coefficient of [lam+box in row k] in
// e_r [lam]; f_coeff(lam,k,r) the coefficient of [lam-box in row k] in
// f_r [lam]. Arms and legs are always measured in the diagram that contains
// the pivot box (lam+box for e, lam itself for f).

#include "qfock/partition.hpp"
#include "qfock/ratfun2.hpp"
#include "qfock/factored.hpp"

namespace qfock {

inline FactoredRat e_coeff_factored(const Partition& lam, int k, int r) {
    Partition ref = add_row(lam, k);
    int jb = part_get(lam, k) + 1;  // column of the added box
    FactoredRat v;
    // prefactor (t1^{lam_k} t2^{k-1})^r / ((1-t1)(1-t2))
    v.mul_monomial(r * part_get(lam, k), r * (k - 1));
    v.mul_binom(1, 0, -1);
    v.mul_binom(0, 1, -1);
    for (auto& b : row_boxes_before(lam, k, jb)) {
        int l = leg(ref, b.i, b.j), a = arm(ref, b.i, b.j);
        v.mul_binom(-l + 1, a + 1);
        v.mul_binom(-l, a + 1, -1);
    }
    for (auto& b : col_boxes_above(lam, k, jb)) {
        int l = leg(ref, b.i, b.j), a = arm(ref, b.i, b.j);
        v.mul_binom(l + 1, -a + 1);
        v.mul_binom(l + 1, -a, -1);
    }
    return v;
}

inline RatFun2 e_coeff(const Partition& lam, int k, int r) {
    return e_coeff_factored(lam, k, r).to_ratfun();
}

inline FactoredRat f_coeff_factored(const Partition& lam, int k, int r) {
    int jb = part_get(lam, k);  // column of the removed box
    FactoredRat v;
    v.mul_monomial((r - 1) * (jb - 1), (r - 1) * (k - 1));
    for (auto& b : row_boxes_before(lam, k, jb)) {
        int l = leg(lam, b.i, b.j), a = arm(lam, b.i, b.j);
        v.mul_binom(l + 1, -a);
        v.mul_binom(l, -a, -1);
    }
    for (auto& b : col_boxes_above(lam, k, jb)) {
        int l = leg(lam, b.i, b.j), a = arm(lam, b.i, b.j);
        v.mul_binom(-l, a + 1);
        v.mul_binom(-l, a, -1);
    }
    return v;
}

inline RatFun2 f_coeff(const Partition& lam, int k, int r) {
    return f_coeff_factored(lam, k, r).to_ratfun();
}

// Alternate closed product formulas (independent route, used as an internal
// cross-check). e_coeff_alt takes the larger diagram of the pair (the target
// lam+box in row i); f_coeff_alt takes the smaller one (the target, with the
// removed box having sat in row i). Products stabilize beyond len(lam)+1.
inline RatFun2 e_coeff_alt(const Partition& lam, int i, int r) {
    int li = part_get(lam, i);
    Laurent2 num = Laurent2::monomial(r * (li - 1), r * (i - 1));
    Laurent2 den = one_minus(part_get(lam, 1) - li + 1, 1 - i) * one_minus(1, 1);
    for (int j = 1; j <= (int)lam.size() + 1; ++j) {
        num *= one_minus(part_get(lam, j) - li + 1, j - i + 1);
        den *= one_minus(part_get(lam, j + 1) - li + 1, j - i + 1);
    }
    return RatFun2(num, den);
}

inline RatFun2 f_coeff_alt(const Partition& lam, int i, int r) {
    int li = part_get(lam, i);
    Laurent2 num = Laurent2::monomial((r - 1) * li, (r - 1) * (i - 1));
    num *= one_minus(li - part_get(lam, 1) + 1, i);
    Laurent2 den = one_minus(1, 1);
    for (int j = 1; j <= (int)lam.size() + 1; ++j) {
        num *= one_minus(li - part_get(lam, j + 1) + 1, i - j);
        den *= one_minus(li - part_get(lam, j) + 1, i - j);
    }
    return RatFun2(num, den);
}

// Diagonal entry of [e_a, f_b] on [lam].
inline RatFun2 ef_commutator_diag(const Partition& lam, int a, int b) {
    RatFun2 val;
    for (int k : removable_rows(lam))
        val += f_coeff(lam, k, b) * e_coeff(remove_row(lam, k), k, a);
    for (int k : addable_rows(lam))
        val -= e_coeff(lam, k, a) * f_coeff(add_row(lam, k), k, b);
    return val;
}

}  // namespace qfock
