#pragma once

// Shuffle algebra: elements are symmetric Laurent numerators over the
// implicit denominator prod_{i<j} (x_i - x_j)^2, the star product uses the
// cubic kernel, and the action on the fixed-point module goes through chains
// of added boxes.

#include <vector>
#include <algorithm>
#include <stdexcept>

#include "qfock/multipoly.hpp"
#include "qfock/partition.hpp"
#include "qfock/fock_coeffs.hpp"
#include "qfock/operators.hpp"
#include "qfock/cyc_op.hpp"

namespace qfock {

// q-parameters of the kernel: q1*q2*q3 = 1.
inline RatFun2 q_param(int i) {
    switch (i) {
        case 1: return RatFun2::t1();
        case 2: return RatFun2::t2();
        case 3: return RatFun2(Laurent2::monomial(-1, -1));
    }
    throw std::invalid_argument("q_param: index must be 1, 2, or 3");
}

struct ShuffleElement {
    int arity;
    MultiPoly numerator;  // symmetric Laurent polynomial in x_1..x_arity

    ShuffleElement(int n, MultiPoly num) : arity(n), numerator(std::move(num)) {
        if (numerator.nvars() != n) throw std::invalid_argument("ShuffleElement: arity mismatch");
        if (!numerator.is_symmetric())
            throw std::invalid_argument("ShuffleElement: numerator not symmetric");
    }

    // the unit (arity 0)
    static ShuffleElement unit() { return ShuffleElement(0, MultiPoly::constant(0, RatFun2::one())); }

    // x^r in the one-variable component
    static ShuffleElement generator(int r) {
        return ShuffleElement(1, MultiPoly::var_pow(1, 1, r));
    }
};

// Kernel numerator K(x_i, x_j) = (x_i - q1 x_j)(x_i - q2 x_j)(x_i - q3 x_j)
// embedded into an nvars-variable polynomial.
inline MultiPoly kernel_num(int nvars, int i, int j) {
    MultiPoly r = MultiPoly::constant(nvars, RatFun2::one());
    for (int q = 1; q <= 3; ++q) {
        MultiPoly f = MultiPoly::var_pow(nvars, i, 1) - MultiPoly::var_pow(nvars, j, 1) * q_param(q);
        r *= f;
    }
    return r;
}

// Re-index an m-variable numerator onto the variables listed in pos (0-based
// indices into an nvars-variable polynomial ring).
inline MultiPoly embed_vars(const MultiPoly& p, int nvars, const std::vector<int>& pos) {
    MultiPoly r(nvars);
    ExpVec e(nvars);
    for (auto& [src, c] : p.terms()) {
        std::fill(e.begin(), e.end(), 0);
        for (std::size_t a = 0; a < pos.size(); ++a) e[pos[a]] = src[a];
        r.add_term(e, c);
    }
    return r;
}

// Star product with Sym realized as the sum over (m,n)-shuffles (no factorial
// normalization). The per-shuffle terms are cleared to the common denominator
// prod_{i<j}(x_i - x_j) and the total is divided out exactly at the end.
inline ShuffleElement star_product(const ShuffleElement& Fin, const ShuffleElement& Gin) {
    // the kernel direction is chosen so that acting on the fixed-point basis
    // is a homomorphism: act(F*G) = act(F) o act(G)
    const ShuffleElement &F = Gin, &G = Fin;
    int m = F.arity, n = G.arity, N = m + n;
    if (m == 0) return G;
    if (n == 0) return F;

    MultiPoly total(N);
    // iterate over all m-subsets S of {0..N-1}
    std::vector<int> S(m);
    std::vector<bool> in_S(N);
    auto process = [&]() {
        std::fill(in_S.begin(), in_S.end(), false);
        for (int s : S) in_S[s] = true;
        std::vector<int> T;
        for (int i = 0; i < N; ++i)
            if (!in_S[i]) T.push_back(i);
        // sign from reordering the cross Vandermonde factors
        int crossings = 0;
        for (int i = 0; i < N; ++i)
            if (!in_S[i])
                for (int j = i + 1; j < N; ++j)
                    if (in_S[j]) ++crossings;
        MultiPoly term = embed_vars(F.numerator, N, S) * embed_vars(G.numerator, N, T);
        for (int s : S)
            for (int t : T) term *= kernel_num(N, s + 1, t + 1);
        for (std::size_t a = 0; a < S.size(); ++a)
            for (std::size_t b = a + 1; b < S.size(); ++b)
                term *= MultiPoly::diff(N, S[a] + 1, S[b] + 1);
        for (std::size_t a = 0; a < T.size(); ++a)
            for (std::size_t b = a + 1; b < T.size(); ++b)
                term *= MultiPoly::diff(N, T[a] + 1, T[b] + 1);
        if (crossings % 2) term = -term;
        total += term;
    };
    // subset enumeration in lexicographic order
    for (int i = 0; i < m; ++i) S[i] = i;
    while (true) {
        process();
        int i = m - 1;
        while (i >= 0 && S[i] == N - m + i) --i;
        if (i < 0) break;
        ++S[i];
        for (int j = i + 1; j < m; ++j) S[j] = S[j - 1] + 1;
    }
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) total = total.div_exact_diff(i, j);
    return ShuffleElement(N, std::move(total));
}

// The commuting family: numerator prod_{i<j} (z_i - t1 z_j)(z_j - t1 z_i).
inline ShuffleElement k_element(int n) {
    if (n < 1) throw std::invalid_argument("k_element: n >= 1");
    MultiPoly num = MultiPoly::constant(n, RatFun2::one());
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            num *= MultiPoly::var_pow(n, i, 1) - MultiPoly::var_pow(n, j, 1) * RatFun2::t1();
            num *= MultiPoly::var_pow(n, j, 1) - MultiPoly::var_pow(n, i, 1) * RatFun2::t1();
        }
    return ShuffleElement(n, std::move(num));
}

// Wheel condition: numerator must vanish under (x1,x2,x3) = (q1 qj s, qj s, s)
// for j = 2 and j = 3, with s and the remaining variables symbolic.
inline bool wheel_check(const ShuffleElement& F) {
    if (F.arity < 3) throw std::invalid_argument("wheel_check: arity >= 3 required");
    for (int j = 2; j <= 3; ++j) {
        RatFun2 qj = q_param(j);
        if (!F.numerator.wheel_substitute(q_param(1) * qj, qj).is_zero()) return false;
    }
    return true;
}

// A chain of single-box additions from lam to lam'; each entry is the row of
// the added box. Returns the row-sorted chain (always a valid order).
inline std::vector<int> sorted_chain(const Partition& lam, const Partition& lamp) {
    std::vector<int> rows;
    std::size_t L = std::max(lam.size(), lamp.size());
    for (std::size_t i = 1; i <= L; ++i) {
        int d = part_get(lamp, (int)i) - part_get(lam, (int)i);
        if (d < 0) return {};  // not nested
        for (int k = 0; k < d; ++k) rows.push_back((int)i);
    }
    std::sort(rows.begin(), rows.end());
    return rows;
}

namespace detail {

// sparse polynomial in a deformation parameter u, coefficients in Q(t1,t2)
using UPoly = std::map<long, RatFun2>;

inline void upoly_add_term(UPoly& p, long e, const RatFun2& c) {
    if (c.is_zero()) return;
    auto& s = p[e];
    s += c;
    if (s.is_zero()) p.erase(e);
}

inline UPoly upoly_mul(const UPoly& a, const UPoly& b) {
    UPoly r;
    for (auto& [i, ca] : a)
        for (auto& [j, cb] : b) upoly_add_term(r, i + j, ca * cb);
    return r;
}

// Evaluate the matrix-element ratio along the deformed torus curve
// x_k = chi_k u^{g_k}: form N(u) and D(u), cancel the common power of
// (u - 1), and read the value at u = 1. Used when some kernel factor
// vanishes at u = 1 (the numerator then vanishes too, by the wheel
// conditions); the result is checked to be independent of the chosen
// exponents by the caller.
inline RatFun2 me_chain_deformed(const ShuffleElement& F, const std::vector<Laurent2>& chis,
                                 const std::vector<long>& g) {
    int n = F.arity;
    UPoly N{{0, RatFun2::one()}}, D{{0, RatFun2::one()}};
    UPoly FN;
    for (auto& [e, c] : F.numerator.terms()) {
        RatFun2 v = c;
        long p = 0;
        for (int k = 0; k < n; ++k) {
            v = v * RatFun2(chis[k]).pow(e[k]);
            p += g[k] * e[k];
        }
        upoly_add_term(FN, p, v);
    }
    N = upoly_mul(N, FN);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            UPoly d;
            upoly_add_term(d, g[a], RatFun2(chis[a]));
            upoly_add_term(d, g[b], -RatFun2(chis[b]));
            N = upoly_mul(N, d);
            for (int q = 1; q <= 3; ++q) {
                UPoly kf;
                upoly_add_term(kf, g[a], RatFun2(chis[a]));
                upoly_add_term(kf, g[b], -(q_param(q) * RatFun2(chis[b])));
                D = upoly_mul(D, kf);
            }
        }
    if (N.empty()) return RatFun2();
    auto to_vec = [](const UPoly& p) {
        long base = p.begin()->first, hi = 0;
        for (auto& [i, c] : p) hi = std::max(hi, i - base);
        std::vector<RatFun2> v(hi + 1);
        for (auto& [i, c] : p) v[i - base] = c;
        return v;
    };
    std::vector<RatFun2> vn = to_vec(N), vd = to_vec(D);
    auto eval1 = [](const std::vector<RatFun2>& v) {
        RatFun2 s;
        for (auto& c : v) s += c;
        return s;
    };
    auto deflate = [](std::vector<RatFun2>& v) {  // exact division by (u - 1)
        std::vector<RatFun2> q(v.size() - 1);
        RatFun2 carry;
        for (int i = (int)v.size() - 1; i >= 1; --i) {
            carry += v[i];
            q[i - 1] = carry;
        }
        v = std::move(q);
    };
    while (true) {
        RatFun2 d1 = eval1(vd);
        if (!d1.is_zero()) return eval1(vn) / d1;
        if (!eval1(vn).is_zero())
            throw std::domain_error("matrix element has a pole along the chain");
        deflate(vn);
        deflate(vd);
    }
}

// box characters and accumulated one-box coefficients along a chain; the
// chain is singular when some kernel factor chi_a - q chi_b vanishes (the
// characters are monomials, so this is an exponent comparison)
struct ChainData {
    std::vector<Laurent2> chis;
    FactoredRat coeff;
    bool singular = false;
};

inline const int kQOffsets[3][2] = {{1, 0}, {0, 1}, {-1, -1}};

inline ChainData chain_setup(const ShuffleElement& F, const Partition& lam,
                             const std::vector<int>& chain) {
    ChainData cd;
    Partition cur = lam;
    for (int row : chain) {
        int col = part_get(cur, row) + 1;
        cd.chis.push_back(box_char(row, col));
        cd.coeff.mul(e_coeff_factored(cur, row, 0));
        cur = add_row(cur, row);
    }
    int n = F.arity;
    for (int a = 0; a < n && !cd.singular; ++a)
        for (int b = a + 1; b < n && !cd.singular; ++b) {
            auto ea = cd.chis[a].lead().first, eb = cd.chis[b].lead().first;
            for (auto& d : kQOffsets)
                if (ea.first == eb.first + d[0] && ea.second == eb.second + d[1])
                    cd.singular = true;
        }
    return cd;
}

}  // namespace detail

// Gcd-free matrix element of F between [lam] and [lam'] along the given
// chain, as an expanded numerator over a factored denominator. Returns false
// (leaving out untouched) when the chain is singular or a numerator
// coefficient is not polynomial; callers then fall back to
// shuffle_matrix_element_chain. Since the arguments are monomials,
//   F(chi)/prod_{a<b} lambda(chi_a, chi_b)
//     = F_num(chi) * prod_{a<b}(chi_a - chi_b) / prod_{a<b} K(chi_a, chi_b)
// has a plain Laurent-polynomial numerator and a denominator that is a
// product of monomial differences, so no polynomial gcd is ever taken.
inline bool shuffle_matrix_element_cyc(const ShuffleElement& F, const Partition& lam,
                                       const std::vector<int>& chain, CycRat& out) {
    int n = F.arity;
    if ((int)chain.size() != n) throw std::invalid_argument("chain length != arity");
    if (n == 0) {
        out = CycRat::from_scalar(BigRat(1));
        return true;
    }
    for (auto& [e, c] : F.numerator.terms())
        if (!c.is_polynomial()) return false;
    detail::ChainData cd = detail::chain_setup(F, lam, chain);
    if (cd.singular) return false;
    Laurent2 num;
    for (auto& [e, c] : F.numerator.terms()) {
        int s1 = 0, s2 = 0;
        for (int k = 0; k < n; ++k) {
            auto& ex = cd.chis[k].lead().first;
            s1 += e[k] * ex.first;
            s2 += e[k] * ex.second;
        }
        num += c.num().shifted(s1, s2);
    }
    if (num.is_zero()) {
        out = CycRat();
        return true;
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            num *= cd.chis[a] - cd.chis[b];
            auto &ea = cd.chis[a].lead().first, &eb = cd.chis[b].lead().first;
            for (auto& d : detail::kQOffsets)
                cd.coeff.mul_monomial_diff(ea.first, ea.second, eb.first + d[0], eb.second + d[1],
                                           -1);
        }
    CycRat r = CycRat::from_factored(cd.coeff);
    CycRat nr;
    nr.num = std::move(num);
    out = r * nr;
    return true;
}

// Matrix element of F between [lam] and [lam'] evaluated along the given
// chain order (rows of added boxes). When a kernel factor vanishes on the
// chain (possible for star products on diagonally adjacent boxes, where the
// wheel conditions make the numerator vanish as well), the 0/0 is resolved
// exactly along a deformed torus curve; two unrelated exponent choices are
// compared to guard the evaluation.
inline RatFun2 shuffle_matrix_element_chain(const ShuffleElement& F, const Partition& lam,
                                            const std::vector<int>& chain) {
    int n = F.arity;
    if ((int)chain.size() != n) throw std::invalid_argument("chain length != arity");
    if (n == 0) return RatFun2::one();
    CycRat fast;
    if (shuffle_matrix_element_cyc(F, lam, chain, fast)) return fast.to_ratfun();
    detail::ChainData cd = detail::chain_setup(F, lam, chain);
    if (cd.singular) {
        std::vector<long> g1(n), g2(n);
        for (int k = 0; k < n; ++k) {
            g1[k] = k == 0 ? 0 : (g1[k - 1] ? 3 * g1[k - 1] : 1);
            g2[k] = k == 0 ? 0 : (g2[k - 1] ? 4 * g2[k - 1] : 1);
        }
        RatFun2 v1 = detail::me_chain_deformed(F, cd.chis, g1);
        RatFun2 v2 = detail::me_chain_deformed(F, cd.chis, g2);
        if (!(v1 == v2)) throw std::logic_error("deformed evaluation is direction-dependent");
        return v1 * cd.coeff.to_ratfun();
    }
    RatFun2 coeff = cd.coeff.to_ratfun();
    std::vector<RatFun2> chis_r;
    for (auto& c : cd.chis) chis_r.emplace_back(c);
    RatFun2 num = F.numerator.eval(chis_r);
    RatFun2 den = RatFun2::one();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            num *= chis_r[a] - chis_r[b];
            den *= (chis_r[a] - q_param(1) * chis_r[b]) * (chis_r[a] - q_param(2) * chis_r[b]) *
                   (chis_r[a] - q_param(3) * chis_r[b]);
        }
    return num / den * coeff;
}

// All valid orders in which the boxes of lam'/lam can be added one row at a
// time (each prefix a Young diagram); used for order-independence checks.
inline std::vector<std::vector<int>> all_chain_orders(const Partition& lam, const Partition& lamp) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(const Partition&)> rec = [&](const Partition& p) {
        if (part_size(p) == part_size(lamp)) {
            out.push_back(cur);
            return;
        }
        for (int r = 1; r <= (int)lamp.size(); ++r) {
            if (part_get(p, r) >= part_get(lamp, r)) continue;
            if (r > 1 && part_get(p, r - 1) <= part_get(p, r)) continue;  // not addable yet
            cur.push_back(r);
            rec(add_row(p, r));
            cur.pop_back();
        }
    };
    if (sorted_chain(lam, lamp).empty() && part_size(lamp) != part_size(lam)) return out;
    rec(lam);
    return out;
}

inline RatFun2 shuffle_matrix_element(const ShuffleElement& F, const Partition& lam,
                                      const Partition& lamp) {
    if (part_size(lamp) - part_size(lam) != F.arity) return RatFun2();
    std::vector<int> chain = sorted_chain(lam, lamp);
    if (F.arity > 0 && chain.empty()) return RatFun2();  // not nested
    return shuffle_matrix_element_chain(F, lam, chain);
}

inline FockVector act_shuffle(const ShuffleElement& F, const FockVector& v) {
    FockVector out;
    for (auto& [lam, c] : v) {
        for (auto& lamp : partitions_of(part_size(lam) + F.arity)) {
            RatFun2 me = shuffle_matrix_element(F, lam, lamp);
            if (!me.is_zero()) fv_add(out, lamp, me * c);
        }
    }
    return out;
}

inline GradedOperator shuffle_operator(const ShuffleElement& F, int n_max) {
    return GradedOperator::build(F.arity, n_max, [&F](const Partition& lam) {
        FockVector v{{lam, RatFun2::one()}};
        return act_shuffle(F, v);
    });
}

// Operator of F in gcd-free form; throws if some matrix element cannot be
// evaluated on the fast path (singular chains never occur for one-box-per-row
// elements such as the commuting family or single generators).
inline CycOp shuffle_cyc_op(const ShuffleElement& F, int n_max) {
    CycOp op;
    op.shift = F.arity;
    for (int d = 0; d <= n_max; ++d) {
        auto& blk = op.blocks[d];
        for (auto& lam : partitions_of(d))
            for (auto& lamp : partitions_of(d + F.arity)) {
                std::vector<int> ch = sorted_chain(lam, lamp);
                if ((int)ch.size() != F.arity) continue;  // not nested
                CycRat c;
                if (!shuffle_matrix_element_cyc(F, lam, ch, c))
                    throw std::domain_error("shuffle_cyc_op: element needs the general path");
                if (!c.is_zero()) blk.emplace(std::make_pair(lamp, lam), std::move(c));
            }
    }
    return op;
}

// act(F * G) == act(F) o act(G) on all source degrees <= max_degree, checked
// without expanding denominators; entries of F * G whose chain is singular
// are compared through the deformed evaluation instead.
inline bool check_shuffle_homomorphism(const ShuffleElement& F, const ShuffleElement& G,
                                       int max_degree,
                                       std::pair<Partition, Partition>* witness = nullptr) {
    ShuffleElement FG = star_product(F, G);
    CycOp comp = shuffle_cyc_op(F, max_degree + G.arity).compose(shuffle_cyc_op(G, max_degree));
    for (int d = 0; d <= max_degree; ++d) {
        auto& cblk = comp.blocks[d];
        for (auto& lam : partitions_of(d))
            for (auto& lamp : partitions_of(d + FG.arity)) {
                std::vector<int> ch = sorted_chain(lam, lamp);
                auto it = cblk.find({lamp, lam});
                if ((int)ch.size() != FG.arity) {
                    // not nested: F * G has no matrix element here, and the
                    // composition cannot reach lamp either
                    if (it != cblk.end() && !it->second.is_zero()) {
                        if (witness) *witness = {lamp, lam};
                        return false;
                    }
                    continue;
                }
                CycRat c;
                bool match;
                if (shuffle_matrix_element_cyc(FG, lam, ch, c)) {
                    if (it != cblk.end()) c.add_scaled(it->second, BigRat(-1));
                    match = c.is_zero();
                } else {
                    RatFun2 v = shuffle_matrix_element_chain(FG, lam, ch);
                    RatFun2 w = (it != cblk.end()) ? it->second.to_ratfun() : RatFun2();
                    match = (v == w);
                }
                if (!match) {
                    if (witness) *witness = {lamp, lam};
                    return false;
                }
            }
    }
    return true;
}

// Closed product form for the K_n matrix elements (independent route).
// Every factor is a monomial or a difference of monomials, so the element is
// accumulated in factored form.
inline FactoredRat k_matrix_factored(int n, const Partition& lam, const Partition& lamp) {
    FactoredRat v;
    if (part_size(lamp) - part_size(lam) != n) {
        v.scalar = 0;
        return v;
    }
    std::vector<int> chain = sorted_chain(lam, lamp);
    if (n > 0 && (int)chain.size() != n) {
        v.scalar = 0;
        return v;
    }
    std::vector<Exp2> chis;  // chi_a = t1^{first} t2^{second}
    Partition cur = lam;
    for (int row : chain) {
        chis.push_back({part_get(cur, row), row - 1});
        v.mul(e_coeff_factored(cur, row, 0));
        cur = add_row(cur, row);
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            auto [pa, qa] = chis[a];
            auto [pb, qb] = chis[b];
            v.mul_monomial_diff(pa, qa, pb, qb);              // chi_a - chi_b
            v.mul_monomial_diff(pb, qb, pa + 1, qa);          // chi_b - t1 chi_a
            v.mul_monomial_diff(pa, qa, pb, qb + 1, -1);      // chi_a - t2 chi_b
            v.mul_monomial_diff(pa, qa, pb - 1, qb - 1, -1);  // chi_a - chi_b/(t1 t2)
        }
    return v;
}

inline RatFun2 k_matrix_element_closed(int n, const Partition& lam, const Partition& lamp) {
    return k_matrix_factored(n, lam, lamp).to_ratfun();
}

// K_n as a graded operator with gcd-free entries, for composition checks.
inline CycOp k_cyc_op(int n, int n_max) {
    CycOp op;
    op.shift = n;
    for (int d = 0; d <= n_max; ++d) {
        auto& blk = op.blocks[d];
        for (auto& lam : partitions_of(d))
            for (auto& lamp : partitions_of(d + n)) {
                CycRat c = CycRat::from_factored(k_matrix_factored(n, lam, lamp));
                if (!c.is_zero()) blk.emplace(std::make_pair(lamp, lam), std::move(c));
            }
    }
    return op;
}

}  // namespace qfock
