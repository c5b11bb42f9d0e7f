#pragma once

// Verification suites: named exact checks over configurable size bounds.
// Each check is an independent task producing a stable record (id, anchor,
// status, witness); suites assemble records in a fixed order regardless of
// how the worker pool schedules them.

#include <atomic>
#include <chrono>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "qfock/relations.hpp"
#include "qfock/gamma.hpp"
#include "qfock/shuffle.hpp"
#include "qfock/macdonald.hpp"
#include "qfock/theta.hpp"

namespace qfock {

struct CheckConfig {
    int max_size = 5;
    int series_order = 8;
    bool sampled = false;
    unsigned long seed = 0;
    int jobs = 1;
};

struct CheckRecord {
    std::string id;      // stable identity id, unique per check
    std::string anchor;  // human-readable statement of the identity
    bool pass = false;
    std::string witness;  // non-empty iff the check failed
    std::string note;     // deterministic extra output (e.g. reported scalar)
    long wall_ms = 0;
};

struct SuiteReport {
    std::string suite;
    CheckConfig config;
    std::vector<CheckRecord> records;

    bool all_pass() const {
        for (auto& r : records)
            if (!r.pass) return false;
        return true;
    }
    const CheckRecord* first_failure() const {
        for (auto& r : records)
            if (!r.pass) return &r;
        return nullptr;
    }
};

// Value comparison used by the checks: exact by default; in sampled mode the
// two sides are evaluated at a seeded random rational point (falling back to
// the exact comparison if the point hits a pole). Exact mode is the
// acceptance standard; sampling only weakens FAIL detection, never PASS.
struct ValueEq {
    bool sampled = false;
    BigRat p1, p2;

    static ValueEq make(const CheckConfig& cfg) {
        ValueEq eq;
        eq.sampled = cfg.sampled;
        if (!cfg.sampled) return eq;
        std::mt19937_64 rng(cfg.seed);
        std::uniform_int_distribution<int> num(2, 97), den(101, 199);
        for (;;) {
            eq.p1 = BigRat((long)num(rng), (long)den(rng));
            eq.p2 = BigRat((long)num(rng), (long)den(rng));
            eq.p1.canonicalize();
            eq.p2.canonicalize();
            // avoid the structural degeneracies t1 = t2 and t1 t2 = 1
            if (eq.p1 != eq.p2 && eq.p1 * eq.p2 != 1) return eq;
        }
    }

    bool equal(const RatFun2& a, const RatFun2& b) const {
        if (sampled) {
            try {
                return a.eval(p1, p2) == b.eval(p1, p2);
            } catch (const std::domain_error&) {
                // pole at the sample point: decide exactly
            }
        }
        return a == b;
    }
    bool zero(const RatFun2& a) const { return equal(a, RatFun2()); }
};

namespace detail {

struct CheckTask {
    std::string id;
    std::string anchor;
    // returns PASS flag; fills witness/note on demand
    std::function<bool(std::string& witness, std::string& note)> run;
};

inline std::string pair_witness(const std::pair<Partition, Partition>& rc) {
    return part_str(rc.second) + " -> " + part_str(rc.first);
}

// ---- relations suite -------------------------------------------------------

inline void add_relations_checks(std::vector<CheckTask>& out, const CheckConfig& cfg) {
    int S = cfg.max_size;
    ValueEq eq = ValueEq::make(cfg);

    out.push_back({"exchange-e",
                   "cubic exchange relation for the raising family, indices in [-2,2], sizes <= " +
                       std::to_string(S),
                   [S](std::string& w, std::string&) {
                       OperatorCache ops(S + 1);
                       for (int i = -2; i <= 2; ++i)
                           for (int j = -2; j <= 2; ++j)
                               if (!check_exchange_relation(1, i, j, ops)) {
                                   w = "i=" + std::to_string(i) + " j=" + std::to_string(j);
                                   return false;
                               }
                       return true;
                   }});
    out.push_back({"exchange-f",
                   "cubic exchange relation for the lowering family, indices in [-2,2], sizes <= " +
                       std::to_string(S),
                   [S](std::string& w, std::string&) {
                       OperatorCache ops(S + 1);
                       for (int i = -2; i <= 2; ++i)
                           for (int j = -2; j <= 2; ++j)
                               if (!check_exchange_relation(2, i, j, ops)) {
                                   w = "i=" + std::to_string(i) + " j=" + std::to_string(j);
                                   return false;
                               }
                       return true;
                   }});
    out.push_back(
        {"ef-diagonal",
         "[e_a, f_b] is diagonal with series-coefficient eigenvalues, a,b in [-2,2], sizes <= " +
             std::to_string(S),
         [S](std::string& w, std::string&) {
             OperatorCache ops(S + 1);
             for (int a = -2; a <= 2; ++a)
                 for (int b = -2; b <= 2; ++b) {
                     EfCheckResult r = check_ef_relation(a, b, S, ops);
                     if (!r.ok()) {
                         w = "a=" + std::to_string(a) + " b=" + std::to_string(b);
                         if (r.offdiag_witness) w += " off-diagonal at " + pair_witness(*r.offdiag_witness);
                         if (r.eigen_witness) w += " eigenvalue at " + part_str(*r.eigen_witness);
                         return false;
                     }
                 }
             return true;
         }});
    out.push_back({"ef-explicit",
                   "[e_0,f_0] = -1/((1-t1)(1-t2)) and [e_0,f_1] = -1/((1-t1)(1-t2)) + sum of box "
                   "characters, sizes <= " +
                       std::to_string(S),
                   [S, eq](std::string& w, std::string&) {
                       RatFun2 base = -RatFun2(Laurent2::one(), one_minus(1, 0) * one_minus(0, 1));
                       for (int n = 0; n <= S; ++n)
                           for (auto& lam : partitions_of(n)) {
                               RatFun2 chi_sum;
                               for (auto& [i, j] : boxes_of(lam)) chi_sum += RatFun2(box_char(i, j));
                               if (!eq.equal(ef_commutator_diag(lam, 0, 0), base) ||
                                   !eq.equal(ef_commutator_diag(lam, 0, 1), base + chi_sum)) {
                                   w = part_str(lam);
                                   return false;
                               }
                           }
                       return true;
                   }});
    out.push_back({"series-edge-plus",
                   "positive-series edge relation to order " + std::to_string(cfg.series_order) +
                       " on edges within size " + std::to_string(S + 1),
                   [S, N = cfg.series_order](std::string& w, std::string&) {
                       for (int n = 0; n <= S; ++n)
                           for (auto& lam : partitions_of(n))
                               for (int k : addable_rows(lam))
                                   if (!check_psi_edge_relation(4, lam, k, N)) {
                                       w = part_str(lam) + " row " + std::to_string(k);
                                       return false;
                                   }
                       return true;
                   }});
    out.push_back({"series-edge-minus",
                   "negative-series edge relation to order " + std::to_string(cfg.series_order) +
                       " on edges within size " + std::to_string(S + 1),
                   [S, N = cfg.series_order](std::string& w, std::string&) {
                       for (int n = 0; n <= S; ++n)
                           for (auto& lam : partitions_of(n))
                               for (int k : addable_rows(lam))
                                   if (!check_psi_edge_relation(5, lam, k, N)) {
                                       w = part_str(lam) + " row " + std::to_string(k);
                                       return false;
                                   }
                       return true;
                   }});
    out.push_back({"coeff-oracle",
                   "finite-product and infinite-product matrix coefficients agree, sizes <= " +
                       std::to_string(S + 1) + ", r in [-2,2]",
                   [S, eq](std::string& w, std::string&) {
                       for (int n = 0; n <= S + 1; ++n)
                           for (auto& lam : partitions_of(n))
                               for (int r = -2; r <= 2; ++r) {
                                   for (int k : addable_rows(lam))
                                       if (!eq.equal(e_coeff(lam, k, r),
                                                     e_coeff_alt(add_row(lam, k), k, r))) {
                                           w = "e " + part_str(lam) + " row " + std::to_string(k) +
                                               " r=" + std::to_string(r);
                                           return false;
                                       }
                                   for (int k : removable_rows(lam))
                                       if (!eq.equal(f_coeff(lam, k, r),
                                                     f_coeff_alt(remove_row(lam, k), k, r))) {
                                           w = "f " + part_str(lam) + " row " + std::to_string(k) +
                                               " r=" + std::to_string(r);
                                           return false;
                                       }
                               }
                       return true;
                   }});
    out.push_back(
        {"gamma-three-routes",
         "diagonal eigenvalue gamma_s: commutator, corner/hole sum and row-product routes agree, "
         "s in [0,3], sizes <= " +
             std::to_string(S),
         [S, eq](std::string& w, std::string&) {
             for (int n = 0; n <= S; ++n)
                 for (auto& lam : partitions_of(n))
                     for (int s = 0; s <= 3; ++s) {
                         RatFun2 a = gamma_commutator(lam, s);
                         if (!eq.equal(a, gamma_corner_hole(lam, s)) ||
                             !eq.equal(a, gamma_row_product(lam, s))) {
                             w = part_str(lam) + " s=" + std::to_string(s);
                             return false;
                         }
                     }
             return true;
         }});
}

// ---- shuffle suite ---------------------------------------------------------

inline void add_shuffle_checks(std::vector<CheckTask>& out, const CheckConfig& cfg) {
    int S = cfg.max_size;

    out.push_back({"wheel-condition",
                   "numerator wheel vanishing for all <= 3-fold star products of degree-one "
                   "monomial generators, r in [-1,1]",
                   [](std::string& w, std::string&) {
                       for (int a = -1; a <= 1; ++a)
                           for (int b = -1; b <= 1; ++b) {
                               auto fg = star_product(ShuffleElement::generator(a),
                                                      ShuffleElement::generator(b));
                               if (!wheel_check(fg)) {
                                   w = "pair (" + std::to_string(a) + "," + std::to_string(b) + ")";
                                   return false;
                               }
                               for (int c = -1; c <= 1; ++c)
                                   if (!wheel_check(star_product(fg, ShuffleElement::generator(c)))) {
                                       w = "triple (" + std::to_string(a) + "," + std::to_string(b) +
                                           "," + std::to_string(c) + ")";
                                       return false;
                                   }
                           }
                       return true;
                   }});
    out.push_back({"family-commute-elements",
                   "K_m * K_n = K_n * K_m as shuffle elements, m+n <= " + std::to_string(S),
                   [S](std::string& w, std::string&) {
                       for (int m = 1; m <= S; ++m)
                           for (int n = m + 1; m + n <= S; ++n) {
                               auto a = star_product(k_element(m), k_element(n));
                               auto b = star_product(k_element(n), k_element(m));
                               if (!(a.numerator - b.numerator).is_zero()) {
                                   w = "m=" + std::to_string(m) + " n=" + std::to_string(n);
                                   return false;
                               }
                           }
                       return true;
                   }});
    out.push_back({"family-commute-operators",
                   "K_m and K_n commute as operators on sizes <= " + std::to_string(S) +
                       ", m+n <= " + std::to_string(S) + " with m,n distinct",
                   [S](std::string& w, std::string&) {
                       for (int m = 1; m <= S; ++m)
                           for (int n = m + 1; m + n <= S; ++n) {
                               CycOp A = k_cyc_op(m, S + n), B = k_cyc_op(n, S + m);
                               CycOp c = A.compose(B);
                               c.add_scaled(B.compose(A), BigRat(-1));
                               std::pair<Partition, Partition> rc;
                               if (!c.zero_up_to(S, &rc)) {
                                   w = "m=" + std::to_string(m) + " n=" + std::to_string(n) + " at " +
                                       pair_witness(rc);
                                   return false;
                               }
                           }
                       return true;
                   }});
    int H = std::max(0, S - 1);
    out.push_back({"action-homomorphism",
                   "act(F * G) = act(F) o act(G) for ordered generator pairs from "
                   "{x^-1, x^0, x^1, K_2}, sizes <= " +
                       std::to_string(H),
                   [H](std::string& w, std::string&) {
                       std::vector<ShuffleElement> gens{
                           ShuffleElement::generator(-1), ShuffleElement::generator(0),
                           ShuffleElement::generator(1), k_element(2)};
                       const char* names[] = {"x^-1", "x^0", "x^1", "K_2"};
                       for (int a = 0; a < 4; ++a)
                           for (int b = 0; b < 4; ++b) {
                               std::pair<Partition, Partition> rc;
                               if (!check_shuffle_homomorphism(gens[a], gens[b], H, &rc)) {
                                   w = std::string(names[a]) + " * " + names[b] + " at " +
                                       pair_witness(rc);
                                   return false;
                               }
                           }
                       return true;
                   }});
    out.push_back(
        {"chain-order-independence",
         "matrix elements of generator products agree over every valid chain order, sizes <= " +
             std::to_string(H),
         [H](std::string& w, std::string&) {
             std::vector<ShuffleElement> gens{ShuffleElement::generator(-1),
                                              ShuffleElement::generator(0),
                                              ShuffleElement::generator(1), k_element(2)};
             for (auto& F : gens)
                 for (auto& G : gens) {
                     auto FG = star_product(F, G);
                     for (int n = 0; n <= H; ++n)
                         for (auto& lam : partitions_of(n))
                             for (auto& lamp : partitions_of(n + FG.arity)) {
                                 auto chains = all_chain_orders(lam, lamp);
                                 if (chains.size() < 2) continue;
                                 CycRat ref;
                                 bool fast = shuffle_matrix_element_cyc(FG, lam, chains[0], ref);
                                 RatFun2 refr = fast ? RatFun2()
                                                     : shuffle_matrix_element_chain(FG, lam, chains[0]);
                                 for (std::size_t i = 1; i < chains.size(); ++i) {
                                     bool same;
                                     CycRat v;
                                     if (fast && shuffle_matrix_element_cyc(FG, lam, chains[i], v)) {
                                         v.add_scaled(ref, BigRat(-1));
                                         same = v.is_zero();
                                     } else {
                                         RatFun2 r0 = fast ? ref.to_ratfun() : refr;
                                         same = (shuffle_matrix_element_chain(FG, lam, chains[i]) == r0);
                                     }
                                     if (!same) {
                                         w = pair_witness({lamp, lam});
                                         return false;
                                     }
                                 }
                             }
                 }
             return true;
         }});
}

// ---- macdonald suite -------------------------------------------------------

inline void add_macdonald_checks(std::vector<CheckTask>& out, const CheckConfig& cfg) {
    int S = cfg.max_size;
    ValueEq eq = ValueEq::make(cfg);

    out.push_back({"orthogonality",
                   "orthogonality of the two-parameter basis under the deformed power-sum inner "
                   "product, degrees <= " +
                       std::to_string(S),
                   [S, eq](std::string& w, std::string&) {
                       SymBasisTable tab(S);
                       MacdonaldTable mt(S, tab);
                       for (int n = 1; n <= S; ++n) {
                           auto parts = partitions_of(n);
                           for (auto& a : parts)
                               for (auto& b : parts) {
                                   if (a == b) continue;
                                   if (!eq.zero(inner_product_p(mt.P_in_p(a), mt.P_in_p(b)))) {
                                       w = part_str(a) + " vs " + part_str(b);
                                       return false;
                                   }
                               }
                       }
                       return true;
                   }});
    out.push_back({"pieri-vertical-strips",
                   "multiplication by elementary symmetric functions matches the vertical-strip "
                   "coefficients, degrees <= " +
                       std::to_string(S),
                   [S, eq](std::string& w, std::string&) {
                       SymBasisTable tab(S);
                       MacdonaldTable mt(S, tab);
                       for (int n = 0; n < S; ++n)
                           for (auto& mu : partitions_of(n))
                               for (int r = 1; r + n <= S; ++r) {
                                   MSym prod = m_multiply(mt.P(mu), e_to_m(Partition{r}));
                                   MSym exp = mt.expand_in_P(prod);
                                   for (auto& lam : partitions_of(n + r)) {
                                       auto it = exp.find(lam);
                                       RatFun2 got = (it == exp.end()) ? RatFun2() : it->second;
                                       if (!eq.equal(pieri_coeff(lam, mu), got)) {
                                           w = part_str(mu) + " * e_" + std::to_string(r) + " at " +
                                               part_str(lam);
                                           return false;
                                       }
                                   }
                               }
                       return true;
                   }});
    out.push_back({"pieri-single-box",
                   "single-box coefficient formula agrees with the vertical-strip formula, "
                   "degrees <= " +
                       std::to_string(S + 1),
                   [S, eq](std::string& w, std::string&) {
                       for (int n = 0; n <= S; ++n)
                           for (auto& mu : partitions_of(n))
                               for (int j : addable_rows(mu))
                                   if (!eq.equal(pieri_coeff_single(mu, j),
                                                 pieri_coeff(add_row(mu, j), mu))) {
                                       w = part_str(mu) + " row " + std::to_string(j);
                                       return false;
                                   }
                       return true;
                   }});
    out.push_back({"newton-identity",
                   "exponential and recursive forms of the Newton identity agree to degree " +
                       std::to_string(cfg.series_order),
                   [N = cfg.series_order](std::string& w, std::string&) {
                       auto a = newton_e_exponential(N), b = newton_e_recursion(N);
                       for (std::size_t i = 0; i < a.size(); ++i)
                           if (!msym_equal(a[i], b[i])) {
                               w = "degree " + std::to_string(i);
                               return false;
                           }
                       return true;
                   }});
}

// ---- theta suite -----------------------------------------------------------

inline void add_theta_checks(std::vector<CheckTask>& out, const CheckConfig& cfg) {
    int S = cfg.max_size;
    ValueEq eq = ValueEq::make(cfg);

    out.push_back({"normalized-family-edges",
                   "rescaled one-box matrix elements equal specialized single-box coefficients on "
                   "all edges within size " +
                       std::to_string(S + 1),
                   [S, eq](std::string& w, std::string&) {
                       ShuffleElement k1 = k_element(1);
                       for (int n = 0; n <= S; ++n)
                           for (auto& lam : partitions_of(n))
                               for (int j : addable_rows(lam)) {
                                   Partition mu = add_row(lam, j);
                                   if (!eq.equal(k_tilde_element(k1, lam, mu),
                                                 specialize_qt(pieri_coeff_single(lam, j)))) {
                                       w = part_str(lam) + " row " + std::to_string(j);
                                       return false;
                                   }
                               }
                       return true;
                   }});
    for (int n = 1; n <= 3; ++n)
        out.push_back({"normalized-family-strips-n" + std::to_string(n),
                       "rescaled K_" + std::to_string(n) +
                           " matrix elements equal specialized vertical-strip coefficients (and "
                           "vanish off strips) to size " +
                           std::to_string(S + 1),
                       [S, n, eq](std::string& w, std::string&) {
                           ShuffleElement kn = k_element(n);
                           for (int m = 0; m + n <= S + 1; ++m)
                               for (auto& mu : partitions_of(m))
                                   for (auto& lam : partitions_of(m + n)) {
                                       RatFun2 val = k_tilde_element(kn, mu, lam);
                                       bool good = is_vertical_strip(lam, mu)
                                                       ? eq.equal(val, specialize_qt(pieri_coeff(lam, mu)))
                                                       : eq.zero(val);
                                       if (!good) {
                                           w = pair_witness({lam, mu});
                                           return false;
                                       }
                                   }
                           return true;
                       }});
    out.push_back({"heisenberg-commute",
                   "the extracted half-Heisenberg operators commute pairwise, i,j <= 3, "
                   "sizes <= " +
                       std::to_string(S),
                   [S](std::string& w, std::string&) {
                       std::pair<Partition, Partition> rc;
                       if (!heisenberg_commutators_vanish(3, S, S + 4, &rc)) {
                           w = pair_witness(rc);
                           return false;
                       }
                       return true;
                   }});
    for (int i = 1; i <= 3; ++i)
        out.push_back({"heisenberg-intertwine-" + std::to_string(i),
                       "half-Heisenberg operator " + std::to_string(i) +
                           " matches specialized power-sum multiplication up to one scalar, "
                           "sizes <= " +
                           std::to_string(S),
                       [S, i, eq](std::string& w, std::string& note) {
                           SymBasisTable tab(S);
                           MacdonaldTable mt(S, tab);
                           std::vector<GradedOperator> H = heisenberg_ops(i, S + 4);
                           IntertwineResult res = check_intertwining(i, S, H[i], mt);
                           if (!res.proportional) {
                               w = "not proportional";
                               return false;
                           }
                           note = "scalar = " + res.scalar.str();
                           if (!eq.equal(res.scalar, RatFun2::one())) {
                               w = "scalar differs from 1";
                               return false;
                           }
                           return true;
                       }});
}

inline std::vector<CheckTask> suite_tasks(const std::string& name, const CheckConfig& cfg) {
    std::vector<CheckTask> tasks;
    bool known = false;
    if (name == "relations" || name == "all") add_relations_checks(tasks, cfg), known = true;
    if (name == "shuffle" || name == "all") add_shuffle_checks(tasks, cfg), known = true;
    if (name == "macdonald" || name == "all") add_macdonald_checks(tasks, cfg), known = true;
    if (name == "theta" || name == "all") add_theta_checks(tasks, cfg), known = true;
    if (!known) throw std::invalid_argument("unknown suite: " + name);
    return tasks;
}

}  // namespace detail

inline SuiteReport run_suite(const std::string& name, const CheckConfig& cfg) {
    if (cfg.max_size <= 0 || cfg.series_order <= 0 || cfg.jobs <= 0)
        throw std::invalid_argument("invalid bounds");
    std::vector<detail::CheckTask> tasks = detail::suite_tasks(name, cfg);
    SuiteReport rep;
    rep.suite = name;
    rep.config = cfg;
    rep.records.resize(tasks.size());

    auto run_one = [&](std::size_t i) {
        CheckRecord& r = rep.records[i];
        r.id = tasks[i].id;
        r.anchor = tasks[i].anchor;
        auto t0 = std::chrono::steady_clock::now();
        try {
            r.pass = tasks[i].run(r.witness, r.note);
            if (!r.pass && r.witness.empty()) r.witness = "unspecified";
        } catch (const std::exception& e) {
            r.pass = false;
            r.witness = std::string("exception: ") + e.what();
        }
        r.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    };

    int jobs = std::min<int>(cfg.jobs, (int)tasks.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) run_one(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= rep.records.size()) return;
                    run_one(i);
                }
            });
        for (auto& th : pool) th.join();
    }
    return rep;
}

}  // namespace qfock
