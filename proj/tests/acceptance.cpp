// Acceptance gate: runs the full verification suite twice at the default
// configuration (max-size 5, series-order 8, exact mode) and condenses the
// outcome into one PASS/FAIL line per acceptance criterion. Exit code 0 iff
// every criterion passes.

#include <chrono>
#include <cstdio>
#include <initializer_list>
#include <string>

#include "qfock/report.hpp"

using namespace qfock;

namespace {

const SuiteReport* g_rep = nullptr;

const CheckRecord* rec(const std::string& id) {
    for (auto& r : g_rep->records)
        if (r.id == id) return &r;
    return nullptr;
}

// all listed checks passed; accumulates their wall time into *ms
bool group(std::initializer_list<const char*> ids, long* ms = nullptr) {
    bool ok = true;
    for (const char* id : ids) {
        const CheckRecord* r = rec(id);
        if (!r || !r->pass) ok = false;
        if (r && ms) *ms += r->wall_ms;
    }
    return ok;
}

int g_failures = 0;

void criterion(int n, bool pass, const std::string& what) {
    std::printf("%s criterion %2d: %s\n", pass ? "PASS" : "FAIL", n, what.c_str());
    if (!pass) ++g_failures;
}

}  // namespace

int main() {
    CheckConfig cfg;  // defaults: max-size 5, series-order 8, exact
    auto t0 = std::chrono::steady_clock::now();
    SuiteReport run1 = run_suite("all", cfg);
    auto t1 = std::chrono::steady_clock::now();
    SuiteReport run2 = run_suite("all", cfg);
    auto t2 = std::chrono::steady_clock::now();
    long ms1 = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    long ms2 = std::chrono::duration_cast<std::chrono::milliseconds>(t2 - t1).count();

    g_rep = &run1;
    long w = 0;

    w = 0;
    criterion(1, group({"exchange-e", "exchange-f"}, &w) && w < 120000,
              "exchange relations for the raising and lowering families, indices in [-2,2], "
              "sizes <= 5, exact, under 2 minutes (" + std::to_string(w) + " ms)");

    w = 0;
    criterion(2, group({"ef-diagonal", "ef-explicit"}, &w) && w < 120000,
              "mixed commutators are diagonal with series eigenvalues, plus the pinned "
              "[e_0,f_0] and [e_0,f_1] values, sizes <= 5, under 2 minutes (" +
                  std::to_string(w) + " ms)");

    criterion(3, group({"series-edge-plus", "series-edge-minus"}),
              "series relations hold edge-locally to order 8 on every edge within size 6");

    criterion(4, group({"coeff-oracle"}),
              "finite and infinite product coefficient formulas agree, sizes <= 6, r in [-2,2]");

    criterion(5, group({"gamma-three-routes"}),
              "diagonal eigenvalues agree along three independent routes, s in [0,3], sizes <= 5");

    w = 0;
    criterion(6, group({"family-commute-elements", "family-commute-operators"}, &w) && w < 180000,
              "the distinguished family commutes as shuffle elements (m+n <= 5) and as "
              "operators (sizes <= 5), under 3 minutes (" + std::to_string(w) + " ms)");

    criterion(7, group({"action-homomorphism", "chain-order-independence"}),
              "the action is a homomorphism and matrix elements are chain-order independent "
              "for generators {x^-1, x^0, x^1, K_2}, sizes <= 4");

    criterion(8, group({"wheel-condition"}),
              "wheel vanishing for all <= 3-fold star products of degree-one generators");

    criterion(9,
              group({"orthogonality", "pieri-vertical-strips", "pieri-single-box",
                     "newton-identity"}),
              "orthogonality (deg 5), vertical-strip coefficients (deg 5), single-box "
              "coefficients (deg 6), Newton identity (deg 8)");

    criterion(10,
              group({"normalized-family-edges", "normalized-family-strips-n1",
                     "normalized-family-strips-n2", "normalized-family-strips-n3"}),
              "rescaled family matches specialized strip coefficients: edges and strips "
              "n in {1,2,3} to size 6");

    criterion(11,
              group({"heisenberg-commute", "heisenberg-intertwine-1", "heisenberg-intertwine-2",
                     "heisenberg-intertwine-3"}),
              "extracted operators commute (i,j <= 3, sizes <= 5) and intertwine with "
              "power-sum multiplication with scalar 1 (i <= 3, sizes <= 5)");

    std::string j1 = report_to_json(run1).dump(2), j2 = report_to_json(run2).dump(2);
    criterion(12,
              run1.all_pass() && run2.all_pass() && ms1 < 600000 && ms2 < 600000 && j1 == j2,
              "full suite at defaults passes twice (" + std::to_string(ms1) + " ms, " +
                  std::to_string(ms2) + " ms), each under 10 minutes, byte-identical reports");

    return g_failures == 0 ? 0 : 1;
}
