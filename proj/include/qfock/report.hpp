#pragma once

// Report rendering (canonical JSON and plain text) and data-export dumps.
// JSON output is byte-stable across runs for a fixed configuration: object
// keys are emitted in insertion order and timing fields are text-only.

#include <fstream>
#include <string>

#include <json.hpp>

#include "qfock/checks.hpp"

namespace qfock {

using OrderedJson = nlohmann::ordered_json;

inline OrderedJson report_to_json(const SuiteReport& rep, bool with_timings = false) {
    OrderedJson j;
    j["schema"] = 1;
    j["suite"] = rep.suite;
    j["parameters"] = {{"max_size", rep.config.max_size},
                       {"series_order", rep.config.series_order},
                       {"mode", rep.config.sampled ? "sampled" : "exact"},
                       {"seed", rep.config.seed}};
    OrderedJson checks = OrderedJson::array();
    int passed = 0;
    for (auto& r : rep.records) {
        OrderedJson c;
        c["id"] = r.id;
        c["anchor"] = r.anchor;
        c["status"] = r.pass ? "PASS" : "FAIL";
        if (!r.pass) c["witness"] = r.witness;
        if (!r.note.empty()) c["note"] = r.note;
        if (with_timings) c["wall_ms"] = r.wall_ms;
        checks.push_back(std::move(c));
        if (r.pass) ++passed;
    }
    j["checks"] = std::move(checks);
    j["total"] = rep.records.size();
    j["passed"] = passed;
    return j;
}

inline std::string report_to_text(const SuiteReport& rep) {
    std::string out = "suite " + rep.suite + " (max-size " + std::to_string(rep.config.max_size) +
                      ", series-order " + std::to_string(rep.config.series_order) + ", mode " +
                      (rep.config.sampled ? "sampled" : "exact") + ")\n";
    int passed = 0;
    long total_ms = 0;
    for (auto& r : rep.records) {
        out += (r.pass ? "PASS " : "FAIL ") + r.id + " [" + std::to_string(r.wall_ms) + " ms] " +
               r.anchor + "\n";
        if (!r.pass) out += "     witness: " + r.witness + "\n";
        if (!r.note.empty()) out += "     " + r.note + "\n";
        if (r.pass) ++passed;
        total_ms += r.wall_ms;
    }
    out += std::to_string(passed) + "/" + std::to_string(rep.records.size()) + " checks passed, " +
           std::to_string(total_ms) + " ms total\n";
    return out;
}

// ---- dumps ------------------------------------------------------------------

// block of the raising operator e_r from degree n to n+1
inline OrderedJson dump_e_matrix(int r, int n) {
    OrderedJson j;
    j["schema"] = 1;
    j["kind"] = "e-matrix";
    j["r"] = r;
    j["degree"] = n;
    OrderedJson rows;
    for (auto& lamp : partitions_of(n + 1)) {
        OrderedJson row;
        for (auto& lam : partitions_of(n))
            for (int k : addable_rows(lam))
                if (add_row(lam, k) == lamp) row[part_str(lam)] = e_coeff(lam, k, r).str();
        rows[part_str(lamp)] = std::move(row);
    }
    j["entries"] = std::move(rows);
    return j;
}

// block of the lowering operator f_r from degree n to n-1
inline OrderedJson dump_f_matrix(int r, int n) {
    OrderedJson j;
    j["schema"] = 1;
    j["kind"] = "f-matrix";
    j["r"] = r;
    j["degree"] = n;
    OrderedJson rows;
    for (auto& mu : partitions_of(n - 1)) {
        OrderedJson row;
        for (auto& lam : partitions_of(n))
            for (int k : removable_rows(lam))
                if (remove_row(lam, k) == mu) row[part_str(lam)] = f_coeff(lam, k, r).str();
        rows[part_str(mu)] = std::move(row);
    }
    j["entries"] = std::move(rows);
    return j;
}

// diagonal series eigenvalues on one basis vector, to the given order
inline OrderedJson dump_psi(const Partition& lam, int order) {
    OrderedJson j;
    j["schema"] = 1;
    j["kind"] = "psi";
    j["partition"] = part_str(lam);
    j["order"] = order;
    OrderedJson plus = OrderedJson::array(), minus = OrderedJson::array();
    for (auto& c : psi_eigenvalue(lam, true, order)) plus.push_back(c.str());
    for (auto& c : psi_eigenvalue(lam, false, order)) minus.push_back(c.str());
    j["plus"] = std::move(plus);
    j["minus"] = std::move(minus);
    return j;
}

// block of the commuting-family operator K_n from the given degree
inline OrderedJson dump_k_matrix(int n, int degree) {
    OrderedJson j;
    j["schema"] = 1;
    j["kind"] = "k-matrix";
    j["n"] = n;
    j["degree"] = degree;
    OrderedJson rows;
    for (auto& lamp : partitions_of(degree + n)) {
        OrderedJson row;
        for (auto& lam : partitions_of(degree)) {
            RatFun2 v = k_matrix_element_closed(n, lam, lamp);
            if (!v.is_zero()) row[part_str(lam)] = v.str();
        }
        rows[part_str(lamp)] = std::move(row);
    }
    j["entries"] = std::move(rows);
    return j;
}

// monomial expansions of the two-parameter orthogonal basis, in q/t names
inline OrderedJson dump_macdonald(int degree) {
    OrderedJson j;
    j["schema"] = 1;
    j["kind"] = "macdonald";
    j["degree"] = degree;
    SymBasisTable tab(degree);
    MacdonaldTable mt(degree, tab);
    OrderedJson list = OrderedJson::array();
    for (int d = 0; d <= degree; ++d)
        for (auto& lam : partitions_of(d)) {
            OrderedJson entry;
            entry["partition"] = part_str(lam);
            entry["basis"] = "m";
            OrderedJson coeffs;
            for (auto& [mu, c] : mt.P(lam)) coeffs[part_str(mu)] = c.str("q", "t");
            entry["coeffs"] = std::move(coeffs);
            list.push_back(std::move(entry));
        }
    j["polynomials"] = std::move(list);
    return j;
}

// normalization constants of the fixed-point basis
inline OrderedJson dump_c_norms(int max_size) {
    OrderedJson j;
    j["schema"] = 1;
    j["kind"] = "c-norms";
    j["max_size"] = max_size;
    OrderedJson vals;
    for (int d = 0; d <= max_size; ++d)
        for (auto& lam : partitions_of(d)) vals[part_str(lam)] = c_norm(lam).str();
    j["values"] = std::move(vals);
    return j;
}

inline void write_json_file(const OrderedJson& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << j.dump(2) << "\n";
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace qfock
