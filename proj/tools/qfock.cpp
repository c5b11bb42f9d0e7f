// Verification harness and data-export CLI.
//
//   qfock run  --suite all --max-size 5 --series-order 8 --mode exact
//              [--seed S] [--format json|text] [--jobs J] [--timings] [--out FILE]
//   qfock dump --kind e-matrix|f-matrix|psi|k-matrix|macdonald|c-norms
//              [--r R] [--n N] [--degree D] [--partition "[2,1]"]
//              [--series-order K] [--max-size N] --out FILE
//
// Exit code 0 iff all checks pass; on failure the first witness is printed.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qfock/report.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact verification harness for the fixed-point Fock representation"};
    app.require_subcommand(1);

    // run_suite
    auto* run = app.add_subcommand("run", "run a verification suite");
    std::string suite = "all";
    qfock::CheckConfig cfg;
    std::string mode = "exact", format = "text", out_path;
    bool timings = false;
    run->add_option("--suite", suite, "relations, shuffle, macdonald, theta, or all")
        ->check(CLI::IsMember({"relations", "shuffle", "macdonald", "theta", "all"}));
    run->add_option("--max-size", cfg.max_size, "largest partition size checked")
        ->check(CLI::PositiveNumber);
    run->add_option("--series-order", cfg.series_order, "series truncation order")
        ->check(CLI::PositiveNumber);
    run->add_option("--mode", mode, "exact or sampled")->check(CLI::IsMember({"exact", "sampled"}));
    run->add_option("--seed", cfg.seed, "seed for sampled mode");
    run->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    run->add_option("--jobs", cfg.jobs, "worker pool size")->check(CLI::PositiveNumber);
    run->add_flag("--timings", timings, "include wall times in JSON (breaks byte determinism)");
    run->add_option("--out", out_path, "write the report to a file instead of stdout");

    // dump
    auto* dump = app.add_subcommand("dump", "export operator matrices and polynomial tables");
    std::string kind, dump_out, partition = "[]";
    int r = 0, n = 1, degree = 0, max_size = 3, series_order = 8;
    dump->add_option("--kind", kind, "e-matrix, f-matrix, psi, k-matrix, macdonald, or c-norms")
        ->required()
        ->check(CLI::IsMember({"e-matrix", "f-matrix", "psi", "k-matrix", "macdonald", "c-norms"}));
    dump->add_option("--r", r, "operator index (e-matrix / f-matrix)");
    dump->add_option("--n", n, "family index (k-matrix)");
    dump->add_option("--degree", degree, "source degree (matrices) or top degree (macdonald)");
    dump->add_option("--partition", partition, "basis partition, e.g. [2,1] (psi)");
    dump->add_option("--series-order", series_order, "series truncation order (psi)");
    dump->add_option("--max-size", max_size, "largest partition size (c-norms)");
    dump->add_option("--out", dump_out, "output file (stdout when omitted)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            cfg.sampled = (mode == "sampled");
            qfock::SuiteReport rep = qfock::run_suite(suite, cfg);
            std::string rendered = (format == "json")
                                       ? qfock::report_to_json(rep, timings).dump(2) + "\n"
                                       : qfock::report_to_text(rep);
            if (out_path.empty()) {
                std::cout << rendered;
            } else {
                std::ofstream f(out_path);
                if (!f) throw std::runtime_error("cannot open output file: " + out_path);
                f << rendered;
            }
            if (!rep.all_pass()) {
                const qfock::CheckRecord* fail = rep.first_failure();
                std::cerr << "FAIL " << fail->id << ": " << fail->witness << "\n";
                return 1;
            }
            return 0;
        }
        qfock::OrderedJson j;
        if (kind == "e-matrix") j = qfock::dump_e_matrix(r, degree);
        else if (kind == "f-matrix") j = qfock::dump_f_matrix(r, degree);
        else if (kind == "psi") j = qfock::dump_psi(qfock::part_parse(partition), series_order);
        else if (kind == "k-matrix") j = qfock::dump_k_matrix(n, degree);
        else if (kind == "macdonald") j = qfock::dump_macdonald(degree);
        else j = qfock::dump_c_norms(max_size);
        if (dump_out.empty())
            std::cout << j.dump(2) << "\n";
        else
            qfock::write_json_file(j, dump_out);
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
