// Command-line front end: construction, certification, probing, derivative
// checks, and reproduction of the bundled reference table, with JSON I/O.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sendov/certifier.hpp"
#include "sendov/constructor.hpp"
#include "sendov/derivative_check.hpp"
#include "sendov/json_io.hpp"
#include "sendov/probe.hpp"
#include "sendov/reference.hpp"
#include "sendov/spectrum.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCriterionFailed = 1;
constexpr int kExitBadInput = 2;

struct SeedEntry {
    int n;
    std::vector<double> x;
};

// Seeds file: JSON array of {"n": int, "x": [numbers]}.
std::vector<SeedEntry> load_seeds(const std::string& path) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(sendov::read_text_file(path));
    } catch (const nlohmann::json::exception& err) {
        throw std::invalid_argument(std::string("seed file parse error: ") + err.what());
    }
    if (!doc.is_array()) throw std::invalid_argument("seed file must be a JSON array");
    std::vector<SeedEntry> seeds;
    for (const auto& item : doc) {
        if (!item.is_object() || !item.contains("n") || !item.contains("x") ||
            !item["n"].is_number_integer() || !item["x"].is_array())
            throw std::invalid_argument("seed entries must be {\"n\": int, \"x\": [...]}");
        SeedEntry entry;
        entry.n = item["n"].get<int>();
        for (const auto& v : item["x"]) {
            if (!v.is_number())
                throw std::invalid_argument("seed vector entries must be numbers");
            entry.x.push_back(v.get<double>());
        }
        if (static_cast<int>(entry.x.size()) != sendov::system_dim(entry.n))
            throw std::invalid_argument("seed vector length mismatch for n = " +
                                        std::to_string(entry.n));
        seeds.push_back(std::move(entry));
    }
    if (seeds.empty()) throw std::invalid_argument("seed file contains no seeds");
    return seeds;
}

std::string solution_line(const sendov::ConstructionRecord& record) {
    std::string out = "{\"seed\":[";
    for (std::size_t i = 0; i < record.seed.size(); ++i) {
        if (i) out += ',';
        out += sendov::format_double(record.seed[i]);
    }
    out += "],\"converged\":";
    out += record.solve.converged ? "true" : "false";
    out += ",\"iterations\":" + std::to_string(record.solve.iterations);
    out += ",\"residual\":" + sendov::format_double(record.solve.residual_norm);
    out += ",\"duplicate\":";
    out += record.duplicate ? "true" : "false";
    out += ",\"certified\":";
    out += record.certified ? "true" : "false";
    if (!record.solve.diagnostic.empty() || !record.note.empty()) {
        out += ",\"note\":\"" + record.solve.diagnostic +
               (record.solve.diagnostic.empty() || record.note.empty() ? "" : "; ") +
               record.note + "\"";
    }
    out += '}';
    return out;
}

int cmd_table(double tolerance, const std::string& seeds_path, const std::string& out_path) {
    std::vector<SeedEntry> seeds;
    if (!seeds_path.empty()) {
        seeds = load_seeds(seeds_path);
    } else {
        for (const sendov::ReferenceSolution& ref : sendov::reference_solutions())
            seeds.push_back({ref.n, sendov::reference_seed(ref)});
    }

    std::printf("%4s %14s %14s %14s %14s %12s %12s  %s\n", "n", "beta", "a", "b", "c",
                "r", "d(P)", "status");
    bool all_ok = true;
    std::string failure;
    std::string json_rows;
    for (const SeedEntry& seed : seeds) {
        const sendov::ReferenceSolution* ref = sendov::reference_for(seed.n);
        if (!ref) throw std::invalid_argument("no bundled reference for n = " +
                                              std::to_string(seed.n));

        const sendov::NewtonResult solve = sendov::newton_solve(seed.n, seed.x);
        bool row_ok = solve.converged;
        std::string status = solve.converged ? "ok" : "newton-failed";

        sendov::CandidateParams params;
        double r = std::nan("");
        double dp = std::nan("");
        if (solve.converged) {
            params = sendov::unpack_params(seed.n, solve.x);
            std::sort(params.d.begin(), params.d.end());

            const double published[4] = {ref->beta, ref->a, ref->b, ref->c};
            const std::vector<double> got = sendov::pack_params(params);
            for (int k = 0; k < 4; ++k)
                if (std::abs(got[static_cast<std::size_t>(k)] - published[k]) > tolerance) {
                    row_ok = false;
                    status = "reference-mismatch";
                }
            for (std::size_t k = 4; k < got.size(); ++k)
                if (std::abs(got[k] - ref->refined[k]) > tolerance) {
                    row_ok = false;
                    status = "reference-mismatch";
                }

            const sendov::PropertyReport report = sendov::certify_all(params);
            const sendov::Spectrum spec = sendov::compute_spectrum(params);
            r = spec.r;
            dp = spec.dP;
            if (!report.overall) {
                row_ok = false;
                status = "certification-failed";
            }
        }

        std::printf("%4d %14.10f %14.10f %14.10f %14.10f %12.10f %12.10f  %s\n", seed.n,
                    params.beta, params.a, params.b, params.c, r, dp, status.c_str());
        if (!json_rows.empty()) json_rows += ',';
        json_rows += "{\"n\":" + std::to_string(seed.n) +
                     ",\"candidate\":" + sendov::candidate_to_json(params) +
                     ",\"r\":" + sendov::format_double(r) +
                     ",\"dP\":" + sendov::format_double(dp) + ",\"status\":\"" + status +
                     "\"}";
        if (!row_ok && all_ok) {
            all_ok = false;
            failure = "n = " + std::to_string(seed.n) + ": " + status;
        }
    }
    if (!out_path.empty())
        sendov::write_text_file(out_path, "[" + json_rows + "]\n");
    if (!all_ok) {
        std::cerr << "table: first failing row: " << failure << "\n";
        return kExitCriterionFailed;
    }
    return kExitOk;
}

int cmd_verify(const std::string& in_path, const std::string& report_path) {
    const sendov::CandidateParams params =
        sendov::candidate_from_json(sendov::read_text_file(in_path));
    const sendov::PropertyReport report = sendov::certify_all(params);
    const std::string json = sendov::report_to_json(report) + "\n";
    if (report_path.empty())
        std::cout << json;
    else
        sendov::write_text_file(report_path, json);
    for (const sendov::PropertyCheck& check : report.properties)
        std::fprintf(stderr, "property %c: %s (margin %.3e)\n", check.id,
                     check.pass ? "pass" : "FAIL", check.margin);
    return report.overall ? kExitOk : kExitCriterionFailed;
}

int cmd_construct(int n, bool discover, const std::string& out_path,
                  const std::string& log_path) {
    std::vector<std::vector<double>> seeds;
    const sendov::ReferenceSolution* ref = sendov::reference_for(n);
    if (discover || !ref) {
        seeds = sendov::discovery_seeds(n);
    } else {
        seeds.push_back(sendov::reference_seed(*ref));
    }

    std::vector<sendov::ConstructionRecord> log;
    const std::vector<sendov::ConstructedCandidate> survivors =
        sendov::construct(n, seeds, &log);

    std::string out_lines;
    for (const sendov::ConstructedCandidate& cand : survivors)
        out_lines += sendov::candidate_to_json(cand.params) + "\n";
    if (!out_path.empty()) sendov::write_text_file(out_path, out_lines);

    std::string log_lines;
    for (const sendov::ConstructionRecord& record : log)
        log_lines += solution_line(record) + "\n";
    if (!log_path.empty()) sendov::write_text_file(log_path, log_lines);

    std::cout << "n = " << n << ": " << seeds.size() << " seed(s), " << survivors.size()
              << " certified candidate(s)\n";
    for (const sendov::ConstructedCandidate& cand : survivors)
        std::cout << sendov::candidate_to_json(cand.params) << "\n";
    return kExitOk;
}

int cmd_probe(const std::string& in_path, long long samples, double scale,
              std::uint64_t rng_seed, const std::string& out_path) {
    const sendov::CandidateParams params =
        sendov::candidate_from_json(sendov::read_text_file(in_path));
    const sendov::ScanStats stats =
        sendov::neighborhood_scan(params, samples, scale, rng_seed);
    const std::string json = sendov::stats_to_json(stats) + "\n";
    if (out_path.empty())
        std::cout << json;
    else
        sendov::write_text_file(out_path, json);
    std::fprintf(stderr,
                 "probe: %lld samples at scale %g: %lld admissible, %lld improvements, "
                 "margin %.3e\n",
                 stats.count, stats.scale, stats.admissible, stats.improvements,
                 stats.margin);
    return kExitOk;
}

int cmd_derivcheck(const std::string& in_path, bool inject_sign_error) {
    const sendov::CandidateParams params =
        sendov::candidate_from_json(sendov::read_text_file(in_path));
    const sendov::DerivativeCheckReport report =
        sendov::run_derivative_checks(params, inject_sign_error);
    for (const auto& entry : report.entries)
        std::printf("%-28s worst %s error %.3e (tolerance %.0e)  %s\n", entry.kind.c_str(),
                    entry.relative ? "relative" : "absolute", entry.worst, entry.tolerance,
                    entry.pass ? "pass" : "FAIL");
    return report.pass() ? kExitOk : kExitCriterionFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"locally extremal polynomial toolkit"};
    app.require_subcommand(1);

    auto* table = app.add_subcommand("table", "construct and certify the reference table");
    double tolerance = 1e-8;
    std::string seeds_path;
    std::string table_out;
    table->add_option("--tolerance", tolerance, "reference match tolerance");
    table->add_option("--seeds", seeds_path, "seed file overriding the bundled seeds");
    table->add_option("--out", table_out, "write table rows as JSON");

    auto* verify = app.add_subcommand("verify", "check properties A-H of a candidate");
    std::string verify_in;
    std::string verify_report;
    verify->add_option("--in", verify_in, "candidate JSON file")->required();
    verify->add_option("--report", verify_report, "write the report JSON here");

    auto* construct = app.add_subcommand("construct", "solve the nonlinear system");
    int construct_n = 0;
    bool discover = false;
    std::string construct_out;
    std::string construct_log;
    construct->add_option("--n", construct_n, "polynomial degree")->required();
    construct->add_flag("--discover", discover, "seed from the coarse exploration grid");
    construct->add_option("--out", construct_out, "candidate JSON lines");
    construct->add_option("--log", construct_log, "construction log JSON lines");

    auto* probe = app.add_subcommand("probe", "sample the candidate's neighborhood");
    std::string probe_in;
    long long samples = 100000;
    double scale = 1e-3;
    std::uint64_t rng_seed = 20070809;
    std::string probe_out;
    probe->add_option("--in", probe_in, "candidate JSON file")->required();
    probe->add_option("--samples", samples, "number of perturbations");
    probe->add_option("--scale", scale, "Gaussian componentwise scale");
    probe->add_option("--rng-seed", rng_seed, "base seed for per-trial streams");
    probe->add_option("--out", probe_out, "write the statistics JSON here");

    auto* derivcheck =
        app.add_subcommand("derivcheck", "finite-difference derivative comparison");
    std::string deriv_in;
    bool inject_sign_error = false;
    derivcheck->add_option("--in", deriv_in, "candidate JSON file")->required();
    derivcheck
        ->add_flag("--inject-sign-error", inject_sign_error,
                   "flip one analytic derivative (failure-path exercise)")
        ->group("");  // hidden

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return kExitBadInput;
    }

    try {
        if (table->parsed()) return cmd_table(tolerance, seeds_path, table_out);
        if (verify->parsed()) return cmd_verify(verify_in, verify_report);
        if (construct->parsed())
            return cmd_construct(construct_n, discover, construct_out, construct_log);
        if (probe->parsed()) return cmd_probe(probe_in, samples, scale, rng_seed, probe_out);
        if (derivcheck->parsed()) return cmd_derivcheck(deriv_in, inject_sign_error);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
