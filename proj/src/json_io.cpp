#include "sendov/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace sendov {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

namespace {

void append_array(std::string& out, const std::vector<double>& values) {
    out += '[';
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += format_double(values[i]);
    }
    out += ']';
}

// Scalars stay scalar; multi-valued measurements become arrays.
void append_scalar_or_array(std::string& out, const std::vector<double>& values) {
    if (values.size() == 1)
        out += format_double(values[0]);
    else
        append_array(out, values);
}

}  // namespace

std::string candidate_to_json(const CandidateParams& params) {
    std::string out = "{\"n\":" + std::to_string(params.n);
    out += ",\"beta\":" + format_double(params.beta);
    out += ",\"a\":" + format_double(params.a);
    out += ",\"b\":" + format_double(params.b);
    out += ",\"c\":" + format_double(params.c);
    out += ",\"d\":";
    append_array(out, params.d);
    out += '}';
    return out;
}

CandidateParams candidate_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& err) {
        throw std::invalid_argument(std::string("candidate JSON parse error: ") +
                                    err.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("candidate JSON must be an object");
    for (const char* key : {"n", "beta", "a", "b", "c", "d"})
        if (!doc.contains(key))
            throw std::invalid_argument(std::string("candidate JSON missing key: ") + key);
    if (!doc["n"].is_number_integer())
        throw std::invalid_argument("candidate n must be an integer");
    for (const char* key : {"beta", "a", "b", "c"})
        if (!doc[key].is_number())
            throw std::invalid_argument(std::string("candidate ") + key +
                                        " must be a number");
    if (!doc["d"].is_array())
        throw std::invalid_argument("candidate d must be an array of numbers");

    CandidateParams params;
    params.n = doc["n"].get<int>();
    params.beta = doc["beta"].get<double>();
    params.a = doc["a"].get<double>();
    params.b = doc["b"].get<double>();
    params.c = doc["c"].get<double>();
    for (const auto& item : doc["d"]) {
        if (!item.is_number())
            throw std::invalid_argument("candidate d must be an array of numbers");
        params.d.push_back(item.get<double>());
    }
    if (params.n < 5) throw std::invalid_argument("candidate n must be >= 5");
    const std::size_t want = (params.n % 2 == 0) ? 2 : 3;
    if (params.d.size() != want)
        throw std::invalid_argument("candidate d must have " + std::to_string(want) +
                                    " entries for n = " + std::to_string(params.n));
    return params;
}

std::string report_to_json(const PropertyReport& report) {
    std::string out = "{\"candidate\":" + candidate_to_json(report.candidate);
    out += ",\"properties\":[";
    for (std::size_t i = 0; i < report.properties.size(); ++i) {
        const PropertyCheck& check = report.properties[i];
        if (i) out += ',';
        out += "{\"id\":\"";
        out += check.id;
        out += "\",\"measured\":";
        append_scalar_or_array(out, check.measured);
        out += ",\"threshold\":";
        append_scalar_or_array(out, check.threshold);
        out += ",\"margin\":" + format_double(check.margin);
        out += ",\"pass\":";
        out += check.pass ? "true" : "false";
        out += '}';
    }
    out += "],\"overall\":";
    out += report.overall ? "true" : "false";

    const ToleranceTable& tol = report.tolerances;
    out += ",\"tolerances\":{";
    out += "\"max_modulus\":" + format_double(tol.max_modulus);
    out += ",\"min_root_gap\":" + format_double(tol.min_root_gap);
    out += ",\"beta_low\":" + format_double(tol.beta_low);
    out += ",\"beta_high\":" + format_double(tol.beta_high);
    out += ",\"equidistance\":" + format_double(tol.equidistance);
    out += ",\"min_circle_radius\":" + format_double(tol.min_circle_radius);
    out += ",\"min_beta_minus_a\":" + format_double(tol.min_beta_minus_a);
    out += ",\"r_max\":" + format_double(tol.r_max);
    out += ",\"r_minus_R_gap\":" + format_double(tol.r_minus_r_gap);
    out += ",\"min_certificate\":" + format_double(tol.min_certificate);
    out += ",\"sigma7_min\":" + format_double(tol.sigma7_min);
    out += ",\"tol_circle\":" + format_double(tol.tol_circle);
    out += ",\"null_space_sigma\":" + format_double(tol.null_space_sigma);
    out += ",\"root_residual\":" + format_double(tol.root_residual);
    out += ",\"beta_match\":" + format_double(tol.beta_match);
    out += '}';

    out += ",\"certificate\":";
    append_array(out, report.certificate);
    out += ",\"null_space_dim\":" + std::to_string(report.null_space_dim);
    out += ",\"singular_values\":";
    append_array(out, report.singular_values);
    out += '}';
    return out;
}

std::string system_to_json(const VariationalSystem& sys) {
    std::string out = "{\"E\":[";
    for (std::size_t i = 0; i < sys.E.size(); ++i) {
        if (i) out += ',';
        append_array(out, std::vector<double>(sys.E[i].begin(), sys.E[i].end()));
    }
    out += "],\"f\":";
    append_array(out, sys.f);
    out += ",\"variables\":[";
    for (std::size_t i = 0; i < kVariableNames.size(); ++i) {
        if (i) out += ',';
        out += '"';
        out += kVariableNames[i];
        out += '"';
    }
    out += "]}";
    return out;
}

std::string stats_to_json(const ScanStats& stats) {
    std::string out = "{\"count\":" + std::to_string(stats.count);
    out += ",\"scale\":" + format_double(stats.scale);
    out += ",\"admissible\":" + std::to_string(stats.admissible);
    out += ",\"improvements\":" + std::to_string(stats.improvements);
    out += ",\"max_dQ\":" + format_double(stats.max_dQ);
    out += ",\"dP\":" + format_double(stats.dP);
    out += ",\"margin\":" + format_double(stats.margin);
    out += ",\"rng_seed\":" + std::to_string(stats.rng_seed);
    out += ",\"sampling\":\"gaussian\",\"evidence\":\"statistical\"}";
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << content;
    if (!out) throw std::runtime_error("short write: " + path);
}

}  // namespace sendov
