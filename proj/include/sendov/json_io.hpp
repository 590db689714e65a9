#pragma once

#include <string>

#include "sendov/candidate.hpp"
#include "sendov/certifier.hpp"
#include "sendov/probe.hpp"
#include "sendov/variational.hpp"

namespace sendov {

/// 17-significant-digit rendering used for every float we serialize.
std::string format_double(double x);

std::string candidate_to_json(const CandidateParams& params);
/// Strict schema: n (int), beta/a/b/c (numbers), d (number array sized by
/// the parity of n). Throws std::invalid_argument on any violation.
CandidateParams candidate_from_json(const std::string& text);

std::string report_to_json(const PropertyReport& report);
std::string system_to_json(const VariationalSystem& sys);
std::string stats_to_json(const ScanStats& stats);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace sendov
