#pragma once

#include <string>

#include <json.hpp>

#include "qcube/fkn.hpp"
#include "qcube/generators.hpp"
#include "qcube/influence.hpp"
#include "qcube/laws.hpp"
#include "qcube/operator.hpp"

namespace qcube {

using ordered_json = nlohmann::ordered_json;

/// Shortest text with 17 significant digits; doubles round-trip exactly.
std::string format_double(double x);

/// Serializes with fixed key order and %.17g floats so equal inputs produce
/// byte-identical files. Non-finite doubles must be pre-encoded as strings.
std::string dump_json(const ordered_json& value);

/// {"n":, "format": "pauli"|"matrix", "entries":}. Pauli entries map base-4
/// site-1-leftmost strings to [re, im] and omit zeros; matrix entries are the
/// row-major 2^n x 2^n array of [re, im].
ordered_json operator_to_json(const QOperator& a, const std::string& format = "pauli");
QOperator operator_from_json(const ordered_json& doc);

ordered_json influence_profile_to_json(const InfluenceProfile& profile, int n);
ordered_json weight_spectrum_to_json(const WeightSpectrum& weights, int n);
ordered_json report_to_json(const InequalityReport& report);
ordered_json fkn_result_to_json(const FknResult& result);

ordered_json family_spec_to_json(const FamilySpec& spec);
FamilySpec family_spec_from_json(const ordered_json& doc);

void write_file(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

}  // namespace qcube
