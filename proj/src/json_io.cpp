#include "qcube/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "qcube/errors.hpp"

namespace qcube {

namespace {

void append_escaped(const std::string& text, std::string& out) {
    out.push_back('"');
    for (char c : text) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out.push_back(c);
                }
        }
    }
    out.push_back('"');
}

void dump_value(const ordered_json& value, std::string& out, int indent) {
    const std::string pad(2 * indent, ' ');
    const std::string pad_inner(2 * (indent + 1), ' ');
    switch (value.type()) {
        case nlohmann::detail::value_t::null: out += "null"; break;
        case nlohmann::detail::value_t::boolean: out += value.get<bool>() ? "true" : "false"; break;
        case nlohmann::detail::value_t::number_integer:
            out += std::to_string(value.get<std::int64_t>());
            break;
        case nlohmann::detail::value_t::number_unsigned:
            out += std::to_string(value.get<std::uint64_t>());
            break;
        case nlohmann::detail::value_t::number_float: {
            const double x = value.get<double>();
            if (!std::isfinite(x)) throw domain_error("non-finite float must be encoded as string");
            out += format_double(x);
            break;
        }
        case nlohmann::detail::value_t::string: append_escaped(value.get<std::string>(), out); break;
        case nlohmann::detail::value_t::array: {
            if (value.empty()) {
                out += "[]";
                break;
            }
            // Arrays of scalars stay on one line; arrays of containers nest.
            const bool nested = value.front().is_structured();
            out.push_back('[');
            bool first = true;
            for (const auto& item : value) {
                if (!first) out.push_back(',');
                first = false;
                if (nested) {
                    out.push_back('\n');
                    out += pad_inner;
                } else if (out.back() == ',') {
                    out.push_back(' ');
                }
                dump_value(item, out, indent + 1);
            }
            if (nested) {
                out.push_back('\n');
                out += pad;
            }
            out.push_back(']');
            break;
        }
        case nlohmann::detail::value_t::object: {
            if (value.empty()) {
                out += "{}";
                break;
            }
            out.push_back('{');
            bool first = true;
            for (auto it = value.begin(); it != value.end(); ++it) {
                if (!first) out.push_back(',');
                first = false;
                out.push_back('\n');
                out += pad_inner;
                append_escaped(it.key(), out);
                out += ": ";
                dump_value(it.value(), out, indent + 1);
            }
            out.push_back('\n');
            out += pad;
            out.push_back('}');
            break;
        }
        default: throw domain_error("unsupported JSON value type");
    }
}

ordered_json complex_pair(cplx value) {
    return ordered_json::array({value.real(), value.imag()});
}

cplx parse_complex_pair(const ordered_json& pair) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
        throw shape_error("complex entries must be [re, im] number pairs");
    return {pair[0].get<double>(), pair[1].get<double>()};
}

}  // namespace

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string dump_json(const ordered_json& value) {
    std::string out;
    dump_value(value, out, 0);
    out.push_back('\n');
    return out;
}

ordered_json operator_to_json(const QOperator& a, const std::string& format) {
    ordered_json doc;
    doc["n"] = a.qubits();
    doc["format"] = format;
    if (format == "pauli") {
        ordered_json entries = ordered_json::object();
        const CoeffVec& spec = a.spectrum();
        for (PauliCode code = 0; code < spec.size(); ++code) {
            const cplx c = spec[code];
            if (c.real() == 0.0 && c.imag() == 0.0) continue;
            entries[PauliIndex(a.qubits(), code).to_string()] = complex_pair(c);
        }
        doc["entries"] = std::move(entries);
    } else if (format == "matrix") {
        const Matrix& m = a.matrix();
        ordered_json rows = ordered_json::array();
        for (std::size_t r = 0; r < m.dim(); ++r) {
            ordered_json row = ordered_json::array();
            for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(complex_pair(m(r, c)));
            rows.push_back(std::move(row));
        }
        doc["entries"] = std::move(rows);
    } else {
        throw shape_error("operator format must be 'pauli' or 'matrix'");
    }
    return doc;
}

QOperator operator_from_json(const ordered_json& doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("format") ||
        !doc.contains("entries"))
        throw shape_error("operator file needs fields n, format, entries");
    const int n = doc["n"].get<int>();
    check_qubit_count(n);
    const std::string format = doc["format"].get<std::string>();
    const ordered_json& entries = doc["entries"];
    if (format == "pauli") {
        if (!entries.is_object()) throw shape_error("pauli entries must be an object");
        CoeffVec coeffs(std::size_t{1} << (2 * n));
        for (auto it = entries.begin(); it != entries.end(); ++it) {
            const PauliIndex index = PauliIndex::from_string(it.key());
            if (index.qubits() != n) throw shape_error("pauli key length must equal n");
            coeffs[index.code()] = parse_complex_pair(it.value());
        }
        return QOperator::from_spectrum(n, std::move(coeffs));
    }
    if (format == "matrix") {
        const std::size_t dim = std::size_t{1} << n;
        if (!entries.is_array() || entries.size() != dim)
            throw shape_error("matrix entries must be a 2^n x 2^n array");
        Matrix m(dim);
        for (std::size_t r = 0; r < dim; ++r) {
            const ordered_json& row = entries[r];
            if (!row.is_array() || row.size() != dim)
                throw shape_error("matrix entries must be a 2^n x 2^n array");
            for (std::size_t c = 0; c < dim; ++c) m(r, c) = parse_complex_pair(row[c]);
        }
        return QOperator::from_matrix(std::move(m));
    }
    throw shape_error("operator format must be 'pauli' or 'matrix'");
}

ordered_json influence_profile_to_json(const InfluenceProfile& profile, int n) {
    ordered_json doc;
    doc["p"] = profile.p;
    doc["n"] = n;
    doc["per_coordinate"] = profile.per_coordinate;
    doc["total"] = profile.total;
    doc["variance"] = profile.variance;
    return doc;
}

ordered_json weight_spectrum_to_json(const WeightSpectrum& weights, int n) {
    ordered_json doc;
    doc["n"] = n;
    doc["by_degree"] = weights.by_degree;
    return doc;
}

ordered_json report_to_json(const InequalityReport& report) {
    ordered_json doc;
    doc["law"] = report.law;
    ordered_json params = ordered_json::object();
    for (const auto& [key, value] : report.params) params[key] = value;
    doc["params"] = std::move(params);
    auto encode = [](double x) -> ordered_json {
        if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
        return x;
    };
    doc["lhs"] = encode(report.lhs);
    doc["rhs"] = encode(report.rhs);
    doc["slack"] = encode(report.slack);
    doc["verdict"] = verdict_name(report.verdict);
    doc["constant_provenance"] = report.constant_provenance;
    if (!report.note.empty()) doc["note"] = report.note;
    return doc;
}

ordered_json fkn_result_to_json(const FknResult& result) {
    ordered_json doc;
    doc["epsilon"] = result.epsilon;
    doc["chosen_j"] = result.chosen_j;
    doc["level1_mass_at_j"] = result.level1_mass_at_j;
    doc["distance_sq"] = result.distance_sq;
    if (result.epsilon > 0.0) doc["distance_to_epsilon_ratio"] = result.distance_sq / result.epsilon;
    doc["conditional_gap_sq"] = result.conditional_gap_sq;
    doc["b_j"] = operator_to_json(result.b_j, "pauli");
    doc["c_j"] = operator_to_json(result.c_j, "pauli");
    return doc;
}

ordered_json family_spec_to_json(const FamilySpec& spec) {
    ordered_json doc;
    doc["kind"] = family_kind_name(spec.kind);
    doc["n"] = spec.n;
    doc["seed"] = spec.seed;
    if (!spec.truth_table.empty()) doc["table"] = spec.truth_table;
    if (!spec.pauli_word.empty()) doc["word"] = spec.pauli_word;
    if (spec.kind == FamilyKind::random_low_degree) doc["degree_cap"] = spec.degree_cap;
    return doc;
}

FamilySpec family_spec_from_json(const ordered_json& doc) {
    if (!doc.is_object() || !doc.contains("kind") || !doc.contains("n"))
        throw shape_error("family spec needs fields kind and n");
    FamilySpec spec;
    spec.kind = family_kind_from_name(doc["kind"].get<std::string>());
    spec.n = doc["n"].get<int>();
    spec.seed = doc.value("seed", std::uint64_t{0});
    if (doc.contains("table")) spec.truth_table = doc["table"].get<std::vector<int>>();
    if (doc.contains("table_bits")) {
        // packed form: character i is row i, '0' -> +1 and '1' -> -1
        spec.truth_table.clear();
        for (char c : doc["table_bits"].get<std::string>()) {
            if (c != '0' && c != '1') throw shape_error("table_bits must contain only 0 and 1");
            spec.truth_table.push_back(c == '0' ? 1 : -1);
        }
    }
    if (doc.contains("word")) spec.pauli_word = doc["word"].get<std::vector<int>>();
    spec.degree_cap = doc.value("degree_cap", 1);
    return spec;
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << contents;
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace qcube
