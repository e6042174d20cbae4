#include "qcube/cli.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qcube/errors.hpp"
#include "qcube/influence.hpp"
#include "qcube/json_io.hpp"
#include "qcube/laws.hpp"
#include "qcube/noise.hpp"

namespace qcube {

namespace {

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (!item.empty()) parts.push_back(item);
    }
    return parts;
}

std::vector<double> parse_doubles(const std::string& text) {
    std::vector<double> values;
    for (const std::string& item : split_list(text)) values.push_back(std::stod(item));
    return values;
}

std::vector<int> parse_ints(const std::string& text) {
    std::vector<int> values;
    for (const std::string& item : split_list(text)) values.push_back(std::stoi(item));
    return values;
}

struct LawFlagSet {
    std::string p, delta, t, t0, constant, subset;
    int k = 0;
    int d = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--p", p, "norm exponent p");
        cmd->add_option("--delta", delta, "noise parameter delta");
        cmd->add_option("--t", t, "semigroup time t");
        cmd->add_option("--t0", t0, "integral cutoff t0");
        cmd->add_option("--k", k, "subset order k");
        cmd->add_option("--d", d, "Fourier degree d");
        cmd->add_option("--constant-override", constant, "override the law's constant");
        cmd->add_option("--subset", subset, "comma-separated 1-based sites for J");
    }

    LawParams to_params() const {
        LawParams params;
        if (!p.empty()) params.p = std::stod(p);
        if (!delta.empty()) params.delta = std::stod(delta);
        if (!t.empty()) params.t = std::stod(t);
        if (!t0.empty()) params.t0 = std::stod(t0);
        if (!constant.empty()) params.constant = std::stod(constant);
        if (k > 0) params.k = k;
        if (d > 0) params.d = d;
        if (!subset.empty()) params.subset = parse_ints(subset);
        return params;
    }
};

FamilySpec spec_from_flags(const std::string& kind, int n, std::uint64_t seed,
                           const std::string& table, const std::string& word, int degree_cap) {
    FamilySpec spec;
    spec.kind = family_kind_from_name(kind);
    spec.seed = seed;
    if (!table.empty()) {
        spec.truth_table = parse_ints(table);
        std::size_t len = spec.truth_table.size();
        int bits = 0;
        while ((std::size_t{1} << bits) < len) ++bits;
        spec.n = bits;
    }
    if (!word.empty()) {
        for (char c : word) {
            if (c < '0' || c > '3') throw shape_error("pauli word characters must be 0..3");
            spec.pauli_word.push_back(c - '0');
        }
        spec.n = static_cast<int>(spec.pauli_word.size());
    }
    if (n > 0) spec.n = n;
    spec.degree_cap = degree_cap > 0 ? degree_cap : 1;
    return spec;
}

std::string csv_escape_params(const std::map<std::string, std::string>& params) {
    std::string out;
    for (const auto& [key, value] : params) {
        if (!out.empty()) out.push_back(';');
        out += key + "=" + value;
    }
    if (out.find_first_of(",\"") != std::string::npos) {
        std::string quoted = "\"";
        for (char c : out) {
            if (c == '"') quoted += "\"\"";
            else quoted.push_back(c);
        }
        quoted.push_back('"');
        return quoted;
    }
    return out;
}

std::string report_csv_row(int index, const InequalityReport& report) {
    auto encode = [](double x) {
        if (std::isinf(x)) return std::string(x > 0 ? "inf" : "-inf");
        return format_double(x);
    };
    std::string row = std::to_string(index) + "," + report.law + "," +
                      csv_escape_params(report.params) + "," + encode(report.lhs) + "," +
                      encode(report.rhs) + "," + encode(report.slack) + "," +
                      verdict_name(report.verdict) + "," + report.constant_provenance;
    return row;
}

int cmd_generate(const std::string& kind, int n, std::uint64_t seed, const std::string& table,
                 const std::string& word, int degree_cap, const std::string& format,
                 const std::string& out_path) {
    const FamilySpec spec = spec_from_flags(kind, n, seed, table, word, degree_cap);
    const QOperator op = generate(spec);
    write_file(out_path, dump_json(operator_to_json(op, format)));
    std::cout << "wrote " << out_path << "\n";
    return 0;
}

int cmd_analyze(const std::string& in_path, const std::string& p_list,
                const std::string& delta_list, const std::string& out_path) {
    const QOperator op = operator_from_json(ordered_json::parse(read_file(in_path)));
    ordered_json doc;
    doc["n"] = op.qubits();
    doc["hermitian"] = op.is_hermitian();

    const CoeffVec& spec = op.spectrum();
    std::size_t nonzero = 0;
    double max_abs = 0.0;
    double l2_sq = 0.0;
    for (const cplx& c : spec) {
        const double mass = std::norm(c);
        if (mass > 0.0) ++nonzero;
        max_abs = std::max(max_abs, std::abs(c));
        l2_sq += mass;
    }
    ordered_json summary;
    summary["nonzero_coefficients"] = nonzero;
    summary["max_abs_coefficient"] = max_abs;
    summary["l2_norm_sq"] = l2_sq;
    summary["trace"] = ordered_json::array({spec[0].real(), spec[0].imag()});
    doc["spectrum_summary"] = std::move(summary);
    doc["variance"] = variance(op);
    doc["weights"] = weight_spectrum_to_json(fourier_weights(op), op.qubits());

    ordered_json influences = ordered_json::array();
    for (double p : parse_doubles(p_list))
        influences.push_back(influence_profile_to_json(influence_profile(op, p), op.qubits()));
    doc["influences"] = std::move(influences);

    ordered_json stability = ordered_json::array();
    for (double delta : parse_doubles(delta_list)) {
        ordered_json row;
        row["delta"] = delta;
        row["value"] = noise_stability(op, delta);
        stability.push_back(std::move(row));
    }
    doc["noise_stability"] = std::move(stability);

    const std::string text = dump_json(doc);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_file(out_path, text);
        std::cout << "wrote " << out_path << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& in_path, const std::string& laws, const LawFlagSet& flags,
               const std::string& out_path) {
    const QOperator op = operator_from_json(ordered_json::parse(read_file(in_path)));
    const LawParams params = flags.to_params();
    bool any_fail = false;
    ordered_json reports = ordered_json::array();
    for (const std::string& law : split_list(laws)) {
        InequalityReport report;
        try {
            report = check_law(law, op, params);
        } catch (const norm_precondition_error& err) {
            report.law = law;
            report.verdict = Verdict::degenerate;
            report.note = err.what();
        }
        any_fail = any_fail || report.verdict == Verdict::fail;
        reports.push_back(report_to_json(report));
        std::cout << law << ": " << verdict_name(report.verdict) << "\n";
    }
    ordered_json doc;
    doc["operator"] = in_path;
    doc["reports"] = std::move(reports);
    if (!out_path.empty()) {
        write_file(out_path, dump_json(doc));
        std::cout << "wrote " << out_path << "\n";
    }
    return any_fail ? 1 : 0;
}

int cmd_sweep(const std::string& family_path, const std::string& laws, int count,
              const LawFlagSet& flags, const std::string& out_path) {
    const FamilySpec family = family_spec_from_json(ordered_json::parse(read_file(family_path)));
    const SweepResult result = sweep(family, split_list(laws), count, flags.to_params());

    std::string csv = "index,law,params,lhs,rhs,slack,verdict,constant_provenance\n";
    for (const SweepRow& row : result.rows) csv += report_csv_row(row.index, row.report) + "\n";
    write_file(out_path, csv);
    std::cout << "wrote " << out_path << " (" << result.rows.size() << " rows)\n";

    if (result.failed) {
        const std::string replay = out_path + ".offending.json";
        write_file(replay, dump_json(operator_to_json(result.offending, "pauli")));
        std::cerr << "law failed on member " << result.fail_index << "; operator saved to "
                  << replay << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args) {
    CLI::App app{"Fourier analysis laboratory on quantum Boolean cubes"};
    app.require_subcommand(1);

    // generate
    std::string g_kind = "dictator", g_table, g_word, g_format = "pauli", g_out;
    int g_n = 0, g_cap = 0;
    std::uint64_t g_seed = 0;
    CLI::App* generate = app.add_subcommand("generate", "generate an operator file");
    generate->add_option("--kind", g_kind, "family kind")->required();
    generate->add_option("--n", g_n, "qubit count");
    generate->add_option("--seed", g_seed, "64-bit seed");
    generate->add_option("--table", g_table, "comma-separated +-1 truth table");
    generate->add_option("--word", g_word, "Pauli word, e.g. 13 for sigma1 x sigma3");
    generate->add_option("--degree-cap", g_cap, "degree cap for random-low-degree");
    generate->add_option("--format", g_format, "pauli or matrix");
    generate->add_option("-o,--out", g_out, "output path")->required();

    // analyze
    std::string a_in, a_p = "1,2", a_delta = "0.5", a_out;
    CLI::App* analyze = app.add_subcommand("analyze", "spectrum, influences, stability");
    analyze->add_option("input", a_in, "operator JSON file")->required();
    analyze->add_option("--p", a_p, "comma-separated influence exponents");
    analyze->add_option("--delta", a_delta, "comma-separated noise parameters");
    analyze->add_option("-o,--out", a_out, "output path (stdout if omitted)");

    // verify
    std::string v_in, v_laws, v_out;
    LawFlagSet v_flags;
    CLI::App* verify = app.add_subcommand("verify", "check inequalities on an operator");
    verify->add_option("input", v_in, "operator JSON file")->required();
    verify->add_option("--laws", v_laws, "comma-separated law ids")->required();
    v_flags.attach(verify);
    verify->add_option("-o,--out", v_out, "report output path");

    // sweep
    std::string s_family, s_laws, s_out;
    int s_count = 1;
    LawFlagSet s_flags;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "run laws over a seeded family");
    sweep_cmd->add_option("--family", s_family, "family spec JSON file")->required();
    sweep_cmd->add_option("--laws", s_laws, "comma-separated law ids")->required();
    sweep_cmd->add_option("--count", s_count, "number of family members");
    s_flags.attach(sweep_cmd);
    sweep_cmd->add_option("-o,--out", s_out, "CSV output path")->required();

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (generate->parsed())
            return cmd_generate(g_kind, g_n, g_seed, g_table, g_word, g_cap, g_format, g_out);
        if (analyze->parsed()) return cmd_analyze(a_in, a_p, a_delta, a_out);
        if (verify->parsed()) return cmd_verify(v_in, v_laws, v_flags, v_out);
        if (sweep_cmd->parsed()) return cmd_sweep(s_family, s_laws, s_count, s_flags, s_out);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace qcube
