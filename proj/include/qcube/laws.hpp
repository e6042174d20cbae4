#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcube/generators.hpp"
#include "qcube/operator.hpp"

namespace qcube {

enum class Verdict { pass, fail, degenerate };

std::string verdict_name(Verdict v);

struct LawParams {
    std::optional<double> p;
    std::optional<double> delta;
    std::optional<double> t;
    std::optional<double> t0;
    std::optional<double> constant;  // overrides the law's default constant
    std::optional<int> k;
    std::optional<int> d;
    std::optional<std::vector<int>> subset;  // J, 1-based sites
};

/// One evaluated inequality: both sides, the slack rhs - lhs, and where the
/// constant came from. Laws are oriented so the claim reads lhs <= rhs;
/// pass means slack >= -1e-9 * max(1, |lhs|, |rhs|), and rhs = +inf always
/// passes. Degenerate marks documented degenerate gates, never a failure.
struct InequalityReport {
    std::string law;
    std::map<std::string, std::string> params;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    Verdict verdict = Verdict::pass;
    std::string constant_provenance;  // paper-proof | theorem-statement | user-override
    std::string note;
};

const std::vector<std::string>& known_laws();

/// Evaluates one law on one operator. Throws on unknown law ids, on missing
/// required parameters, and (norm_precondition_error) when a law that assumes
/// ||A|| <= 1 receives an operator with ||A|| > 1 + 1e-9.
InequalityReport check_law(const std::string& law, const QOperator& a, const LawParams& params);

struct SweepRow {
    int index = 0;
    InequalityReport report;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    bool failed = false;
    int fail_index = -1;
    QOperator offending;  // set when failed
};

/// Runs each law on `count` family members in order. Deterministic under the
/// family seed; stops at the first fail verdict and carries the offending
/// operator for replay. Laws needing a subset parameter that was not supplied
/// get a seeded random nonempty J per member.
SweepResult sweep(const FamilySpec& family, const std::vector<std::string>& laws, int count,
                  const LawParams& params);

}  // namespace qcube
