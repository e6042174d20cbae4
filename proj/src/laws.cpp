#include "qcube/laws.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <cstdio>
#include <sstream>

#include "qcube/eigen.hpp"
#include "qcube/errors.hpp"
#include "qcube/influence.hpp"
#include "qcube/noise.hpp"

namespace qcube {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSlackTol = 1e-9;

std::string format_param(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void require_unit_norm(const std::string& law, const QOperator& a) {
    const double norm = operator_norm(a);
    if (norm > 1.0 + 1e-9)
        throw norm_precondition_error(law + " requires ||A|| <= 1, got " + format_param(norm));
}

InequalityReport finish(InequalityReport report) {
    if (std::isinf(report.rhs)) {
        report.slack = kInf;
        report.verdict = Verdict::pass;
        return report;
    }
    report.slack = report.rhs - report.lhs;
    const double scale = std::max({1.0, std::abs(report.lhs), std::abs(report.rhs)});
    report.verdict = report.slack >= -kSlackTol * scale ? Verdict::pass : Verdict::fail;
    return report;
}

InequalityReport degenerate(InequalityReport report, const std::string& note) {
    report.verdict = Verdict::degenerate;
    report.note = note;
    report.lhs = 0.0;
    report.rhs = 0.0;
    report.slack = 0.0;
    return report;
}

double l2_norm_sq(const QOperator& a) {
    double sum = 0.0;
    for (const cplx& c : a.spectrum()) sum += std::norm(c);
    return sum;
}

std::vector<double> influence1_vector(const QOperator& a) {
    std::vector<double> values(a.qubits());
    for (int j = 1; j <= a.qubits(); ++j) values[j - 1] = influence(a, j, 1.0);
    return values;
}

double factorial(int k) {
    double value = 1.0;
    for (int i = 2; i <= k; ++i) value *= i;
    return value;
}

/// ||P_t A||_2 via Parseval.
double semigroup_l2_norm(const QOperator& a, double t) {
    const CoeffVec& spec = a.spectrum();
    const int n = a.qubits();
    std::vector<double> factor(n + 1);
    for (int d = 0; d <= n; ++d) factor[d] = std::exp(-2.0 * t * d);
    double sum = 0.0;
    for (PauliCode code = 0; code < spec.size(); ++code)
        sum += factor[code_degree(code)] * std::norm(spec[code]);
    return std::sqrt(sum);
}

/// |A|^2 as an operator (A^2 for Hermitian A).
QOperator modulus_squared(const QOperator& a) {
    const Matrix& m = a.matrix();
    if (a.is_hermitian()) return QOperator::from_matrix(m * m);
    return QOperator::from_matrix(m.adjoint() * m);
}

double adaptive_simpson(const std::function<double(double)>& f, double lo, double hi, double fl,
                        double fm, double fh, double whole, double tol, int depth) {
    const double mid = 0.5 * (lo + hi);
    const double lm = 0.5 * (lo + mid);
    const double rm = 0.5 * (mid + hi);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (mid - lo) / 6.0 * (fl + 4.0 * flm + fm);
    const double right = (hi - mid) / 6.0 * (fm + 4.0 * frm + fh);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson(f, lo, mid, fl, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, mid, hi, fm, frm, fh, right, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, double lo, double hi, double tol) {
    const double mid = 0.5 * (lo + hi);
    const double fl = f(lo);
    const double fm = f(mid);
    const double fh = f(hi);
    const double whole = (hi - lo) / 6.0 * (fl + 4.0 * fm + fh);
    return adaptive_simpson(f, lo, hi, fl, fm, fh, whole, tol, 48);
}

using LawFn = InequalityReport (*)(const QOperator&, const LawParams&);

InequalityReport law_poincare(const QOperator& a, const LawParams&) {
    InequalityReport report;
    report.law = "poincare";
    report.constant_provenance = "theorem-statement";
    report.lhs = variance(a);
    report.rhs = total_l2_influence(a);
    return finish(std::move(report));
}

InequalityReport law_logsob(const QOperator& a, const LawParams&) {
    InequalityReport report;
    report.law = "logsob";
    report.constant_provenance = "theorem-statement";
    report.lhs = entropy(modulus_squared(a));
    report.rhs = 2.0 * total_l2_influence(a);
    return finish(std::move(report));
}

InequalityReport law_logsob_lower(const QOperator& a, const LawParams& params) {
    const double p = params.p.value_or(1.0);
    if (p < 1.0 || p >= 2.0) throw domain_error("logsob_lower needs p in [1, 2)");
    require_unit_norm("logsob_lower", a);
    InequalityReport report;
    report.law = "logsob_lower";
    report.params["p"] = format_param(p);
    report.constant_provenance = "theorem-statement";
    const double norm2_sq = l2_norm_sq(a);
    const double entropy_term = norm2_sq > 0.0 ? -0.5 * norm2_sq * std::log(norm2_sq) : 0.0;
    const double penalty =
        std::pow(schatten_norm(a, p), p / 2.0) * std::sqrt(norm2_sq) / (2.0 - p);
    report.lhs = entropy_term - penalty;
    report.rhs = total_l2_influence(a);
    return finish(std::move(report));
}

InequalityReport law_hyper(const QOperator& a, const LawParams& params) {
    const double t = params.t.value_or(0.5);
    if (!(t >= 0.0)) throw domain_error("hyper needs t >= 0");
    InequalityReport report;
    report.law = "hyper";
    report.params["t"] = format_param(t);
    report.constant_provenance = "theorem-statement";
    report.lhs = semigroup_l2_norm(a, t);
    report.rhs = schatten_norm(a, 1.0 + std::exp(-2.0 * t));
    return finish(std::move(report));
}

InequalityReport law_influence_chain(const QOperator& a, const LawParams& params) {
    const double p = params.p.value_or(1.0);
    if (p < 1.0 || p >= 2.0) throw domain_error("influence_chain needs p in [1, 2)");
    require_unit_norm("influence_chain", a);
    InequalityReport report;
    report.law = "influence_chain";
    report.params["p"] = format_param(p);
    report.constant_provenance = "theorem-statement";

    double worst = kInf;
    bool all_pass = true;
    report.lhs = 0.0;
    report.rhs = 0.0;
    for (int j = 1; j <= a.qubits(); ++j) {
        const double inf2 = l2_influence(a, j);
        const double infp = influence(a, j, p);
        const double links[3][2] = {
            {std::exp2(p - 2.0) * inf2, infp},
            {infp, std::pow(inf2, p / 2.0)},
            {std::pow(inf2, p / 2.0), 1.0},
        };
        static const char* names[3] = {"lower", "upper", "unit"};
        for (int link = 0; link < 3; ++link) {
            const double lhs = links[link][0];
            const double rhs = links[link][1];
            const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
            const double rel = (rhs - lhs) / scale;
            if (rel < worst) {
                worst = rel;
                report.lhs = lhs;
                report.rhs = rhs;
                report.note = std::string("tightest link: ") + names[link] + " at j=" +
                              std::to_string(j);
            }
            if (rel < -kSlackTol) all_pass = false;
        }
    }
    report.slack = report.rhs - report.lhs;
    report.verdict = all_pass ? Verdict::pass : Verdict::fail;
    return report;
}

InequalityReport law_bmo(const QOperator& a, const LawParams& params) {
    require_unit_norm("bmo", a);
    const int n = a.qubits();
    std::vector<int> subset;
    if (params.subset) {
        subset = *params.subset;
    } else {
        for (int j = 1; j <= n; ++j) subset.push_back(j);
    }
    if (subset.empty()) throw shape_error("bmo needs a nonempty subset J");
    const SiteMask j_set = mask_from_sites(subset, n);

    InequalityReport report;
    report.law = "bmo";
    {
        std::ostringstream sites;
        for (std::size_t i = 0; i < subset.size(); ++i) sites << (i ? "," : "") << subset[i];
        report.params["J"] = sites.str();
    }
    report.constant_provenance = "theorem-statement";

    const double w_j = single_intersection_weight(a, j_set);
    double max_inf1 = 0.0;
    for (int j : subset) max_inf1 = std::max(max_inf1, influence(a, j, 1.0));
    double total_inf1 = 0.0;
    for (int j = 1; j <= n; ++j) total_inf1 += influence(a, j, 1.0);

    const double log_term =
        w_j > 0.0 ? 0.5 * std::log(1.0 / (2.0 * max_inf1)) * w_j : 0.0;
    report.lhs = log_term - std::sqrt(3.0) * std::sqrt(total_inf1) * std::sqrt(w_j);
    report.rhs = total_l2_influence(a);
    return finish(std::move(report));
}

InequalityReport law_kkl_dimfree(const QOperator& a, const LawParams& params) {
    require_unit_norm("kkl_dimfree", a);
    const double constant = params.constant.value_or(180000.0);
    InequalityReport report;
    report.law = "kkl_dimfree";
    report.params["C"] = format_param(constant);
    report.constant_provenance = params.constant ? "user-override" : "paper-proof";
    const double var = variance(a);
    if (var < 1e-300) return degenerate(std::move(report), "variance vanished");
    double total_inf1 = 0.0;
    double max_inf1 = 0.0;
    for (int j = 1; j <= a.qubits(); ++j) {
        const double inf = influence(a, j, 1.0);
        total_inf1 += inf;
        max_inf1 = std::max(max_inf1, inf);
    }
    report.lhs = std::exp2(-constant * total_inf1 / var);
    report.rhs = max_inf1;
    return finish(std::move(report));
}

InequalityReport law_kkl_logn(const QOperator& a, const LawParams& params) {
    require_unit_norm("kkl_logn", a);
    if (!params.constant)
        throw shape_error("kkl_logn asserts an unnamed absolute constant; pass one explicitly");
    const double constant = *params.constant;
    InequalityReport report;
    report.law = "kkl_logn";
    report.params["C"] = format_param(constant);
    report.constant_provenance = "user-override";
    const int n = a.qubits();
    double max_inf1 = 0.0;
    for (int j = 1; j <= n; ++j) max_inf1 = std::max(max_inf1, influence(a, j, 1.0));
    report.lhs = constant * variance(a) * std::log(static_cast<double>(n)) / n;
    report.rhs = max_inf1;
    return finish(std::move(report));
}

InequalityReport law_talagrand_l1(const QOperator& a, const LawParams& params) {
    require_unit_norm("talagrand_l1", a);
    const double constant = params.constant.value_or(4e10);
    InequalityReport report;
    report.law = "talagrand_l1";
    report.params["C"] = format_param(constant);
    report.constant_provenance = params.constant ? "user-override" : "paper-proof";
    double sum = 0.0;
    bool infinite = false;
    for (int j = 1; j <= a.qubits(); ++j) {
        const double inf = influence(a, j, 1.0);
        if (inf == 0.0) continue;           // vanishing influence contributes nothing
        if (inf >= 1.0) {                   // log(1/inf) <= 0: the bound degenerates to +inf
            infinite = true;
            break;
        }
        sum += inf / std::log(1.0 / inf);
    }
    report.lhs = variance(a);
    report.rhs = infinite ? kInf : constant * sum;
    return finish(std::move(report));
}

void check_subset_capacity(const std::string& law, int n, int k) {
    if (k < 1 || k > n) throw domain_error(law + " needs 1 <= k <= n");
    if (n > 8 && k > 3)
        throw capacity_error(law + " enumerates C(n,k) subsets; needs n <= 8 or k <= 3");
}

InequalityReport law_ht_talagrand(const QOperator& a, const LawParams& params) {
    require_unit_norm("ht_talagrand", a);
    const int n = a.qubits();
    const int k = params.k.value_or(2);
    check_subset_capacity("ht_talagrand", n, k);
    InequalityReport report;
    report.law = "ht_talagrand";
    report.params["k"] = std::to_string(k);
    report.constant_provenance = "theorem-statement";
    double sum = 0.0;
    bool infinite = false;
    const SiteMask all = full_mask(n);
    for (SiteMask j_set = 1; j_set <= all && !infinite; ++j_set) {
        if (std::popcount(j_set) != k) continue;
        const double inf = set_influence(a, j_set, 1.0);
        if (inf == 0.0) continue;
        if (inf >= 1.0) {
            infinite = true;
            break;
        }
        sum += inf / std::pow(std::log(1.0 / inf), k);
    }
    report.lhs = fourier_weights(a).w_geq(k);
    report.rhs = infinite ? kInf : std::pow(24.0, k) * factorial(k) * sum;
    return finish(std::move(report));
}

InequalityReport law_ht_kkl(const QOperator& a, const LawParams& params) {
    require_unit_norm("ht_kkl", a);
    if (!params.constant)
        throw shape_error("ht_kkl asserts an unnamed absolute constant; pass one explicitly");
    const int n = a.qubits();
    const int k = params.k.value_or(2);
    check_subset_capacity("ht_kkl", n, k);
    InequalityReport report;
    report.law = "ht_kkl";
    report.params["k"] = std::to_string(k);
    report.params["C"] = format_param(*params.constant);
    report.constant_provenance = "user-override";
    double max_inf = 0.0;
    const SiteMask all = full_mask(n);
    for (SiteMask j_set = 1; j_set <= all; ++j_set) {
        if (std::popcount(j_set) != k) continue;
        max_inf = std::max(max_inf, set_influence(a, j_set, 1.0));
    }
    report.lhs = *params.constant * std::pow(std::log(static_cast<double>(n)) / n, k) *
                 fourier_weights(a).w_geq(k);
    report.rhs = max_inf;
    return finish(std::move(report));
}

InequalityReport law_bks(const QOperator& a, const LawParams& params) {
    require_unit_norm("bks", a);
    const double delta = params.delta.value_or(0.5);
    if (!(delta >= 0.0 && delta <= 1.0)) throw domain_error("bks needs delta in [0, 1]");
    const double constant = params.constant.value_or(160000.0);
    InequalityReport report;
    report.law = "bks";
    report.params["delta"] = format_param(delta);
    report.params["C"] = format_param(constant);
    report.constant_provenance = params.constant ? "user-override" : "paper-proof";
    double v = 0.0;
    for (int j = 1; j <= a.qubits(); ++j) {
        const double inf = influence(a, j, 1.0);
        v += inf * inf;
    }
    const double log2e = std::log(2.0 * std::exp(1.0));
    const double alpha = 1.0 / ((1.0 - delta) + log2e + 3.0 * std::log(log2e));
    report.lhs = noise_stability(a, delta);
    report.rhs = constant * std::pow(v, alpha * (1.0 - delta));
    return finish(std::move(report));
}

InequalityReport law_level1(const QOperator& a, const LawParams&) {
    InequalityReport report;
    report.law = "level1";
    report.constant_provenance = "theorem-statement";
    double v = 0.0;
    for (int j = 1; j <= a.qubits(); ++j) {
        const double inf = influence(a, j, 1.0);
        v += inf * inf;
    }
    report.lhs = fourier_weights(a).w_at(1);
    report.rhs = 3.0 * v;
    return finish(std::move(report));
}

InequalityReport law_leveld(const QOperator& a, const LawParams& params) {
    require_unit_norm("leveld", a);
    const int d = params.d.value_or(2);
    if (d < 2) throw domain_error("leveld needs d >= 2");
    InequalityReport report;
    report.law = "leveld";
    report.params["d"] = std::to_string(d);
    report.constant_provenance = "paper-proof";
    double v = 0.0;
    for (int j = 1; j <= a.qubits(); ++j) {
        const double inf = influence(a, j, 1.0);
        v += inf * inf;
    }
    if (v > std::exp(-2.0 * (d - 1)))
        return degenerate(std::move(report),
                          "precondition sum_j Inf_j^1[A]^2 <= exp(-2(d-1)) violated");
    const double e = std::exp(1.0);
    report.lhs = fourier_weights(a).w_at(d);
    report.rhs = v > 0.0 ? 10240.0 * e / d * std::pow(2.0 * e / (d - 1), d - 1) * v *
                               std::pow(std::log(d / v), d - 1)
                         : 0.0;
    return finish(std::move(report));
}

InequalityReport law_l2_integral(const QOperator&, const LawParams& params) {
    const int d = params.d.value_or(2);
    if (d < 2) throw domain_error("l2_integral needs d >= 2");
    const double e = std::exp(1.0);
    const double t0_floor = std::pow(4.0 * e, (d - 1) / 2.0);
    const double t0 = params.t0.value_or(2.0 * t0_floor);
    if (!(t0 > t0_floor)) throw domain_error("l2_integral needs t0 > (4e)^((d-1)/2)");

    InequalityReport report;
    report.law = "l2_integral";
    report.params["d"] = std::to_string(d);
    report.params["t0"] = format_param(t0);
    report.constant_provenance = "theorem-statement";

    // Substitute y = t^{2/(d-1)}: integral becomes m y^{3m-1} exp(-beta y)
    // with m = (d-1)/2, beta = (d-1)/(2e); the tail decays geometrically.
    const double m = (d - 1) / 2.0;
    const double beta = (d - 1) / (2.0 * e);
    const double y0 = std::pow(t0, 2.0 / (d - 1));
    const double y1 = y0 + 120.0 / beta;
    auto integrand = [&](double y) { return m * std::pow(y, 3.0 * m - 1.0) * std::exp(-beta * y); };
    const double scale = integrand(y0);
    report.lhs = integrate(integrand, y0, y1, 1e-13 * std::max(scale, 1e-300));
    report.rhs = 5.0 * e * std::pow(t0, 3.0 - 2.0 / (d - 1)) *
                 std::exp(-beta * std::pow(t0, 2.0 / (d - 1)));
    return finish(std::move(report));
}

struct LawEntry {
    const char* name;
    LawFn fn;
};

constexpr LawEntry kLawTable[] = {
    {"poincare", law_poincare},
    {"logsob", law_logsob},
    {"logsob_lower", law_logsob_lower},
    {"hyper", law_hyper},
    {"influence_chain", law_influence_chain},
    {"bmo", law_bmo},
    {"kkl_dimfree", law_kkl_dimfree},
    {"kkl_logn", law_kkl_logn},
    {"talagrand_l1", law_talagrand_l1},
    {"ht_talagrand", law_ht_talagrand},
    {"ht_kkl", law_ht_kkl},
    {"bks", law_bks},
    {"level1", law_level1},
    {"leveld", law_leveld},
    {"l2_integral", law_l2_integral},
};

}  // namespace

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::degenerate: return "degenerate";
    }
    return "unknown";
}

const std::vector<std::string>& known_laws() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const LawEntry& entry : kLawTable) out.emplace_back(entry.name);
        return out;
    }();
    return names;
}

InequalityReport check_law(const std::string& law, const QOperator& a, const LawParams& params) {
    for (const LawEntry& entry : kLawTable) {
        if (law == entry.name) return entry.fn(a, params);
    }
    throw shape_error("unknown law id '" + law + "'");
}

SweepResult sweep(const FamilySpec& family, const std::vector<std::string>& laws, int count,
                  const LawParams& params) {
    SweepResult result;
    for (int index = 0; index < count; ++index) {
        const QOperator op = generate_member(family, index);
        for (const std::string& law : laws) {
            LawParams member_params = params;
            if (law == "bmo" && !member_params.subset) {
                // Seeded nonempty J per member keeps reruns byte-identical.
                Xoshiro256 rng(derive_seed(family.seed, 0x4A000000ull + index));
                SiteMask mask = 0;
                while (mask == 0) mask = random_subset(op.qubits(), 0.5, rng).members;
                member_params.subset = sites_from_mask(mask, op.qubits());
            }
            InequalityReport report;
            try {
                report = check_law(law, op, member_params);
            } catch (const norm_precondition_error& err) {
                report.law = law;
                report = degenerate(std::move(report), err.what());
            }
            result.rows.push_back({index, report});
            if (report.verdict == Verdict::fail) {
                result.failed = true;
                result.fail_index = index;
                result.offending = op;
                return result;
            }
        }
    }
    return result;
}

}  // namespace qcube
