#include "hgcolor/local_lemma.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_set>

namespace hgcolor {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_binomial(int n, int k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double log_sum_exp(const std::vector<double>& logs) {
    double top = kNegInf;
    for (double l : logs) top = std::max(top, l);
    if (top == kNegInf) return kNegInf;
    double acc = 0.0;
    for (double l : logs) acc += std::exp(l - top);
    return top + std::log(acc);
}


// ln of q = 8 D z0^n / (n r^(n-1))
double log_tree_ratio(const ParamSet& pr) {
    return std::log(8.0) + pr.log_D + pr.n * std::log(pr.z0) -
           std::log(static_cast<double>(pr.n)) - (pr.n - 1) * std::log(static_cast<double>(pr.r));
}

// ln of the factored cycle ratio 2 D (1+p)^(n-1) z0^n / (n^6 r^(n-1))
double log_cycle_ratio(const ParamSet& pr) {
    return std::log(2.0) + pr.log_D + (pr.n - 1) * std::log1p(pr.p) +
           pr.n * std::log(pr.z0) - 6.0 * std::log(static_cast<double>(pr.n)) -
           (pr.n - 1) * std::log(static_cast<double>(pr.r));
}

bool zero_degree(const ParamSet& pr) { return pr.log_D == kNegInf; }

}  // namespace

ParamSet make_params(int n, int r, double D, double p) {
    if (D < 0.0) throw ValidationError("degree bound must be nonnegative");
    return make_params_log_degree(n, r, D > 0.0 ? std::log(D) : kNegInf, p);
}

ParamSet make_params_log_degree(int n, int r, double log_D, double p) {
    if (n < 2) throw ValidationError("uniformity must be at least 2");
    if (r < 2) throw ValidationError("need at least 2 colors");
    if (std::isnan(log_D)) throw ValidationError("log degree bound must be a number");
    if (!(p > 0.0 && p < 1.0)) throw ValidationError("free threshold p must lie in (0, 1)");
    ParamSet params;
    params.n = n;
    params.r = r;
    params.log_D = log_D;
    params.D = std::exp(log_D);
    params.p = p;
    params.tau0 = 1.0 / n;
    params.z0 = 1.0 / (1.0 - params.tau0);
    return params;
}

LogTerm eval_w_D(const ParamSet& pr) {
    LogTerm term;
    if (zero_degree(pr)) return term;
    term.log_value = pr.log_D + pr.n * std::log(2.0) +
                     (1.0 - pr.n) * std::log(static_cast<double>(pr.r)) +
                     log_binomial(pr.n, pr.n / 2) + (pr.n / 2.0) * std::log(pr.p) +
                     pr.n * std::log(pr.z0);
    return term;
}

LogTerm eval_w_CT(const ParamSet& pr) {
    LogTerm term;
    if (zero_degree(pr)) return term;
    const double log_q = log_tree_ratio(pr);
    if (log_q >= 0.0) {
        term.divergent = true;
        return term;
    }
    const double q = std::exp(log_q);
    // (n (1-p)^(n/2) / 2) * q / (1-q)
    term.log_value = std::log(pr.n / 2.0) + (pr.n / 2.0) * std::log1p(-pr.p) + log_q -
                     std::log1p(-q);
    return term;
}

LogTerm eval_w_DT(const ParamSet& pr) {
    LogTerm term;
    if (zero_degree(pr)) return term;
    const double log_q = log_tree_ratio(pr);
    if (log_q >= 0.0) {
        term.divergent = true;
        return term;
    }
    const double q = std::exp(log_q);
    const double threshold = std::ceil(std::log(static_cast<double>(pr.n)));
    // (n/2) q^ceil(ln n) / (1-q), the series tail over sizes >= ln n
    term.log_value = std::log(pr.n / 2.0) + threshold * log_q - std::log1p(-q);
    return term;
}

LogTerm eval_w_EC(const ParamSet& pr, ECVariant variant) {
    LogTerm term;
    if (zero_degree(pr)) return term;
    const int n = pr.n;
    const int r = pr.r;
    const double log_D = pr.log_D;
    const double log_n = std::log(static_cast<double>(n));
    const double log_r = std::log(static_cast<double>(r));
    const double log_1p = std::log1p(pr.p);
    const double log_z = std::log(pr.z0);

    if (variant == ECVariant::AP0) {
        // D n^4 r ((1+p)/r)^(3n/2) z0^(2n), one term
        term.log_value = log_D + 4.0 * log_n + log_r +
                         (1.5 * n) * (log_1p - log_r) + 2.0 * n * log_z;
        return term;
    }

    term.divergent = log_cycle_ratio(pr) >= 0.0;
    std::vector<double> logs;
    for (int N = 3; N < 2.0 * std::log(static_cast<double>(n)); ++N) {
        double lt = kNegInf;
        switch (variant) {
            case ECVariant::Simple:
                // N D^(N-1) n^2 r 2^N ((1+p)/r)^((n-1)N) z0^(nN)
                lt = std::log(static_cast<double>(N)) + (N - 1) * log_D + 2.0 * log_n +
                     log_r + N * std::log(2.0) +
                     static_cast<double>(n - 1) * N * (log_1p - log_r) +
                     static_cast<double>(n) * N * log_z;
                break;
            case ECVariant::AP1:
                // N D^(N-1) n^4 r 2^(N-1) ((1+p)/r)^((n-1)(N-1)+n/2) z0^(nN)
                lt = std::log(static_cast<double>(N)) + (N - 1) * log_D + 4.0 * log_n +
                     log_r + (N - 1) * std::log(2.0) +
                     (static_cast<double>(n - 1) * (N - 1) + n / 2.0) * (log_1p - log_r) +
                     static_cast<double>(n) * N * log_z;
                break;
            case ECVariant::AP2:
                // N D^(N-2) n^8 r 2^(N-2) ((1+p)^(n-1)/r^(n-1))^(N-1) z0^(nN)
                lt = std::log(static_cast<double>(N)) + (N - 2) * log_D + 8.0 * log_n +
                     log_r + (N - 2) * std::log(2.0) +
                     static_cast<double>(n - 1) * (N - 1) * (log_1p - log_r) +
                     static_cast<double>(n) * N * log_z;
                break;
            case ECVariant::AP0:
                break;
        }
        logs.push_back(lt);
    }
    term.log_value = log_sum_exp(logs);
    return term;
}

PolyReport evaluate_polynomials(const ParamSet& params, PolyVariant variant) {
    PolyReport report;
    report.params = params;
    report.variant = variant;
    report.w_d = eval_w_D(params);
    report.w_ct = eval_w_CT(params);
    report.w_dt = eval_w_DT(params);
    std::vector<const LogTerm*> terms{&report.w_d, &report.w_ct, &report.w_dt};
    if (variant == PolyVariant::Simple) {
        report.w_ec = eval_w_EC(params, ECVariant::Simple);
        terms.push_back(&report.w_ec);
    } else {
        report.w_ec0 = eval_w_EC(params, ECVariant::AP0);
        report.w_ec1 = eval_w_EC(params, ECVariant::AP1);
        report.w_ec2 = eval_w_EC(params, ECVariant::AP2);
        terms.push_back(&report.w_ec0);
        terms.push_back(&report.w_ec1);
        terms.push_back(&report.w_ec2);
    }
    std::vector<double> logs;
    for (const LogTerm* t : terms) {
        report.any_divergent = report.any_divergent || t->divergent;
        if (!t->divergent) logs.push_back(t->log_value);
    }
    report.log_total = log_sum_exp(logs);
    report.condition_met =
        !report.any_divergent && report.log_total <= std::log(params.tau0);
    return report;
}

bool check_condition(const PolyReport& report) {
    return !report.any_divergent &&
           report.log_total <= std::log(report.params.tau0);
}

AdmissibleSearch max_admissible_D(int n, int r, double p, PolyVariant variant) {
    auto passes = [&](double D) {
        return evaluate_polynomials(make_params(n, r, D, p), variant).condition_met;
    };
    AdmissibleSearch search;
    if (!passes(1.0)) {
        search.max_d = 0.0;
    } else {
        double lo = 1.0;
        double hi = 2.0;
        while (passes(hi) && hi < 1e300) {
            lo = hi;
            hi *= 2.0;
        }
        // lo passes, hi fails; floor keeps the probes on integers while
        // they are exactly representable
        while (true) {
            const double mid = std::floor((lo + hi) / 2.0);
            if (mid <= lo || mid >= hi) break;
            if (passes(mid)) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        search.max_d = lo;
    }
    const double log_ratio = search.max_d > 0.0
                                 ? std::log(search.max_d) - std::log(static_cast<double>(n)) -
                                       (n - 1) * std::log(static_cast<double>(r))
                                 : kNegInf;
    search.alpha = std::exp(log_ratio);
    search.vdw_m_bound = std::floor(search.max_d / n);
    return search;
}

void validate_event_system(const EventSystem& sys) {
    for (int d : sys.domain_sizes) {
        if (d < 1) throw ValidationError("variable domains must be nonempty");
    }
    for (size_t i = 0; i < sys.events.size(); ++i) {
        const auto& event = sys.events[i];
        if (event.scope.empty()) {
            throw ValidationError("event " + std::to_string(i) + " has an empty scope");
        }
        std::unordered_set<int> seen;
        for (int var : event.scope) {
            if (var < 0 || var >= static_cast<int>(sys.domain_sizes.size())) {
                throw ValidationError("event " + std::to_string(i) + " scope out of range");
            }
            if (!seen.insert(var).second) {
                throw ValidationError("event " + std::to_string(i) + " repeats a variable");
            }
        }
        for (const auto& assignment : event.bad_assignments) {
            if (assignment.size() != event.scope.size()) {
                throw ValidationError("event " + std::to_string(i) + " assignment arity mismatch");
            }
            for (size_t k = 0; k < assignment.size(); ++k) {
                const int limit = sys.domain_sizes[static_cast<size_t>(event.scope[k])];
                if (assignment[k] < 0 || assignment[k] >= limit) {
                    throw ValidationError("event " + std::to_string(i) + " assignment out of domain");
                }
            }
        }
    }
}

double event_probability(const EventSystem& sys, int event_index) {
    const auto& event = sys.events[static_cast<size_t>(event_index)];
    double scope_space = 1.0;
    for (int var : event.scope) scope_space *= sys.domain_sizes[static_cast<size_t>(var)];
    std::set<std::vector<int>> distinct(event.bad_assignments.begin(),
                                        event.bad_assignments.end());
    return static_cast<double>(distinct.size()) / scope_space;
}

double local_polynomial(const EventSystem& sys, int variable, double z) {
    double total = 0.0;
    for (size_t i = 0; i < sys.events.size(); ++i) {
        const auto& event = sys.events[i];
        if (std::find(event.scope.begin(), event.scope.end(), variable) == event.scope.end()) {
            continue;
        }
        total += event_probability(sys, static_cast<int>(i)) *
                 std::pow(z, static_cast<double>(event.scope.size()));
    }
    return total;
}

bool lemma_condition(const EventSystem& sys, double tau0) {
    if (!(tau0 > 0.0 && tau0 < 1.0)) throw ValidationError("tau0 must lie in (0, 1)");
    const double z = 1.0 / (1.0 - tau0);
    for (size_t x = 0; x < sys.domain_sizes.size(); ++x) {
        if (local_polynomial(sys, static_cast<int>(x), z) > tau0) return false;
    }
    return true;
}

std::optional<std::vector<int>> brute_force_avoidance(const EventSystem& sys,
                                                      long long cap) {
    validate_event_system(sys);
    long long space = 1;
    for (int d : sys.domain_sizes) {
        space *= d;
        if (space > cap) throw ResourceError("assignment space exceeds the brute-force cap");
    }
    // per-event membership sets keyed by the scoped assignment
    std::vector<std::set<std::vector<int>>> bad;
    bad.reserve(sys.events.size());
    for (const auto& event : sys.events) {
        bad.emplace_back(event.bad_assignments.begin(), event.bad_assignments.end());
    }
    std::vector<int> assignment(sys.domain_sizes.size(), 0);
    for (long long step = 0; step < space; ++step) {
        bool avoided = true;
        for (size_t i = 0; i < sys.events.size() && avoided; ++i) {
            std::vector<int> scoped;
            scoped.reserve(sys.events[i].scope.size());
            for (int var : sys.events[i].scope) {
                scoped.push_back(assignment[static_cast<size_t>(var)]);
            }
            if (bad[i].count(scoped)) avoided = false;
        }
        if (avoided) return assignment;
        for (size_t k = 0; k < assignment.size(); ++k) {
            if (++assignment[k] < sys.domain_sizes[k]) break;
            assignment[k] = 0;
        }
    }
    return std::nullopt;
}

std::vector<BoundRow> bound_table(int n, int r, double p) {
    if (n < 3) throw ValidationError("bound table requires uniformity >= 3");
    if (r < 2) throw ValidationError("bound table requires at least 2 colors");
    const double paper_alpha = std::pow(2.0 * std::exp(1.0), -4.0);
    const double log_r = std::log(static_cast<double>(r));
    const double r_pow_n1 = std::exp((n - 1) * log_r);

    std::vector<BoundRow> rows;

    const AdmissibleSearch simple = max_admissible_D(n, r, p, PolyVariant::Simple);
    const bool simple_searched = simple.max_d >= 1.0;
    const double degree_lower = simple_searched ? simple.max_d : paper_alpha * n * r_pow_n1;
    rows.push_back({"colorable_max_degree_lower", "alpha * n * r^(n-1)", degree_lower,
                    simple_searched ? "searched" : "paper-constant"});

    const double kr_upper = static_cast<double>(n) * n * r_pow_n1 * log_r;
    rows.push_back({"non_colorable_degree_upper", "n^2 * r^(n-1) * ln r", kr_upper,
                    "published"});
    rows.push_back({"degree_gap_ratio", "upper / lower", kr_upper / degree_lower,
                    "derived"});

    const AdmissibleSearch ap = max_admissible_D(n, r, p, PolyVariant::AP);
    const bool ap_searched = ap.max_d >= 1.0 && ap.vdw_m_bound >= 1.0;
    const double vdw_lower = ap_searched ? ap.vdw_m_bound + 1.0 : paper_alpha * r_pow_n1;
    rows.push_back({"vdw_lower", "beta * r^(n-1)", vdw_lower,
                    ap_searched ? "searched" : "paper-constant"});

    // edge-count chain: trimmed instances are (n-1)-uniform, a max-degree
    // vertex gives m >= alpha' r^(n-2) edges through it, and simplicity
    // turns that into at least m^2/2 edges overall
    const double p_trim = std::min(5.0 * std::log(static_cast<double>(n - 1)) / (n - 1), 0.49);
    double alpha_trim = paper_alpha;
    std::string mstar_source = "paper-constant";
    if (n - 1 >= 2) {
        const AdmissibleSearch trimmed = max_admissible_D(n - 1, r, p_trim, PolyVariant::Simple);
        if (trimmed.max_d >= 1.0) {
            alpha_trim = trimmed.alpha;
            mstar_source = "searched";
        }
    }
    const double vertex_bound = alpha_trim * std::exp((n - 2) * log_r);
    rows.push_back({"mstar_lower", "(alpha' * r^(n-2))^2 / 2",
                    vertex_bound * vertex_bound / 2.0, mstar_source});
    return rows;
}

}  // namespace hgcolor
