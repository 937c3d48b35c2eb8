#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "hgcolor/errors.hpp"

namespace hgcolor {

// Parameters of one evaluation point. The degree bound is carried both
// as a real and in natural-log space; the evaluators only consume log_D,
// so degree bounds beyond the double range (large n, r) stay usable.
struct ParamSet {
    int n = 3;
    int r = 2;
    double D = 0.0;
    double log_D = -std::numeric_limits<double>::infinity();
    double p = 0.25;
    double tau0 = 1.0 / 3.0;  // always 1/n
    double z0 = 1.5;          // always 1/(1 - tau0)
};

ParamSet make_params(int n, int r, double D, double p);

// Same, with the degree bound given as ln(D).
ParamSet make_params_log_degree(int n, int r, double log_D, double p);

// One contribution in natural-log space. log_value is -inf for an exact
// zero. divergent marks a geometric sum whose ratio reached 1 (the
// closed form does not exist; log_value is unusable then).
struct LogTerm {
    double log_value = -std::numeric_limits<double>::infinity();
    bool divergent = false;

    double value() const { return divergent ? std::numeric_limits<double>::quiet_NaN()
                                            : std::exp(log_value); }
};

// D * 2^n * r^(1-n) * C(n, floor(n/2)) * p^(n/2) * z0^n, with a real
// exponent n/2.
LogTerm eval_w_D(const ParamSet& params);

// Geometric series over all tree sizes N >= 1 with ratio
// q = 8 D z0^n / (n r^(n-1)); closed form (n (1-p)^(n/2) / 2) q / (1 - q).
LogTerm eval_w_CT(const ParamSet& params);

// Tail of the same series over N >= ceil(ln n):
// (n / 2) q^ceil(ln n) / (1 - q).
LogTerm eval_w_DT(const ParamSet& params);

enum class ECVariant { Simple, AP0, AP1, AP2 };

// Bad-cycle contributions, evaluated as the exact finite sums over
// 3 <= N < 2 ln(n) (AP0 is a single term). The divergent flag reports
// when the factored geometric ratio 2 D (1+p)^(n-1) z0^n / (n^6 r^(n-1))
// reaches 1; the finite sum itself is still returned.
LogTerm eval_w_EC(const ParamSet& params, ECVariant variant);

enum class PolyVariant { Simple, AP };

struct PolyReport {
    ParamSet params;
    PolyVariant variant = PolyVariant::Simple;
    LogTerm w_d, w_ct, w_dt;
    LogTerm w_ec;                // Simple variant
    LogTerm w_ec0, w_ec1, w_ec2; // AP variant
    double log_total = -std::numeric_limits<double>::infinity();
    bool any_divergent = false;
    bool condition_met = false;  // no divergence and total <= tau0
};

PolyReport evaluate_polynomials(const ParamSet& params, PolyVariant variant);

// True iff no contribution diverged and the summed value is at most
// tau0 = 1/n.
bool check_condition(const PolyReport& report);

struct AdmissibleSearch {
    double max_d = 0.0;    // largest degree bound passing check_condition
    double alpha = 0.0;    // max_d / (n r^(n-1)); doubles as the beta ratio
    double vdw_m_bound = 0.0;  // AP mode: colorability certified up to this M
};

// Monotone binary search for the largest admissible D; exact to the
// integer whenever the boundary is below 2^53.
AdmissibleSearch max_admissible_D(int n, int r, double p, PolyVariant variant);

// Finite event system over finite-domain variables; events are explicit
// sets of bad scoped assignments.
struct EventSystem {
    std::vector<int> domain_sizes;
    struct Event {
        std::vector<int> scope;                        // variable indices
        std::vector<std::vector<int>> bad_assignments; // values matching scope order
    };
    std::vector<Event> events;
};

void validate_event_system(const EventSystem& sys);
double event_probability(const EventSystem& sys, int event_index);

// w_X(z) = sum over events touching the variable of Pr(A) z^<scope size>
double local_polynomial(const EventSystem& sys, int variable, double z);

// True iff max_X w_X(1/(1-tau0)) <= tau0.
bool lemma_condition(const EventSystem& sys, double tau0);

// Exhaustive search for an assignment avoiding every event. The product
// of the domain sizes must stay within the cap.
std::optional<std::vector<int>> brute_force_avoidance(const EventSystem& sys,
                                                      long long cap = 1'000'000);

struct BoundRow {
    std::string name;
    std::string formula;
    double value = 0.0;
    std::string source;  // "searched" or "paper-constant"
};

// Lower bounds produced by this toolkit next to the known upper bound,
// with searched constants where the search certifies anything and the
// published constants otherwise.
std::vector<BoundRow> bound_table(int n, int r, double p);

}  // namespace hgcolor
