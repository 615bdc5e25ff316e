#include "matchbound/lemmas.hpp"

#include "matchbound/bounds.hpp"
#include "matchbound/compensated.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace matchbound {

namespace {

// ---- pair (double-double) arithmetic -------------------------------------
// An unevaluated sum hi + lo with |lo| <= ulp(hi)/2, giving ~32 significant
// digits. Only the handful of operations the Stirling recurrence needs.

struct Pair {
    double hi = 0.0;
    double lo = 0.0;
};

Pair two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

Pair two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

Pair pair_add(Pair x, Pair y) {
    const Pair s = two_sum(x.hi, y.hi);
    return two_sum(s.hi, s.lo + x.lo + y.lo);
}

Pair pair_mul(Pair x, Pair y) {
    const Pair p = two_prod(x.hi, y.hi);
    return two_sum(p.hi, p.lo + x.hi * y.lo + x.lo * y.hi);
}

Pair pair_mul_d(Pair x, double d) {
    const Pair p = two_prod(x.hi, d);
    return two_sum(p.hi, p.lo + x.lo * d);
}

Pair pair_div(double a, double b) {
    const double q = a / b;
    const Pair p = two_prod(q, b);
    return two_sum(q, ((a - p.hi) - p.lo) / b);
}

Pair pair_div_d(Pair x, double d) {
    const double q = x.hi / d;
    const Pair p = two_prod(q, d);
    return two_sum(q, (((x.hi - p.hi) - p.lo) + x.lo) / d);
}

// atanh(1/m) for odd m >= 3, by its Maclaurin series in pair arithmetic.
Pair pair_atanh_recip(double m) {
    const Pair t = pair_div(1.0, m);
    const Pair t2 = pair_mul(t, t);
    Pair term = t;
    Pair acc = t;
    for (double d = 3.0;; d += 2.0) {
        term = pair_mul(term, t2);
        const Pair contrib = pair_div_d(term, d);
        acc = pair_add(acc, contrib);
        if (std::abs(contrib.hi) < std::abs(acc.hi) * 1e-35) break;
    }
    return acc;
}

// ln(2 pi) to pair precision.
constexpr Pair kLn2Pi = {1.8378770664093456, -7.7565883161344830e-17};

// ---- shared row formulas ---------------------------------------------------
// Point functions and sweep_lemmas go through these with bit-identical
// ln k! inputs, so their results agree bit for bit.

double margin_formula(double lf_rm2, long long r) {
    const double rm1 = static_cast<double>(r - 1);
    return rm1 * std::log1p(1.0 / rm1) +
           2.0 * (lf_rm2 / static_cast<double>(r - 2) - std::log(rm1));
}

double gap_formula(double lf_rm2, double lf_rm1, double lf_r, long long r) {
    return 2.0 * lf_rm1 / static_cast<double>(r - 1) - lf_r / static_cast<double>(r) -
           lf_rm2 / static_cast<double>(r - 2);
}

double deficit_formula(double lf_rm2, long long r) {
    return lf_rm2 / static_cast<double>(r - 2) - std::log(static_cast<double>(r - 1));
}

double envelope_formula(long long r) {
    const double x = static_cast<double>(r - 2);
    return std::log(2.0 * std::numbers::pi * x) / (2.0 * x) - 1.0;
}

void require_at_least(long long value, long long minimum, const char* what) {
    if (value < minimum) {
        throw std::invalid_argument(std::string(what) + ": argument " + std::to_string(value) +
                                    " must be at least " + std::to_string(minimum));
    }
}

// Strictness with breathing room: zero-crossing claims are asserted with
// a 1e-12 margin scaled by magnitude, so a genuinely vanishing quantity
// cannot sneak through on rounding noise.
bool strictly_positive(double x) { return x > 1e-12 * std::max(1.0, std::abs(x)); }
bool strictly_negative(double x) { return x < -1e-12 * std::max(1.0, std::abs(x)); }

}  // namespace

double convexity_gap(const std::vector<double>& t) {
    if (t.empty()) throw std::invalid_argument("convexity_gap: empty sample");
    const double r = static_cast<double>(t.size());
    NeumaierSum sum, xlnx;
    for (double v : t) {
        if (v < 0.0 || !std::isfinite(v)) {
            throw std::invalid_argument("convexity_gap: entries must be finite and nonnegative");
        }
        sum.add(v);
        if (v > 0.0) xlnx.add(v * std::log(v));
    }
    const double mean = sum.value() / r;
    const double mean_term = mean > 0.0 ? mean * std::log(mean) : 0.0;
    return xlnx.value() / r - mean_term;
}

double factorial_root(long long k) {
    require_at_least(k, 1, "factorial_root");
    return std::exp(log_factorial(k) / static_cast<double>(k));
}

double factorial_root_concavity_gap(long long r) {
    require_at_least(r, 3, "factorial_root_concavity_gap");
    return gap_formula(log_factorial(r - 2), log_factorial(r - 1), log_factorial(r), r);
}

double concavity_margin(long long r) {
    require_at_least(r, 3, "concavity_margin");
    return margin_formula(log_factorial(r - 2), r);
}

double factorial_deficit(long long r) {
    require_at_least(r, 3, "factorial_deficit");
    return deficit_formula(log_factorial(r - 2), r);
}

double stirling_envelope(long long r) {
    require_at_least(r, 3, "stirling_envelope");
    return envelope_formula(r);
}

double StirlingThetaSweep::next() {
    if (k_ == 0) {
        // R(1) = 1 - ln(2 pi)/2, with R(k) = ln k! - (k + 1/2) ln k + k
        //                                    - ln(2 pi)/2.
        const Pair r1 = pair_add({1.0, 0.0}, pair_mul_d(kLn2Pi, -0.5));
        r_hi_ = r1.hi;
        r_lo_ = r1.lo;
        k_ = 1;
    } else {
        ++k_;
        // R(k) - R(k-1) = 1 - (k - 1/2) ln(k/(k-1)); the log via
        // 2 atanh(1/(2k-1)) keeps every step O(1) digits of cancellation.
        const double k = static_cast<double>(k_);
        const Pair u = pair_mul_d(pair_atanh_recip(2.0 * k - 1.0), 2.0);
        const Pair delta = pair_add({1.0, 0.0}, pair_mul_d(u, -(k - 0.5)));
        const Pair r = pair_add({r_hi_, r_lo_}, delta);
        r_hi_ = r.hi;
        r_lo_ = r.lo;
    }
    return 12.0 * static_cast<double>(k_) * (r_hi_ + r_lo_);
}

double stirling_theta(long long k) {
    require_at_least(k, 1, "stirling_theta");
    StirlingThetaSweep sweep;
    double theta = 0.0;
    for (long long i = 1; i <= k; ++i) theta = sweep.next();
    return theta;
}

bool SweepChecks::hard_pass() const {
    return margin_negative && margin_decreasing_checked && margin_limit_near_minus_one &&
           concavity_gap_positive && factorial_root_increasing && deficit_below_envelope &&
           envelope_decreasing && envelope_below_threshold && theta_in_unit_interval;
}

SweepReport sweep_lemmas(long long r_max, long long theta_max) {
    require_at_least(r_max, 3, "sweep_lemmas");
    SweepReport report;
    report.r_max = r_max;
    report.theta_max = std::max(r_max, theta_max);
    report.rows.reserve(static_cast<std::size_t>(r_max - 2));
    const LogFactorialTable lf(r_max);
    SweepChecks& checks = report.checks;
    double prev_root = factorial_root(1);
    for (long long k = 2; k <= r_max; ++k) {
        const double root = std::exp(lf(k) / static_cast<double>(k));
        if (!strictly_positive(root - prev_root)) checks.factorial_root_increasing = false;
        prev_root = root;
    }
    for (long long r = 3; r <= r_max; ++r) {
        LemmaRow row;
        row.r = r;
        row.margin = margin_formula(lf(r - 2), r);
        row.concavity_gap = gap_formula(lf(r - 2), lf(r - 1), lf(r), r);
        row.deficit = deficit_formula(lf(r - 2), r);
        row.envelope = envelope_formula(r);
        if (!strictly_negative(row.margin)) checks.margin_negative = false;
        if (!strictly_positive(row.concavity_gap)) checks.concavity_gap_positive = false;
        if (!strictly_positive(row.envelope - row.deficit)) checks.deficit_below_envelope = false;
        if (r >= kEnvelopeThresholdMinR && !(row.envelope < kEnvelopeThreshold)) {
            checks.envelope_below_threshold = false;
        }
        if (!report.rows.empty()) {
            const LemmaRow& prev = report.rows.back();
            if (r <= kMarginStrictDecreaseMaxR &&
                !strictly_positive(prev.margin - row.margin)) {
                checks.margin_decreasing_checked = false;
            }
            if (!(row.margin < prev.margin)) checks.margin_decreasing_full_range = false;
            if (!strictly_positive(prev.envelope - row.envelope)) {
                checks.envelope_decreasing = false;
            }
        }
        report.rows.push_back(row);
    }
    if (r_max >= 10000 && std::abs(report.rows.back().margin + 1.0) > 0.01) {
        checks.margin_limit_near_minus_one = false;
    }
    StirlingThetaSweep sweep;
    for (long long k = 1; k <= report.theta_max; ++k) {
        const double theta = sweep.next();
        if (!(strictly_positive(theta) && strictly_positive(1.0 - theta))) {
            checks.theta_in_unit_interval = false;
        }
        if (k >= 3 && k <= r_max) report.rows[static_cast<std::size_t>(k - 3)].theta = theta;
    }
    return report;
}

}  // namespace matchbound
