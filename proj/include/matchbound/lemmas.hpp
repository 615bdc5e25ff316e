#pragma once

#include <vector>

namespace matchbound {

// (1/r) sum t_j ln t_j - (mean) ln(mean) with mean = (sum t_j)/r.
// Nonnegative by convexity of x ln x (0 ln 0 = 0). Entries must be >= 0.
double convexity_gap(const std::vector<double>& t);

// a(k) = (k!)^(1/k); strictly increasing in k.
double factorial_root(long long k);

// Log-concavity gap of the factorial-root sequence:
//   2 ln a(r-1) - ln a(r) - ln a(r-2),  a(k) = (k!)^(1/k),
// strictly positive for r >= 3 (ln 1! / 1 = 0 covers r = 3).
double factorial_root_concavity_gap(long long r);

// Normalized margin whose strict negativity is equivalent to the
// concavity gap being positive:
//   (r-1) ln(r/(r-1)) + 2 (ln (r-2)! / (r-2) - ln(r-1)),
// decreasing in r and tending to -1 from above.
double concavity_margin(long long r);

// Normalized log-factorial deficit and a decreasing envelope dominating
// it (Stirling):
//   deficit(r)  = ln (r-2)! / (r-2) - ln(r-1)
//   envelope(r) = ln(2 pi (r-2)) / (2 (r-2)) - 1
// deficit < envelope for r >= 3; envelope < -0.51 for r >= 5.
double factorial_deficit(long long r);
double stirling_envelope(long long r);

// Scaled Stirling remainder:
//   theta(k) = 12 k (ln k! - ln sqrt(2 pi k) - k ln k + k),
// strictly inside (0, 1) for all k >= 1. Evaluated by telescoping the
// remainder in pair (double-double) arithmetic: the naive formula
// cancels ~k ln k against itself and its rounding noise swamps the
// 1/(30k^2) headroom below 1 long before k = 10^4.
double stirling_theta(long long k);

// Incremental evaluator over k = 1, 2, ...; next() advances one step and
// returns theta at the new k. Shares the exact evaluation path with
// stirling_theta, so values agree bit for bit.
class StirlingThetaSweep {
public:
    double next();
    long long k() const { return k_; }

private:
    long long k_ = 0;
    double r_hi_ = 0.0, r_lo_ = 0.0;
};

struct LemmaRow {
    long long r = 0;
    double margin = 0.0;
    double concavity_gap = 0.0;
    double deficit = 0.0;
    double envelope = 0.0;
    double theta = 0.0;  // at k = r
    bool operator==(const LemmaRow&) const = default;
};

inline constexpr double kEnvelopeThreshold = -0.51;
inline constexpr long long kEnvelopeThresholdMinR = 5;
// Strict monotonicity of the margin is asserted up to here; beyond, the
// consecutive differences shrink toward zero and the check is reported
// as informational only.
inline constexpr long long kMarginStrictDecreaseMaxR = 100;

struct SweepChecks {
    bool margin_negative = true;
    bool margin_decreasing_checked = true;      // r <= 100, hard
    bool margin_decreasing_full_range = true;   // informational
    bool margin_limit_near_minus_one = true;    // |margin(r_max)+1| <= 0.01
                                                // when r_max >= 10^4
    bool concavity_gap_positive = true;
    bool factorial_root_increasing = true;
    bool deficit_below_envelope = true;
    bool envelope_decreasing = true;
    bool envelope_below_threshold = true;       // r >= 5
    bool theta_in_unit_interval = true;
    bool hard_pass() const;  // all of the above except the informational one
};

struct SweepReport {
    long long r_max = 0;
    long long theta_max = 0;
    std::vector<LemmaRow> rows;  // r = 3..r_max
    SweepChecks checks;
};

// Evaluates every row quantity for r = 3..r_max and theta for
// k = 1..max(r_max, theta_max), populating the checks. r_max >= 3.
SweepReport sweep_lemmas(long long r_max, long long theta_max = 0);

}  // namespace matchbound
