#pragma once

#include "matchbound/bigcount.hpp"
#include "matchbound/count.hpp"
#include "matchbound/graph.hpp"

#include <string>
#include <vector>

namespace matchbound {

// Nonnegative real carried in the log domain, with an explicit zero.
struct LogValue {
    bool is_zero = true;
    double log = 0.0;  // meaningful only when !is_zero

    static LogValue zero() { return {}; }
    static LogValue from_log(double lg) { return {false, lg}; }
    double linear() const;  // exp(log); 0 for the zero value
    LogValue operator*(const LogValue& other) const;
    bool operator==(const LogValue&) const = default;
};

// ln k!, by compensated summation of ln j (never a gamma approximation,
// so it is exact for the integers the rest of the code compares against).
double log_factorial(long long k);

// Prefix table sharing the exact summation path of log_factorial; the
// two agree bit for bit.
class LogFactorialTable {
public:
    explicit LogFactorialTable(long long max_k);
    double operator()(long long k) const;
    long long max_k() const { return static_cast<long long>(values_.size()) - 1; }

private:
    std::vector<double> values_;
};

// Degree-based upper bound on the number of perfect matchings:
//   prod over vertices v of (deg v)!^(1/(2 deg v)),
// where an isolated vertex contributes factor 0 (so the bound is the
// zero LogValue, matching the zero count).
LogValue degree_bound_log(const Graph& g);

// Permanent upper bound from row sums:
//   prod over rows i of (r_i!)^(1/r_i),
// zero if any row sum is 0. Equality on block-diagonal all-ones input.
LogValue bregman_minc_bound_log(const ZeroOneMatrix& m);

inline constexpr double kDefaultTolerance = 1e-9;

struct VerificationRecord {
    std::string graph_id;
    int n = 0;
    BigCount count;
    double count_log = 0.0;  // -infinity when count == 0
    LogValue bound_log;
    double slack = 0.0;      // bound_log - count_log; 0 when both vanish,
                             // +infinity when only the count does
    bool tight = false;      // |slack| <= tolerance
    bool violated = false;   // slack < -tolerance
    std::vector<int> degrees;
};

// Counts exactly, evaluates the degree bound, and compares in the log
// domain. `violated` should never be set for any graph; it exists so
// campaigns can prove that empirically.
VerificationRecord verify_graph(const Graph& g,
                                double tolerance = kDefaultTolerance,
                                int limit = kDefaultCountLimit,
                                std::string graph_id = {});

// Log-domain convexity inequality behind the row expansion at `pivot`:
//   H ln H <= H ln(deg pivot) + sum over neighbors j of H_j ln H_j
// with H the matching count of g and H_j the count of g - {pivot, j}.
struct ConvexityCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = true;  // lhs <= rhs + 1e-9 * max(1, |rhs|)
};

ConvexityCheck row_expansion_convexity(const Graph& g, int pivot,
                                       int limit = kDefaultCountLimit);

}  // namespace matchbound
