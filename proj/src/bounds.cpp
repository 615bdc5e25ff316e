#include "matchbound/bounds.hpp"

#include "matchbound/compensated.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace matchbound {

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

}  // namespace

double LogValue::linear() const { return is_zero ? 0.0 : std::exp(log); }

LogValue LogValue::operator*(const LogValue& other) const {
    if (is_zero || other.is_zero) return zero();
    return from_log(log + other.log);
}

double log_factorial(long long k) {
    if (k < 0) throw std::invalid_argument("log_factorial: negative argument");
    NeumaierSum acc;
    for (long long j = 2; j <= k; ++j) acc.add(std::log(static_cast<double>(j)));
    return acc.value();
}

LogFactorialTable::LogFactorialTable(long long max_k) {
    if (max_k < 0) throw std::invalid_argument("LogFactorialTable: negative maximum");
    values_.reserve(static_cast<std::size_t>(max_k) + 1);
    NeumaierSum acc;
    values_.push_back(acc.value());  // 0!
    for (long long j = 1; j <= max_k; ++j) {
        if (j >= 2) acc.add(std::log(static_cast<double>(j)));
        values_.push_back(acc.value());
    }
}

double LogFactorialTable::operator()(long long k) const {
    if (k < 0 || k > max_k()) {
        throw std::out_of_range("LogFactorialTable: argument " + std::to_string(k) +
                                " outside [0, " + std::to_string(max_k()) + "]");
    }
    return values_[static_cast<std::size_t>(k)];
}

LogValue degree_bound_log(const Graph& g) {
    NeumaierSum acc;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const int d = g.degree(v);
        if (d == 0) return LogValue::zero();
        acc.add(log_factorial(d) / (2.0 * d));
    }
    return LogValue::from_log(acc.value());
}

LogValue bregman_minc_bound_log(const ZeroOneMatrix& m) {
    if (!m.square()) throw std::invalid_argument("bregman_minc_bound_log: matrix must be square");
    NeumaierSum acc;
    for (int i = 0; i < m.rows(); ++i) {
        const int r = m.row_sum(i);
        if (r == 0) return LogValue::zero();
        acc.add(log_factorial(r) / static_cast<double>(r));
    }
    return LogValue::from_log(acc.value());
}

VerificationRecord verify_graph(const Graph& g, double tolerance, int limit,
                                std::string graph_id) {
    if (tolerance < 0) throw std::invalid_argument("verify_graph: negative tolerance");
    VerificationRecord record;
    record.n = g.vertex_count();
    record.degrees = g.degree_sequence();
    record.graph_id = graph_id.empty()
                          ? "n" + std::to_string(record.n) + ":m" + std::to_string(g.edge_count())
                          : std::move(graph_id);
    record.count = count_perfect_matchings(g, limit);
    record.bound_log = degree_bound_log(g);
    if (record.count == 0) {
        record.count_log = -kInfinity;
        // A zero bound certifies the zero count: that is as tight as it
        // gets. A positive bound is simply infinitely slack.
        record.slack = record.bound_log.is_zero ? 0.0 : kInfinity;
        record.tight = record.bound_log.is_zero;
        record.violated = false;
        return record;
    }
    record.count_log = log_of_count(record.count);
    if (record.bound_log.is_zero) {
        // Impossible for a correct bound; keep the bookkeeping honest.
        record.slack = -kInfinity;
        record.tight = false;
        record.violated = true;
        return record;
    }
    record.slack = record.bound_log.log - record.count_log;
    record.tight = std::abs(record.slack) <= tolerance;
    record.violated = record.slack < -tolerance;
    return record;
}

ConvexityCheck row_expansion_convexity(const Graph& g, int pivot, int limit) {
    const int n = g.vertex_count();
    if (n % 2 != 0) {
        throw std::invalid_argument("row_expansion_convexity: odd vertex count");
    }
    if (pivot < 0 || pivot >= n) {
        throw std::invalid_argument("row_expansion_convexity: pivot out of range");
    }
    const BigCount count = count_perfect_matchings(g, limit);
    ConvexityCheck check;
    if (count == 0) {
        // 0 ln 0 = 0 on both sides; the inequality is trivial.
        check.lhs = 0.0;
        check.rhs = 0.0;
        check.holds = true;
        return check;
    }
    const int degree = g.degree(pivot);
    const double count_d = count.convert_to<double>();
    const double count_log = log_of_count(count);
    check.lhs = count_d * count_log;
    NeumaierSum rhs;
    rhs.add(count_d * std::log(static_cast<double>(degree)));
    const auto& nb = g.neighbors(pivot);
    for (auto v = nb.find_first(); v != boost::dynamic_bitset<>::npos; v = nb.find_next(v)) {
        const BigCount sub = count_perfect_matchings(minor(g, pivot, static_cast<int>(v)), limit);
        if (sub == 0) continue;  // 0 ln 0 = 0
        rhs.add(sub.convert_to<double>() * log_of_count(sub));
    }
    check.rhs = rhs.value();
    check.holds = check.lhs <= check.rhs + 1e-9 * std::max(1.0, std::abs(check.rhs));
    return check;
}

}  // namespace matchbound
