#include "matchbound/lemmas.hpp"

#include "matchbound/bounds.hpp"
#include "matchbound/generators.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace matchbound;

namespace {

bool close(double a, double b, double tol = 1e-12) { return std::abs(a - b) <= tol; }

// The defining formula, sound only while cancellation stays small.
double theta_direct(long long k) {
    const double kd = static_cast<double>(k);
    return 12.0 * kd *
           (log_factorial(k) - 0.5 * std::log(2.0 * std::numbers::pi * kd) -
            kd * std::log(kd) + kd);
}

}  // namespace

TEST_CASE("convexity gap vanishes exactly on constant samples") {
    CHECK(convexity_gap({1.0, 1.0, 1.0}) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(convexity_gap({4.0}) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(convexity_gap({0.0, 0.0}) == 0.0);
}

TEST_CASE("convexity gap frozen value and positivity") {
    CHECK(close(convexity_gap({1.0, 2.0}), 0.08494951839769874));
    SplitMix64 rng(1234);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<double> t(1 + trial % 6);
        for (auto& v : t) v = 10.0 * rng.next_unit();
        CHECK(convexity_gap(t) >= -1e-12);
    }
    CHECK_THROWS_AS(convexity_gap({}), std::invalid_argument);
    CHECK_THROWS_AS(convexity_gap({-1.0}), std::invalid_argument);
}

TEST_CASE("factorial root anchors and growth") {
    CHECK(factorial_root(1) == 1.0);
    CHECK(close(factorial_root(2), 1.4142135623730951));
    CHECK(close(factorial_root(3), 1.8171205928321397));
    double prev = factorial_root(1);
    for (long long k = 2; k <= 200; ++k) {
        const double cur = factorial_root(k);
        CHECK(cur > prev);
        prev = cur;
    }
    CHECK_THROWS_AS(factorial_root(0), std::invalid_argument);
}

TEST_CASE("concavity gap frozen values and positivity") {
    CHECK(close(factorial_root_concavity_gap(3), 0.09589402415059364));
    CHECK(close(factorial_root_concavity_gap(4), 0.05341926495174427));
    for (long long r = 3; r <= 400; ++r) CHECK(factorial_root_concavity_gap(r) > 0.0);
    CHECK_THROWS_AS(factorial_root_concavity_gap(2), std::invalid_argument);
}

TEST_CASE("concavity margin matches its closed forms") {
    CHECK(close(concavity_margin(3), std::log(9.0 / 16.0)));
    CHECK(close(concavity_margin(3), -0.5753641449035619));
    CHECK(close(concavity_margin(4), std::log(128.0 / 243.0)));
    CHECK(close(concavity_margin(4), -0.6410311794209313));
    CHECK(close(concavity_margin(100), -0.9597649095594594));
    double prev = concavity_margin(3);
    for (long long r = 4; r <= 100; ++r) {
        const double cur = concavity_margin(r);
        CHECK(cur < prev);
        prev = cur;
    }
    CHECK(close(concavity_margin(10000), -0.9991450072576963, 1e-11));
    CHECK(std::abs(concavity_margin(10000) + 1.0) <= 0.01);
    CHECK_THROWS_AS(concavity_margin(2), std::invalid_argument);
}

TEST_CASE("deficit and envelope anchors") {
    CHECK(close(factorial_deficit(3), -std::log(2.0)));
    CHECK(close(stirling_envelope(3), -0.08106146679532726));
    CHECK(close(stirling_envelope(5), -0.5105851074870908));
    // ln(6 pi)/6 sits a hair above 0.4894, which is what pushes the
    // envelope under -0.51 from r = 5 on.
    CHECK(std::abs((stirling_envelope(5) + 1.0) - 0.4894) <= 5e-5);
    CHECK(close(stirling_envelope(5) + 1.0, 0.4894148925129092));
    for (long long r = 3; r <= 500; ++r) {
        CHECK(factorial_deficit(r) < stirling_envelope(r));
        if (r >= 5) CHECK(stirling_envelope(r) < kEnvelopeThreshold);
    }
    CHECK_THROWS_AS(factorial_deficit(2), std::invalid_argument);
    CHECK_THROWS_AS(stirling_envelope(2), std::invalid_argument);
}

TEST_CASE("Stirling remainder frozen values") {
    CHECK(close(stirling_theta(1), 0.9727376015439271, 5e-15));
    CHECK(close(stirling_theta(10), 0.9996676120035445, 1e-12));
    CHECK(close(stirling_theta(10000), 0.9999999996666667, 1e-12));
    CHECK_THROWS_AS(stirling_theta(0), std::invalid_argument);
}

TEST_CASE("Stirling remainder stays strictly inside the unit interval") {
    StirlingThetaSweep sweep;
    for (long long k = 1; k <= 10000; ++k) {
        const double theta = sweep.next();
        CHECK(theta > 0.0);
        CHECK(theta < 1.0);
        // Margins shrink like 1/(12k) below 1; even at k = 10^4 there is
        // 3e-10 of headroom, far above the pair-arithmetic noise floor.
        if (k == 10000) CHECK(1.0 - theta > 3.0e-10);
    }
    CHECK(sweep.k() == 10000);
}

TEST_CASE("sweep and point evaluation agree bit for bit") {
    StirlingThetaSweep sweep;
    double last = 0.0;
    for (long long k = 1; k <= 120; ++k) last = sweep.next();
    CHECK(last == stirling_theta(120));
    CHECK(stirling_theta(1) == stirling_theta(1));
    StirlingThetaSweep fresh;
    CHECK(fresh.next() == stirling_theta(1));
}

TEST_CASE("pair evaluation matches the direct formula while it is sound") {
    for (long long k = 1; k <= 100; ++k) {
        CHECK(close(stirling_theta(k), theta_direct(k), 1e-8));
    }
}

TEST_CASE("sweep_lemmas populates rows and passes all checks") {
    const SweepReport report = sweep_lemmas(300);
    CHECK(report.r_max == 300);
    CHECK(report.theta_max == 300);
    REQUIRE(report.rows.size() == 298);
    CHECK(report.rows.front().r == 3);
    CHECK(report.rows.back().r == 300);
    CHECK(close(report.rows.front().margin, concavity_margin(3)));
    CHECK(report.rows.front().margin == concavity_margin(3));
    CHECK(report.rows.front().concavity_gap == factorial_root_concavity_gap(3));
    CHECK(report.rows.front().deficit == factorial_deficit(3));
    CHECK(report.rows.front().envelope == stirling_envelope(3));
    CHECK(report.rows.front().theta == stirling_theta(3));
    CHECK(report.rows[49].margin == concavity_margin(52));
    CHECK(report.checks.hard_pass());
    CHECK(report.checks.margin_decreasing_full_range);
}

TEST_CASE("sweep_lemmas with a separate theta horizon") {
    const SweepReport report = sweep_lemmas(10, 600);
    CHECK(report.r_max == 10);
    CHECK(report.theta_max == 600);
    CHECK(report.rows.size() == 8);
    CHECK(report.checks.theta_in_unit_interval);
    CHECK(report.checks.hard_pass());
    CHECK_THROWS_AS(sweep_lemmas(2), std::invalid_argument);
}

TEST_CASE("sweep_lemmas at the deep end keeps every hard check") {
    const SweepReport report = sweep_lemmas(10000);
    CHECK(report.checks.hard_pass());
    CHECK(report.checks.margin_limit_near_minus_one);
    CHECK(report.checks.margin_decreasing_full_range);
    CHECK(close(report.rows.back().margin, -0.9991450072576963, 1e-11));
}
