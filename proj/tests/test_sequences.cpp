#include <doctest.h>

#include <cmath>

#include "gamma_sharp/sequences.hpp"
#include "oracles.hpp"

using namespace gsharp;

TEST_CASE("gamma_a spot values") {
    CHECK(gamma_a(1.0).value == doctest::Approx(oracles::kGamma).epsilon(1e-13));
    CHECK(gamma_a(2.0).value ==
          doctest::Approx(std::log(2.0) - 1.0 + oracles::kGamma).epsilon(1e-13));
    // series regime: 1/(2a) + 1/(12a^2) - ...
    CHECK(gamma_a(1000.0).value == doctest::Approx(5.0000833e-4).epsilon(1e-7));
    CHECK_THROWS_AS(gamma_a(0.0), std::domain_error);
}

TEST_CASE("closed-form x_n and y_n spot values") {
    CHECK(x_n_closed(1.0, 1) == doctest::Approx(1.0 - std::log(2.0)).epsilon(1e-13));
    CHECK(x_n_closed(1.0, 10) ==
          doctest::Approx(oracles::harmonic(10) - std::log(11.0)).epsilon(1e-13));
    // n = 1: x_1 = 1/a - ln((a+1)/a), y_1 = 1/a
    for (double a : {0.25, 1.0, 3.7}) {
        CAPTURE(a);
        CHECK(x_n_closed(a, 1) ==
              doctest::Approx(1.0 / a - std::log((a + 1.0) / a)).epsilon(1e-12));
        CHECK(y_n_closed(a, 1) == doctest::Approx(1.0 / a).epsilon(1e-12));
    }
    CHECK(y_n_closed(1.0, 10) ==
          doctest::Approx(oracles::harmonic(10) - std::log(10.0)).epsilon(1e-13));
    CHECK(y_n_closed(0.5, 1) == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("direct summation spot values") {
    CHECK(x_n_direct(1.0, 2) == doctest::Approx(1.5 - std::log(3.0)).epsilon(1e-14));
    CHECK(y_n_direct(1.0, 2) == doctest::Approx(1.5 - std::log(2.0)).epsilon(1e-14));
    CHECK(y_n_direct(3.0, 1) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK_THROWS_AS(x_n_direct(1.0, kSummationGuard + 1), ResourceError);
}

TEST_CASE("closed form matches direct summation") {
    for (double a : {0.1, 0.433, 1.0, 2.5, 10.0}) {
        for (std::int64_t n : {1, 2, 3, 7, 50, 313, 1000}) {
            CAPTURE(a);
            CAPTURE(n);
            CHECK(std::abs(x_n_closed(a, n) - x_n_direct(a, n)) <= 1e-12);
            CHECK(std::abs(y_n_closed(a, n) - y_n_direct(a, n)) <= 1e-12);
        }
    }
}

TEST_CASE("residual spot values") {
    CHECK(residual_x(1.0, 1) ==
          doctest::Approx(std::log(2.0) - (1.0 - oracles::kGamma)).epsilon(1e-13));
    CHECK(residual_x(1.0, 10) ==
          doctest::Approx(oracles::kGamma - (oracles::harmonic(10) - std::log(11.0)))
              .epsilon(1e-12));
    CHECK(residual_y(1.0, 1) == doctest::Approx(1.0 - oracles::kGamma).epsilon(1e-13));
    CHECK(residual_y(1.0, 10) ==
          doctest::Approx((oracles::harmonic(10) - std::log(10.0)) - oracles::kGamma)
              .epsilon(1e-12));
    // 2(n+a) * res_x -> 1 as n grows
    CHECK(2.0 * (1e6 + 1.0) * residual_x(1.0, 1000000) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("residual identity res_x + res_y = ln((n+a)/(n+a-1))") {
    for (double a : {0.2, 1.0, 4.4}) {
        for (std::int64_t n : {1, 2, 10, 500}) {
            CAPTURE(a);
            CAPTURE(n);
            const double m = static_cast<double>(n) + a;
            CHECK(residual_x(a, n) + residual_y(a, n) ==
                  doctest::Approx(std::log(m / (m - 1.0))).epsilon(1e-13));
        }
    }
}

TEST_CASE("Sintamarian sandwich on a grid") {
    for (double a : {0.1, 0.433, 1.0, 2.5, 10.0}) {
        for (std::int64_t n : {1, 2, 5, 20, 100}) {
            CAPTURE(a);
            CAPTURE(n);
            const double m = static_cast<double>(n) + a;
            const double rx = residual_x(a, n);
            const double ry = residual_y(a, n);
            CHECK(rx >= 0.5 / m);
            CHECK(rx <= 0.5 / (m - 1.0));
            CHECK(ry >= 0.5 / m);
            CHECK(ry <= 0.5 / (m - 1.0));
        }
    }
}

TEST_CASE("table rows and monotone convergence") {
    const auto rows = table(2.0, 30);
    REQUIRE(rows.size() == 30);
    const double g = gamma_a(2.0).value;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const SeqPoint& p = rows[i];
        CHECK(p.n == static_cast<std::int64_t>(i) + 1);
        CHECK(p.res_x > 0.0);
        CHECK(p.res_y > 0.0);
        const double m = static_cast<double>(p.n) + p.a;
        CHECK(p.y_n - p.x_n == doctest::Approx(std::log(m / (m - 1.0))).epsilon(1e-12));
        CHECK(p.res_x + p.res_y ==
              doctest::Approx(std::log(m / (m - 1.0))).epsilon(1e-12));
        CHECK(p.x_n < g);
        CHECK(p.y_n > g);
        if (i > 0) {
            CHECK(p.x_n > rows[i - 1].x_n);
            CHECK(p.y_n < rows[i - 1].y_n);
            CHECK(p.res_x < rows[i - 1].res_x);
        }
    }

    const auto one = table(1.0, 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].x_n == doctest::Approx(1.0 - std::log(2.0)).epsilon(1e-12));
    CHECK(one[0].y_n == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(table(1.0, kSummationGuard + 1), ResourceError);
    CHECK_THROWS_AS(table(-1.0, 5), std::domain_error);
}
