#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "gaussloc/chenyan.hpp"
#include "gaussloc/errors.hpp"
#include "gaussloc/hermite.hpp"
#include "gaussloc/kernels.hpp"
#include "gaussloc/phi_series.hpp"

using namespace gaussloc;

namespace {

// Reference polynomials from the classical three-term recurrence
// he_{n+1} = x he_n - n he_{n-1}; the generating-function normalization
// divides by n!.
double hermite_reference(int n, double x) {
    double prev = 1.0, cur = x;
    if (n == 0) return 1.0;
    for (int k = 1; k < n; ++k) {
        const double next = x * cur - k * prev;
        prev = cur;
        cur = next;
    }
    double fact = 1.0;
    for (int k = 2; k <= n; ++k) fact *= k;
    return cur / fact;
}

}  // namespace

TEST_CASE("normalized polynomial values") {
    for (double x : {-3.0, -1.5, 0.0, 0.7, 3.0}) CHECK(hermite(0, x) == 1.0);
    CHECK(hermite(1, 2.0) == doctest::Approx(2.0));
    // H_2(x) = (x^2 - 1)/2.
    CHECK(hermite(2, 2.0) == doctest::Approx(1.5));
    CHECK(hermite(3, 1.0) == doctest::Approx((1.0 - 3.0) / 6.0));

    for (int n = 0; n <= 10; ++n)
        for (double x = -3.0; x <= 3.0; x += 0.5)
            CHECK(hermite(n, x) ==
                  doctest::Approx(hermite_reference(n, x)).epsilon(1e-8));
}

TEST_CASE("generating-function partial sums") {
    const double z = 0.5, x = 1.0;
    const double target = std::exp(z * x - z * z / 2.0);
    CHECK(hermite_gf_partial(z, x, 30) == doctest::Approx(target).epsilon(1e-10));
    for (double zz : {-0.6, 0.25, 0.8})
        for (double xx : {-2.0, 0.5, 2.5})
            CHECK(hermite_gf_partial(zz, xx, 60) ==
                  doctest::Approx(std::exp(zz * xx - zz * zz / 2.0)).epsilon(1e-10));
}

TEST_CASE("double factorials in log space") {
    CHECK(log_odd_double_factorial(0) == doctest::Approx(0.0));
    CHECK(log_odd_double_factorial(3) == doctest::Approx(std::log(15.0)));
    CHECK(log_even_double_factorial(3) == doctest::Approx(std::log(48.0)));
    // Exact integer cross-check for small arguments.
    long long odd = 1, even = 1;
    for (int k = 1; k <= 10; ++k) {
        odd *= 2 * k - 1;
        even *= 2 * k;
        CHECK(log_odd_double_factorial(k) ==
              doctest::Approx(std::log(static_cast<double>(odd))).epsilon(1e-12));
        CHECK(log_even_double_factorial(k) ==
              doctest::Approx(std::log(static_cast<double>(even))).epsilon(1e-12));
    }
    // No overflow far beyond the integer range.
    CHECK(std::isfinite(log_even_double_factorial(100000)));
}

TEST_CASE("orthogonality under correlated Gaussian pairs") {
    const std::int64_t reps = 100000;
    for (double rho : {0.0, 0.5, -0.5, 1.0, -1.0}) {
        for (int n = 0; n <= 6; ++n) {
            for (int m = 0; m <= 6; ++m) {
                const auto [est, se] = hermite_orthogonality_mc(n, m, rho, reps, 17);
                double expected = 0.0;
                if (n == m) {
                    double fact = 1.0;
                    for (int k = 2; k <= n; ++k) fact *= k;
                    expected = std::pow(rho, n) / fact;
                    if (n == 0) expected = 1.0;
                }
                CHECK(std::fabs(est - expected) <= 3.0 * se + 1e-12);
            }
        }
    }
}

TEST_CASE("series coefficients: recurrence equals brute-force enumeration") {
    for (int d = 1; d <= 4; ++d) {
        for (int n = 0; n <= 20; ++n) {
            const double rec = series_coeff(n, d);
            const double brute = series_coeff_bruteforce(n, d);
            CHECK(rec == doctest::Approx(brute).epsilon(1e-12));
        }
    }
}

TEST_CASE("series sum oracles") {
    CHECK(chenyan_lhs(0.0, 3, 50) == doctest::Approx(0.0));
    // d = 2: every coefficient is 1, so the sum is 2x/(1-x)^2.
    CHECK(chenyan_lhs(0.5, 2, 400) == doctest::Approx(4.0).epsilon(1e-10));
    CHECK(chenyan_lhs(0.25, 2, 400) ==
          doctest::Approx(2.0 * 0.25 / (0.75 * 0.75)).epsilon(1e-10));
    // Truncation too short for the requested tolerance.
    CHECK_THROWS_AS(chenyan_lhs(0.99, 2, 10), NotConvergedError);
}

TEST_CASE("series-to-closed-form ratio bands") {
    std::vector<double> grid;
    for (double x = 0.01; x <= 0.99; x += 0.07) grid.push_back(x);

    const auto [lo2, hi2] = chenyan_ratio_scan(2, grid);
    CHECK(lo2 == doctest::Approx(2.0).epsilon(1e-8));
    CHECK(hi2 == doctest::Approx(2.0).epsilon(1e-8));

    for (int d : {1, 3}) {
        const auto [lo, hi] = chenyan_ratio_scan(d, grid);
        CHECK(std::isfinite(lo));
        CHECK(std::isfinite(hi));
        CHECK(lo > 0.0);
        CHECK(hi / lo < 10.0);
    }
}

TEST_CASE("chaos-energy series behaves like a nonnegative increasing sum") {
    const CovKernel bm = CovKernel::fbm(0.5);
    const PhiSeries s = phi_series(bm, 1, 0.5, 12, 40);
    REQUIRE(!s.terms.empty());
    for (double t : s.terms) CHECK(t >= 0.0);
    for (std::size_t i = 1; i < s.partial_sums.size(); ++i)
        CHECK(s.partial_sums[i] >= s.partial_sums[i - 1] - 1e-15);
    CHECK(s.rho_max < 1.0);
    CHECK(s.tail_estimate >= 0.0);
    CHECK(std::isfinite(s.partial_sums.back()));

    // The closed-form resummation agrees with the series total up to the
    // two-sided band of the series identity (constant at most ~2 for d=1).
    const double resum = phi_resummation(bm, 1, 0.5, 12);
    CHECK(resum > 0.0);
    const double total = s.partial_sums.back() + s.tail_estimate;
    CHECK(total / resum > 0.2);
    CHECK(total / resum < 5.0);
}

TEST_CASE("chaos-energy series edge cases") {
    const CovKernel bm = CovKernel::fbm(0.5);
    const PhiSeries empty = phi_series(bm, 1, 0.5, 8, 0);
    CHECK(empty.terms.empty());
    const bool zero_sum =
        empty.partial_sums.empty() || empty.partial_sums.back() == 0.0;
    CHECK(zero_sum);

    // Without smoothing the grid contains near-coincident pairs where the
    // expansion variable reaches 1.
    CHECK_THROWS_AS(phi_series(bm, 1, 0.0, 8, 20), SingularDomainError);
}
