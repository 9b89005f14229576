#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gaussloc/kernels.hpp"

using namespace gaussloc;

TEST_CASE("one-parameter covariance oracles") {
    CHECK(cov_fbm(1.0, 1.0, 0.5) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(cov_fbm(0.0, 0.7, 0.3) == doctest::Approx(0.0).epsilon(1e-12));
    // h = 0.5 reduces to min(s, t).
    CHECK(cov_fbm(0.25, 1.0, 0.5) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(cov_fbm(0.3, 0.8, 0.5) == doctest::Approx(0.3).epsilon(1e-12));
    // Symmetry.
    CHECK(cov_fbm(0.2, 0.9, 0.7) == doctest::Approx(cov_fbm(0.9, 0.2, 0.7)));
    // Two-sided extension: independent increments at h = 0.5 give zero
    // covariance across the origin.
    CHECK(cov_fbm(-0.3, 0.4, 0.5) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK_THROWS_AS(cov_fbm(0.5, 0.5, 1.0), std::domain_error);
    CHECK_THROWS_AS(cov_fbm(0.5, 0.5, 0.0), std::domain_error);
}

TEST_CASE("sheet and additive covariance oracles") {
    const HurstVector h{0.5, 0.5};
    const std::vector<double> one{1.0, 1.0};
    const std::vector<double> s{0.25, 1.0};
    const std::vector<double> t{1.0, 0.25};
    CHECK(cov_fbsheet(one, one, h) == doctest::Approx(1.0));
    CHECK(cov_fbsheet(s, t, h) == doctest::Approx(0.0625));
    const std::vector<double> edge{0.0, 0.7};
    CHECK(cov_fbsheet(edge, one, h) == doctest::Approx(0.0));

    CHECK(cov_additive_fbm(one, one, h) == doctest::Approx(2.0));
    const std::vector<double> zero{0.0, 0.0};
    CHECK(cov_additive_fbm(zero, t, h) == doctest::Approx(0.0));
    const std::vector<double> a{0.25, 0.5};
    CHECK(cov_additive_fbm(a, one, h) == doctest::Approx(0.75));

    const std::vector<double> wrong{0.5};
    CHECK_THROWS_AS(cov_fbsheet(wrong, one, h), std::invalid_argument);
    CHECK_THROWS_AS(cov_additive_fbm(wrong, one, h), std::invalid_argument);
}

TEST_CASE("domain helpers") {
    const Domain u = Domain::unit_cube(3);
    CHECK(u.dim() == 3);
    CHECK(u.volume() == doctest::Approx(1.0));
    const Domain c = Domain::cube(2, 0.5);
    CHECK(c.volume() == doctest::Approx(0.25));
    const Domain p = u.product(c);
    CHECK(p.dim() == 5);
    CHECK(p.volume() == doctest::Approx(0.25));
}

TEST_CASE("kernel factories carry metadata") {
    const CovKernel bm = CovKernel::fbm(0.5);
    CHECK(bm.dim() == 1);
    CHECK(bm.model() == KernelModel::Fbm);
    CHECK(bm(0.25, 1.0) == doctest::Approx(0.25));

    const CovKernel sheet = CovKernel::fbsheet(HurstVector{0.5, 0.5});
    CHECK(sheet.dim() == 2);
    CHECK(sheet.model() == KernelModel::FbSheet);
    // Working rectangle stays away from the degenerate coordinate planes.
    for (const auto& b : sheet.domain().bounds) CHECK(b[0] > 0.0);

    const CovKernel add = CovKernel::additive_fbm(HurstVector{0.3, 0.7});
    CHECK(add.dim() == 2);
    CHECK(add.hurst() == std::vector<double>{0.3, 0.7});
}

TEST_CASE("derived kernels") {
    const CovKernel a = CovKernel::fbm(0.5);
    const CovKernel b = CovKernel::fbm(0.5);

    SUBCASE("sum of independent fields") {
        const CovKernel z = CovKernel::collision(a, b);
        CHECK(z(1.0, 1.0) == doctest::Approx(2.0));
        CHECK(z(0.25, 1.0) == doctest::Approx(0.5));
        const CovKernel c3 = CovKernel::fbsheet(HurstVector{0.5, 0.5});
        CHECK_THROWS_AS(CovKernel::collision(a, c3), std::invalid_argument);
    }

    SUBCASE("difference field on the product parameter set") {
        const CovKernel u = CovKernel::intersection(a, b);
        CHECK(u.dim() == 2);
        const std::vector<double> st{0.3, 0.8};
        // Var U(s,t) = Var A(s) + Var B(t) by independence.
        CHECK(u.variance(st) == doctest::Approx(0.3 + 0.8));
        const std::vector<double> st2{0.5, 0.2};
        CHECK(u(st, st2) == doctest::Approx(cov_fbm(0.3, 0.5, 0.5) +
                                            cov_fbm(0.8, 0.2, 0.5)));
    }

    SUBCASE("increment field vanishes on the diagonal") {
        const CovKernel v = CovKernel::self_intersection(a, Domain::unit_cube(1),
                                                         Domain::unit_cube(1));
        CHECK(v.dim() == 2);
        for (double t : {0.1, 0.35, 0.6, 0.95}) {
            const std::vector<double> tt{t, t};
            CHECK(v.variance(tt) == doctest::Approx(0.0).epsilon(1e-14));
        }
        // Four-term expansion against direct evaluation.
        const std::vector<double> p{0.2, 0.6}, q{0.4, 1.0};
        const double direct = cov_fbm(0.2, 0.4, 0.5) - cov_fbm(0.2, 1.0, 0.5) -
                              cov_fbm(0.6, 0.4, 0.5) + cov_fbm(0.6, 1.0, 0.5);
        CHECK(v(p, q) == doctest::Approx(direct).epsilon(1e-12));
    }
}

TEST_CASE("increment variance is clamped and consistent") {
    const CovKernel bm = CovKernel::fbm(0.5);
    const std::vector<double> s{0.2}, t{0.9};
    CHECK(bm.increment_variance(s, t) == doctest::Approx(0.7));
    CHECK(bm.increment_variance(t, t) == doctest::Approx(0.0));
    const CovKernel fbm3 = CovKernel::fbm(0.3);
    // E(X(s)-X(t))^2 = |s-t|^{2h} for the one-parameter model.
    CHECK(fbm3.increment_variance(s, t) ==
          doctest::Approx(std::pow(0.7, 0.6)).epsilon(1e-12));
}
