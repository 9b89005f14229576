#include "gaussloc/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gaussloc/errors.hpp"
#include "gaussloc/quadrature.hpp"

namespace gaussloc {

Lemma1Result lemma1_eval(double alpha, double beta, double a) {
    if (alpha <= 0.0 || beta <= 0.0) throw std::domain_error("lemma1: alpha, beta > 0");
    if (a <= 0.0 || a >= 1.0) throw std::domain_error("lemma1: A in (0,1)");
    Lemma1Result res;
    res.integral = integrate_1d(
                       [&](double t) { return std::pow(a + std::pow(t, alpha), -beta); },
                       0.0, 1.0, 1e-12, 1e-15)
                       .value;
    const double ab = alpha * beta;
    if (ab > 1.0)
        res.asymptotic = std::pow(a, -(beta - 1.0 / alpha));
    else if (ab == 1.0)
        res.asymptotic = std::log(1.0 + std::pow(a, -1.0 / alpha));
    else
        res.asymptotic = 1.0;
    res.ratio = res.integral / res.asymptotic;
    return res;
}

Lemma23Result lemma23_check(const Lemma23Params& p) {
    const double ab = p.alpha * p.beta;
    switch (p.lemma) {
        case LemmaTag::L2i:
            if (!(ab > 1.0)) throw RegimeMismatchError("L2i needs alpha*beta > 1");
            break;
        case LemmaTag::L2ii:
            if (std::fabs(ab - 1.0) > 1e-12)
                throw RegimeMismatchError("L2ii needs alpha*beta = 1");
            break;
        case LemmaTag::L3i:
        case LemmaTag::L3ii:
            if (!(p.beta > 0.0 && p.beta < 1.0))
                throw RegimeMismatchError("L3 needs beta in (0,1)");
            break;
    }
    if (p.points.empty()) throw std::invalid_argument("lemma23: needs points");
    if (!(p.r > 0.0) || !(p.hi > p.lo))
        throw std::invalid_argument("lemma23: bad interval");

    const double n = static_cast<double>(p.points.size());
    auto min_dist = [&](double u) {
        double m = std::fabs(u - p.points.front());
        for (double uj : p.points) m = std::min(m, std::fabs(u - uj));
        return m;
    };

    auto integrand = [&](double u) -> double {
        const double md = min_dist(u);
        switch (p.lemma) {
            case LemmaTag::L2i:
            case LemmaTag::L2ii:
                return std::pow(p.a + std::pow(md, p.alpha), -p.beta);
            case LemmaTag::L3i:
                return md > 0.0 ? std::pow(md, -p.beta) : 0.0;
            case LemmaTag::L3ii:
                if (p.m == 0.0) return 1.0;
                return md > 0.0
                           ? std::log(std::exp(1.0) + p.m * std::pow(md, -p.beta))
                           : 0.0;
        }
        return 0.0;
    };

    Lemma23Result res;
    // Split at the points so the quadrature never straddles a singularity.
    std::vector<double> knots{p.lo, p.hi};
    for (double uj : p.points)
        if (uj > p.lo && uj < p.hi) knots.push_back(uj);
    std::sort(knots.begin(), knots.end());
    for (std::size_t i = 0; i + 1 < knots.size(); ++i)
        res.lhs += integrate_1d(integrand, knots[i], knots[i + 1], 1e-10, 1e-14).value;

    switch (p.lemma) {
        case LemmaTag::L2i:
            res.rhs_bound = n * std::pow(p.a, -(p.beta - 1.0 / p.alpha));
            break;
        case LemmaTag::L2ii:
            res.rhs_bound =
                n * std::log(std::exp(1.0) +
                             std::pow(p.r / n * std::pow(p.a, -1.0 / p.alpha), p.kappa));
            break;
        case LemmaTag::L3i:
            res.rhs_bound = std::pow(n, p.beta) * std::pow(p.r, 1.0 - p.beta);
            break;
        case LemmaTag::L3ii:
            res.rhs_bound =
                p.r * std::log(std::exp(1.0) + p.m * std::pow(p.r / n, -p.beta));
            break;
    }
    res.constant_estimate = res.lhs / res.rhs_bound;
    return res;
}

}  // namespace gaussloc
