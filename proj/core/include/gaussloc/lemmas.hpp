#pragma once

#include <vector>

namespace gaussloc {

struct Lemma1Result {
    double integral = 0.0;    // int_0^1 dt / (A + t^alpha)^beta
    double asymptotic = 0.0;  // regime form: A^-(beta-1/alpha), log(1+A^-1/alpha), 1
    double ratio = 0.0;
};

/// Requires alpha, beta > 0 and A in (0,1).
Lemma1Result lemma1_eval(double alpha, double beta, double a);

enum class LemmaTag { L2i, L2ii, L3i, L3ii };

// Singular-integral bound check over an interval around scattered points:
// lhs is the integral by quadrature, rhs_bound the bound with its constant
// stripped, constant_estimate their ratio.
struct Lemma23Params {
    LemmaTag lemma = LemmaTag::L2i;
    double alpha = 2.0;
    double beta = 1.0;
    double kappa = 0.5;   // L2ii only
    double a = 0.01;      // A, L2 only
    double m = 1.0;       // M, L3ii only
    double r = 1.0;
    double u_star = 0.5;
    double lo = 0.0;      // integration interval (the ball may exceed it)
    double hi = 1.0;
    std::vector<double> points;
};

struct Lemma23Result {
    double lhs = 0.0;
    double rhs_bound = 0.0;
    double constant_estimate = 0.0;
};

/// Throws RegimeMismatchError when (alpha, beta) fall outside the tag's
/// regime (L2i: alpha*beta > 1; L2ii: alpha*beta == 1; L3: 0 < beta < 1).
Lemma23Result lemma23_check(const Lemma23Params& params);

}  // namespace gaussloc
