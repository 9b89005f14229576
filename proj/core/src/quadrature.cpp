#include "gaussloc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace gaussloc {

double Box::volume() const {
    double v = 1.0;
    for (int i = 0; i < dim(); ++i) v *= hi[i] - lo[i];
    return v;
}

namespace {

// Gauss 7 / Kronrod 15 nodes on [0,1] of the half interval, with Gauss and
// Kronrod weights. First four rows are the Gauss points.
constexpr double kGK[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0, 0.204432940075298},
    {0.586087235467691, 0.0, 0.169004726639267},
    {0.864864423359769, 0.0, 0.104790010322250},
    {0.991455371120813, 0.0, 0.022935322010529},
};

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double f0 = f(mid);
    double gauss = kGK[0][1] * f0;
    double kron = kGK[0][2] * f0;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * kGK[i][0];
        const double fi = f(mid + dx) + f(mid - dx);
        gauss += kGK[i][1] * fi;
        kron += kGK[i][2] * fi;
    }
    gauss *= half;
    kron *= half;
    double err = std::fabs(kron - gauss);
    err = 200.0 * err * std::sqrt(200.0 * err);
    return {a, b, kron, std::min(err, std::fabs(kron) + err)};
}

}  // namespace

QuadResult integrate_1d(const std::function<double(double)>& f, double a, double b,
                        double rel_tol, double abs_tol, std::size_t max_evals) {
    std::priority_queue<Segment> heap;
    heap.push(gk15(f, a, b));
    double total = heap.top().value;
    double total_err = heap.top().error;
    std::size_t evals = 15;

    while (total_err > std::max(abs_tol, rel_tol * std::fabs(total)) &&
           evals + 30 <= max_evals) {
        const Segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {  // interval exhausted
            heap.push(worst);
            break;
        }
        const Segment left = gk15(f, worst.a, mid);
        const Segment right = gk15(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        evals += 30;
    }
    return {total, total_err, evals,
            total_err <= std::max(abs_tol, rel_tol * std::fabs(total))};
}

namespace {

// Embedded degree-7/5 fully symmetric cubature rule (Genz-Malik).
struct GmRule {
    int m;
    double l2 = 0.358568582800318092;   // sqrt(9/70)
    double l3 = 0.948683298050513800;   // sqrt(9/10)
    double l5 = 0.688247201611685297;   // sqrt(9/19)
    double w1, w2, w3, w4, w5;
    double e1, e2, e3, e4;
    double ratio;
    std::size_t points;

    explicit GmRule(int dim) : m(dim) {
        const double d = dim;
        w1 = (12824.0 - (9120.0 - 400.0 * d) * d) / 19683.0;
        w2 = 980.0 / 6561.0;
        w3 = (1820.0 - 400.0 * d) / 19683.0;
        w4 = 200.0 / 19683.0;
        w5 = 6859.0 / 19683.0 / static_cast<double>(1ULL << dim);
        e1 = (729.0 - 50.0 * (19.0 - d) * d) / 729.0;
        e2 = 245.0 / 486.0;
        e3 = (265.0 - 100.0 * d) / 1458.0;
        e4 = 25.0 / 729.0;
        ratio = (l2 * l2) / (l3 * l3);
        points = 1 + 4 * static_cast<std::size_t>(dim) +
                 2 * static_cast<std::size_t>(dim) * (dim - 1) + (1ULL << dim);
    }
};

struct Cell {
    std::vector<double> center;
    std::vector<double> half;
    double value = 0.0;
    double error = 0.0;
    int split_dim = 0;
    bool operator<(const Cell& o) const { return error < o.error; }
};

void evaluate_cell(const Integrand& f, const GmRule& rule, Cell& cell) {
    const int m = rule.m;
    double vol = 1.0;
    for (int i = 0; i < m; ++i) vol *= 2.0 * cell.half[i];

    std::vector<double> p = cell.center;
    const double f0 = f(p);
    double sum2 = 0.0, sum3 = 0.0, sum4 = 0.0, sum5 = 0.0;
    double max_diff = -1.0;
    int split = 0;

    for (int d = 0; d < m; ++d) {
        const double c = cell.center[d];
        const double h2 = rule.l2 * cell.half[d];
        const double h3 = rule.l3 * cell.half[d];
        p[d] = c + h2;
        const double a0 = f(p);
        p[d] = c - h2;
        const double a1 = f(p);
        p[d] = c + h3;
        const double b0 = f(p);
        p[d] = c - h3;
        const double b1 = f(p);
        p[d] = c;
        sum2 += a0 + a1;
        sum3 += b0 + b1;
        const double diff =
            std::fabs(a0 + a1 - 2.0 * f0 - rule.ratio * (b0 + b1 - 2.0 * f0));
        if (diff > max_diff) {
            max_diff = diff;
            split = d;
        }
    }

    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            const double ci = cell.center[i], cj = cell.center[j];
            const double hi = rule.l3 * cell.half[i], hj = rule.l3 * cell.half[j];
            for (int si = -1; si <= 1; si += 2) {
                for (int sj = -1; sj <= 1; sj += 2) {
                    p[i] = ci + si * hi;
                    p[j] = cj + sj * hj;
                    sum4 += f(p);
                }
            }
            p[i] = ci;
            p[j] = cj;
        }
    }

    for (std::size_t mask = 0; mask < (1ULL << m); ++mask) {
        for (int d = 0; d < m; ++d)
            p[d] = cell.center[d] +
                   ((mask >> d) & 1ULL ? 1.0 : -1.0) * rule.l5 * cell.half[d];
        sum5 += f(p);
    }

    const double deg7 =
        vol * (rule.w1 * f0 + rule.w2 * sum2 + rule.w3 * sum3 + rule.w4 * sum4 +
               rule.w5 * sum5);
    const double deg5 =
        vol * (rule.e1 * f0 + rule.e2 * sum2 + rule.e3 * sum3 + rule.e4 * sum4);
    cell.value = deg7;
    cell.error = std::fabs(deg7 - deg5);
    cell.split_dim = split;
}

}  // namespace

QuadResult integrate(const Integrand& f, const Box& box, double rel_tol,
                     double abs_tol, std::size_t max_evals) {
    const int m = box.dim();
    if (m == 1) {
        return integrate_1d([&f](double x) { return f(std::span<const double>(&x, 1)); },
                            box.lo[0], box.hi[0], rel_tol, abs_tol, max_evals);
    }

    const GmRule rule(m);
    Cell root;
    root.center.resize(m);
    root.half.resize(m);
    for (int i = 0; i < m; ++i) {
        root.center[i] = 0.5 * (box.lo[i] + box.hi[i]);
        root.half[i] = 0.5 * (box.hi[i] - box.lo[i]);
    }
    evaluate_cell(f, rule, root);

    std::priority_queue<Cell> heap;
    double total = root.value;
    double total_err = root.error;
    std::size_t evals = rule.points;
    heap.push(std::move(root));

    while (total_err > std::max(abs_tol, rel_tol * std::fabs(total)) &&
           evals + 2 * rule.points <= max_evals) {
        Cell worst = heap.top();
        heap.pop();
        const int d = worst.split_dim;

        Cell left = worst;
        left.half[d] *= 0.5;
        left.center[d] -= left.half[d];
        Cell right = worst;
        right.half[d] *= 0.5;
        right.center[d] += right.half[d];
        evaluate_cell(f, rule, left);
        evaluate_cell(f, rule, right);

        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push(std::move(left));
        heap.push(std::move(right));
        evals += 2 * rule.points;
    }

    return {total, total_err, evals,
            total_err <= std::max(abs_tol, rel_tol * std::fabs(total))};
}

}  // namespace gaussloc
