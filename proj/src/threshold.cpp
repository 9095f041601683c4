#include "hg3/threshold.hpp"

#include <cmath>
#include <functional>

#include "hg3/critical.hpp"

namespace hg3 {

std::string branch_name(Branch b) {
    switch (b) {
        case Branch::middle: return "middle";
        case Branch::upper: return "upper";
        case Branch::breakpoint: return "breakpoint";
    }
    return "?";
}

double C_value(double alpha, double d) {
    if (!(alpha > 0 && alpha < 1)) {
        throw std::invalid_argument("C_value: alpha must be in (0,1)");
    }
    if (!(d > 0 && d < 0.5)) {
        throw std::invalid_argument("C_value: d must be in (0,1/2)");
    }
    const double a2 = alpha * alpha;
    if (d <= a2 / 2) return 0.0;
    if (d <= alpha * (1 - alpha / 2)) {
        return alpha / (1 - alpha) * (2 * d - a2) / 2;
    }
    return 2 * alpha / (1 - alpha) * (2 * d - a2) - 3 * a2;
}

namespace {

// Derivative numerator of the middle branch a(c2-a^2)/(2(1-a)):
// dC/da = p(a) / (2(1-a)^2).
double middle_deriv_num(double a, double c2) {
    return (c2 - 3 * a * a) * (1 - a) + a * (c2 - a * a);
}

// Derivative numerator of the upper branch 2a(c2-a^2)/(1-a) - 3a^2:
// dC/da = q(a) / (1-a)^2.
double upper_deriv_num(double a, double c2) {
    return (2 * c2 - 6 * a * a) * (1 - a) + 2 * a * (c2 - a * a) -
           6 * a * (1 - a) * (1 - a);
}

// Sign-change bracketing on [lo, hi] followed by bisection to tol.
std::vector<double> bracketed_roots(const std::function<double(double)>& f,
                                    double lo, double hi, double tol) {
    std::vector<double> roots;
    if (!(hi > lo)) return roots;
    const int kGrid = 4096;
    double prev_x = lo;
    double prev_f = f(lo);
    for (int i = 1; i <= kGrid; ++i) {
        double x = lo + (hi - lo) * i / kGrid;
        double fx = f(x);
        if (prev_f == 0.0) {
            roots.push_back(prev_x);
        } else if ((prev_f < 0) != (fx < 0)) {
            double a = prev_x, b = x, fa = prev_f;
            while (b - a > tol) {
                double mid = 0.5 * (a + b);
                double fm = f(mid);
                if (fm == 0.0) {
                    a = b = mid;
                    break;
                }
                if ((fa < 0) != (fm < 0)) {
                    b = mid;
                } else {
                    a = mid;
                    fa = fm;
                }
            }
            roots.push_back(0.5 * (a + b));
        }
        prev_x = x;
        prev_f = fx;
    }
    return roots;
}

}  // namespace

ThresholdResult c1_star(double c2, double tol) {
    if (!(c2 > 0 && c2 < 1)) {
        throw std::invalid_argument("c1_star: c2 must be in (0,1)");
    }
    if (!(tol > 0)) throw std::invalid_argument("c1_star: tol must be > 0");
    const double alpha_b = 1 - std::sqrt(1 - c2);
    const double d = c2 / 2;

    ThresholdResult best;
    best.c2 = c2;
    // Breakpoint candidate (value (1-sqrt(1-c2))^2).
    best.alpha_star = alpha_b;
    best.c1_star = alpha_b * alpha_b;
    best.branch = Branch::breakpoint;
    best.residual = 0.0;

    auto consider = [&](double a, Branch br, double deriv) {
        double v = C_value(a, d);
        if (v > best.c1_star ||
            (v == best.c1_star && a < best.alpha_star)) {
            best.c1_star = v;
            best.alpha_star = a;
            best.branch = br;
            best.residual = std::fabs(deriv);
        }
    };

    // Middle branch valid on [1-sqrt(1-c2), sqrt(c2)).
    const double sqrt_c2 = std::sqrt(c2);
    for (double a : bracketed_roots(
             [c2](double x) { return middle_deriv_num(x, c2); },
             alpha_b + tol, sqrt_c2 - tol, tol)) {
        consider(a, Branch::middle,
                 middle_deriv_num(a, c2) / (2 * (1 - a) * (1 - a)));
    }
    // Upper branch valid on (0, 1-sqrt(1-c2)).
    for (double a : bracketed_roots(
             [c2](double x) { return upper_deriv_num(x, c2); }, tol,
             alpha_b - tol, tol)) {
        consider(a, Branch::upper,
                 upper_deriv_num(a, c2) / ((1 - a) * (1 - a)));
    }
    return best;
}

WidestInterval widest_interval(double tol) {
    if (!(tol > 0)) throw std::invalid_argument("tol must be > 0");
    const double inner_tol = tol * 1e-2;
    // The symmetric point solves the middle-branch system
    //   a/(1-a) * (c2-a^2)/2 = 1 - c2,   p(a) = 0
    // by nested bisection: the inner solve locates the middle stationary
    // point a(c2), the outer solve drives its value to 1-c2 (the value grows
    // with c2 while 1-c2 falls, so the gap is monotone).
    auto mid_alpha = [&](double c2) {
        double lo = 1 - std::sqrt(1 - c2), hi = std::sqrt(c2);
        // p > 0 at the left edge of the validity interval, < 0 at the right.
        while (hi - lo > inner_tol) {
            double a = 0.5 * (lo + hi);
            if (middle_deriv_num(a, c2) > 0) {
                lo = a;
            } else {
                hi = a;
            }
        }
        return 0.5 * (lo + hi);
    };
    auto mid_value = [](double a, double c2) {
        return a / (1 - a) * (c2 - a * a) / 2;
    };
    double lo = 0.5, hi = 0.9;
    while (hi - lo > inner_tol) {
        double c2 = 0.5 * (lo + hi);
        if (mid_value(mid_alpha(c2), c2) < 1 - c2) {
            lo = c2;
        } else {
            hi = c2;
        }
    }
    WidestInterval w;
    w.c2 = 0.5 * (lo + hi);
    w.alpha = mid_alpha(w.c2);
    w.c1_star = mid_value(w.alpha, w.c2);
    w.residual_value = std::fabs(w.c1_star - (1 - w.c2));
    w.residual_deriv = std::fabs(middle_deriv_num(w.alpha, w.c2) /
                                 (2 * (1 - w.alpha) * (1 - w.alpha)));
    return w;
}

EmpiricalN0 empirical_n0(const Rational& c1, const Rational& c2,
                         long long n_max) {
    if (!(c1 > 0 && c1 <= c2 && c2 < 1)) {
        throw std::invalid_argument("require 0 < c1 <= c2 < 1");
    }
    double c1s = c1_star(static_cast<double>(c2)).c1_star;
    if (!(static_cast<double>(c1) > c1s)) {
        throw std::invalid_argument("empirical_n0 requires c1 > c1_star(c2)");
    }
    EmpiricalN0 out;
    bool onward = true;
    for (long long n = 3; n <= n_max; ++n) {
        const BigInt cap(choose2(n - 1));
        const long long d_max =
            static_cast<long long>(rational_floor(c2 * Rational(cap)));
        if (d_max < 0) continue;
        bool ok;
        try {
            long long gs = g_star(n, d_max).value;
            // g* <= c1 * C(n-1,2), compared exactly.
            ok = BigInt(gs) * denominator(c1) <= numerator(c1) * cap;
        } catch (const std::invalid_argument&) {
            ok = false;  // no admissible k at this n
        }
        if (ok && !out.n0) out.n0 = n;
        if (out.n0 && !ok) onward = false;
    }
    out.holds_onward = out.n0.has_value() && onward;
    return out;
}

namespace {

std::vector<double> plot_grid(double c2_min, double c2_max, double step) {
    if (!(step > 0) || !(c2_min > 0) || !(c2_max < 1) || c2_max < c2_min) {
        throw std::invalid_argument("bad plot grid");
    }
    std::vector<double> xs;
    long long count = static_cast<long long>((c2_max - c2_min) / step + 1.5);
    for (long long i = 0; i < count; ++i) {
        double x = c2_min + step * static_cast<double>(i);
        if (x > c2_max + step * 0.5) break;
        xs.push_back(x);
    }
    return xs;
}

}  // namespace

std::vector<PlotRow> plot_data_serial(double c2_min, double c2_max,
                                      double step) {
    auto xs = plot_grid(c2_min, c2_max, step);
    std::vector<PlotRow> rows(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        ThresholdResult r = c1_star(xs[i]);
        rows[i] = {xs[i], r.c1_star, r.alpha_star};
    }
    return rows;
}

std::vector<PlotRow> plot_data(double c2_min, double c2_max, double step) {
    auto xs = plot_grid(c2_min, c2_max, step);
    std::vector<PlotRow> rows(xs.size());
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(xs.size()); ++i) {
        ThresholdResult r = c1_star(xs[i]);
        rows[i] = {xs[i], r.c1_star, r.alpha_star};
    }
    return rows;
}

}  // namespace hg3
