#ifndef HG3_THRESHOLD_HPP
#define HG3_THRESHOLD_HPP

#include <optional>
#include <string>
#include <vector>

#include "hg3/common.hpp"

namespace hg3 {

/// Which candidate attains the maximum of C(alpha, c2/2) over alpha.
enum class Branch { middle, upper, breakpoint };

std::string branch_name(Branch b);

struct ThresholdResult {
    double c2 = 0;
    double c1_star = 0;
    double alpha_star = 0;
    Branch branch = Branch::middle;
    double residual = 0;  // |dC/dalpha| at the reported stationary point
};

/// The piecewise constant-density function:
///   0                                  if d <= a^2/2
///   a/(1-a) * (2d - a^2)/2             if a^2/2 < d <= a(1 - a/2)
///   2a/(1-a) * (2d - a^2) - 3a^2       if d > a(1 - a/2)
/// Continuous at both branch boundaries; equals a^2 at d = a(1 - a/2).
double C_value(double alpha, double d);

/// c1*(c2) = max over alpha in (0,1) of C(alpha, c2/2). Candidates are the
/// stationary points of the middle and upper branches inside their validity
/// intervals plus the non-differentiable breakpoint alpha = 1 - sqrt(1-c2).
/// Roots are located by sign-change bracketing and bisection to `tol` on
/// alpha; ties go to the smallest alpha.
ThresholdResult c1_star(double c2, double tol = 1e-10);

struct WidestInterval {
    double c2 = 0;
    double c1_star = 0;
    double alpha = 0;
    double residual_value = 0;  // | a/(1-a)*(c2-a^2)/2 - (1-c2) |
    double residual_deriv = 0;  // |dC/dalpha| at alpha
};

/// The symmetric point c1*(c2) = 1 - c2, solved by nested bisection.
WidestInterval widest_interval(double tol = 1e-10);

struct EmpiricalN0 {
    std::optional<long long> n0;  // first n with g* below the c1 band
    bool holds_onward = false;    // condition held for all n in [n0, n_max]
};

/// Smallest n in [3, n_max] with g*(n, floor(c2*C(n-1,2))) <= c1*C(n-1,2),
/// by exact integer comparison. Requires c1_star(c2) < c1 <= c2.
EmpiricalN0 empirical_n0(const Rational& c1, const Rational& c2,
                         long long n_max);

struct PlotRow {
    double c2 = 0;
    double c1_star = 0;
    double alpha_star = 0;
};

/// Rows of the c1*(c2) curve on [c2_min, c2_max] with the given step.
/// OpenMP-parallel over grid points; plot_data_serial is the reference.
std::vector<PlotRow> plot_data(double c2_min, double c2_max, double step);
std::vector<PlotRow> plot_data_serial(double c2_min, double c2_max,
                                      double step);

}  // namespace hg3

#endif
