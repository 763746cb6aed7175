#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace pilotwell {

/// Nodes and weights of an n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Returns the n-point Gauss-Legendre rule (cached after first use).
const GaussLegendreRule& gauss_legendre(int n);

/// Integrates f over [a, b] with a single n-point Gauss-Legendre rule.
double gl_integrate(const std::function<double(double)>& f, double a, double b, int n = 16);

/// Composite Gauss-Legendre quadrature: [a, b] split into fixed-width
/// panels of at most `panel_width`, n points per panel.
double gl_integrate_panels(const std::function<double(double)>& f, double a, double b,
                           double panel_width, int n = 8);

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = false;
};

/// Adaptive composite Gauss-Legendre: doubles the panel count until the
/// change between refinements drops below rel_tol * |I| + abs_tol.
QuadratureResult gl_integrate_adaptive(const std::function<double(double)>& f, double a,
                                       double b, double rel_tol = 1e-12, double abs_tol = 0.0,
                                       int n = 16, int max_doublings = 12);

/// Integrates f over [a, b] where f may behave like (x-a)^(-1/2) or
/// (x-a)^(+1/2) at the left endpoint.  Uses the substitution
/// u = sqrt(x - a), which makes the integrand smooth.
QuadratureResult integrate_sqrt_left(const std::function<double(double)>& f, double a,
                                     double b, double rel_tol = 1e-12);

/// Same for a square-root singularity at the right endpoint b
/// (substitution u = sqrt(b - x)).
QuadratureResult integrate_sqrt_right(const std::function<double(double)>& f, double a,
                                      double b, double rel_tol = 1e-12);

/// Root bracketing/refinement ------------------------------------------------

/// Bisection for f with a sign change on [lo, hi]; refines until
/// hi - lo <= xtol.  Throws std::invalid_argument without a sign change.
double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                   double xtol, int max_iter = 200);

/// Brent's method; falls back to bisection steps when interpolation stalls.
double brent_root(const std::function<double(double)>& f, double lo, double hi,
                  double xtol, int max_iter = 200);

/// Exception carrying an achieved-error report for failed quadrature.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_error(achieved) {}
    double achieved_error;
};

} // namespace pilotwell
