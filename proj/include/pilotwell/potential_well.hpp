#pragma once

#include <functional>
#include <memory>
#include <string>

#include "pilotwell/interpolation.hpp"

namespace pilotwell {

/// A one-dimensional confining potential with a single minimum, together
/// with the particle mass and hbar.  All classical and semiclassical
/// quantities in the library are computed against one of these.
struct PotentialWell {
    std::function<double(double)> potential;
    std::function<double(double)> potential_derivative;
    double mass = 1.0;
    double hbar = 1.0;
    double x_min = -1.0;
    double x_max = 1.0;
    /// Stable textual identity (kind + parameters), used for cache keys.
    std::string descriptor;

    double v(double x) const { return potential(x); }
    double dv(double x) const { return potential_derivative(x); }
    double width() const { return x_max - x_min; }
};

/// Validates the single-minimum invariant: the derivative changes sign
/// exactly once (minus to plus) on a scan grid, and the potential is
/// finite everywhere on the domain.  Returns the minimum location.
/// Throws std::invalid_argument on violation.
double validate_well(const PotentialWell& well, int scan_points = 2001);

/// V = 1/2 m omega^2 x^2
PotentialWell make_harmonic_well(double mass, double hbar, double omega, double x_min,
                                 double x_max);

/// V = c4 x^4
PotentialWell make_quartic_well(double mass, double hbar, double c4, double x_min,
                                double x_max);

/// V = c2 x^2 + c3 x^3 (domain must be restricted to the confining region)
PotentialWell make_cubic_perturbed_well(double mass, double hbar, double c2, double c3,
                                        double x_min, double x_max);

/// Tabulated potential with natural-cubic interpolation; derivative from
/// the interpolant.
PotentialWell make_tabulated_well(double mass, double hbar, std::vector<double> xs,
                                  std::vector<double> vs);

/// Reads a two-column CSV (x, V) with strictly increasing x.  A header
/// row is permitted and skipped if non-numeric.
PotentialWell load_tabulated_well(const std::string& csv_path, double mass, double hbar);

/// Central finite-difference derivative fallback (step = 1e-6 of the
/// domain width), for wells supplied without an analytic derivative.
std::function<double(double)> finite_difference_derivative(std::function<double(double)> f,
                                                           double domain_width);

} // namespace pilotwell
