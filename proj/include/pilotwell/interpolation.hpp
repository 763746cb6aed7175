#pragma once

#include <cstddef>
#include <vector>

namespace pilotwell {

/// Natural cubic spline on a strictly increasing abscissa grid.
/// Evaluation outside the grid clamps to the end values.
class CubicSpline {
public:
    CubicSpline() = default;
    CubicSpline(std::vector<double> x, std::vector<double> y);

    double operator()(double x) const;
    double derivative(double x) const;
    /// Value and first derivative in one lookup.
    void eval(double x, double& value, double& deriv) const;

    double x_min() const { return x_.front(); }
    double x_max() const { return x_.back(); }
    bool empty() const { return x_.empty(); }
    const std::vector<double>& xs() const { return x_; }
    const std::vector<double>& ys() const { return y_; }

private:
    std::size_t segment(double x) const;
    std::vector<double> x_, y_, y2_;
    bool uniform_ = false;
    double h_ = 0.0;
};

/// Cubic Hermite interpolant on a uniform grid with caller-supplied exact
/// derivatives at the nodes.  Used for cumulative integrals whose
/// derivative is known analytically (accuracy O(h^4) without a solve).
class HermiteTable {
public:
    HermiteTable() = default;
    HermiteTable(double x0, double dx, std::vector<double> values,
                 std::vector<double> derivs);

    double operator()(double x) const;
    double derivative(double x) const;

    double x_min() const { return x0_; }
    double x_max() const { return x0_ + dx_ * (static_cast<double>(v_.size()) - 1.0); }

private:
    double x0_ = 0.0, dx_ = 1.0;
    std::vector<double> v_, d_;
};

} // namespace pilotwell
