#include "pilotwell/interpolation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pilotwell {

CubicSpline::CubicSpline(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
    const std::size_t n = x_.size();
    if (n < 3 || y_.size() != n) throw std::invalid_argument("CubicSpline: need >= 3 points");
    for (std::size_t i = 1; i < n; ++i)
        if (!(x_[i] > x_[i - 1])) throw std::invalid_argument("CubicSpline: x not increasing");

    // Detect a uniform grid for O(1) segment lookup.
    h_ = (x_.back() - x_.front()) / static_cast<double>(n - 1);
    uniform_ = true;
    for (std::size_t i = 1; i < n; ++i) {
        if (std::abs((x_[i] - x_[i - 1]) - h_) > 1e-9 * h_) {
            uniform_ = false;
            break;
        }
    }

    // Tridiagonal solve for natural-spline second derivatives.
    y2_.assign(n, 0.0);
    std::vector<double> u(n, 0.0);
    for (std::size_t i = 1; i < n - 1; ++i) {
        const double sig = (x_[i] - x_[i - 1]) / (x_[i + 1] - x_[i - 1]);
        const double p = sig * y2_[i - 1] + 2.0;
        y2_[i] = (sig - 1.0) / p;
        u[i] = (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]) -
               (y_[i] - y_[i - 1]) / (x_[i] - x_[i - 1]);
        u[i] = (6.0 * u[i] / (x_[i + 1] - x_[i - 1]) - sig * u[i - 1]) / p;
    }
    for (std::size_t k = n - 1; k-- > 1;) y2_[k] = y2_[k] * y2_[k + 1] + u[k];
}

std::size_t CubicSpline::segment(double x) const {
    const std::size_t n = x_.size();
    if (uniform_) {
        double t = (x - x_.front()) / h_;
        auto k = static_cast<long>(std::floor(t));
        k = std::clamp<long>(k, 0, static_cast<long>(n) - 2);
        return static_cast<std::size_t>(k);
    }
    auto it = std::upper_bound(x_.begin(), x_.end(), x);
    auto idx = static_cast<std::size_t>(std::distance(x_.begin(), it));
    if (idx == 0) return 0;
    if (idx >= n) return n - 2;
    return idx - 1;
}

void CubicSpline::eval(double x, double& value, double& deriv) const {
    x = std::clamp(x, x_.front(), x_.back());
    const std::size_t k = segment(x);
    const double h = x_[k + 1] - x_[k];
    const double a = (x_[k + 1] - x) / h;
    const double b = (x - x_[k]) / h;
    value = a * y_[k] + b * y_[k + 1] +
            ((a * a * a - a) * y2_[k] + (b * b * b - b) * y2_[k + 1]) * (h * h) / 6.0;
    deriv = (y_[k + 1] - y_[k]) / h +
            (-(3.0 * a * a - 1.0) * y2_[k] + (3.0 * b * b - 1.0) * y2_[k + 1]) * h / 6.0;
}

double CubicSpline::operator()(double x) const {
    double v, d;
    eval(x, v, d);
    return v;
}

double CubicSpline::derivative(double x) const {
    double v, d;
    eval(x, v, d);
    return d;
}

HermiteTable::HermiteTable(double x0, double dx, std::vector<double> values,
                           std::vector<double> derivs)
    : x0_(x0), dx_(dx), v_(std::move(values)), d_(std::move(derivs)) {
    if (v_.size() < 2 || v_.size() != d_.size())
        throw std::invalid_argument("HermiteTable: bad sizes");
}

double HermiteTable::operator()(double x) const {
    const auto n = static_cast<long>(v_.size());
    double t = (x - x0_) / dx_;
    auto k = std::clamp<long>(static_cast<long>(std::floor(t)), 0, n - 2);
    t -= static_cast<double>(k);
    const double v0 = v_[k], v1 = v_[k + 1];
    const double m0 = d_[k] * dx_, m1 = d_[k + 1] * dx_;
    const double t2 = t * t, t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * v0 + (t3 - 2 * t2 + t) * m0 +
           (-2 * t3 + 3 * t2) * v1 + (t3 - t2) * m1;
}

double HermiteTable::derivative(double x) const {
    const auto n = static_cast<long>(v_.size());
    double t = (x - x0_) / dx_;
    auto k = std::clamp<long>(static_cast<long>(std::floor(t)), 0, n - 2);
    t -= static_cast<double>(k);
    const double v0 = v_[k], v1 = v_[k + 1];
    const double m0 = d_[k] * dx_, m1 = d_[k + 1] * dx_;
    const double t2 = t * t;
    const double dv = (6 * t2 - 6 * t) * v0 + (3 * t2 - 4 * t + 1) * m0 +
                      (-6 * t2 + 6 * t) * v1 + (3 * t2 - 2 * t) * m1;
    return dv / dx_;
}

} // namespace pilotwell
