#include "pilotwell/potential_well.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "pilotwell/rng.hpp"

namespace pilotwell {

namespace {

std::string fmt_param(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

double validate_well(const PotentialWell& well, int scan_points) {
    if (!(well.x_max > well.x_min)) throw std::invalid_argument("well: empty domain");
    if (well.mass <= 0.0 || well.hbar <= 0.0)
        throw std::invalid_argument("well: mass and hbar must be positive");
    const double h = well.width() / (scan_points - 1);
    int sign_changes = 0;
    double x_at_min = well.x_min;
    double prev = well.dv(well.x_min);
    if (!std::isfinite(well.v(well.x_min))) throw std::invalid_argument("well: V not finite");
    for (int i = 1; i < scan_points; ++i) {
        const double x = well.x_min + i * h;
        if (!std::isfinite(well.v(x))) throw std::invalid_argument("well: V not finite");
        const double d = well.dv(x);
        if (prev < 0.0 && d >= 0.0) {
            ++sign_changes;
            x_at_min = x - 0.5 * h;
        }
        if (d != 0.0) prev = d;
    }
    if (sign_changes != 1)
        throw std::invalid_argument("well: potential derivative must change sign exactly once "
                                    "on the domain (found " + std::to_string(sign_changes) + ")");
    // Polish the minimum by golden-section on V.
    double a = std::max(well.x_min, x_at_min - 2 * h);
    double b = std::min(well.x_max, x_at_min + 2 * h);
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - gr * (b - a), d2 = a + gr * (b - a);
    for (int i = 0; i < 80 && (b - a) > 1e-14 * well.width(); ++i) {
        if (well.v(c) < well.v(d2)) {
            b = d2;
        } else {
            a = c;
        }
        c = b - gr * (b - a);
        d2 = a + gr * (b - a);
    }
    return 0.5 * (a + b);
}

std::function<double(double)> finite_difference_derivative(std::function<double(double)> f,
                                                           double domain_width) {
    const double h = 1e-6 * domain_width;
    return [f = std::move(f), h](double x) { return (f(x + h) - f(x - h)) / (2.0 * h); };
}

PotentialWell make_harmonic_well(double mass, double hbar, double omega, double x_min,
                                 double x_max) {
    PotentialWell w;
    w.mass = mass;
    w.hbar = hbar;
    w.x_min = x_min;
    w.x_max = x_max;
    w.potential = [mass, omega](double x) { return 0.5 * mass * omega * omega * x * x; };
    w.potential_derivative = [mass, omega](double x) { return mass * omega * omega * x; };
    w.descriptor = "harmonic;m=" + fmt_param(mass) + ";hbar=" + fmt_param(hbar) +
                   ";omega=" + fmt_param(omega) + ";dom=" + fmt_param(x_min) + "," +
                   fmt_param(x_max);
    return w;
}

PotentialWell make_quartic_well(double mass, double hbar, double c4, double x_min,
                                double x_max) {
    PotentialWell w;
    w.mass = mass;
    w.hbar = hbar;
    w.x_min = x_min;
    w.x_max = x_max;
    w.potential = [c4](double x) { return c4 * x * x * x * x; };
    w.potential_derivative = [c4](double x) { return 4.0 * c4 * x * x * x; };
    w.descriptor = "quartic;m=" + fmt_param(mass) + ";hbar=" + fmt_param(hbar) +
                   ";c4=" + fmt_param(c4) + ";dom=" + fmt_param(x_min) + "," + fmt_param(x_max);
    return w;
}

PotentialWell make_cubic_perturbed_well(double mass, double hbar, double c2, double c3,
                                        double x_min, double x_max) {
    PotentialWell w;
    w.mass = mass;
    w.hbar = hbar;
    w.x_min = x_min;
    w.x_max = x_max;
    w.potential = [c2, c3](double x) { return c2 * x * x + c3 * x * x * x; };
    w.potential_derivative = [c2, c3](double x) { return 2.0 * c2 * x + 3.0 * c3 * x * x; };
    w.descriptor = "cubic_perturbed;m=" + fmt_param(mass) + ";hbar=" + fmt_param(hbar) +
                   ";c2=" + fmt_param(c2) + ";c3=" + fmt_param(c3) + ";dom=" +
                   fmt_param(x_min) + "," + fmt_param(x_max);
    return w;
}

PotentialWell make_tabulated_well(double mass, double hbar, std::vector<double> xs,
                                  std::vector<double> vs) {
    if (xs.size() != vs.size() || xs.size() < 4)
        throw std::invalid_argument("tabulated well: need >= 4 (x, V) rows");
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (!(xs[i] > xs[i - 1]))
            throw std::invalid_argument("tabulated well: x must be strictly increasing");
    auto spline = std::make_shared<CubicSpline>(xs, vs);
    PotentialWell w;
    w.mass = mass;
    w.hbar = hbar;
    w.x_min = xs.front();
    w.x_max = xs.back();
    w.potential = [spline](double x) { return (*spline)(x); };
    w.potential_derivative = [spline](double x) { return spline->derivative(x); };
    std::uint64_t h = fnv1a("tabulated");
    for (std::size_t i = 0; i < xs.size(); ++i) {
        h = fnv1a(fmt_param(xs[i]), h);
        h = fnv1a(fmt_param(vs[i]), h);
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "tabulated;m=%.17g;hbar=%.17g;h=%016llx", mass, hbar,
                  static_cast<unsigned long long>(h));
    w.descriptor = buf;
    return w;
}

PotentialWell load_tabulated_well(const std::string& csv_path, double mass, double hbar) {
    std::ifstream in(csv_path);
    if (!in) throw std::runtime_error("cannot open potential table: " + csv_path);
    std::vector<double> xs, vs;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        for (auto& c : line)
            if (c == ',' || c == ';' || c == '\t') c = ' ';
        std::istringstream ls(line);
        double x, v;
        if (ls >> x >> v) {
            xs.push_back(x);
            vs.push_back(v);
        } else if (!xs.empty()) {
            throw std::runtime_error("malformed row in potential table: " + line);
        }
        // non-numeric first row treated as header
    }
    return make_tabulated_well(mass, hbar, std::move(xs), std::move(vs));
}

} // namespace pilotwell
