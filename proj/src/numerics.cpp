#include "pilotwell/numerics.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace pilotwell {

namespace {

GaussLegendreRule compute_rule(int n) {
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Chebyshev-based initial guess, refined by Newton on P_n.
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-15) break;
        }
        rule.nodes[i] = -z;
        rule.nodes[n - 1 - i] = z;
        rule.weights[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.weights[n - 1 - i] = rule.weights[i];
    }
    return rule;
}

} // namespace

const GaussLegendreRule& gauss_legendre(int n) {
    static std::map<int, GaussLegendreRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_rule(n)).first;
    return it->second;
}

double gl_integrate(const std::function<double(double)>& f, double a, double b, int n) {
    const auto& rule = gauss_legendre(n);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return sum * half;
}

double gl_integrate_panels(const std::function<double(double)>& f, double a, double b,
                           double panel_width, int n) {
    if (b <= a) return 0.0;
    int panels = std::max(1, static_cast<int>(std::ceil((b - a) / panel_width)));
    const double w = (b - a) / panels;
    double sum = 0.0;
    for (int k = 0; k < panels; ++k) sum += gl_integrate(f, a + k * w, a + (k + 1) * w, n);
    return sum;
}

QuadratureResult gl_integrate_adaptive(const std::function<double(double)>& f, double a,
                                       double b, double rel_tol, double abs_tol, int n,
                                       int max_doublings) {
    QuadratureResult res;
    if (b <= a) {
        res.converged = true;
        return res;
    }
    int panels = 1;
    double prev = gl_integrate(f, a, b, n);
    for (int d = 0; d < max_doublings; ++d) {
        panels *= 2;
        const double w = (b - a) / panels;
        double cur = 0.0;
        for (int k = 0; k < panels; ++k) cur += gl_integrate(f, a + k * w, a + (k + 1) * w, n);
        res.value = cur;
        res.error_estimate = std::abs(cur - prev);
        if (res.error_estimate <= rel_tol * std::abs(cur) + abs_tol) {
            res.converged = true;
            return res;
        }
        prev = cur;
    }
    res.value = prev;
    return res;
}

QuadratureResult integrate_sqrt_left(const std::function<double(double)>& f, double a,
                                     double b, double rel_tol) {
    if (b <= a) return {0.0, 0.0, true};
    const double umax = std::sqrt(b - a);
    auto g = [&](double u) { return 2.0 * u * f(a + u * u); };
    return gl_integrate_adaptive(g, 0.0, umax, rel_tol);
}

QuadratureResult integrate_sqrt_right(const std::function<double(double)>& f, double a,
                                      double b, double rel_tol) {
    if (b <= a) return {0.0, 0.0, true};
    const double umax = std::sqrt(b - a);
    auto g = [&](double u) { return 2.0 * u * f(b - u * u); };
    return gl_integrate_adaptive(g, 0.0, umax, rel_tol);
}

double bisect_root(const std::function<double(double)>& f, double lo, double hi, double xtol,
                   int max_iter) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0) == (fhi > 0))
        throw std::invalid_argument("bisect_root: no sign change on bracket");
    for (int i = 0; i < max_iter && (hi - lo) > xtol; ++i) {
        double mid = 0.5 * (lo + hi);
        double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double brent_root(const std::function<double(double)>& f, double lo, double hi, double xtol,
                  int max_iter) {
    double a = lo, b = hi;
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0) == (fb > 0))
        throw std::invalid_argument("brent_root: no sign change on bracket");
    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int iter = 0; iter < max_iter; ++iter) {
        if ((fb > 0) == (fc > 0)) {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 2.0 * 2.22e-16 * std::abs(b) + 0.5 * xtol;
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0) return b;
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            double p, q, r;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                q = fa / fc;
                r = fb / fc;
                p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0));
                q = (q - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0) q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::abs(d) > tol1) ? d : (xm > 0 ? tol1 : -tol1);
        fb = f(b);
    }
    return b;
}

} // namespace pilotwell
