#include "sigcurve/spline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sigcurve {

namespace {

// Thomas algorithm for a tridiagonal system; diagonals (a = sub, b = main,
// c = super) are modified in place.
std::vector<double> solve_tridiagonal(std::vector<double> a, std::vector<double> b,
                                      std::vector<double> c, std::vector<double> d) {
    const int n = static_cast<int>(b.size());
    for (int i = 1; i < n; ++i) {
        double w = a[i] / b[i - 1];
        b[i] -= w * c[i - 1];
        d[i] -= w * d[i - 1];
    }
    std::vector<double> x(n);
    x[n - 1] = d[n - 1] / b[n - 1];
    for (int i = n - 2; i >= 0; --i) x[i] = (d[i] - c[i] * x[i + 1]) / b[i];
    return x;
}

// Cyclic tridiagonal solve via the Sherman-Morrison correction.
std::vector<double> solve_cyclic_tridiagonal(const std::vector<double>& a,
                                             const std::vector<double>& b,
                                             const std::vector<double>& c,
                                             const std::vector<double>& d) {
    const int n = static_cast<int>(b.size());
    if (n == 1) return {d[0] / (b[0] + a[0] + c[0])};
    const double alpha = a[0];      // coupling (0, n-1)
    const double beta = c[n - 1];   // coupling (n-1, 0)
    const double gamma = -b[0];
    std::vector<double> bb(b);
    bb[0] = b[0] - gamma;
    bb[n - 1] = b[n - 1] - alpha * beta / gamma;
    std::vector<double> u(n, 0.0);
    u[0] = gamma;
    u[n - 1] = beta;
    std::vector<double> x = solve_tridiagonal(a, bb, c, d);
    std::vector<double> z = solve_tridiagonal(a, bb, c, u);
    double fact = (x[0] + alpha * x[n - 1] / gamma) /
                  (1.0 + z[0] + alpha * z[n - 1] / gamma);
    for (int i = 0; i < n; ++i) x[i] -= fact * z[i];
    return x;
}

}  // namespace

CubicSpline1D CubicSpline1D::fit(std::vector<double> t, std::vector<double> y,
                                 SplineBoundary boundary) {
    if (boundary == SplineBoundary::Periodic)
        throw std::invalid_argument("use fit_periodic for periodic splines");
    const int n = static_cast<int>(t.size());
    if (n < 4 || y.size() != t.size())
        throw std::invalid_argument("spline needs at least 4 knots");
    for (int i = 1; i < n; ++i)
        if (t[i] <= t[i - 1]) throw std::invalid_argument("knots must increase");

    std::vector<double> h(n - 1);
    for (int i = 0; i + 1 < n; ++i) h[i] = t[i + 1] - t[i];

    // Interior continuity equations for the moments M_1..M_{n-2}.
    const int m = n - 2;
    std::vector<double> sub(m, 0.0), main(m, 0.0), super(m, 0.0), rhs(m, 0.0);
    for (int i = 1; i <= n - 2; ++i) {
        int r = i - 1;
        sub[r] = h[i - 1] / 6.0;
        main[r] = (h[i - 1] + h[i]) / 3.0;
        super[r] = h[i] / 6.0;
        rhs[r] = (y[i + 1] - y[i]) / h[i] - (y[i] - y[i - 1]) / h[i - 1];
    }

    std::vector<double> moments(n, 0.0);
    if (boundary == SplineBoundary::Natural) {
        // M_0 = M_{n-1} = 0; the interior system is already closed.
        std::vector<double> x = solve_tridiagonal(sub, main, super, rhs);
        for (int i = 0; i < m; ++i) moments[i + 1] = x[i];
    } else {
        // Not-a-knot: continuous third derivative at t_1 and t_{n-2}:
        //   h_1 M_0 - (h_0 + h_1) M_1 + h_0 M_2 = 0, and mirrored at the end.
        // Eliminate M_0 and M_{n-1} from the first/last interior equations.
        // M_0 = ((h_0 + h_1) M_1 - h_0 M_2) / h_1
        double c0 = sub[0];  // coefficient that multiplied M_0
        main[0] += c0 * (h[0] + h[1]) / h[1];
        super[0] += c0 * (-h[0] / h[1]);
        // M_{n-1} = ((h_{n-2} + h_{n-3}) M_{n-2} - h_{n-2} M_{n-3}) / h_{n-3}
        double cl = super[m - 1];
        main[m - 1] += cl * (h[n - 2] + h[n - 3]) / h[n - 3];
        sub[m - 1] += cl * (-h[n - 2] / h[n - 3]);
        std::vector<double> x = solve_tridiagonal(sub, main, super, rhs);
        for (int i = 0; i < m; ++i) moments[i + 1] = x[i];
        moments[0] = ((h[0] + h[1]) * moments[1] - h[0] * moments[2]) / h[1];
        moments[n - 1] =
            ((h[n - 2] + h[n - 3]) * moments[n - 2] - h[n - 2] * moments[n - 3]) / h[n - 3];
    }

    CubicSpline1D s;
    s.t_ = std::move(t);
    s.y_ = std::move(y);
    s.m_ = std::move(moments);
    return s;
}

CubicSpline1D CubicSpline1D::fit_periodic(std::vector<double> t, std::vector<double> y,
                                          double period) {
    const int n = static_cast<int>(t.size());
    if (n < 3 || y.size() != t.size())
        throw std::invalid_argument("periodic spline needs at least 3 knots");
    for (int i = 1; i < n; ++i)
        if (t[i] <= t[i - 1]) throw std::invalid_argument("knots must increase");
    if (period <= t.back() - t.front())
        throw std::invalid_argument("period must exceed the knot span");

    // h_i for i = 0..n-1 with the wrap interval h_{n-1} closing the period.
    std::vector<double> h(n);
    for (int i = 0; i + 1 < n; ++i) h[i] = t[i + 1] - t[i];
    h[n - 1] = period - (t.back() - t.front());

    auto yv = [&](int i) { return y[(i % n + n) % n]; };
    std::vector<double> sub(n), main(n), super(n), rhs(n);
    for (int i = 0; i < n; ++i) {
        double hm = h[(i - 1 + n) % n];
        double hi = h[i];
        sub[i] = hm / 6.0;
        main[i] = (hm + hi) / 3.0;
        super[i] = hi / 6.0;
        rhs[i] = (yv(i + 1) - yv(i)) / hi - (yv(i) - yv(i - 1)) / hm;
    }
    std::vector<double> x = solve_cyclic_tridiagonal(sub, main, super, rhs);

    CubicSpline1D s;
    s.t_ = std::move(t);
    s.y_ = std::move(y);
    s.m_ = std::move(x);
    s.periodic_ = true;
    s.period_ = period;
    return s;
}

int CubicSpline1D::interval(double& s) const {
    const int n = static_cast<int>(t_.size());
    if (periodic_) {
        double span = period_;
        s = std::fmod(s - t_.front(), span);
        if (s < 0) s += span;
        s += t_.front();
        // Last interval wraps; upper_bound handles the rest.
        if (s >= t_.back()) return n - 1;
        auto it = std::upper_bound(t_.begin(), t_.end(), s);
        return std::max<int>(0, static_cast<int>(it - t_.begin()) - 1);
    }
    if (s <= t_.front()) return 0;
    if (s >= t_.back()) return n - 2;
    auto it = std::upper_bound(t_.begin(), t_.end(), s);
    return static_cast<int>(it - t_.begin()) - 1;
}

namespace {

struct Piece {
    int i, j;       // left/right knot indices
    double h;       // interval width
    double a, b;    // right_knot - x, x - left_knot
};

}  // namespace

// Locates the interval of x and the local coordinates within it.
#define SIGCURVE_SPLINE_PIECE(s)                                                   \
    double x = (s);                                                                \
    Piece p;                                                                       \
    p.i = interval(x);                                                             \
    const int n = static_cast<int>(t_.size());                                     \
    if (periodic_ && p.i == n - 1) {                                               \
        p.j = 0;                                                                   \
        p.h = period_ - (t_.back() - t_.front());                                  \
        p.a = t_[p.i] + p.h - x;                                                   \
    } else {                                                                       \
        p.j = p.i + 1;                                                             \
        p.h = t_[p.j] - t_[p.i];                                                   \
        p.a = t_[p.j] - x;                                                         \
    }                                                                              \
    p.b = x - t_[p.i];

double CubicSpline1D::eval(double s) const {
    SIGCURVE_SPLINE_PIECE(s)
    const double mi = m_[p.i], mj = m_[p.j];
    return (mi * p.a * p.a * p.a + mj * p.b * p.b * p.b) / (6.0 * p.h) +
           (y_[p.i] - mi * p.h * p.h / 6.0) * (p.a / p.h) +
           (y_[p.j] - mj * p.h * p.h / 6.0) * (p.b / p.h);
}

double CubicSpline1D::derivative(double s) const {
    SIGCURVE_SPLINE_PIECE(s)
    const double mi = m_[p.i], mj = m_[p.j];
    return (-mi * p.a * p.a + mj * p.b * p.b) / (2.0 * p.h) +
           (y_[p.j] - y_[p.i]) / p.h - (mj - mi) * p.h / 6.0;
}

double CubicSpline1D::second_derivative(double s) const {
    SIGCURVE_SPLINE_PIECE(s)
    return (m_[p.i] * p.a + m_[p.j] * p.b) / p.h;
}

double CubicSpline1D::third_derivative(double s) const {
    SIGCURVE_SPLINE_PIECE(s)
    return (m_[p.j] - m_[p.i]) / p.h;
}

#undef SIGCURVE_SPLINE_PIECE

}  // namespace sigcurve
