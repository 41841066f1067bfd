#include "sigcurve/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sigcurve {

namespace {

// Abscissae/weights for 5-point Gauss-Legendre on [-1, 1].
constexpr double kGl5X[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                             0.5384693101056831, 0.9061798459386640};
constexpr double kGl5W[5] = {0.2369268850561891, 0.4786286704993665,
                             0.5688888888888889, 0.4786286704993665,
                             0.2369268850561891};

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

double gauss_legendre_5(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < 5; ++i) sum += kGl5W[i] * f(mid + half * kGl5X[i]);
    return half * sum;
}

std::vector<double> cumulative_trapezoid(const std::vector<double>& x,
                                         const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("cumulative_trapezoid: bad input sizes");
    std::vector<double> out(x.size(), 0.0);
    for (std::size_t i = 1; i < x.size(); ++i)
        out[i] = out[i - 1] + 0.5 * (y[i] + y[i - 1]) * (x[i] - x[i - 1]);
    return out;
}

double invert_monotone(const std::function<double(double)>& g, double lo, double hi,
                       double target, double tol) {
    double glo = g(lo) - target;
    double ghi = g(hi) - target;
    if (glo == 0.0) return lo;
    if (ghi == 0.0) return hi;
    if (glo * ghi > 0.0) {
        // Clamp to the nearer end; callers bracket up to rounding.
        return std::abs(glo) < std::abs(ghi) ? lo : hi;
    }
    for (int it = 0; it < 200 && hi - lo > tol; ++it) {
        double mid = 0.5 * (lo + hi);
        double gm = g(mid) - target;
        if (gm == 0.0) return mid;
        if (gm * glo < 0.0) {
            hi = mid;
        } else {
            lo = mid;
            glo = gm;
        }
    }
    return 0.5 * (lo + hi);
}

double uniform01(std::uint64_t& state) {
    return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
}

SmoothNoise::SmoothNoise(double length, double amplitude, std::uint64_t seed, int modes)
    : length_(length), scale_(0.0) {
    std::uint64_t state = seed * 0x632be59bd9b4e019ULL + 0x9e3779b97f4a7c15ULL;
    coeff_.resize(modes);
    phase_.resize(modes);
    double magnitude = 0.0;
    for (int k = 0; k < modes; ++k) {
        coeff_[k] = 2.0 * uniform01(state) - 1.0;
        phase_[k] = 2.0 * M_PI * uniform01(state);
        magnitude += std::abs(coeff_[k]);
    }
    scale_ = magnitude > 0 ? amplitude / magnitude : 0.0;
}

double SmoothNoise::operator()(double s) const {
    double value = 0.0;
    for (std::size_t k = 0; k < coeff_.size(); ++k)
        value += coeff_[k] * std::sin((k + 1) * M_PI * s / length_ + phase_[k]);
    return scale_ * value;
}

std::optional<double> minimal_period(const std::vector<double>& values, double length,
                                     double constant_tol) {
    const int n = static_cast<int>(values.size());
    if (n < 8) return std::nullopt;
    double lo = *std::min_element(values.begin(), values.end());
    double hi = *std::max_element(values.begin(), values.end());
    const double range = hi - lo;
    if (range <= constant_tol * std::max(1.0, std::abs(hi))) return std::nullopt;

    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= n;
    double denom = 0.0;
    for (double v : values) denom += (v - mean) * (v - mean);

    auto autocorr = [&](int lag) {
        double sum = 0.0;
        for (int i = 0; i < n; ++i) sum += (values[i] - mean) * (values[(i + lag) % n] - mean);
        return sum / denom;
    };
    // Circular linear interpolation at fractional index.
    auto at = [&](double idx) {
        idx = std::fmod(idx, static_cast<double>(n));
        if (idx < 0) idx += n;
        int i0 = static_cast<int>(idx);
        double w = idx - i0;
        return (1.0 - w) * values[i0] + w * values[(i0 + 1) % n];
    };
    auto sup_shift_diff = [&](double shift_idx) {
        double worst = 0.0;
        for (int i = 0; i < n; ++i)
            worst = std::max(worst, std::abs(values[i] - at(i + shift_idx)));
        return worst;
    };

    const double h = length / n;
    // Smallest autocorrelation peak close to 1 wins; validate by sup-difference.
    for (int lag = 2; lag <= n / 2; ++lag) {
        double c = autocorr(lag);
        if (c < 0.95) continue;
        double cm = autocorr(lag - 1), cp = autocorr(lag + 1);
        if (c < cm || c < cp) continue;
        // Parabolic refinement of the peak location.
        double refine = 0.0;
        double curv = cm - 2.0 * c + cp;
        if (curv < 0.0) refine = 0.5 * (cm - cp) / curv;
        double ell = (lag + refine) * h;
        int k = static_cast<int>(std::llround(length / ell));
        if (k < 2) continue;
        if (std::abs(length / ell - k) > 0.1) continue;
        if (sup_shift_diff(static_cast<double>(n) / k) > 0.02 * range) continue;
        return length / k;
    }
    return length;
}

}  // namespace sigcurve
