#include "trendhedge/trend.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "trendhedge/errors.hpp"

namespace trendhedge {

namespace {

constexpr int kMaxDegree = 2;

// Solves the (deg+1)-square system a x = b in place, partial pivoting.
void solve_small(std::array<std::array<double, kMaxDegree + 1>,
                            kMaxDegree + 1>& a,
                 std::array<double, kMaxDegree + 1>& b, int n) {
    for (int c = 0; c < n; ++c) {
        int pivot = c;
        for (int r = c + 1; r < n; ++r)
            if (std::abs(a[r][c]) > std::abs(a[pivot][c])) pivot = r;
        std::swap(a[c], a[pivot]);
        std::swap(b[c], b[pivot]);
        for (int r = c + 1; r < n; ++r) {
            const double f = a[r][c] / a[c][c];
            for (int j = c; j < n; ++j) a[r][j] -= f * a[c][j];
            b[r] -= f * b[c];
        }
    }
    for (int r = n - 1; r >= 0; --r) {
        double acc = b[r];
        for (int j = r + 1; j < n; ++j) acc -= a[r][j] * b[j];
        b[r] = acc / a[r][r];
    }
}

// Least-squares polynomial coefficients over m samples on the abscissa
// t_j = (j - (m-1)) / (m-1), j = 0..m-1 (so t spans [-1, 0]).
std::array<double, kMaxDegree + 1> fit_coeffs(const double* y, int m,
                                              int degree) {
    std::array<double, kMaxDegree + 1> c{};
    if (m == 1) {
        c[0] = y[0];
        return c;
    }
    const double scale = 1.0 / (m - 1);
    std::array<double, 2 * kMaxDegree + 1> moments{};
    std::array<double, kMaxDegree + 1> rhs{};
    for (int j = 0; j < m; ++j) {
        const double t = (j - (m - 1)) * scale;
        double p = 1.0;
        for (int i = 0; i <= 2 * degree; ++i) {
            moments[i] += p;
            if (i <= degree) rhs[i] += p * y[j];
            p *= t;
        }
    }
    std::array<std::array<double, kMaxDegree + 1>, kMaxDegree + 1> gram{};
    for (int i = 0; i <= degree; ++i)
        for (int j = 0; j <= degree; ++j) gram[i][j] = moments[i + j];
    solve_small(gram, rhs, degree + 1);
    for (int i = 0; i <= degree; ++i) c[i] = rhs[i];
    return c;
}

double poly_eval(const std::array<double, kMaxDegree + 1>& c, int degree,
                 double t) {
    double v = 0.0;
    for (int i = degree; i >= 0; --i) v = v * t + c[i];
    return v;
}

double poly_deriv(const std::array<double, kMaxDegree + 1>& c, int degree,
                  double t) {
    double v = 0.0;
    for (int i = degree; i >= 1; --i) v = v * t + i * c[i];
    return v;
}

} // namespace

TrendEstimate estimate_trend(const PriceSeries& series,
                             const TrendConfig& cfg) {
    if (cfg.degree < 0 || cfg.degree > kMaxDegree)
        throw std::invalid_argument("trend config: degree must be 0, 1 or 2");
    if (cfg.window < cfg.degree + 2)
        throw std::invalid_argument(
            "trend config: window must be >= degree + 2");
    if (cfg.min_points < cfg.degree + 1)
        throw std::invalid_argument(
            "trend config: min_points must be >= degree + 1");
    if (cfg.min_points > cfg.window)
        throw std::invalid_argument(
            "trend config: min_points must be <= window");
    if (series.dt_years <= 0.0)
        throw std::invalid_argument("series: dt_years must be positive");

    const std::size_t n = series.size();
    const std::size_t mp = static_cast<std::size_t>(cfg.min_points);
    if (n < mp)
        throw Error("series has " + std::to_string(n) +
                    " samples, need at least " + std::to_string(mp));

    const double* y = series.values.data();
    TrendEstimate out;
    out.trend.resize(n);
    out.deriv.resize(n);
    out.residual.resize(n);

    // Indices before the first full min_points fit reuse that fit's
    // polynomial, evaluated at their own (negative-shifted) position.
    if (mp >= 2) {
        const auto c0 = fit_coeffs(y, static_cast<int>(mp), cfg.degree);
        const double scale = 1.0 / (static_cast<double>(mp) - 1.0);
        for (std::size_t k = 0; k + 1 < mp; ++k) {
            const double t =
                (static_cast<double>(k) - (static_cast<double>(mp) - 1.0)) *
                scale;
            out.trend[k] = poly_eval(c0, cfg.degree, t);
            out.deriv[k] = poly_deriv(c0, cfg.degree, t) * scale /
                           series.dt_years;
        }
    }

    for (std::size_t k = mp - 1; k < n; ++k) {
        const int m = static_cast<int>(
            std::min<std::size_t>(cfg.window, k + 1));
        const auto c = fit_coeffs(y + (k + 1 - m), m, cfg.degree);
        out.trend[k] = c[0];  // value at t = 0
        out.deriv[k] =
            m > 1 ? c[1] / ((m - 1) * series.dt_years) : 0.0;
    }

    for (std::size_t k = 0; k < n; ++k)
        out.residual[k] = y[k] - out.trend[k];
    return out;
}

} // namespace trendhedge
