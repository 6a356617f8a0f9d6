#pragma once

// Test-only reference computations. Nothing here calls into the library's
// evaluation code, so they can be used to check it.

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

namespace oracle {

using Vec = std::vector<double>;

// Row vector (u^3, u^2, u, 1) times the 4x4 cardinal geometry matrix times
// the 4xd window, written out as plain loops.
inline Vec cardinal_matrix_product(const std::array<Vec, 4>& window, double tau, double u) {
    const double m[4][4] = {{-tau, 2 - tau, tau - 2, tau},
                            {2 * tau, tau - 3, 3 - 2 * tau, -tau},
                            {-tau, 0, tau, 0},
                            {0, 1, 0, 0}};
    const double powers[4] = {u * u * u, u * u, u, 1};
    double row[4] = {0, 0, 0, 0};
    for (int c = 0; c < 4; ++c)
        for (int r = 0; r < 4; ++r) row[c] += powers[r] * m[r][c];
    Vec out(window[0].size(), 0.0);
    for (std::size_t d = 0; d < out.size(); ++d)
        for (int c = 0; c < 4; ++c) out[d] += row[c] * window[static_cast<std::size_t>(c)][d];
    return out;
}

// Direct Bernstein sum with binomial weights 1, 3, 3, 1.
inline Vec bernstein_sum(const std::array<Vec, 4>& controls, double u) {
    const double binom[4] = {1, 3, 3, 1};
    Vec out(controls[0].size(), 0.0);
    for (int k = 0; k < 4; ++k) {
        const double w = binom[k] * std::pow(1 - u, 3 - k) * std::pow(u, k);
        for (std::size_t d = 0; d < out.size(); ++d) out[d] += w * controls[static_cast<std::size_t>(k)][d];
    }
    return out;
}

// Cox-de Boor recursion on a plain knot list, half-open spans with the
// final non-empty span closed on the right.
inline double cox_de_boor(std::size_t i, int k, double u, const Vec& t) {
    if (k == 1) {
        if (t[i] <= u && u < t[i + 1]) return 1.0;
        // Closed end: u equals the last knot and this is the last non-empty span.
        if (u == t.back() && t[i] < t[i + 1] && t[i + 1] == t.back()) return 1.0;
        return 0.0;
    }
    const auto ku = static_cast<std::size_t>(k);
    double a = 0.0, b = 0.0;
    if (t[i + ku - 1] != t[i]) a = (u - t[i]) / (t[i + ku - 1] - t[i]) * cox_de_boor(i, k - 1, u, t);
    if (t[i + ku] != t[i + 1]) b = (t[i + ku] - u) / (t[i + ku] - t[i + 1]) * cox_de_boor(i + 1, k - 1, u, t);
    return a + b;
}

inline Vec central_difference(const std::function<Vec(double)>& f, double u, double h) {
    const Vec a = f(u + h);
    const Vec b = f(u - h);
    Vec out(a.size());
    for (std::size_t d = 0; d < a.size(); ++d) out[d] = (a[d] - b[d]) / (2 * h);
    return out;
}

// Every strictly increasing index list of length m over [0, n) that holds
// both 0 and n-1.
inline std::vector<std::vector<std::size_t>> endpoint_subsets(std::size_t n, std::size_t m) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur{0};
    std::function<void(std::size_t)> rec = [&](std::size_t next) {
        if (cur.size() == m - 1) {
            auto full = cur;
            full.push_back(n - 1);
            out.push_back(std::move(full));
            return;
        }
        for (std::size_t i = next; i + 1 < n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

}  // namespace oracle
