#pragma once

#include <algorithm>
#include <complex>
#include <vector>

#include "twistor/tolerance.hpp"

namespace twistor {

/// Complex polynomial as a coefficient vector, index = power of the variable.
using CPoly = std::vector<std::complex<double>>;

inline std::complex<double> cpoly_eval(const CPoly& p, std::complex<double> v) {
    std::complex<double> acc{0.0, 0.0};
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * v + *it;
    return acc;
}

inline CPoly cpoly_add(const CPoly& a, const CPoly& b) {
    CPoly r(std::max(a.size(), b.size()), {0.0, 0.0});
    for (std::size_t m = 0; m < a.size(); ++m) r[m] += a[m];
    for (std::size_t m = 0; m < b.size(); ++m) r[m] += b[m];
    return r;
}

inline CPoly cpoly_scale(std::complex<double> s, const CPoly& a) {
    CPoly r(a);
    for (auto& c : r) c *= s;
    return r;
}

/// Exact coefficient convolution (Cauchy product).
inline CPoly cpoly_mul(const CPoly& a, const CPoly& b) {
    if (a.empty() || b.empty()) return {};
    CPoly r(a.size() + b.size() - 1, {0.0, 0.0});
    for (std::size_t m = 0; m < a.size(); ++m) {
        for (std::size_t l = 0; l < b.size(); ++l) r[m + l] += a[m] * b[l];
    }
    return r;
}

inline double cpoly_max_abs(const CPoly& p) {
    double s = 0.0;
    for (const auto& c : p) s = std::max(s, std::abs(c));
    return s;
}

/// Drops trailing coefficients below tol relative to the largest one.
/// Keeps at least the constant term.
inline CPoly cpoly_trim(CPoly p, double tol = kDefaultTol) {
    const double scale = cpoly_max_abs(p);
    while (p.size() > 1 && std::abs(p.back()) <= tol * scale) p.pop_back();
    return p;
}

inline int cpoly_degree(const CPoly& p, double tol = kDefaultTol) {
    const double scale = cpoly_max_abs(p);
    for (int m = static_cast<int>(p.size()) - 1; m >= 0; --m) {
        if (std::abs(p[static_cast<std::size_t>(m)]) > tol * scale) return m;
    }
    return 0;
}

}  // namespace twistor
