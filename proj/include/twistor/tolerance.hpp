#pragma once

#include <cmath>
#include <complex>

namespace twistor {

/// Global default tolerance for equality tests on quantities normalized to
/// unit scale. Every predicate accepts an override as its last parameter.
inline constexpr double kDefaultTol = 1e-9;

inline bool near(double a, double b, double tol = kDefaultTol) {
    return std::abs(a - b) <= tol;
}

inline bool near(std::complex<double> a, std::complex<double> b,
                 double tol = kDefaultTol) {
    return std::abs(a - b) <= tol;
}

inline bool near_zero(double a, double tol = kDefaultTol) {
    return std::abs(a) <= tol;
}

inline bool near_zero(std::complex<double> a, double tol = kDefaultTol) {
    return std::abs(a) <= tol;
}

}  // namespace twistor
