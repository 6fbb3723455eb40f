#pragma once

#include <cmath>
#include <random>

#include "cheshire/core.hpp"

namespace cheshire::testing {

inline bool close(const Complex& a, const Complex& b, double tol = kTol) {
    return std::abs(a - b) < tol;
}

inline bool close(double a, double b, double tol = kTol) { return std::abs(a - b) < tol; }

inline double max_entry_diff(const Operator& a, const Operator& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < kDim * kDim; ++i) m = std::max(m, std::abs(a.m[i] - b.m[i]));
    return m;
}

inline double max_entry_diff(const Ket& a, const Ket& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < kDim; ++i) m = std::max(m, std::abs(a.amp[i] - b.amp[i]));
    return m;
}

inline Ket random_unit_ket(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Ket k;
    for (auto& a : k.amp) a = Complex{gauss(rng), gauss(rng)};
    return Complex{1.0 / std::sqrt(k.norm_sq())} * k;
}

inline Operator random_hermitian(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Operator h;
    for (std::size_t i = 0; i < kDim; ++i) {
        h.at(i, i) = gauss(rng);
        for (std::size_t j = i + 1; j < kDim; ++j) {
            const Complex v{gauss(rng), gauss(rng)};
            h.at(i, j) = v;
            h.at(j, i) = std::conj(v);
        }
    }
    return h;
}

inline Operator random_operator(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Operator a;
    for (auto& e : a.m) e = Complex{gauss(rng), gauss(rng)};
    return a;
}

}  // namespace cheshire::testing
