#include "cheshire/core.hpp"

#include <cmath>

namespace cheshire {

namespace {

void require_same_tag(const std::string& a, const std::string& b) {
    if (a != b) {
        throw BasisMismatchError("basis mismatch: '" + a + "' vs '" + b + "'");
    }
}

}  // namespace

double Ket::norm_sq() const {
    double s = 0.0;
    for (const auto& a : amp) s += std::norm(a);
    return s;
}

bool Ket::is_finite() const {
    for (const auto& a : amp) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) return false;
    }
    return true;
}

Complex Operator::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < kDim; ++i) t += at(i, i);
    return t;
}

Operator Operator::adjoint() const {
    Operator r;
    r.basis_tag = basis_tag;
    for (std::size_t i = 0; i < kDim; ++i)
        for (std::size_t j = 0; j < kDim; ++j) r.at(i, j) = std::conj(at(j, i));
    return r;
}

Operator Operator::identity(std::string tag) {
    Operator r;
    r.basis_tag = std::move(tag);
    for (std::size_t i = 0; i < kDim; ++i) r.at(i, i) = 1.0;
    return r;
}

Operator Operator::zero(std::string tag) {
    Operator r;
    r.basis_tag = std::move(tag);
    return r;
}

Operator operator+(const Operator& a, const Operator& b) {
    require_same_tag(a.basis_tag, b.basis_tag);
    Operator r = a;
    for (std::size_t i = 0; i < kDim * kDim; ++i) r.m[i] += b.m[i];
    return r;
}

Operator operator-(const Operator& a, const Operator& b) {
    require_same_tag(a.basis_tag, b.basis_tag);
    Operator r = a;
    for (std::size_t i = 0; i < kDim * kDim; ++i) r.m[i] -= b.m[i];
    return r;
}

Operator operator*(const Operator& a, const Operator& b) {
    require_same_tag(a.basis_tag, b.basis_tag);
    Operator r;
    r.basis_tag = a.basis_tag;
    for (std::size_t i = 0; i < kDim; ++i)
        for (std::size_t k = 0; k < kDim; ++k) {
            const Complex aik = a.at(i, k);
            if (aik == Complex{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < kDim; ++j) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

Operator operator*(Complex s, const Operator& a) {
    Operator r = a;
    for (auto& e : r.m) e *= s;
    return r;
}

Ket operator+(const Ket& a, const Ket& b) {
    require_same_tag(a.basis_tag, b.basis_tag);
    Ket r = a;
    for (std::size_t i = 0; i < kDim; ++i) r.amp[i] += b.amp[i];
    return r;
}

Ket operator-(const Ket& a, const Ket& b) {
    require_same_tag(a.basis_tag, b.basis_tag);
    Ket r = a;
    for (std::size_t i = 0; i < kDim; ++i) r.amp[i] -= b.amp[i];
    return r;
}

Ket operator*(Complex s, const Ket& a) {
    Ket r = a;
    for (auto& e : r.amp) e *= s;
    return r;
}

Complex inner_product(const Ket& bra, const Ket& ket) {
    require_same_tag(bra.basis_tag, ket.basis_tag);
    Complex s = 0.0;
    for (std::size_t i = 0; i < kDim; ++i) s += std::conj(bra.amp[i]) * ket.amp[i];
    return s;
}

Ket tensor_product(const std::array<Complex, 2>& pol, const std::array<Complex, 2>& path) {
    Ket r;
    for (std::size_t p = 0; p < 2; ++p)
        for (std::size_t q = 0; q < 2; ++q) r.amp[p * 2 + q] = pol[p] * path[q];
    return r;
}

Ket apply(const Operator& op, const Ket& ket) {
    require_same_tag(op.basis_tag, ket.basis_tag);
    Ket r;
    r.basis_tag = ket.basis_tag;
    for (std::size_t i = 0; i < kDim; ++i) {
        Complex s = 0.0;
        for (std::size_t j = 0; j < kDim; ++j) s += op.at(i, j) * ket.amp[j];
        r.amp[i] = s;
    }
    return r;
}

Operator outer_product(const Ket& ket, const Ket& bra) {
    require_same_tag(ket.basis_tag, bra.basis_tag);
    Operator r;
    r.basis_tag = ket.basis_tag;
    for (std::size_t i = 0; i < kDim; ++i)
        for (std::size_t j = 0; j < kDim; ++j) r.at(i, j) = ket.amp[i] * std::conj(bra.amp[j]);
    return r;
}

void validate_basis(const Basis& basis) {
    for (std::size_t i = 0; i < kDim; ++i) {
        if (basis.kets[i].basis_tag != kCanonicalTag) {
            throw InvalidBasisError("basis '" + basis.name + "' kets must use canonical coordinates");
        }
        for (std::size_t j = 0; j < kDim; ++j) {
            const Complex g = inner_product(basis.kets[i], basis.kets[j]);
            const double expected = (i == j) ? 1.0 : 0.0;
            if (std::abs(g - expected) >= kTol) {
                throw InvalidBasisError("basis '" + basis.name + "' is not orthonormal at (" +
                                        basis.labels[i] + ", " + basis.labels[j] + ")");
            }
        }
    }
}

Ket change_basis(const Ket& ket, const Basis& target) {
    validate_basis(target);
    require_same_tag(ket.basis_tag, kCanonicalTag);
    Ket r;
    r.basis_tag = target.name;
    for (std::size_t i = 0; i < kDim; ++i) r.amp[i] = inner_product(target.kets[i], ket);
    return r;
}

Operator change_basis(const Operator& op, const Basis& target) {
    validate_basis(target);
    require_same_tag(op.basis_tag, kCanonicalTag);
    Operator r;
    r.basis_tag = target.name;
    for (std::size_t i = 0; i < kDim; ++i)
        for (std::size_t j = 0; j < kDim; ++j) {
            r.at(i, j) = inner_product(target.kets[i], apply(op, target.kets[j]));
        }
    return r;
}

Ket to_canonical(const Ket& ket, const Basis& source) {
    validate_basis(source);
    require_same_tag(ket.basis_tag, source.name);
    Ket r;
    for (std::size_t i = 0; i < kDim; ++i)
        for (std::size_t k = 0; k < kDim; ++k) r.amp[k] += ket.amp[i] * source.kets[i].amp[k];
    return r;
}

Operator to_canonical(const Operator& op, const Basis& source) {
    validate_basis(source);
    require_same_tag(op.basis_tag, source.name);
    Operator r;
    for (std::size_t i = 0; i < kDim; ++i)
        for (std::size_t j = 0; j < kDim; ++j) {
            if (op.at(i, j) == Complex{0.0, 0.0}) continue;
            r = r + op.at(i, j) * outer_product(source.kets[i], source.kets[j]);
        }
    return r;
}

bool is_unitary(const Operator& op, double tol) {
    const Operator p = op.adjoint() * op;
    const Operator id = Operator::identity(op.basis_tag);
    for (std::size_t i = 0; i < kDim * kDim; ++i) {
        if (std::abs(p.m[i] - id.m[i]) >= tol) return false;
    }
    return true;
}

bool is_hermitian(const Operator& op, double tol) {
    for (std::size_t i = 0; i < kDim; ++i)
        for (std::size_t j = 0; j < kDim; ++j) {
            if (std::abs(op.at(i, j) - std::conj(op.at(j, i))) >= tol) return false;
        }
    return true;
}

bool is_projector(const Operator& op, double tol) {
    if (!is_hermitian(op, tol)) return false;
    const Operator sq = op * op;
    for (std::size_t i = 0; i < kDim * kDim; ++i) {
        if (std::abs(sq.m[i] - op.m[i]) >= tol) return false;
    }
    return true;
}

bool is_density_operator(const Operator& op, double tol) {
    if (!is_hermitian(op, tol)) return false;
    if (std::abs(op.trace() - Complex{1.0, 0.0}) >= tol) return false;
    // Diagonally pivoted Cholesky; a pivot below -tol witnesses a negative
    // eigenvalue.
    Operator a = op;
    std::array<bool, kDim> used{};
    for (std::size_t step = 0; step < kDim; ++step) {
        std::size_t piv = kDim;
        double best = -1.0;
        for (std::size_t i = 0; i < kDim; ++i) {
            if (used[i]) continue;
            const double d = a.at(i, i).real();
            if (d > best) {
                best = d;
                piv = i;
            }
        }
        if (piv == kDim) break;
        const double d = a.at(piv, piv).real();
        if (d < -tol) return false;
        used[piv] = true;
        if (d <= tol) continue;
        for (std::size_t i = 0; i < kDim; ++i) {
            if (used[i]) continue;
            for (std::size_t j = 0; j < kDim; ++j) {
                if (used[j]) continue;
                a.at(i, j) -= a.at(i, piv) * a.at(piv, j) / d;
            }
        }
    }
    // All remaining (skipped) diagonals were within tol of zero; check their
    // off-diagonal residuals are negligible too.
    for (std::size_t i = 0; i < kDim; ++i) {
        if (a.at(i, i).real() < -tol) return false;
    }
    return true;
}

}  // namespace cheshire
