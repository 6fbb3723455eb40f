#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

// Exact complex linear algebra on the fixed 4-dimensional polarisation (x)
// path Hilbert space. Component ordering is canonical: (H1, H2, V1, V2).

namespace cheshire {

using Complex = std::complex<double>;

inline constexpr std::size_t kDim = 4;
inline constexpr double kTol = 1e-12;

inline constexpr const char* kCanonicalTag = "HV12";

struct BasisMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidBasisError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Ket {
    std::array<Complex, kDim> amp{};
    std::string basis_tag = kCanonicalTag;

    double norm_sq() const;
    bool is_finite() const;
};

struct Operator {
    // Row-major 4x4.
    std::array<Complex, kDim * kDim> m{};
    std::string basis_tag = kCanonicalTag;

    Complex& at(std::size_t row, std::size_t col) { return m[row * kDim + col]; }
    const Complex& at(std::size_t row, std::size_t col) const { return m[row * kDim + col]; }

    Complex trace() const;
    Operator adjoint() const;

    static Operator identity(std::string tag = kCanonicalTag);
    static Operator zero(std::string tag = kCanonicalTag);
};

struct Basis {
    std::string name;
    std::array<std::string, kDim> labels;
    // Basis kets expressed in canonical coordinates.
    std::array<Ket, kDim> kets;
};

Operator operator+(const Operator& a, const Operator& b);
Operator operator-(const Operator& a, const Operator& b);
Operator operator*(const Operator& a, const Operator& b);
Operator operator*(Complex s, const Operator& a);
Ket operator+(const Ket& a, const Ket& b);
Ket operator-(const Ket& a, const Ket& b);
Ket operator*(Complex s, const Ket& a);

// <bra|ket>, conjugating the first argument. Throws BasisMismatchError if the
// two tags differ.
Complex inner_product(const Ket& bra, const Ket& ket);

// Kronecker product of a single-qubit polarisation pair and a single-qubit
// path pair, in canonical ordering.
Ket tensor_product(const std::array<Complex, 2>& pol, const std::array<Complex, 2>& path);

Ket apply(const Operator& op, const Ket& ket);

// |ket><bra|
Operator outer_product(const Ket& ket, const Ket& bra);

// Validates pairwise orthonormality of a basis; throws InvalidBasisError.
void validate_basis(const Basis& basis);

// Re-express a canonical-coordinate ket/operator in `target`; the result's
// basis_tag is target.name.
Ket change_basis(const Ket& ket, const Basis& target);
Operator change_basis(const Operator& op, const Basis& target);

// Inverse of change_basis: coefficients in `source` back to canonical.
Ket to_canonical(const Ket& ket, const Basis& source);
Operator to_canonical(const Operator& op, const Basis& source);

bool is_unitary(const Operator& op, double tol = kTol);
bool is_hermitian(const Operator& op, double tol = kTol);
bool is_projector(const Operator& op, double tol = kTol);

// Hermitian + PSD (pivoted LDL^T) + unit trace.
bool is_density_operator(const Operator& op, double tol = kTol);

}  // namespace cheshire
