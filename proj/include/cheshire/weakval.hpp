#pragma once

#include "cheshire/core.hpp"

// Weak values under pre- and postselection, the rank-1 transition operator
// |i><f| / <f|i>, and its coherence decomposition in an arbitrary basis.

namespace cheshire::weakval {

struct OrthogonalSelectionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct PrePostSelection {
    Ket pre;
    Ket post;
    Complex overlap;  // <f|i>

    // Throws OrthogonalSelectionError when |<f|i>| <= kTol.
    static PrePostSelection make(const Ket& pre, const Ket& post);
};

struct TransitionOperator {
    Operator matrix;  // |i><f| / <f|i>, trace 1, rank 1
    PrePostSelection selection;
};

struct CoherenceTable {
    Basis basis;
    // coeff(n, m) = weak value of |m><n|; the transition operator equals
    // sum_{n,m} coeff(n,m) |n><m|.
    std::array<Complex, kDim * kDim> coeff{};

    Complex& at(std::size_t n, std::size_t m) { return coeff[n * kDim + m]; }
    const Complex& at(std::size_t n, std::size_t m) const { return coeff[n * kDim + m]; }
};

// <f|op|i> / <f|i>
Complex weak_value(const Operator& op, const PrePostSelection& sel);

TransitionOperator transition_operator(const PrePostSelection& sel);

CoherenceTable decompose(const TransitionOperator& t, const Basis& basis);

// sum_{n,m} coeff(n,m) |n><m| in canonical coordinates.
Operator reconstruct(const CoherenceTable& table);

// Weak value of the coherence |m><n|.
Complex coherence_weak_value(const Ket& m, const Ket& n, const PrePostSelection& sel);

}  // namespace cheshire::weakval
