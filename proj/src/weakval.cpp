#include "cheshire/weakval.hpp"

#include <cmath>

namespace cheshire::weakval {

PrePostSelection PrePostSelection::make(const Ket& pre, const Ket& post) {
    const Complex overlap = inner_product(post, pre);
    if (std::abs(overlap) <= kTol) {
        throw OrthogonalSelectionError("pre- and postselection are orthogonal; weak values diverge");
    }
    return PrePostSelection{pre, post, overlap};
}

Complex weak_value(const Operator& op, const PrePostSelection& sel) {
    return inner_product(sel.post, apply(op, sel.pre)) / sel.overlap;
}

TransitionOperator transition_operator(const PrePostSelection& sel) {
    const Complex inv = 1.0 / sel.overlap;
    return TransitionOperator{inv * outer_product(sel.pre, sel.post), sel};
}

CoherenceTable decompose(const TransitionOperator& t, const Basis& basis) {
    validate_basis(basis);
    CoherenceTable table;
    table.basis = basis;
    for (std::size_t n = 0; n < kDim; ++n)
        for (std::size_t m = 0; m < kDim; ++m) {
            // <n|i><f|m> / <f|i>
            table.at(n, m) = inner_product(basis.kets[n], t.selection.pre) *
                             inner_product(t.selection.post, basis.kets[m]) / t.selection.overlap;
        }
    return table;
}

Operator reconstruct(const CoherenceTable& table) {
    Operator r;
    for (std::size_t n = 0; n < kDim; ++n)
        for (std::size_t m = 0; m < kDim; ++m) {
            const Complex c = table.at(n, m);
            if (c == Complex{0.0, 0.0}) continue;
            r = r + c * outer_product(table.basis.kets[n], table.basis.kets[m]);
        }
    return r;
}

Complex coherence_weak_value(const Ket& m, const Ket& n, const PrePostSelection& sel) {
    return weak_value(outer_product(m, n), sel);
}

}  // namespace cheshire::weakval
