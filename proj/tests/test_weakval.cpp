#include <doctest.h>

#include "cheshire/catalog.hpp"
#include "cheshire/weakval.hpp"
#include "helpers.hpp"

using namespace cheshire;
using namespace cheshire::testing;
namespace cat = cheshire::catalog;
namespace wv = cheshire::weakval;

namespace {

wv::PrePostSelection cheshire_selection() {
    return wv::PrePostSelection::make(cat::state("E_CC"), cat::state("D+"));
}

Complex projector_wv(const char* name, const wv::PrePostSelection& sel) {
    const Ket s = cat::state(name);
    return weak_value(outer_product(s, s), sel);
}

}  // namespace

TEST_CASE("orthogonal selection is rejected") {
    CHECK_THROWS_AS(wv::PrePostSelection::make(cat::state("H1"), cat::state("V1")),
                    wv::OrthogonalSelectionError);
}

TEST_CASE("path and compound weak values") {
    const auto sel = cheshire_selection();
    CHECK(close(weak_value(cat::op("Pi(1)"), sel), Complex{1.0}));
    CHECK(close(weak_value(cat::op("Pi(2)"), sel), Complex{0.0}));
    CHECK(close(weak_value(cat::op("sigma_HV(1)"), sel), Complex{0.0}));
    CHECK(close(weak_value(cat::op("sigma_HV(2)"), sel), Complex{1.0}));
    CHECK(close(weak_value(Operator::identity(), sel), Complex{1.0}));
    CHECK(close(weak_value(cat::op("Pi(V)"), sel), Complex{0.0}));
    CHECK(close(weak_value(cat::op("Pi(Phi)"), sel), Complex{0.0}));
}

TEST_CASE("projector weak values, +1/2 three times and -1/2 once") {
    const auto sel = cheshire_selection();
    CHECK(close(projector_wv("H1", sel), Complex{0.5}));
    CHECK(close(projector_wv("H2", sel), Complex{0.5}));
    CHECK(close(projector_wv("V1", sel), Complex{0.5}));
    CHECK(close(projector_wv("V2", sel), Complex{-0.5}));
}

TEST_CASE("bias operators from projector differences") {
    const auto sel = cheshire_selection();
    // <V1>_w - <V2>_w = 1 and <H1>_w - <V2>_w = 1, evaluated through the
    // catalog operators directly.
    CHECK(close(weak_value(cat::op("sigma_pm(V)"), sel), Complex{1.0}));
    CHECK(close(weak_value(cat::op("B_Phi"), sel), Complex{1.0}));
}

TEST_CASE("projector cancellation identities") {
    const auto sel = cheshire_selection();
    CHECK(close(projector_wv("V1", sel), -projector_wv("V2", sel)));
    CHECK(close(projector_wv("H1", sel), -projector_wv("V2", sel)));
    CHECK(close(weak_value(cat::op("Pi(1)"), sel) + weak_value(cat::op("Pi(2)"), sel),
                Complex{1.0}));
    CHECK(close(weak_value(cat::op("sigma_HV(1)"), sel) + weak_value(cat::op("sigma_HV(2)"), sel),
                Complex{1.0}));
}

TEST_CASE("weak_value is linear") {
    std::mt19937_64 rng(23);
    const auto sel = cheshire_selection();
    for (int t = 0; t < 20; ++t) {
        const Operator a = random_operator(rng);
        const Operator b = random_operator(rng);
        const Complex alpha{0.3, -1.1}, beta{-0.7, 0.2};
        CHECK(close(weak_value(alpha * a + beta * b, sel),
                    alpha * weak_value(a, sel) + beta * weak_value(b, sel), 1e-11));
    }
}

TEST_CASE("transition operator") {
    const auto sel = cheshire_selection();
    const auto t = wv::transition_operator(sel);
    CHECK(close(t.matrix.trace(), Complex{1.0}));

    // <D+|E_CC> = 1/2 so the operator is 2 |E_CC><D+|.
    const Operator expected = Complex{2.0} * outer_product(cat::state("E_CC"), cat::state("D+"));
    CHECK(max_entry_diff(t.matrix, expected) < kTol);
}

TEST_CASE("weak value equals trace pairing with the transition operator") {
    std::mt19937_64 rng(29);
    const auto sel = cheshire_selection();
    const auto t = wv::transition_operator(sel);
    for (int i = 0; i < 20; ++i) {
        const Operator h = random_hermitian(rng);
        CHECK(close(weak_value(h, sel), (h * t.matrix).trace(), 1e-11));
    }
}

TEST_CASE("decomposition in the three published bases") {
    const auto sel = cheshire_selection();
    const auto t = wv::transition_operator(sel);

    struct Expected {
        const char* basis;
        std::array<std::pair<int, int>, 4> positions;  // (n, m) with coeff 1
    };
    // Positions index the basis label order. The adjoint table carries the
    // transposed-conjugate pattern, matching the <f|..|i>-ordered expansions.
    const Expected cases[] = {
        {"DA12", {{{0, 0}, {0, 1}, {3, 0}, {3, 1}}}},  // D1,D1 D1,D2 A2,D1 A2,D2
        {"HVpm", {{{0, 0}, {0, 2}, {3, 0}, {3, 2}}}},  // H+,H+ H+,V+ V-,H+ V-,V+
        {"Bell", {{{1, 0}, {1, 2}, {2, 0}, {2, 2}}}},  // Phi-,Phi+ Phi-,Psi+ Psi+,Phi+ Psi+,Psi+
    };

    for (const auto& c : cases) {
        CAPTURE(c.basis);
        const Basis basis = cat::basis(c.basis);
        const auto table = wv::decompose(t, basis);

        int nonzero = 0;
        for (std::size_t n = 0; n < kDim; ++n)
            for (std::size_t m = 0; m < kDim; ++m) {
                if (std::abs(table.at(n, m)) > kTol) ++nonzero;
            }
        CHECK(nonzero == 4);
        for (const auto& [n, m] : c.positions) CHECK(close(table.at(n, m), Complex{1.0}));

        // diagonal sums to 1
        Complex diag = 0.0;
        for (std::size_t n = 0; n < kDim; ++n) diag += table.at(n, n);
        CHECK(close(diag, Complex{1.0}));

        CHECK(max_entry_diff(wv::reconstruct(table), t.matrix) < kTol);
    }
}

TEST_CASE("decompose-reconstruct identity on random rank-1 trace-1 operators") {
    std::mt19937_64 rng(31);
    int done = 0;
    while (done < 100) {
        const Ket pre = random_unit_ket(rng);
        const Ket post = random_unit_ket(rng);
        if (std::abs(inner_product(post, pre)) <= 1e-3) continue;
        const auto sel = wv::PrePostSelection::make(pre, post);
        const auto t = wv::transition_operator(sel);
        for (const auto& name : cat::basis_names()) {
            const auto table = wv::decompose(t, cat::basis(name));
            CHECK(max_entry_diff(wv::reconstruct(table), t.matrix) < kTol);
        }
        ++done;
    }
}

TEST_CASE("coherence weak values") {
    const auto sel = cheshire_selection();

    // Direct formula: (<A2|E_CC><D+|D2>)/<D+|E_CC> = (1/2 * 1/2)/(1/2) = 1.
    const Complex coh = wv::coherence_weak_value(cat::state("D2"), cat::state("A2"), sel);
    CHECK(close(coh, Complex{1.0}));

    CHECK(close(projector_wv("H2", sel), Complex{0.5} * coh));
    CHECK(close(projector_wv("V2", sel), Complex{-0.5} * coh));

    // all catalog projector weak values are real for this selection
    for (const auto& name : cat::state_names()) {
        CHECK(std::abs(projector_wv(name.c_str(), sel).imag()) < kTol);
    }
}
