#include <doctest.h>

#include "cheshire/catalog.hpp"
#include "cheshire/core.hpp"
#include "helpers.hpp"

using namespace cheshire;
using namespace cheshire::testing;
namespace cat = cheshire::catalog;

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

TEST_CASE("inner_product basics") {
    const Ket h1 = cat::state("H1");
    CHECK(close(inner_product(h1, h1), Complex{1.0}));

    // <Phi+|E_CC> = 0: E_CC carries no Phi+ component.
    CHECK(close(inner_product(cat::state("Phi+"), cat::state("E_CC")), Complex{0.0}));

    // Oracle: expand both states componentwise in (H1, H2, V1, V2) and sum.
    // E_CC = (1,1,1,-1)/2, D+ = (1,1,1,1)/2 -> overlap (1+1+1-1)/4 = 1/2.
    CHECK(close(inner_product(cat::state("D+"), cat::state("E_CC")), Complex{0.5}));
}

TEST_CASE("inner_product is conjugate symmetric") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 20; ++t) {
        const Ket a = random_unit_ket(rng);
        const Ket b = random_unit_ket(rng);
        CHECK(close(inner_product(a, b), std::conj(inner_product(b, a))));
    }
}

TEST_CASE("inner_product rejects mismatched tags") {
    Ket a = cat::state("H1");
    Ket b = cat::state("H1");
    b.basis_tag = "Bell";
    CHECK_THROWS_AS(inner_product(a, b), BasisMismatchError);
}

TEST_CASE("tensor_product canonical ordering") {
    const Ket h1 = tensor_product({1.0, 0.0}, {1.0, 0.0});
    CHECK(close(h1.amp[0], Complex{1.0}));
    CHECK(close(h1.norm_sq(), 1.0));

    // |D> (x) |+> = (H1+H2+V1+V2)/2
    const Ket dplus = tensor_product({kInvSqrt2, kInvSqrt2}, {kInvSqrt2, kInvSqrt2});
    CHECK(max_entry_diff(dplus, cat::state("D+")) < kTol);

    // ((H+V)/sqrt2) (x) |2> = (H2+V2)/sqrt2
    const Ket mixed = tensor_product({kInvSqrt2, kInvSqrt2}, {0.0, 1.0});
    CHECK(close(mixed.amp[1], Complex{kInvSqrt2}));
    CHECK(close(mixed.amp[3], Complex{kInvSqrt2}));
    CHECK(close(mixed.amp[0], Complex{0.0}));
}

TEST_CASE("apply") {
    const Ket e_cc = cat::state("E_CC");
    CHECK(max_entry_diff(apply(Operator::identity(), e_cc), e_cc) < kTol);

    // sigma_HV flips D <-> A (up to sign conventions: sigma_HV |D1> = |A1>)
    CHECK(max_entry_diff(apply(cat::op("sigma_HV"), cat::state("D1")), cat::state("A1")) < kTol);

    // Pi(2)|E_CC> = |A2>/sqrt2: E_CC = (|D1>+|A2>)/sqrt2, path-2 part is A2.
    const Ket projected = apply(cat::op("Pi(2)"), e_cc);
    CHECK(max_entry_diff(projected, Complex{kInvSqrt2} * cat::state("A2")) < kTol);
}

TEST_CASE("outer_product") {
    const Ket h1 = cat::state("H1");
    const Operator p = outer_product(h1, h1);
    CHECK(is_projector(p));
    CHECK(close(p.at(0, 0), Complex{1.0}));
    CHECK(close(p.trace(), Complex{1.0}));

    const Operator r = outer_product(cat::state("D2"), cat::state("A2"));
    CHECK(close(r.trace(), Complex{0.0}));

    CHECK(close(outer_product(cat::state("E_CC"), cat::state("D+")).trace(),
                inner_product(cat::state("D+"), cat::state("E_CC"))));
}

TEST_CASE("outer_product acts as scaled projector") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
        const Ket a = random_unit_ket(rng);
        const Ket b = random_unit_ket(rng);
        const Ket c = random_unit_ket(rng);
        CHECK(max_entry_diff(apply(outer_product(a, b), c), inner_product(b, c) * a) < kTol);
    }
}

TEST_CASE("change_basis") {
    const Ket e_cc = cat::state("E_CC");

    // E_CC in (D/A)(x)(1/2): (|D1> + |A2>)/sqrt2
    const Ket da = change_basis(e_cc, cat::basis("DA12"));
    CHECK(close(da.amp[0], Complex{kInvSqrt2}));  // D1
    CHECK(close(da.amp[1], Complex{0.0}));        // D2
    CHECK(close(da.amp[2], Complex{0.0}));        // A1
    CHECK(close(da.amp[3], Complex{kInvSqrt2}));  // A2

    // E_CC in (H/V)(x)(+/-): (|H+> + |V->)/sqrt2
    const Ket pm = change_basis(e_cc, cat::basis("HVpm"));
    CHECK(close(pm.amp[0], Complex{kInvSqrt2}));  // H+
    CHECK(close(pm.amp[3], Complex{kInvSqrt2}));  // V-
    CHECK(close(pm.amp[1], Complex{0.0}));
    CHECK(close(pm.amp[2], Complex{0.0}));

    // identity looks the same in every basis
    for (const auto& name : cat::basis_names()) {
        const Operator id_there = change_basis(Operator::identity(), cat::basis(name));
        CHECK(max_entry_diff(id_there, Operator::identity(name)) < kTol);
    }
}

TEST_CASE("change_basis round trip on all catalog states and bases") {
    for (const auto& state_name : cat::state_names()) {
        const Ket original = cat::state(state_name);
        for (const auto& basis_name : cat::basis_names()) {
            const Basis b = cat::basis(basis_name);
            const Ket back = to_canonical(change_basis(original, b), b);
            CHECK(max_entry_diff(back, original) < kTol);
        }
    }
}

TEST_CASE("change_basis rejects non-orthonormal targets") {
    Basis bad = cat::basis("HV12");
    bad.kets[1] = bad.kets[0];
    CHECK_THROWS_AS(change_basis(cat::state("E_CC"), bad), InvalidBasisError);
}

TEST_CASE("unitaries preserve inner products") {
    std::mt19937_64 rng(17);
    // sigma_HV and sigma_pm are Hermitian unitaries; the beamsplitter case is
    // covered in the optics tests.
    for (const auto& name : {"sigma_HV", "sigma_pm"}) {
        const Operator u = cat::op(name);
        REQUIRE(is_unitary(u));
        for (int t = 0; t < 10; ++t) {
            const Ket a = random_unit_ket(rng);
            const Ket b = random_unit_ket(rng);
            CHECK(close(inner_product(apply(u, a), apply(u, b)), inner_product(a, b)));
        }
    }
}

TEST_CASE("density operator validation") {
    const Ket e_cc = cat::state("E_CC");
    CHECK(is_density_operator(outer_product(e_cc, e_cc)));
    CHECK(is_density_operator(Complex{0.25} * Operator::identity()));

    // not PSD: diag(1.5, -0.5, 0, 0)
    Operator bad;
    bad.at(0, 0) = 1.5;
    bad.at(1, 1) = -0.5;
    CHECK(!is_density_operator(bad));

    // trace != 1
    CHECK(!is_density_operator(Operator::identity()));
}
