#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cheshire/core.hpp"

// Named states, bases, and operators of the Cheshire cat scenario, built from
// the exact amplitude set {0, +-1/2, +-1/sqrt2, 1}.

namespace cheshire::catalog {

struct UnknownNameError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Product states use a two-character name: polarisation in {H,V,D,A} followed
// by path in {1,2,+,-}, e.g. "H1", "D+", "A2". Bell states are "Phi+", "Phi-",
// "Psi+", "Psi-" with Phi+- = (H1 +- V2)/sqrt2 and Psi+- = (H2 +- V1)/sqrt2.
// "E_CC" is the entangled preselection (H1 + H2 + V1 - V2)/2.
Ket state(std::string_view name);

// Basis names: HV12, DA12, HVpm, Bell.
Basis basis(std::string_view name);

// Operator names: Pi(1), Pi(2), Pi(H), Pi(V), Pi(Phi), sigma_HV, sigma_pm,
// sigma_HV(1), sigma_HV(2), sigma_pm(V), B_Phi.
Operator op(std::string_view name);

const std::vector<std::string>& state_names();
const std::vector<std::string>& basis_names();
const std::vector<std::string>& op_names();

}  // namespace cheshire::catalog
