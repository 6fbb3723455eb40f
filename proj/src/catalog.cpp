#include "cheshire/catalog.hpp"

#include <cmath>

namespace cheshire::catalog {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

using Qubit = std::array<Complex, 2>;

Qubit pol_vector(char c) {
    switch (c) {
        case 'H': return {1.0, 0.0};
        case 'V': return {0.0, 1.0};
        case 'D': return {kInvSqrt2, kInvSqrt2};
        case 'A': return {kInvSqrt2, -kInvSqrt2};
        default: throw UnknownNameError(std::string("unknown polarisation '") + c + "'");
    }
}

Qubit path_vector(char c) {
    switch (c) {
        case '1': return {1.0, 0.0};
        case '2': return {0.0, 1.0};
        case '+': return {kInvSqrt2, kInvSqrt2};
        case '-': return {kInvSqrt2, -kInvSqrt2};
        default: throw UnknownNameError(std::string("unknown path '") + c + "'");
    }
}

Ket scaled_sum(Complex s, std::initializer_list<Ket> kets) {
    Ket r;
    for (const auto& k : kets) r = r + k;
    return s * r;
}

// Single-qubit operators lifted to the 4-dim space.
Operator kron(const std::array<Complex, 4>& pol_op, const std::array<Complex, 4>& path_op) {
    Operator r;
    for (std::size_t pi = 0; pi < 2; ++pi)
        for (std::size_t pj = 0; pj < 2; ++pj)
            for (std::size_t qi = 0; qi < 2; ++qi)
                for (std::size_t qj = 0; qj < 2; ++qj)
                    r.at(pi * 2 + qi, pj * 2 + qj) = pol_op[pi * 2 + pj] * path_op[qi * 2 + qj];
    return r;
}

const std::array<Complex, 4> kQubitId = {1.0, 0.0, 0.0, 1.0};
const std::array<Complex, 4> kProj0 = {1.0, 0.0, 0.0, 0.0};
const std::array<Complex, 4> kProj1 = {0.0, 0.0, 0.0, 1.0};
Basis make_basis(std::string name, std::array<std::string, 4> labels) {
    Basis b;
    b.name = std::move(name);
    b.labels = labels;
    for (std::size_t i = 0; i < kDim; ++i) b.kets[i] = state(labels[i]);
    return b;
}

}  // namespace

Ket state(std::string_view name) {
    if (name == "E_CC") {
        return scaled_sum(0.5, {state("H1"), state("H2"), state("V1"), Complex{-1.0} * state("V2")});
    }
    if (name == "Phi+") return scaled_sum(kInvSqrt2, {state("H1"), state("V2")});
    if (name == "Phi-") return scaled_sum(kInvSqrt2, {state("H1"), Complex{-1.0} * state("V2")});
    if (name == "Psi+") return scaled_sum(kInvSqrt2, {state("H2"), state("V1")});
    if (name == "Psi-") return scaled_sum(kInvSqrt2, {state("H2"), Complex{-1.0} * state("V1")});
    if (name.size() == 2) return tensor_product(pol_vector(name[0]), path_vector(name[1]));
    throw UnknownNameError("unknown state '" + std::string(name) + "'");
}

Basis basis(std::string_view name) {
    if (name == "HV12") return make_basis("HV12", {"H1", "H2", "V1", "V2"});
    if (name == "DA12") return make_basis("DA12", {"D1", "D2", "A1", "A2"});
    if (name == "HVpm") return make_basis("HVpm", {"H+", "H-", "V+", "V-"});
    if (name == "Bell") return make_basis("Bell", {"Phi+", "Phi-", "Psi+", "Psi-"});
    throw UnknownNameError("unknown basis '" + std::string(name) + "'");
}

Operator op(std::string_view name) {
    const std::array<Complex, 4> sigma_z = {1.0, 0.0, 0.0, -1.0};
    if (name == "Pi(1)") return kron(kQubitId, kProj0);
    if (name == "Pi(2)") return kron(kQubitId, kProj1);
    if (name == "Pi(H)") return kron(kProj0, kQubitId);
    if (name == "Pi(V)") return kron(kProj1, kQubitId);
    if (name == "Pi(Phi)") {
        return outer_product(state("H1"), state("H1")) + outer_product(state("V2"), state("V2"));
    }
    if (name == "sigma_HV") return kron(sigma_z, kQubitId);
    // Path difference operator Pi(1) - Pi(2) = |+><-| + |-><+|, the path
    // analogue of sigma_HV = Pi(H) - Pi(V) = |D><A| + |A><D|.
    if (name == "sigma_pm") return kron(kQubitId, sigma_z);
    if (name == "sigma_HV(1)") return kron(sigma_z, kProj0);
    if (name == "sigma_HV(2)") return kron(sigma_z, kProj1);
    if (name == "sigma_pm(V)") return kron(kProj1, sigma_z);
    if (name == "B_Phi") {
        return outer_product(state("H1"), state("H1")) - outer_product(state("V2"), state("V2"));
    }
    throw UnknownNameError("unknown operator '" + std::string(name) + "'");
}

const std::vector<std::string>& state_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (char p : {'H', 'V', 'D', 'A'})
            for (char q : {'1', '2', '+', '-'}) v.push_back(std::string{p, q});
        v.insert(v.end(), {"Phi+", "Phi-", "Psi+", "Psi-", "E_CC"});
        return v;
    }();
    return names;
}

const std::vector<std::string>& basis_names() {
    static const std::vector<std::string> names = {"HV12", "DA12", "HVpm", "Bell"};
    return names;
}

const std::vector<std::string>& op_names() {
    static const std::vector<std::string> names = {
        "Pi(1)", "Pi(2)", "Pi(H)", "Pi(V)", "Pi(Phi)", "sigma_HV",
        "sigma_pm", "sigma_HV(1)", "sigma_HV(2)", "sigma_pm(V)", "B_Phi"};
    return names;
}

}  // namespace cheshire::catalog
