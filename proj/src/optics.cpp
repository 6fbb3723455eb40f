#include "cheshire/optics.hpp"

#include <cmath>

#include "cheshire/catalog.hpp"

namespace cheshire::optics {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

CircuitElement beamsplitter() {
    return CircuitElement{CircuitElement::Kind::BeamSplitter, 0, {}, std::nullopt};
}

CircuitElement half_wave_plate(int path) {
    return CircuitElement{CircuitElement::Kind::HalfWavePlate, path, {}, std::nullopt};
}

CircuitElement tap(const Ket& mode, std::optional<std::string> label) {
    return CircuitElement{CircuitElement::Kind::PolarizingTap, 0, outer_product(mode, mode),
                          std::move(label)};
}

CircuitElement final_detector(const Ket& mode, std::string label) {
    return CircuitElement{CircuitElement::Kind::FinalDetector, 0, outer_product(mode, mode),
                          std::move(label)};
}

double real_expectation(const Operator& m, const Ket& psi) {
    return inner_product(psi, apply(m, psi)).real();
}

double trace_pairing(const Operator& m, const Operator& rho) {
    return (m * rho).trace().real();
}

}  // namespace

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::baseline: return "baseline";
        case Variant::a: return "a";
        case Variant::b: return "b";
        case Variant::c: return "c";
    }
    throw std::logic_error("unreachable");
}

Variant parse_variant(const std::string& name) {
    if (name == "baseline") return Variant::baseline;
    if (name == "a") return Variant::a;
    if (name == "b") return Variant::b;
    if (name == "c") return Variant::c;
    throw std::invalid_argument("unknown protocol variant '" + name + "'");
}

Operator element_unitary(const CircuitElement& element) {
    switch (element.kind) {
        case CircuitElement::Kind::BeamSplitter: {
            // Identity on polarisation, Hadamard on path.
            Operator u;
            for (std::size_t p = 0; p < 2; ++p) {
                u.at(p * 2 + 0, p * 2 + 0) = kInvSqrt2;
                u.at(p * 2 + 0, p * 2 + 1) = kInvSqrt2;
                u.at(p * 2 + 1, p * 2 + 0) = kInvSqrt2;
                u.at(p * 2 + 1, p * 2 + 1) = -kInvSqrt2;
            }
            return u;
        }
        case CircuitElement::Kind::HalfWavePlate: {
            // D <-> A flip on the given path: sigma_HV there, identity on the
            // other path.
            Operator u = Operator::identity();
            const std::size_t q = (element.path == 2) ? 1 : 0;
            u.at(2 + q, 2 + q) = -1.0;  // V component on that path
            return u;
        }
        default:
            throw WrongElementKindError("taps and detectors have no unitary");
    }
}

DetectionModel build_protocol(Variant variant) {
    using catalog::state;
    DetectionModel model;
    model.variant = variant;
    model.preparation = {beamsplitter(), half_wave_plate(2)};

    // Post-BS2 coordinates: output port 1 is the "+" port, where the final
    // D/A polarising beamsplitter feeds detector D+.
    switch (variant) {
        case Variant::baseline:
            model.measurement = {beamsplitter(), final_detector(state("D1"), "D+")};
            break;
        case Variant::a:
            model.measurement = {tap(state("D2"), "D2"), beamsplitter(),
                                 final_detector(state("D1"), "D+")};
            break;
        case Variant::b:
            model.measurement = {beamsplitter(), tap(state("V1"), "V+"),
                                 final_detector(state("D1"), "D+")};
            break;
        case Variant::c:
            model.measurement = {tap(state("V1"), std::nullopt), tap(state("H2"), std::nullopt),
                                 beamsplitter(), final_detector(state("D1"), "D+")};
            model.inferred_label = "Phi+";
            model.inferred_factor = 2.0;
            break;
    }
    for (const auto& e : model.measurement) {
        if (e.label) model.detector_labels.push_back(*e.label);
    }
    return model;
}

Ket preselected_state(const DetectionModel& model, const std::array<Complex, 2>& source_pol) {
    Ket psi = tensor_product(source_pol, {1.0, 0.0});
    for (const auto& e : model.preparation) psi = apply(element_unitary(e), psi);
    return psi;
}

std::map<std::string, Effect> detection_effects(const DetectionModel& model) {
    std::map<std::string, Effect> effects;
    // A accumulates the conditional (non-unitary) evolution up to each stage;
    // the effect of a tap with projector P is A^dag P A.
    Operator a = Operator::identity();
    for (const auto& e : model.measurement) {
        switch (e.kind) {
            case CircuitElement::Kind::BeamSplitter:
            case CircuitElement::Kind::HalfWavePlate:
                a = element_unitary(e) * a;
                break;
            case CircuitElement::Kind::PolarizingTap:
            case CircuitElement::Kind::FinalDetector: {
                const Operator m = a.adjoint() * e.projector * a;
                if (e.label) {
                    auto [it, fresh] = effects.try_emplace(*e.label, Effect{*e.label, m});
                    if (!fresh) it->second.op = it->second.op + m;
                }
                a = (Operator::identity() - e.projector) * a;
                break;
            }
        }
    }
    return effects;
}

std::map<std::string, double> detection_probabilities(const DetectionModel& model, const Ket& input) {
    if (!input.is_finite() || std::abs(input.norm_sq() - 1.0) >= 1e-9) {
        throw InvalidStateError("pure input must be normalized");
    }
    std::map<std::string, double> probs;
    for (const auto& [label, effect] : detection_effects(model)) {
        probs[label] = real_expectation(effect.op, input);
    }
    return probs;
}

std::map<std::string, double> detection_probabilities(const DetectionModel& model,
                                                      const Operator& density) {
    if (!is_density_operator(density, 1e-9)) {
        throw InvalidStateError("mixed input must be a valid density operator");
    }
    std::map<std::string, double> probs;
    for (const auto& [label, effect] : detection_effects(model)) {
        probs[label] = trace_pairing(effect.op, density);
    }
    return probs;
}

std::map<std::string, double> inferred_probabilities(const DetectionModel& model,
                                                     const std::map<std::string, double>& raw) {
    std::map<std::string, double> out = raw;
    if (model.inferred_label) {
        out[*model.inferred_label] = model.inferred_factor * raw.at("D+");
    }
    return out;
}

}  // namespace cheshire::optics
