#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cheshire/core.hpp"

// Interferometer model: the baseline Cheshire cat circuit and its three
// modified forms, compiled to unitary stages and detector taps. Measurement
// effects act on the preselected-state plane (the state just after BS1 and
// the half-wave plate); a tap removes amplitude from the interferometer and
// routes it to a named detector (or discards it when unlabeled).

namespace cheshire::optics {

enum class Variant { baseline, a, b, c };

std::string variant_name(Variant v);
Variant parse_variant(const std::string& name);

struct CircuitElement {
    enum class Kind { BeamSplitter, HalfWavePlate, PolarizingTap, FinalDetector };

    Kind kind;
    int path = 0;                      // HalfWavePlate placement
    Operator projector;                // PolarizingTap / FinalDetector mode
    std::optional<std::string> label;  // detector name; nullopt = discarded
};

struct Effect {
    std::string label;
    Operator op;
};

struct DetectionModel {
    Variant variant;
    std::vector<CircuitElement> preparation;  // BS1, HWP(2)
    std::vector<CircuitElement> measurement;  // taps, BS2, final detectors
    std::vector<std::string> detector_labels;

    // Variant c only: P(inferred_label) = inferred_factor * P(raw D+).
    std::optional<std::string> inferred_label;
    double inferred_factor = 1.0;
};

struct WrongElementKindError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidStateError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Unitary of a BeamSplitter or HalfWavePlate; throws WrongElementKindError
// for tap elements. Beamsplitter convention is real symmetric:
// |1> -> (|1>+|2>)/sqrt2, |2> -> (|1>-|2>)/sqrt2.
Operator element_unitary(const CircuitElement& element);

DetectionModel build_protocol(Variant variant);

// Runs the preparation stages on pol (x) |1>; the baseline |D> source yields
// |E_CC>.
Ket preselected_state(const DetectionModel& model, const std::array<Complex, 2>& source_pol);

// Effect operator per detector label, on the preselected plane:
// P(d) = <psi|M_d|psi> for pure input, Tr(M_d rho) for mixed input.
std::map<std::string, Effect> detection_effects(const DetectionModel& model);

// Raw detector probabilities. Input must be normalized (pure overload) or a
// valid density operator (mixed overload); throws InvalidStateError otherwise.
std::map<std::string, double> detection_probabilities(const DetectionModel& model, const Ket& input);
std::map<std::string, double> detection_probabilities(const DetectionModel& model,
                                                      const Operator& density);

// Applies the variant-c inference factor where configured; other variants
// return the raw probabilities unchanged.
std::map<std::string, double> inferred_probabilities(const DetectionModel& model,
                                                     const std::map<std::string, double>& raw);

}  // namespace cheshire::optics
