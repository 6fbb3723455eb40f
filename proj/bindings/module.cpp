#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <set>
#include <vector>

#include "cheshire/catalog.hpp"
#include "cheshire/contextuality.hpp"
#include "cheshire/core.hpp"
#include "cheshire/optics.hpp"
#include "cheshire/sampler.hpp"
#include "cheshire/weakval.hpp"

namespace py = pybind11;
using namespace cheshire;

namespace {

std::vector<Complex> ket_amplitudes(const Ket& k) {
    return {k.amp.begin(), k.amp.end()};
}

std::vector<std::vector<Complex>> operator_matrix(const Operator& op) {
    std::vector<std::vector<Complex>> rows(kDim);
    for (std::size_t i = 0; i < kDim; ++i)
        for (std::size_t j = 0; j < kDim; ++j) rows[i].push_back(op.at(i, j));
    return rows;
}

weakval::PrePostSelection selection(const std::string& pre, const std::string& post) {
    return weakval::PrePostSelection::make(catalog::state(pre), catalog::state(post));
}

}  // namespace

PYBIND11_MODULE(_cheshire, m) {
    m.doc() = "Cheshire cat interferometer and contextuality toolkit";

    m.def("state", [](const std::string& name) { return ket_amplitudes(catalog::state(name)); },
          py::arg("name"), "Amplitudes of a catalog state in (H1, H2, V1, V2) ordering");

    m.def("operator_matrix",
          [](const std::string& name) { return operator_matrix(catalog::op(name)); },
          py::arg("name"));

    m.def("state_names", [] { return catalog::state_names(); });
    m.def("operator_names", [] { return catalog::op_names(); });
    m.def("basis_names", [] { return catalog::basis_names(); });

    m.def(
        "weak_value",
        [](const std::string& op, const std::string& pre, const std::string& post) {
            return weak_value(catalog::op(op), selection(pre, post));
        },
        py::arg("op"), py::arg("pre") = "E_CC", py::arg("post") = "D+");

    m.def(
        "projector_weak_value",
        [](const std::string& state, const std::string& pre, const std::string& post) {
            const Ket s = catalog::state(state);
            return weak_value(outer_product(s, s), selection(pre, post));
        },
        py::arg("state"), py::arg("pre") = "E_CC", py::arg("post") = "D+");

    m.def(
        "coherence_weak_value",
        [](const std::string& ket, const std::string& bra, const std::string& pre,
           const std::string& post) {
            return weakval::coherence_weak_value(catalog::state(ket), catalog::state(bra),
                                                 selection(pre, post));
        },
        py::arg("ket"), py::arg("bra"), py::arg("pre") = "E_CC", py::arg("post") = "D+");

    m.def(
        "decompose",
        [](const std::string& basis, const std::string& pre, const std::string& post) {
            const auto t = weakval::transition_operator(selection(pre, post));
            const auto b = catalog::basis(basis);
            const auto table = weakval::decompose(t, b);
            std::vector<std::vector<Complex>> rows(kDim);
            for (std::size_t n = 0; n < kDim; ++n)
                for (std::size_t m2 = 0; m2 < kDim; ++m2) rows[n].push_back(table.at(n, m2));
            py::dict out;
            out["basis"] = b.name;
            out["labels"] = std::vector<std::string>(b.labels.begin(), b.labels.end());
            out["table"] = rows;
            return out;
        },
        py::arg("basis"), py::arg("pre") = "E_CC", py::arg("post") = "D+");

    m.def(
        "detection_probabilities",
        [](const std::string& variant, double p) {
            const auto model = optics::build_protocol(optics::parse_variant(variant));
            const auto raw = optics::detection_probabilities(
                model, contextuality::depolarized_preselection(p));
            return optics::inferred_probabilities(model, raw);
        },
        py::arg("variant"), py::arg("p") = 0.0);

    m.def(
        "claims_probabilities",
        [](double p) {
            const auto probs =
                contextuality::claims_probabilities(contextuality::depolarized_preselection(p));
            py::dict out;
            out["P_D2"] = probs.d2;
            out["P_Vplus"] = probs.v_plus;
            out["P_Phiplus"] = probs.phi_plus;
            out["P_Dplus"] = probs.d_plus;
            return out;
        },
        py::arg("p") = 0.0);

    m.def("inequality_margin", &contextuality::inequality_margin, py::arg("p"));
    m.def("violation_threshold", &contextuality::violation_threshold);

    m.def(
        "infer",
        [](const std::vector<int>& ids) {
            return contextuality::infer(std::set<int>(ids.begin(), ids.end()));
        },
        py::arg("claims"));

    m.def("contexts", [] {
        const auto g = contextuality::build_context_graph();
        std::vector<std::pair<std::string, std::string>> edges;
        for (const auto& [i, j] : g.edges) edges.emplace_back(g.states[i], g.states[j]);
        std::vector<std::vector<std::string>> contexts;
        for (const auto& ctx : g.contexts) {
            std::vector<std::string> names;
            for (int s : ctx) names.push_back(g.states[s]);
            contexts.push_back(names);
        }
        py::dict out;
        out["states"] = g.states;
        out["edges"] = edges;
        out["contexts"] = contexts;
        return out;
    });

    m.def(
        "count_assignments",
        [](bool forbid_hexagon) {
            const auto g = contextuality::build_context_graph();
            const auto r = forbid_hexagon ? contextuality::search_assignments_forbid_hexagon(g)
                                          : contextuality::search_assignments(g);
            return r.valid.size();
        },
        py::arg("forbid_hexagon") = false);

    m.def(
        "sample_counts",
        [](const std::string& variant, std::uint64_t shots, double p, std::uint64_t seed,
           unsigned chunks) {
            const auto rec =
                sampler::sample_counts(optics::parse_variant(variant), shots, p, seed, chunks);
            py::dict out;
            out["variant"] = variant;
            out["shots"] = rec.shots;
            out["noise_p"] = rec.noise_p;
            out["seed"] = rec.seed;
            out["counts"] = rec.counts;
            out["undetected"] = rec.undetected;
            out["prng"] = sampler::kPrngName;
            return out;
        },
        py::arg("variant"), py::arg("shots"), py::arg("p") = 0.0, py::arg("seed") = 0,
        py::arg("chunks") = 1);
}
