#include "cheshire/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <json.hpp>
#include <set>
#include <sstream>

#include "cheshire/catalog.hpp"
#include "cheshire/contextuality.hpp"
#include "cheshire/core.hpp"
#include "cheshire/optics.hpp"
#include "cheshire/sampler.hpp"
#include "cheshire/weakval.hpp"

namespace cheshire::cli {

namespace {

using nlohmann::json;

constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;

json complex_json(const Complex& c) { return json::array({c.real(), c.imag()}); }

json report_envelope(const std::string& command, json inputs, json results,
                     json provenance = json::object()) {
    provenance["tolerances"] = {{"identity", kTol}};
    return json{{"schema_version", "1"},
                {"command", command},
                {"inputs", std::move(inputs)},
                {"results", std::move(results)},
                {"provenance", std::move(provenance)}};
}

// Catalog name or inline "vec:re,im,re,im,re,im,re,im" in canonical ordering.
Ket parse_state(const std::string& spec, std::ostream& err) {
    if (spec.rfind("vec:", 0) != 0) return catalog::state(spec);
    std::vector<double> vals;
    std::stringstream ss(spec.substr(4));
    std::string tok;
    while (std::getline(ss, tok, ',')) vals.push_back(std::stod(tok));
    if (vals.size() != 8) {
        throw std::invalid_argument("inline state needs 8 comma-separated numbers, got " +
                                    std::to_string(vals.size()));
    }
    Ket k;
    for (std::size_t i = 0; i < kDim; ++i) k.amp[i] = Complex{vals[2 * i], vals[2 * i + 1]};
    const double norm = std::sqrt(k.norm_sq());
    if (norm <= 0.0) throw std::invalid_argument("inline state has zero norm");
    if (std::abs(norm - 1.0) > 1e-9) {
        err << "warning: inline state norm " << norm << " deviates from 1; normalizing\n";
    }
    return Complex{1.0 / norm} * k;
}

json table_json(const std::array<Complex, kDim * kDim>& coeff) {
    json rows = json::array();
    for (std::size_t n = 0; n < kDim; ++n) {
        json row = json::array();
        for (std::size_t m = 0; m < kDim; ++m) row.push_back(complex_json(coeff[n * kDim + m]));
        rows.push_back(row);
    }
    return rows;
}

void check_probabilities(const std::map<std::string, double>& probs) {
    double total = 0.0;
    for (const auto& [label, p] : probs) {
        if (!std::isfinite(p) || p < -kTol) {
            throw ValidationError("probability for '" + label + "' out of range");
        }
        total += p;
    }
    if (total > 1.0 + kTol) throw ValidationError("detector probabilities exceed 1");
}

struct Options {
    std::string pre = "E_CC";
    std::string post = "D+";
    std::vector<std::string> ops;
    std::string basis = "Bell";
    double p = 0.0;
    int sweep = -1;
    bool search = false;
    bool forbid_claims = false;
    std::string experiment = "baseline";
    std::uint64_t shots = 1000000;
    std::uint64_t seed = 0;
    unsigned chunks = 1;
    double sigma = 5.0;
    std::string claims_csv;
    std::string format = "json";
};

int cmd_weak_values(const Options& opt, std::ostream& out, std::ostream& err) {
    const Ket pre = parse_state(opt.pre, err);
    const Ket post = parse_state(opt.post, err);
    const auto sel = weakval::PrePostSelection::make(pre, post);

    std::vector<std::string> names = opt.ops;
    if (names.empty()) names = catalog::op_names();

    json values;
    for (const auto& name : names) values[name] = complex_json(weak_value(catalog::op(name), sel));
    json projectors;
    for (const auto& name : {"H1", "H2", "V1", "V2"}) {
        const Ket s = catalog::state(name);
        projectors[name] = complex_json(weak_value(outer_product(s, s), sel));
    }
    const Complex coh =
        weakval::coherence_weak_value(catalog::state("D2"), catalog::state("A2"), sel);

    json results = {{"weak_values", values},
                    {"projector_weak_values", projectors},
                    {"coherence_D2_A2", complex_json(coh)},
                    {"overlap", complex_json(sel.overlap)}};
    out << report_envelope("weak-values", {{"pre", opt.pre}, {"post", opt.post}}, results).dump(2)
        << "\n";
    return 0;
}

int cmd_decompose(const Options& opt, std::ostream& out, std::ostream& err) {
    const Ket pre = parse_state(opt.pre, err);
    const Ket post = parse_state(opt.post, err);
    const auto sel = weakval::PrePostSelection::make(pre, post);
    const auto t = weakval::transition_operator(sel);
    const Basis basis = catalog::basis(opt.basis);

    const auto table = weakval::decompose(t, basis);
    const Operator rebuilt = weakval::reconstruct(table);
    double recon_err = 0.0;
    for (std::size_t i = 0; i < kDim * kDim; ++i) {
        recon_err = std::max(recon_err, std::abs(rebuilt.m[i] - t.matrix.m[i]));
    }
    if (recon_err >= kTol) throw ValidationError("decomposition failed to reconstruct");

    // Table of the adjoint transition operator; its terms are the ones the
    // expansion of <f| ... |i> order displays.
    weakval::CoherenceTable adjoint = table;
    for (std::size_t n = 0; n < kDim; ++n)
        for (std::size_t m = 0; m < kDim; ++m) adjoint.at(n, m) = std::conj(table.at(m, n));

    json results = {{"basis", basis.name},
                    {"labels", basis.labels},
                    {"table", table_json(table.coeff)},
                    {"adjoint_table", table_json(adjoint.coeff)},
                    {"reconstruction_max_error", recon_err},
                    {"note",
                     "table expands |i><f|/<f|i>; adjoint_table expands its Hermitian "
                     "conjugate |f><i|/<i|f>"}};
    out << report_envelope("decompose",
                           {{"pre", opt.pre}, {"post", opt.post}, {"basis", opt.basis}}, results)
               .dump(2)
        << "\n";
    return 0;
}

json claim_probabilities_json(double p) {
    const auto probs =
        contextuality::claims_probabilities(contextuality::depolarized_preselection(p));
    return json{{"P_D2", probs.d2},
                {"P_Vplus", probs.v_plus},
                {"P_Phiplus", probs.phi_plus},
                {"P_Dplus", probs.d_plus}};
}

int cmd_claims(const Options& opt, std::ostream& out, std::ostream&) {
    json results = claim_probabilities_json(opt.p);
    results["noise_p"] = opt.p;
    out << report_envelope("claims", {{"p", opt.p}}, results).dump(2) << "\n";
    return 0;
}

int cmd_inequality(const Options& opt, std::ostream& out, std::ostream&) {
    if (opt.sweep >= 0) {
        const int n = std::max(opt.sweep, 1);
        if (opt.format == "csv") {
            out << "p,P_D2,P_Vplus,P_Phiplus,P_Dplus,margin\n";
            for (int i = 0; i <= n; ++i) {
                const double p = static_cast<double>(i) / n;
                const auto probs = contextuality::claims_probabilities(
                    contextuality::depolarized_preselection(p));
                out << p << "," << probs.d2 << "," << probs.v_plus << "," << probs.phi_plus << ","
                    << probs.d_plus << "," << contextuality::inequality_margin(p) << "\n";
            }
            return 0;
        }
        json rows = json::array();
        for (int i = 0; i <= n; ++i) {
            const double p = static_cast<double>(i) / n;
            json row = claim_probabilities_json(p);
            row["p"] = p;
            row["margin"] = contextuality::inequality_margin(p);
            rows.push_back(row);
        }
        json results = {{"sweep", rows}, {"threshold", contextuality::violation_threshold()}};
        out << report_envelope("inequality", {{"sweep", n}}, results).dump(2) << "\n";
        return 0;
    }
    const double margin = contextuality::inequality_margin(opt.p);
    json results = {{"p", opt.p},
                    {"margin", margin},
                    {"violated", margin < 0.0},
                    {"threshold", contextuality::violation_threshold()}};
    out << report_envelope("inequality", {{"p", opt.p}}, results).dump(2) << "\n";
    return 0;
}

int cmd_contexts(const Options& opt, std::ostream& out, std::ostream&) {
    const auto graph = contextuality::build_context_graph();
    json edges = json::array();
    for (const auto& [i, j] : graph.edges) {
        edges.push_back(json::array({graph.states[i], graph.states[j]}));
    }
    json contexts = json::array();
    for (const auto& ctx : graph.contexts) {
        json c = json::array();
        for (int s : ctx) c.push_back(graph.states[s]);
        contexts.push_back(c);
    }
    json results = {{"states", graph.states}, {"edges", edges}, {"contexts", contexts}};

    if (opt.search || opt.forbid_claims) {
        const auto found = opt.forbid_claims
                               ? contextuality::search_assignments_forbid_hexagon(graph)
                               : contextuality::search_assignments(graph);
        json assignments = json::array();
        for (const auto a : found.valid) {
            json states_on = json::array();
            for (std::size_t i = 0; i < graph.states.size(); ++i) {
                if (a >> i & 1u) states_on.push_back(graph.states[i]);
            }
            assignments.push_back(states_on);
        }
        results["search"] = {{"forbid_claims", opt.forbid_claims},
                             {"valid_count", found.valid.size()},
                             {"assignments", assignments}};
    }
    out << report_envelope("contexts",
                           {{"search", opt.search}, {"forbid_claims", opt.forbid_claims}}, results)
               .dump(2)
        << "\n";
    return 0;
}

int cmd_simulate(const Options& opt, std::ostream& out, std::ostream&) {
    const auto variant = optics::parse_variant(opt.experiment);
    check_probabilities(optics::detection_probabilities(
        optics::build_protocol(variant), contextuality::depolarized_preselection(opt.p)));
    const auto record = sampler::sample_counts(variant, opt.shots, opt.p, opt.seed, opt.chunks);

    if (opt.format == "csv") {
        out << "variant,label,count,shots,noise_p,seed\n";
        for (const auto& [label, count] : record.counts) {
            out << optics::variant_name(variant) << "," << label << "," << count << ","
                << record.shots << "," << record.noise_p << "," << record.seed << "\n";
        }
        out << optics::variant_name(variant) << ",undetected," << record.undetected << ","
            << record.shots << "," << record.noise_p << "," << record.seed << "\n";
        return 0;
    }

    json counts, estimates;
    for (const auto& [label, count] : record.counts) counts[label] = count;
    for (const auto& [label, est] : sampler::estimate(record)) {
        estimates[label] = {{"probability", est.probability},
                            {"standard_error", est.standard_error}};
    }
    json results = {{"variant", optics::variant_name(variant)},
                    {"shots", record.shots},
                    {"noise_p", record.noise_p},
                    {"counts", counts},
                    {"undetected", record.undetected},
                    {"estimates", estimates}};
    const auto model = optics::build_protocol(variant);
    if (model.inferred_label) {
        results["inferred"] = {{"label", *model.inferred_label},
                               {"factor", model.inferred_factor}};
    }
    json provenance = {{"seed", record.seed}, {"prng", sampler::kPrngName}};
    out << report_envelope("simulate",
                           {{"experiment", opt.experiment},
                            {"shots", opt.shots},
                            {"p", opt.p},
                            {"seed", opt.seed},
                            {"chunks", opt.chunks}},
                           results, provenance)
               .dump(2)
        << "\n";
    return 0;
}

int cmd_infer(const Options& opt, std::ostream& out, std::ostream&) {
    std::set<int> ids;
    if (!opt.claims_csv.empty()) {
        std::stringstream ss(opt.claims_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            const int id = std::stoi(tok);
            if (id < 1 || id > 3) throw std::invalid_argument("claim ids must be 1, 2, or 3");
            ids.insert(id);
        }
    }
    json results = {{"claims", std::vector<int>(ids.begin(), ids.end())},
                    {"survivors", contextuality::infer(ids)}};
    out << report_envelope("infer", {{"claims", opt.claims_csv}}, results).dump(2) << "\n";
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cheshire cat interferometer analysis toolkit"};
    app.require_subcommand(1);
    Options opt;

    auto* wv = app.add_subcommand("weak-values", "Weak values for a pre/postselection");
    wv->add_option("--pre", opt.pre, "Preselected state (catalog name or vec:...)");
    wv->add_option("--post", opt.post, "Postselected state");
    wv->add_option("--op", opt.ops, "Restrict to these catalog operators");

    auto* dec = app.add_subcommand("decompose", "Coherence decomposition of the transition operator");
    dec->add_option("--basis", opt.basis, "One of HV12, DA12, HVpm, Bell")->required();
    dec->add_option("--pre", opt.pre);
    dec->add_option("--post", opt.post);

    auto* cl = app.add_subcommand("claims", "Claim probabilities under depolarizing noise");
    cl->add_option("--p", opt.p, "Depolarizing strength")->check(CLI::Range(0.0, 1.0));

    auto* ineq = app.add_subcommand("inequality", "Noncontextuality inequality margin");
    ineq->add_option("--p", opt.p)->check(CLI::Range(0.0, 1.0));
    ineq->add_option("--sweep", opt.sweep, "Evaluate on a grid of N+1 points over [0, 1]");
    ineq->add_option("--format", opt.format)->check(CLI::IsMember({"json", "csv"}));

    auto* ctx = app.add_subcommand("contexts", "Hexagram context graph");
    ctx->add_flag("--search", opt.search, "Enumerate all 512 noncontextual assignments");
    ctx->add_flag("--forbid-claims", opt.forbid_claims,
                  "Force all six hexagon states to 0 (implies --search)");

    auto* sim = app.add_subcommand("simulate", "Seeded Monte Carlo detector counts");
    sim->add_option("--experiment", opt.experiment)
        ->check(CLI::IsMember({"baseline", "a", "b", "c"}))
        ->required();
    sim->add_option("--shots", opt.shots)->check(CLI::PositiveNumber)->required();
    sim->add_option("--p", opt.p)->check(CLI::Range(0.0, 1.0));
    sim->add_option("--seed", opt.seed, "PRNG seed (explicit for reproducibility)")->required();
    sim->add_option("--chunks", opt.chunks)->check(CLI::PositiveNumber);
    sim->add_option("--format", opt.format)->check(CLI::IsMember({"json", "csv"}));

    auto* inf = app.add_subcommand("infer", "Surviving product states for a set of claims");
    inf->add_option("--claims", opt.claims_csv, "Comma-separated claim ids, e.g. 1,2");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    try {
        if (wv->parsed()) return cmd_weak_values(opt, out, err);
        if (dec->parsed()) return cmd_decompose(opt, out, err);
        if (cl->parsed()) return cmd_claims(opt, out, err);
        if (ineq->parsed()) return cmd_inequality(opt, out, err);
        if (ctx->parsed()) return cmd_contexts(opt, out, err);
        if (sim->parsed()) return cmd_simulate(opt, out, err);
        if (inf->parsed()) return cmd_infer(opt, out, err);
    } catch (const ValidationError& e) {
        err << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace cheshire::cli
