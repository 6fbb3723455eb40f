#include "cheshire/contextuality.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

#include "cheshire/catalog.hpp"
#include "cheshire/optics.hpp"

namespace cheshire::contextuality {

const std::array<Claim, 3>& claims() {
    static const std::array<Claim, 3> kClaims = {
        Claim{1,
              "{2}",
              {"D2", "A2"},
              {{{"D2", "E_CC"}, {"D+", "A2"}}},
              {"H2", "V2"}},
        Claim{2,
              "{V}",
              {"V+", "V-"},
              {{{"V+", "E_CC"}, {"D+", "V-"}}},
              {"V1", "V2"}},
        Claim{3,
              "{Phi}",
              {"Phi+", "Phi-"},
              {{{"Phi+", "E_CC"}, {"D+", "Phi-"}}},
              {"H1", "V2"}},
    };
    return kClaims;
}

namespace {

ClaimProbabilities from_probability_maps(
    const std::function<std::map<std::string, double>(const optics::DetectionModel&)>& eval) {
    ClaimProbabilities out{};
    {
        const auto model = optics::build_protocol(optics::Variant::a);
        out.d2 = eval(model).at("D2");
    }
    {
        const auto model = optics::build_protocol(optics::Variant::b);
        out.v_plus = eval(model).at("V+");
    }
    {
        const auto model = optics::build_protocol(optics::Variant::c);
        out.phi_plus = optics::inferred_probabilities(model, eval(model)).at("Phi+");
    }
    {
        const auto model = optics::build_protocol(optics::Variant::baseline);
        out.d_plus = eval(model).at("D+");
    }
    return out;
}

}  // namespace

ClaimProbabilities claims_probabilities(const Ket& input) {
    return from_probability_maps([&](const optics::DetectionModel& m) {
        return optics::detection_probabilities(m, input);
    });
}

ClaimProbabilities claims_probabilities(const Operator& density) {
    return from_probability_maps([&](const optics::DetectionModel& m) {
        return optics::detection_probabilities(m, density);
    });
}

Operator depolarized_preselection(double p) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("noise parameter must lie in [0, 1]");
    const Ket e_cc = catalog::state("E_CC");
    return Complex{1.0 - p} * outer_product(e_cc, e_cc) +
           Complex{p / 4.0} * Operator::identity();
}

std::vector<std::string> infer(const std::set<int>& claim_ids) {
    std::vector<std::string> survivors = {"H1", "H2", "V1", "V2"};
    for (const Claim& c : claims()) {
        if (!claim_ids.count(c.id)) continue;
        std::erase_if(survivors, [&](const std::string& s) {
            return std::find(c.eliminated_product_states.begin(), c.eliminated_product_states.end(),
                             s) != c.eliminated_product_states.end();
        });
    }
    return survivors;
}

ContextGraph build_context_graph() {
    ContextGraph g;
    g.states = {"H1", "H2", "V1", "D2", "A2", "V+", "V-", "Phi+", "Phi-"};
    for (const auto& name : g.states) g.kets.push_back(catalog::state(name));

    const int n = static_cast<int>(g.states.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (std::abs(inner_product(g.kets[i], g.kets[j])) < kTol) g.edges.emplace_back(i, j);
        }

    auto orthogonal = [&](int i, int j) {
        const auto e = std::minmax(i, j);
        return std::find(g.edges.begin(), g.edges.end(), std::pair<int, int>(e.first, e.second)) !=
               g.edges.end();
    };

    // All C(9,4) subsets; a context is a fully orthogonal 4-set (and hence a
    // complete basis of the 4-dim space).
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    const std::array<int, 4> s = {a, b, c, d};
                    bool ok = true;
                    for (int i = 0; i < 4 && ok; ++i)
                        for (int j = i + 1; j < 4 && ok; ++j) ok = orthogonal(s[i], s[j]);
                    if (ok) g.contexts.push_back(s);
                }
    return g;
}

SearchResult search_assignments(const ContextGraph& graph,
                                const std::vector<std::string>& forced_zero) {
    const int n = static_cast<int>(graph.states.size());
    Assignment forced_mask = 0;
    for (const auto& name : forced_zero) {
        const auto it = std::find(graph.states.begin(), graph.states.end(), name);
        if (it == graph.states.end()) {
            throw std::invalid_argument("unknown graph state '" + name + "'");
        }
        forced_mask |= Assignment(1u << (it - graph.states.begin()));
    }

    SearchResult result;
    for (Assignment a = 0; a < (1u << n); ++a) {
        if (a & forced_mask) continue;
        bool ok = true;
        for (const auto& [i, j] : graph.edges) {
            if ((a >> i & 1u) && (a >> j & 1u)) {
                ok = false;
                break;
            }
        }
        for (const auto& ctx : graph.contexts) {
            if (!ok) break;
            int ones = 0;
            for (int s : ctx) ones += (a >> s) & 1u;
            ok = (ones == 1);
        }
        if (ok) result.valid.push_back(a);
    }
    return result;
}

SearchResult search_assignments_forbid_hexagon(const ContextGraph& graph) {
    return search_assignments(graph, {"D2", "A2", "V+", "V-", "Phi+", "Phi-"});
}

double inequality_margin(double p) {
    const ClaimProbabilities probs = claims_probabilities(depolarized_preselection(p));
    return (probs.v_plus + probs.d2 + probs.phi_plus) - probs.d_plus;
}

double violation_threshold() {
    double lo = 0.0, hi = 1.0;
    if (inequality_margin(lo) >= 0.0 || inequality_margin(hi) <= 0.0) {
        throw std::logic_error("margin does not bracket a sign change on [0, 1]");
    }
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        (inequality_margin(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace cheshire::contextuality
