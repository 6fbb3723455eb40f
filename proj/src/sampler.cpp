#include "cheshire/sampler.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "cheshire/contextuality.hpp"

namespace cheshire::sampler {

namespace {

// Conditional-binomial multinomial draw: deterministic in the engine stream.
std::vector<std::uint64_t> draw_multinomial(std::mt19937_64& rng, std::uint64_t shots,
                                            const std::vector<double>& probs) {
    std::vector<std::uint64_t> counts(probs.size(), 0);
    std::uint64_t remaining = shots;
    double mass = 1.0;
    for (std::size_t i = 0; i < probs.size() && remaining > 0; ++i) {
        const double p = (mass > 0.0) ? std::min(1.0, std::max(0.0, probs[i] / mass)) : 0.0;
        std::uint64_t c = 0;
        if (p >= 1.0) {
            c = remaining;
        } else if (p > 0.0) {
            std::binomial_distribution<std::uint64_t> dist(remaining, p);
            c = dist(rng);
        }
        counts[i] = c;
        remaining -= c;
        mass -= probs[i];
    }
    return counts;
}

}  // namespace

CountRecord sample_counts(optics::Variant variant, std::uint64_t shots, double noise_p,
                          std::uint64_t seed, unsigned chunks) {
    if (shots < 1) throw std::invalid_argument("shots must be >= 1");
    if (chunks < 1) throw std::invalid_argument("chunks must be >= 1");
    if (noise_p < 0.0 || noise_p > 1.0) throw std::invalid_argument("noise_p must lie in [0, 1]");

    const auto model = optics::build_protocol(variant);
    const auto rho = contextuality::depolarized_preselection(noise_p);
    const auto probs = optics::detection_probabilities(model, rho);

    std::vector<std::string> labels;
    std::vector<double> p;
    for (const auto& [label, prob] : probs) {
        labels.push_back(label);
        p.push_back(prob);
    }

    CountRecord record{variant, shots, noise_p, seed, {}, 0};
    for (const auto& label : labels) record.counts[label] = 0;

    std::uint64_t done = 0;
    for (unsigned chunk = 0; chunk < chunks; ++chunk) {
        const std::uint64_t chunk_shots =
            (chunk + 1 == chunks) ? shots - done : shots / chunks;
        done += chunk_shots;
        if (chunk_shots == 0) continue;
        std::seed_seq seq{seed, static_cast<std::uint64_t>(chunk)};
        std::mt19937_64 rng(seq);
        const auto counts = draw_multinomial(rng, chunk_shots, p);
        for (std::size_t i = 0; i < labels.size(); ++i) record.counts[labels[i]] += counts[i];
    }

    std::uint64_t detected = 0;
    for (const auto& [label, c] : record.counts) detected += c;
    record.undetected = shots - detected;
    return record;
}

std::map<std::string, Estimate> estimate(const CountRecord& record) {
    std::map<std::string, Estimate> out;
    const double n = static_cast<double>(record.shots);
    for (const auto& [label, c] : record.counts) {
        const double p_hat = static_cast<double>(c) / n;
        out[label] = Estimate{p_hat, std::sqrt(p_hat * (1.0 - p_hat) / n)};
    }
    return out;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::violated: return "violated";
        case Verdict::not_violated: return "not_violated";
        case Verdict::inconclusive: return "inconclusive";
    }
    throw std::logic_error("unreachable");
}

InequalityTestResult inequality_test(const CountRecord& rec_a, const CountRecord& rec_b,
                                     const CountRecord& rec_c, const CountRecord& rec_baseline,
                                     double sigma) {
    for (const CountRecord* r : {&rec_b, &rec_c, &rec_baseline}) {
        if (r->noise_p != rec_a.noise_p) {
            throw std::invalid_argument("all records must share the same noise_p");
        }
    }
    if (rec_a.variant != optics::Variant::a || rec_b.variant != optics::Variant::b ||
        rec_c.variant != optics::Variant::c || rec_baseline.variant != optics::Variant::baseline) {
        throw std::invalid_argument("records must come from variants a, b, c, baseline in order");
    }

    const Estimate d2 = estimate(rec_a).at("D2");
    const Estimate v_plus = estimate(rec_b).at("V+");
    const Estimate c_raw = estimate(rec_c).at("D+");
    const Estimate d_plus = estimate(rec_baseline).at("D+");

    const double factor = optics::build_protocol(optics::Variant::c).inferred_factor;
    const double phi_plus = factor * c_raw.probability;
    const double phi_plus_err = factor * c_raw.standard_error;

    const double margin = (v_plus.probability + d2.probability + phi_plus) - d_plus.probability;
    const double err = std::sqrt(v_plus.standard_error * v_plus.standard_error +
                                 d2.standard_error * d2.standard_error +
                                 phi_plus_err * phi_plus_err +
                                 d_plus.standard_error * d_plus.standard_error);

    Verdict verdict = Verdict::inconclusive;
    if (margin < -sigma * err) verdict = Verdict::violated;
    else if (margin > sigma * err) verdict = Verdict::not_violated;
    return InequalityTestResult{verdict, margin, err};
}

}  // namespace cheshire::sampler
