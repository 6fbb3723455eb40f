#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "cheshire/optics.hpp"

// Seeded Monte Carlo detector counts, multinomial over the exact analytic
// probabilities, with frequency estimates and a statistical test of the
// noncontextuality inequality.

namespace cheshire::sampler {

inline constexpr const char* kPrngName = "mt19937_64";

struct CountRecord {
    optics::Variant variant;
    std::uint64_t shots;
    double noise_p;
    std::uint64_t seed;
    std::map<std::string, std::uint64_t> counts;  // raw detector counts
    std::uint64_t undetected;
};

// Draws `shots` samples from the exact multinomial of the variant's detector
// probabilities on the depolarized preselection. Deterministic in
// (variant, shots, noise_p, seed, chunks); chunk sub-streams are seeded from
// (seed, chunk index).
CountRecord sample_counts(optics::Variant variant, std::uint64_t shots, double noise_p,
                          std::uint64_t seed, unsigned chunks = 1);

struct Estimate {
    double probability;
    double standard_error;  // sqrt(p(1-p)/shots)
};

std::map<std::string, Estimate> estimate(const CountRecord& record);

enum class Verdict { violated, not_violated, inconclusive };

std::string verdict_name(Verdict v);

struct InequalityTestResult {
    Verdict verdict;
    double margin;          // empirical [P(V+)+P(D2)+P(Phi+)] - P(D+)
    double combined_error;  // standard errors in quadrature
};

// All four records must share noise_p. The variant-c inference factor is
// applied to its raw D+ estimate. Verdict thresholds at +-sigma multiples of
// the combined error (default 5).
InequalityTestResult inequality_test(const CountRecord& rec_a, const CountRecord& rec_b,
                                     const CountRecord& rec_c, const CountRecord& rec_baseline,
                                     double sigma = 5.0);

}  // namespace cheshire::sampler
