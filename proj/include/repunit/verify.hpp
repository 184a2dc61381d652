// Runs every structural and oracle check against a built resolution and
// reports them under stable names, for both the CLI and the tests.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "repunit/complex.hpp"
#include "repunit/types.hpp"

namespace repunit {

struct VerifyOptions {
    std::uint32_t prime = 32003;
    int trials = 5;
    // Extra scan distance past the largest shift for the homology
    // oracle; defaults to the largest generator.
    std::optional<Int> margin;
    std::uint64_t seed = 20250815;
};

struct NamedCheck {
    std::string name;
    CheckReport report;
};

/// The full check battery, in a fixed order:
///   complex, homogeneity, minimality, betti-counts, pseudo-frobenius,
///   betti-oracle, hilbert-series, generic-rank.
/// Check failures come back in the reports; malformed inputs and broken
/// internal identities still throw.
std::vector<NamedCheck> run_all_checks(const GradedComplex& gc,
                                       const VerifyOptions& options = {});

bool all_passed(const std::vector<NamedCheck>& checks);

}  // namespace repunit
