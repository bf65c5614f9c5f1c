#pragma once

#include "qeclab/cleaning.hpp"
#include "qeclab/code.hpp"
#include "qeclab/geometry.hpp"
#include "qeclab/phase_poly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qeclab {

struct PartitionBound {
    bool ok = false;
    int bound = 0; // number of regions after R0; the guaranteed hierarchy level
    // on failure: which component obstructed and a concrete logical witness
    int failed_region = 0; // -1 for R0, else 1-based index into regions
    std::optional<PauliOperator> witness;
    std::vector<Region> fattened; // R_j^+ actually tested (after spreading)
};

// Checks R0 bare-cleanable and every fattened R_j+ = B(R_j, 2^{j-1} s_U)
// dressed-cleanable; on success any locality-preserving logical gate
// supported on the union (with spread bound s_U) acts within level m =
// regions.size(). Throws on a non-covering input; cleanability failures are
// reported with witnesses, not thrown.
PartitionBound level_bound_from_partition(const SubsystemCode& code, const Region& r0,
                                          const std::vector<Region>& regions,
                                          int spread = 0);

struct EquivalenceSample {
    std::string description;
    int commutator_level = 0;   // recursive group-commutator definition
    int conjugation_level = 0;  // usual conjugation definition
    bool agree = false;
};

struct EquivalenceReport {
    std::size_t samples = 0;
    std::size_t mismatches = 0;
    std::vector<EquivalenceSample> details; // mismatches plus a few exemplars
};

// Compares the commutator-recursion level against the conjugation definition
// (evaluated on truth tables in diagonal-times-Pauli normal form) on random
// Pauli products and diagonal gates over <= 3 qubits.
EquivalenceReport hierarchy_definition_equivalence(std::size_t samples,
                                                   std::uint64_t seed);

// conjugation-definition membership test for a diagonal gate given its
// phase table; exposed for tests
bool conjugation_member(const std::vector<std::uint64_t>& table, std::size_t n,
                        int kappa, int m);

} // namespace qeclab
