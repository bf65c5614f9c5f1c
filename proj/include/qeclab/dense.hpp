#pragma once

#include "qeclab/cleaning.hpp"
#include "qeclab/code.hpp"
#include "qeclab/phase_poly.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qeclab {

// candidate gate for dense verification: a Pauli or a diagonal gate
struct DenseGate {
    std::optional<PauliOperator> pauli;
    std::optional<PhasePolynomial> diagonal;
    LogicalKind claimed = LogicalKind::Bare;
    std::string description;

    static DenseGate bare(PauliOperator p, std::string what);
    static DenseGate dressed(PauliOperator p, std::string what);
};

struct DenseCandidateResult {
    std::string description;
    LogicalKind claimed = LogicalKind::Bare;
    bool passes = false;           // the defining identity, checked on matrices
    bool symplectic_verdict = false; // centralizer membership (Pauli candidates)
    bool agrees = true;            // dense verdict == symplectic verdict
    double deviation = 0.0;        // largest matrix-entry violation observed
};

struct DenseReport {
    std::vector<DenseCandidateResult> candidates;
    std::size_t closure_pairs = 0;      // conjugation closure samples
    std::size_t closure_failures = 0;
    std::size_t expectation_pairs = 0;  // matched-expectation samples
    std::size_t expectation_failures = 0;
    double max_deviation = 0.0;
};

// Explicit-matrix verification at n <= 10: builds the codespace projector
// from the stabilizer basis, checks the bare-operator commutator identity
// for bare candidates and the gauge-depolarization identity for dressed
// candidates, then samples pairs for the closure and expectation lemmas.
DenseReport dense_verify(const SubsystemCode& code,
                         const std::vector<DenseGate>& candidates,
                         std::size_t sample_pairs, std::uint64_t seed);

} // namespace qeclab
