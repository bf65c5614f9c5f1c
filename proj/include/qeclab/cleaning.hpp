#pragma once

#include "qeclab/code.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace qeclab {

enum class LogicalKind { Bare, Dressed };

// l(R) for stabilizer codes: independent nontrivial logical classes with a
// representative supported on R. Throws for genuine subsystem codes.
std::size_t count_logical(const SubsystemCode& code, const Region& r);

// l_bare(R) = rank(C(G) ∩ P(R)) - rank(S ∩ P(R))
std::size_t count_bare(const SubsystemCode& code, const Region& r);
// l_dressed(R) = rank(C(S) ∩ P(R)) - rank(G ∩ P(R))
std::size_t count_dressed(const SubsystemCode& code, const Region& r);

// note the crossed definition: a bare-cleanable region supports no
// nontrivial dressed logical operator, and vice versa
bool is_bare_cleanable(const SubsystemCode& code, const Region& r);
bool is_dressed_cleanable(const SubsystemCode& code, const Region& r);

// erasure semantics: a lost set is recoverable iff it is bare-cleanable
bool is_correctable(const SubsystemCode& code, const Region& r);

// Concrete nontrivial logical representative supported on R, or nullopt
// when the corresponding count is zero. Deterministic witness.
std::optional<PauliOperator> logical_representative_on(const SubsystemCode& code,
                                                       const Region& r,
                                                       LogicalKind kind);

// Equivalent representative of P with trivial support on R, obtained by a
// multiplier from S (bare mode) or G (dressed mode); nullopt when no
// multiplier matches P's restriction.
std::optional<PauliOperator> clean_operator(const SubsystemCode& code,
                                            const PauliOperator& p, const Region& r,
                                            LogicalKind kind);

// true iff every gauge generator support intersects at most one of r1, r2
bool spatially_disjoint(const SubsystemCode& code, const Region& r1,
                        const Region& r2);

enum class RegionSampler { Balls, Subsets };

struct UnionCounterexample {
    Region r1, r2;
    PauliOperator witness;
};

struct UnionLemmaReport {
    LogicalKind kind = LogicalKind::Dressed;
    std::size_t pairs_tested = 0;
    std::size_t attempts = 0;
    std::vector<UnionCounterexample> counterexamples;
};

// Sample spatially disjoint pairs of regions that are each cleanable in the
// requested sense and test whether the union stays cleanable. For dressed
// cleanability this is the subsystem-code union lemma (no counterexamples
// expected over local gauge generators); the bare form may fail on codes
// whose stabilizer generators are non-local, and failures are reported,
// not thrown.
UnionLemmaReport verify_union_lemma(const SubsystemCode& code, LogicalKind kind,
                                    std::size_t pairs, std::uint64_t seed,
                                    RegionSampler sampler = RegionSampler::Balls,
                                    std::size_t sampler_size = 1);

} // namespace qeclab
