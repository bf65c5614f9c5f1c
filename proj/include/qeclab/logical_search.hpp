#pragma once

#include "qeclab/cleaning.hpp"
#include "qeclab/code.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qeclab {

struct DistanceResult {
    bool exact = false;     // false: only the lower bound d >= w_max + 1 is known
    std::size_t distance = 0; // exact distance, or w_max + 1 as a lower bound
    std::optional<PauliOperator> witness; // minimal-weight dressed logical
};

// Exact code distance by weight-ordered enumeration: supports in
// lexicographic order, letters X < Y < Z per position; first hit is the
// canonical witness. Candidates must commute with the stabilizer group and
// lie outside the gauge group.
DistanceResult distance(const SubsystemCode& code, std::size_t w_max);

// Constructive counterpart of count_bare/count_dressed: a verified logical
// representative supported on R, or nullopt.
std::optional<PauliOperator> find_logical_in_region(const SubsystemCode& code,
                                                    const Region& r,
                                                    LogicalKind kind);

struct Tube {
    int axis = 0;                 // extended direction
    std::vector<int> offsets;     // window start per non-axis dimension
    Region region;
};

struct StringSearchResult {
    bool found = false;
    std::optional<Tube> tube;
    std::optional<PauliOperator> witness;
    std::size_t tubes_checked = 0;
};

// Enumerates all axis-aligned tubes of cross-section w^(D-1) spanning the
// lattice and reports the first tube supporting a nontrivial dressed
// logical. A false result certifies every tube is bare-cleanable.
StringSearchResult has_string_logical(const SubsystemCode& code, int width);

// enumeration helper shared with partitions and reports
std::vector<Tube> enumerate_tubes(const LatticeGeometry& geo, int width);

struct FamilyPoint {
    int L = 0;
    std::size_t d = 0;
};

struct DistanceBoundReport {
    int dim = 0;
    int level = 0;        // claimed hierarchy level m of the implemented gate
    int exponent = 0;     // D + 1 - m
    std::vector<double> ratios; // d / L^exponent per size, ascending L
    double fitted_constant = 0; // max ratio
    bool consistent = false;    // ratios non-increasing within slack
};

// Monotone consistency check of measured distances against d <= c * L^(D+1-m).
DistanceBoundReport distance_bound_check(std::vector<FamilyPoint> points, int dim,
                                         int level);

} // namespace qeclab
