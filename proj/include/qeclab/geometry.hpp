#pragma once

#include "qeclab/code.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qeclab {

// B(R, r): R plus every qubit within Chebyshev distance r of it
Region neighborhood(const LatticeGeometry& geo, const Region& r, int radius);

// connected components under Chebyshev adjacency (distance <= 1)
std::vector<Region> connected_components(const LatticeGeometry& geo, const Region& r);

// Constant-depth circuit skeleton: per layer, a list of gate supports.
struct LocalCircuit {
    std::vector<std::vector<std::vector<std::size_t>>> layers;

    std::size_t depth() const { return layers.size(); }
};

void validate_circuit(const LocalCircuit& c, std::size_t n);

// light-cone bound on the spread: sum over layers of the largest gate
// diameter in the layer; supp(U A U+) is contained in B(supp(A), bound)
int circuit_spread(const LatticeGeometry& geo, const LocalCircuit& c);

// worst-case support of a conjugated operator pushed through the layers
Region propagate_support(const LocalCircuit& c, const Region& start, std::size_t n);

struct Partition {
    Region r0;                  // bare-cleanable candidate
    std::vector<Region> regions; // dressed-cleanable candidates, ordered
    std::map<std::string, std::string> metadata;
};

// every qubit in r0 or some region
bool covers_all(const Partition& p, std::size_t n);

// Fattened hyper-cubic tiling with tile size t (in lattice coordinates):
// R_0 collects qubits near tile corners in every axis, R_m (0 < m < D) those
// near exactly D-m tile hyperplanes, R_D the remainder. widths[m] is the
// fattening half-width used for R_m; empty widths pick a default that keeps
// distinct components farther apart than the generator diameter.
Partition fattened_tiling(const LatticeGeometry& geo, int t,
                          std::vector<int> widths = {});

// Cover by D-q+1 stacked band families, each presented as a union of
// parallel q-dimensional slabs (orientation cycling through the non-stacking
// axes, offsets distinct per region).
Partition tube_partition(const LatticeGeometry& geo, int q);

struct RandomCellResult {
    bool ok = false;
    Region r0;                        // union of the chosen balls
    std::vector<std::vector<int>> centers; // ball centers, cell-major order
    std::vector<std::size_t> empty_cells;  // cells with no fully-lost ball
    int cell_side = 0;
    std::vector<int> cells_per_axis;
    int ball_radius = 0;
};

// Theorem-4-style construction: sample a loss set at rate p0, split the
// lattice into cells of volume ~ c*log(n), pick one fully-lost ball of
// radius r per cell (pairwise separation > xi). Failure lists empty cells;
// the caller owns the retry policy.
RandomCellResult random_cell_region(const LatticeGeometry& geo, double p0,
                                    int ball_radius, double cell_constant,
                                    std::uint64_t seed);

// Fattened skeleton partition anchored on the sampled ball centers: R0 is
// the (bare) ball union, R_1..R_D fatten the m-dimensional faces of the
// skewed tiling that connects neighbouring centers.
Partition skewed_tiling_from_balls(const LatticeGeometry& geo,
                                   const RandomCellResult& balls, int width = 1);

} // namespace qeclab
