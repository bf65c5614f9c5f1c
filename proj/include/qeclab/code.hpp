#pragma once

#include "qeclab/pauli.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qeclab {

// Subset of qubit indices; the argument of every cleanability query.
class Region {
  public:
    Region() = default;
    // sorted, duplicates rejected
    static Region from_indices(std::vector<std::size_t> qubits);
    static Region full(std::size_t n);

    const std::vector<std::size_t>& qubits() const { return qubits_; }
    std::size_t size() const { return qubits_.size(); }
    bool empty() const { return qubits_.empty(); }
    bool contains(std::size_t q) const;

    Region complement(std::size_t n) const;
    static Region set_union(const Region& a, const Region& b);
    bool is_subset_of(const Region& o) const;

    // membership mask over n qubits
    BitVec mask(std::size_t n) const;

  private:
    std::vector<std::size_t> qubits_;
};

// Hypercubic lattice data: per-qubit integer coordinates, Chebyshev metric
// with optional periodic wrap, and the supports of the (local) gauge
// generators the code was built from.
struct LatticeGeometry {
    int dim = 0;
    int extent = 0; // coordinate range [0, extent) per axis
    std::vector<bool> periodic;
    // flattened n x dim coordinates
    std::vector<int> coords;
    std::vector<std::vector<std::size_t>> generator_supports;
    int xi = 0; // declared bound on generator support diameter

    std::size_t num_qubits() const {
        return dim == 0 ? 0 : coords.size() / std::size_t(dim);
    }
    int coord(std::size_t q, int axis) const {
        return coords[q * std::size_t(dim) + std::size_t(axis)];
    }
    int axis_distance(int a, int b, int axis) const;
    int distance(std::size_t q1, std::size_t q2) const;
    int support_diameter(const std::vector<std::size_t>& support) const;
};

// Gauge group plus everything derived from it per the canonical
// gauge/stabilizer/logical decomposition.
class SubsystemCode {
  public:
    std::size_t num_qubits() const { return n_; }
    std::size_t num_logical() const { return k_; }
    bool is_stabilizer_code() const { return stabilizer_.size() == gauge_.size(); }
    bool has_geometry() const { return geometry_.has_value(); }

    const std::vector<PauliOperator>& gauge_generators() const {
        return gauge_generators_;
    }
    const SymplecticBasis& gauge() const { return gauge_; }
    const SymplecticBasis& stabilizer() const { return stabilizer_; }
    const SymplecticBasis& bare_logicals() const { return bare_; }
    const SymplecticBasis& dressed_logicals() const { return dressed_; }
    const LatticeGeometry& geometry() const;
    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    std::size_t gauge_rank() const { return gauge_.size(); }
    std::size_t stabilizer_rank() const { return stabilizer_.size(); }

    friend SubsystemCode derive_structure(std::vector<PauliOperator> gauge_generators,
                                          std::optional<LatticeGeometry> geometry,
                                          std::string name);

  private:
    std::size_t n_ = 0;
    std::size_t k_ = 0;
    std::string name_;
    std::vector<PauliOperator> gauge_generators_; // as given; locality lives here
    SymplecticBasis gauge_;                       // reduced
    SymplecticBasis stabilizer_;                  // reduced, '+'-signed
    SymplecticBasis bare_;                        // C(G) mod S representatives
    SymplecticBasis dressed_;                     // C(S) mod G representatives
    std::optional<LatticeGeometry> geometry_;
};

// stabilizer = center(gauge); bare = C(G)/S; dressed = C(S)/G;
// k = n - s - (g - s)/2. Throws when an abelian generator set multiplies
// to -identity (no consistent stabilizer group exists).
SubsystemCode derive_structure(std::vector<PauliOperator> gauge_generators,
                               std::optional<LatticeGeometry> geometry = std::nullopt,
                               std::string name = "");

// Code families used throughout the test and acceptance suites. Qubit
// indexing conventions are pinned in docs/codes.md and by golden tests.
SubsystemCode build_toric(int L);
SubsystemCode build_reed_muller(int m);
SubsystemCode build_bacon_shor(int L);
SubsystemCode build_haah_cubic(int L);

void save_code(const SubsystemCode& code, const std::string& path);
SubsystemCode load_code(const std::string& path);

// in-memory form of the interchange format, used by save/load and the CLI
std::string encode_code(const SubsystemCode& code);
SubsystemCode decode_code(const std::string& text);

} // namespace qeclab
