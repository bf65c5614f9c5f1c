#pragma once

#include "qeclab/code.hpp"
#include "qeclab/gf2.hpp"
#include "qeclab/phase_poly.hpp"

#include <optional>
#include <vector>

namespace qeclab {

// CSS split of a stabilizer code: X-type and Z-type stabilizer supports plus
// pure-X logical representatives.
struct CssStructure {
    std::vector<BitVec> h_x; // X-stabilizer supports, reduced
    std::vector<BitVec> h_z; // Z-stabilizer supports, reduced
    std::vector<BitVec> logical_x; // k pure-X logical representatives
};

// Throws when the code is not a CSS stabilizer code.
CssStructure css_structure(const SubsystemCode& code);

struct TransversalAction {
    bool preserves_codespace = false;
    // when violated: index of the offending logical coset and two computational
    // basis strings in that coset with different phases
    std::uint64_t violating_coset = 0;
    std::uint64_t witness_a = 0, witness_b = 0;
    // when preserved: the induced logical gate
    PhasePolynomial logical;
    CliffordLevel level;
    std::vector<std::uint64_t> coset_values; // f_L(a) for a = 0..2^k-1
    int kappa = 1;
};

// Logical action of a transversal diagonal gate U = prod_j U_j on a CSS
// stabilizer code. U preserves the codespace iff f(x) = sum_j f_j(x_j) is
// constant on every coset L_X^T a + H_X^T u; the constant per logical class
// interpolates to the logical phase polynomial.
TransversalAction transversal_diagonal_logical_action(
    const SubsystemCode& code, const std::vector<PhasePolynomial>& per_qubit,
    int level_cap = 8);

} // namespace qeclab
