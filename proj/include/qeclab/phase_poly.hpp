#pragma once

#include "qeclab/pauli.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qeclab {

struct CliffordLevel {
    int value = 0;
    bool capped = false; // true: level exceeds the cap, value holds the cap

    bool operator==(const CliffordLevel& o) const {
        return value == o.value && capped == o.capped;
    }
};

// Diagonal gate U|x> = omega^{f(x)} |x> with omega = exp(i*pi / 2^(kappa-1))
// and f an integer multilinear polynomial with coefficients mod 2^kappa.
class PhasePolynomial {
  public:
    using Monomial = std::vector<std::size_t>; // sorted variable indices; {} = constant

    PhasePolynomial() = default;
    PhasePolynomial(std::size_t n, int kappa);

    std::size_t num_qubits() const { return n_; }
    int kappa() const { return kappa_; }
    std::uint64_t modulus() const { return std::uint64_t(1) << kappa_; }

    const std::map<Monomial, std::uint64_t>& terms() const { return terms_; }
    bool is_constant() const;
    std::uint64_t constant_term() const;

    // coeff reduced mod 2^kappa; zero coefficients are erased
    void add_term(Monomial m, std::uint64_t coeff);
    std::uint64_t coefficient(const Monomial& m) const;

    PhasePolynomial plus(const PhasePolynomial& o) const;
    // same gate expressed at a larger modulus (coefficients scaled)
    PhasePolynomial embedded(int new_kappa) const;

    std::uint64_t evaluate(std::uint64_t assignment_mask) const;
    // truth table over all 2^n assignments (n <= 24 guard)
    std::vector<std::uint64_t> truth_table() const;
    static PhasePolynomial from_truth_table(std::size_t n, int kappa,
                                            const std::vector<std::uint64_t>& values);

    // canonical text form used for memo keys and reports
    std::string to_string() const;

  private:
    std::size_t n_ = 0;
    int kappa_ = 1;
    std::map<Monomial, std::uint64_t> terms_;
};

// Delta_j f (x) = f(x ^ e_j) - f(x) mod 2^kappa, the phase polynomial of the
// group commutator of the gate with X_j.
PhasePolynomial finite_difference(const PhasePolynomial& f, std::size_t j);

// 0 for phase * identity, 1 otherwise
CliffordLevel pauli_level(const PauliOperator& p);

// Exact hierarchy level of a diagonal gate: constants sit at level 0 and
// level(f) = 1 + max_j level(Delta_j f). Only X-type commutators constrain a
// diagonal gate, so the recursion over single-qubit differences is exact.
CliffordLevel diagonal_level(const PhasePolynomial& f, int cap = 8);

} // namespace qeclab
