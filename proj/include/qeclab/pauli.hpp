#pragma once

#include "qeclab/bitvec.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qeclab {

// n-qubit Pauli operator stored as P = i^phase * X^x * Z^z, phase mod 4.
// Under this convention Y = iXZ, so the letter Y contributes one unit of
// phase on top of its x/z bits.
class PauliOperator {
  public:
    PauliOperator() = default;
    explicit PauliOperator(std::size_t n) : x_(n), z_(n), phase_(0) {}
    PauliOperator(BitVec x, BitVec z, int phase);

    static PauliOperator identity(std::size_t n) { return PauliOperator(n); }
    // single-qubit letters embedded at qubit q
    static PauliOperator single_x(std::size_t n, std::size_t q);
    static PauliOperator single_z(std::size_t n, std::size_t q);
    static PauliOperator single_y(std::size_t n, std::size_t q);

    std::size_t num_qubits() const { return x_.size(); }
    const BitVec& x() const { return x_; }
    const BitVec& z() const { return z_; }
    int phase() const { return phase_; }

    bool x_bit(std::size_t q) const { return x_.get(q); }
    bool z_bit(std::size_t q) const { return z_.get(q); }
    void set_x(std::size_t q, bool v) { x_.set(q, v); }
    void set_z(std::size_t q, bool v) { z_.set(q, v); }
    void set_phase(int p) { phase_ = ((p % 4) + 4) & 3; }

    bool is_identity() const { return !x_.any() && !z_.any(); }
    bool is_identity_up_to_phase() const { return is_identity(); }

    std::size_t weight() const;
    std::vector<std::size_t> support() const;

    // canonical sign: the operator written as '+' followed by letters,
    // i.e. phase = (number of Y letters) mod 4
    PauliOperator sign_normalized() const;

    std::string to_string() const;
    static PauliOperator from_string(const std::string& s);

    bool equals_up_to_phase(const PauliOperator& o) const {
        return x_ == o.x_ && z_ == o.z_;
    }
    bool operator==(const PauliOperator& o) const {
        return phase_ == o.phase_ && x_ == o.x_ && z_ == o.z_;
    }

  private:
    BitVec x_, z_;
    int phase_ = 0;
};

// exact group product with phase tracking: (i^p X^a Z^b)(i^q X^c Z^d)
//   = i^{p+q+2*parity(b&c)} X^{a^c} Z^{b^d}
PauliOperator multiply(const PauliOperator& p, const PauliOperator& q);
PauliOperator inverse(const PauliOperator& p);

// symplectic inner product <p.x,q.z> + <p.z,q.x> mod 2; zero iff commuting
bool commutes(const PauliOperator& p, const PauliOperator& q);

struct SpanVerdict {
    bool in_span = false;
    // phase mode only: residual phase exponent of P relative to the exact
    // product of basis rows with the same symplectic part
    std::optional<int> phase_residual;
};

// Ordered generating set of a Pauli subgroup. Ranks and spans are computed
// in the phase-free 2n-dimensional GF(2) quotient; phases ride along through
// exact multiplication so rows always remain true group elements.
class SymplecticBasis {
  public:
    SymplecticBasis() = default;
    explicit SymplecticBasis(std::size_t n) : n_(n) {}
    SymplecticBasis(std::size_t n, std::vector<PauliOperator> rows);

    std::size_t num_qubits() const { return n_; }
    std::size_t size() const { return rows_.size(); }
    const std::vector<PauliOperator>& rows() const { return rows_; }
    const PauliOperator& row(std::size_t i) const { return rows_[i]; }
    bool reduced() const { return reduced_; }

    void append(const PauliOperator& p);

    // rewrite every row in '+'-sign canonical form; phase-free structure
    // (and hence the reduced flag) is unaffected
    void normalize_signs();

  private:
    friend struct ReduceResult;
    friend ReduceResult row_reduce(const SymplecticBasis& b);
    std::size_t n_ = 0;
    std::vector<PauliOperator> rows_;
    bool reduced_ = false;
};

struct ReduceResult {
    SymplecticBasis basis; // row-echelon over columns (x_0..x_{n-1} z_0..z_{n-1})
    std::size_t rank = 0;
    // a dependent row multiplied out to -identity: the generated group
    // contains -1 (only possible when input signs make it so)
    bool contains_minus_identity = false;
};

// Gaussian elimination with deterministic pivoting (lowest column first).
ReduceResult row_reduce(const SymplecticBasis& b);

// Phase-free span membership; with check_phase the exact product of pivot
// rows is formed and the residual phase reported.
SpanVerdict in_span(const PauliOperator& p, const SymplecticBasis& reduced_basis,
                    bool check_phase = false);

// Basis of all Paulis (mod phase) commuting with every row of b;
// dim = 2n - rank(b).
SymplecticBasis centralizer(const SymplecticBasis& b);

// Basis of span(b) ∩ centralizer(b) for the group generated by b, with
// every generator sign-normalized so the generated group excludes -1.
SymplecticBasis center(const SymplecticBasis& b);

} // namespace qeclab
