#pragma once

#include "qeclab/bitvec.hpp"

#include <cstddef>
#include <vector>

namespace qeclab {

// Dense GF(2) matrix with packed rows. Shared elimination kernel for
// centralizers, restricted-region solves and erasure trials.
class GF2Matrix {
  public:
    GF2Matrix() = default;
    GF2Matrix(std::size_t rows, std::size_t cols)
        : cols_(cols), rows_(rows, BitVec(cols)) {}

    std::size_t num_rows() const { return rows_.size(); }
    std::size_t num_cols() const { return cols_; }

    BitVec& row(std::size_t i) { return rows_[i]; }
    const BitVec& row(std::size_t i) const { return rows_[i]; }

    void append_row(const BitVec& r) { rows_.push_back(r); }

    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) { rows_[r].set(c, v); }

    // in-place reduced row echelon form; returns pivot column per pivot row
    std::vector<std::size_t> rref();

    std::size_t rank() const;

    // basis of the right kernel {v : M v = 0}; deterministic order
    // (one vector per free column, ascending)
    std::vector<BitVec> kernel_basis() const;

    // one solution x of x^T M = b given row-space membership, expressed in
    // the original row indices: returns coefficient vector c with
    // sum_i c_i row_i = b, or empty optional-like flag via bool
    bool solve_row_combination(const BitVec& target, BitVec& coeffs_out) const;

  private:
    std::size_t cols_ = 0;
    std::vector<BitVec> rows_;
};

} // namespace qeclab
