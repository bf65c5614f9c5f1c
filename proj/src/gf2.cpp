#include "qeclab/gf2.hpp"

namespace qeclab {

std::vector<std::size_t> GF2Matrix::rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_.size(); ++c) {
        std::size_t sel = rows_.size();
        for (std::size_t i = r; i < rows_.size(); ++i) {
            if (rows_[i].get(c)) {
                sel = i;
                break;
            }
        }
        if (sel == rows_.size()) {
            continue;
        }
        std::swap(rows_[r], rows_[sel]);
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i != r && rows_[i].get(c)) {
                rows_[i].xor_with(rows_[r]);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t GF2Matrix::rank() const {
    GF2Matrix copy = *this;
    return copy.rref().size();
}

std::vector<BitVec> GF2Matrix::kernel_basis() const {
    GF2Matrix m = *this;
    const std::vector<std::size_t> pivots = m.rref();

    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots) {
        is_pivot[c] = true;
    }

    std::vector<BitVec> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) {
            continue;
        }
        BitVec v(cols_);
        v.set(f, true);
        for (std::size_t pr = 0; pr < pivots.size(); ++pr) {
            if (m.rows_[pr].get(f)) {
                v.set(pivots[pr], true);
            }
        }
        basis.push_back(v);
    }
    return basis;
}

bool GF2Matrix::solve_row_combination(const BitVec& target, BitVec& coeffs_out) const {
    // eliminate with bookkeeping of which original rows entered each pivot row
    std::vector<BitVec> work(rows_);
    std::vector<BitVec> book;
    book.reserve(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        BitVec e(rows_.size());
        e.set(i, true);
        book.push_back(e);
    }

    std::size_t r = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < cols_ && r < work.size(); ++c) {
        std::size_t sel = work.size();
        for (std::size_t i = r; i < work.size(); ++i) {
            if (work[i].get(c)) {
                sel = i;
                break;
            }
        }
        if (sel == work.size()) {
            continue;
        }
        std::swap(work[r], work[sel]);
        std::swap(book[r], book[sel]);
        for (std::size_t i = 0; i < work.size(); ++i) {
            if (i != r && work[i].get(c)) {
                work[i].xor_with(work[r]);
                book[i].xor_with(book[r]);
            }
        }
        pivots.push_back(c);
        ++r;
    }

    BitVec residual = target;
    BitVec coeffs(rows_.size());
    for (std::size_t pr = 0; pr < pivots.size(); ++pr) {
        if (residual.get(pivots[pr])) {
            residual.xor_with(work[pr]);
            coeffs.xor_with(book[pr]);
        }
    }
    if (residual.any()) {
        return false;
    }
    coeffs_out = coeffs;
    return true;
}

} // namespace qeclab
