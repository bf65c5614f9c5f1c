#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qeclab {

// Packed GF(2) vector. All symplectic linear algebra in the library runs on
// 64-bit words; n up to a few times 10^4 keeps row operations in the
// microsecond range.
class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

    void set(std::size_t i, bool v) {
        const std::uint64_t m = std::uint64_t(1) << (i & 63);
        if (v) {
            w_[i >> 6] |= m;
        } else {
            w_[i >> 6] &= ~m;
        }
    }

    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    void xor_with(const BitVec& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            w_[i] ^= o.w_[i];
        }
    }

    void and_with(const BitVec& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            w_[i] &= o.w_[i];
        }
    }

    // parity of popcount(a & b); the workhorse of every commutation test
    static bool and_parity(const BitVec& a, const BitVec& b) {
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < a.w_.size(); ++i) {
            acc ^= a.w_[i] & b.w_[i];
        }
        return std::popcount(acc) & 1u;
    }

    std::size_t popcount() const {
        std::size_t c = 0;
        for (std::uint64_t w : w_) {
            c += std::size_t(std::popcount(w));
        }
        return c;
    }

    bool any() const {
        for (std::uint64_t w : w_) {
            if (w) {
                return true;
            }
        }
        return false;
    }

    // index of the lowest set bit, or size() when zero
    std::size_t first_set() const {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            if (w_[i]) {
                return (i << 6) + std::size_t(std::countr_zero(w_[i]));
            }
        }
        return n_;
    }

    bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const BitVec& o) const { return !(*this == o); }

    const std::vector<std::uint64_t>& words() const { return w_; }

  private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace qeclab
