#include "qeclab/phase_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace qeclab {

PhasePolynomial::PhasePolynomial(std::size_t n, int kappa) : n_(n), kappa_(kappa) {
    if (kappa < 1 || kappa > 62) {
        throw std::invalid_argument("PhasePolynomial: kappa out of range");
    }
}

bool PhasePolynomial::is_constant() const {
    for (const auto& [m, c] : terms_) {
        if (!m.empty()) {
            return false;
        }
    }
    return true;
}

std::uint64_t PhasePolynomial::constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? 0 : it->second;
}

void PhasePolynomial::add_term(Monomial m, std::uint64_t coeff) {
    std::sort(m.begin(), m.end());
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] >= n_) {
            throw std::invalid_argument("PhasePolynomial: variable out of range");
        }
        if (i > 0 && m[i] == m[i - 1]) {
            throw std::invalid_argument("PhasePolynomial: repeated variable in monomial");
        }
    }
    const std::uint64_t mod = modulus();
    auto it = terms_.find(m);
    const std::uint64_t cur = it == terms_.end() ? 0 : it->second;
    const std::uint64_t next = (cur + coeff) % mod;
    if (next == 0) {
        if (it != terms_.end()) {
            terms_.erase(it);
        }
    } else {
        terms_[std::move(m)] = next;
    }
}

std::uint64_t PhasePolynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

PhasePolynomial PhasePolynomial::plus(const PhasePolynomial& o) const {
    if (o.n_ != n_) {
        throw std::invalid_argument("PhasePolynomial::plus: size mismatch");
    }
    const int kap = std::max(kappa_, o.kappa_);
    PhasePolynomial a = embedded(kap);
    for (const auto& [m, c] : o.embedded(kap).terms()) {
        a.add_term(m, c);
    }
    return a;
}

PhasePolynomial PhasePolynomial::embedded(int new_kappa) const {
    if (new_kappa < kappa_) {
        throw std::invalid_argument("PhasePolynomial::embedded: kappa must not shrink");
    }
    PhasePolynomial out(n_, new_kappa);
    const std::uint64_t scale = std::uint64_t(1) << (new_kappa - kappa_);
    for (const auto& [m, c] : terms_) {
        out.add_term(m, c * scale);
    }
    return out;
}

std::uint64_t PhasePolynomial::evaluate(std::uint64_t assignment_mask) const {
    const std::uint64_t mod = modulus();
    std::uint64_t v = 0;
    for (const auto& [m, c] : terms_) {
        bool all = true;
        for (std::size_t q : m) {
            if (!((assignment_mask >> q) & 1u)) {
                all = false;
                break;
            }
        }
        if (all) {
            v = (v + c) % mod;
        }
    }
    return v;
}

std::vector<std::uint64_t> PhasePolynomial::truth_table() const {
    if (n_ > 24) {
        throw std::invalid_argument("PhasePolynomial::truth_table: too many qubits");
    }
    std::vector<std::uint64_t> t(std::size_t(1) << n_, 0);
    const std::uint64_t mod = modulus();
    // zeta transform of the coefficient vector
    for (const auto& [m, c] : terms_) {
        std::uint64_t mask = 0;
        for (std::size_t q : m) {
            mask |= std::uint64_t(1) << q;
        }
        t[mask] = (t[mask] + c) % mod;
    }
    for (std::size_t j = 0; j < n_; ++j) {
        const std::size_t bit = std::size_t(1) << j;
        for (std::size_t x = 0; x < t.size(); ++x) {
            if (x & bit) {
                t[x] = (t[x] + t[x ^ bit]) % mod;
            }
        }
    }
    return t;
}

PhasePolynomial PhasePolynomial::from_truth_table(std::size_t n, int kappa,
                                                  const std::vector<std::uint64_t>& values) {
    if (values.size() != (std::size_t(1) << n)) {
        throw std::invalid_argument("from_truth_table: wrong table size");
    }
    PhasePolynomial out(n, kappa);
    const std::uint64_t mod = out.modulus();
    std::vector<std::uint64_t> t(values);
    for (auto& v : t) {
        v %= mod;
    }
    // Moebius transform over Z_{2^kappa}
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t bit = std::size_t(1) << j;
        for (std::size_t x = 0; x < t.size(); ++x) {
            if (x & bit) {
                t[x] = (t[x] + mod - t[x ^ bit]) % mod;
            }
        }
    }
    for (std::size_t mask = 0; mask < t.size(); ++mask) {
        if (t[mask] == 0) {
            continue;
        }
        Monomial m;
        for (std::size_t q = 0; q < n; ++q) {
            if ((mask >> q) & 1u) {
                m.push_back(q);
            }
        }
        out.add_term(std::move(m), t[mask]);
    }
    return out;
}

std::string PhasePolynomial::to_string() const {
    std::ostringstream out;
    out << "k" << kappa_;
    for (const auto& [m, c] : terms_) {
        out << "|" << c;
        for (std::size_t q : m) {
            out << "x" << q;
        }
    }
    return out.str();
}

PhasePolynomial finite_difference(const PhasePolynomial& f, std::size_t j) {
    if (j >= f.num_qubits()) {
        throw std::invalid_argument("finite_difference: variable out of range");
    }
    // substituting x_j -> 1 - x_j turns c*x_M (j in M) into
    // c*x_{M\j} - c*x_M; subtracting f leaves c*x_{M\j} - 2c*x_M
    PhasePolynomial out(f.num_qubits(), f.kappa());
    const std::uint64_t mod = out.modulus();
    for (const auto& [m, c] : f.terms()) {
        if (!std::binary_search(m.begin(), m.end(), j)) {
            continue;
        }
        PhasePolynomial::Monomial reduced;
        for (std::size_t q : m) {
            if (q != j) {
                reduced.push_back(q);
            }
        }
        out.add_term(std::move(reduced), c);
        out.add_term(m, (mod - (2 * c) % mod) % mod);
    }
    return out;
}

CliffordLevel pauli_level(const PauliOperator& p) {
    return CliffordLevel{p.is_identity() ? 0 : 1, false};
}

namespace {

int level_recursive(const PhasePolynomial& f, int cap,
                    std::unordered_map<std::string, int>& memo) {
    if (f.is_constant()) {
        return 0;
    }
    const std::string key = f.to_string();
    auto it = memo.find(key);
    if (it != memo.end()) {
        return it->second;
    }
    // variables actually appearing in f
    std::vector<bool> present(f.num_qubits(), false);
    for (const auto& [m, c] : f.terms()) {
        for (std::size_t q : m) {
            present[q] = true;
        }
    }
    int best = 0;
    for (std::size_t j = 0; j < f.num_qubits(); ++j) {
        if (!present[j]) {
            continue;
        }
        const int sub = level_recursive(finite_difference(f, j), cap, memo);
        best = std::max(best, sub);
        if (best >= cap) {
            break;
        }
    }
    const int level = 1 + best;
    memo[key] = level;
    return level;
}

} // namespace

CliffordLevel diagonal_level(const PhasePolynomial& f, int cap) {
    if (cap < 1) {
        throw std::invalid_argument("diagonal_level: cap must be >= 1");
    }
    std::unordered_map<std::string, int> memo;
    const int level = level_recursive(f, cap, memo);
    if (level > cap) {
        return CliffordLevel{cap, true};
    }
    return CliffordLevel{level, false};
}

} // namespace qeclab
