#include "qeclab/transversal.hpp"

#include <stdexcept>

namespace qeclab {

namespace {

// reduced row echelon basis of a list of GF(2) vectors
std::vector<BitVec> reduced_basis(std::vector<BitVec> rows, std::size_t cols) {
    GF2Matrix m(0, cols);
    for (auto& r : rows) {
        m.append_row(r);
    }
    m.rref();
    std::vector<BitVec> out;
    for (std::size_t i = 0; i < m.num_rows(); ++i) {
        if (m.row(i).any()) {
            out.push_back(m.row(i));
        }
    }
    return out;
}

} // namespace

CssStructure css_structure(const SubsystemCode& code) {
    if (!code.is_stabilizer_code()) {
        throw std::invalid_argument("css_structure: not a stabilizer code");
    }
    const std::size_t n = code.num_qubits();
    const SymplecticBasis& stab = code.stabilizer();
    const std::size_t s = stab.size();

    // coefficient kernels pick out the pure-X and pure-Z subgroups
    GF2Matrix zpart(n, s), xpart(n, s);
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t q = 0; q < n; ++q) {
            if (stab.row(i).z_bit(q)) {
                zpart.set(q, i, true);
            }
            if (stab.row(i).x_bit(q)) {
                xpart.set(q, i, true);
            }
        }
    }

    auto combine_supports = [&](const std::vector<BitVec>& coeff_vectors, bool x_type) {
        std::vector<BitVec> out;
        for (const BitVec& c : coeff_vectors) {
            BitVec v(n);
            for (std::size_t i = 0; i < s; ++i) {
                if (!c.get(i)) {
                    continue;
                }
                for (std::size_t q = 0; q < n; ++q) {
                    const bool bit = x_type ? stab.row(i).x_bit(q) : stab.row(i).z_bit(q);
                    if (bit) {
                        v.flip(q);
                    }
                }
            }
            out.push_back(v);
        }
        return out;
    };

    CssStructure css;
    css.h_x = reduced_basis(combine_supports(zpart.kernel_basis(), true), n);
    css.h_z = reduced_basis(combine_supports(xpart.kernel_basis(), false), n);
    if (css.h_x.size() + css.h_z.size() != s) {
        throw std::invalid_argument("css_structure: stabilizer group is not CSS");
    }

    // pure-X logicals: kernel of H_Z modulo the row space of H_X
    GF2Matrix hz(css.h_z.size(), n);
    for (std::size_t i = 0; i < css.h_z.size(); ++i) {
        hz.row(i) = css.h_z[i];
    }
    std::vector<std::size_t> hx_pivots;
    std::vector<BitVec> hx_rref = css.h_x; // already reduced
    for (const BitVec& r : hx_rref) {
        hx_pivots.push_back(r.first_set());
    }
    std::vector<BitVec> residuals;
    for (const BitVec& v : hz.kernel_basis()) {
        BitVec r = v;
        // full reduction: hx_rref is in reduced echelon form
        for (std::size_t i = 0; i < hx_rref.size(); ++i) {
            if (r.get(hx_pivots[i])) {
                r.xor_with(hx_rref[i]);
            }
        }
        if (r.any()) {
            residuals.push_back(r);
        }
    }
    // residuals are clear at every H_X pivot, so their span meets the
    // H_X row space only in zero; RREF picks canonical class representatives
    css.logical_x = reduced_basis(std::move(residuals), n);
    if (css.logical_x.size() != code.num_logical()) {
        throw std::logic_error("css_structure: X-logical rank mismatch");
    }
    return css;
}

TransversalAction transversal_diagonal_logical_action(
    const SubsystemCode& code, const std::vector<PhasePolynomial>& per_qubit,
    int level_cap) {
    const std::size_t n = code.num_qubits();
    if (per_qubit.size() != n) {
        throw std::invalid_argument(
            "transversal_diagonal_logical_action: need one polynomial per qubit");
    }
    int kappa = 1;
    for (const auto& f : per_qubit) {
        kappa = std::max(kappa, f.kappa());
    }
    const std::uint64_t mod = std::uint64_t(1) << kappa;

    // f(x) = sum_j (const_j + linear_j x_j)
    std::uint64_t constant = 0;
    std::vector<std::uint64_t> linear(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        const PhasePolynomial fj = per_qubit[j].embedded(kappa);
        for (const auto& [m, c] : fj.terms()) {
            if (m.empty()) {
                constant = (constant + c) % mod;
            } else if (m.size() == 1) {
                linear[j] = (linear[j] + c) % mod;
            } else {
                throw std::invalid_argument(
                    "transversal_diagonal_logical_action: gate is not single-qubit");
            }
        }
    }

    const CssStructure css = css_structure(code);
    const std::size_t k = code.num_logical();
    const std::size_t rx = css.h_x.size();
    if (k + rx > 20) {
        throw std::invalid_argument(
            "transversal_diagonal_logical_action: coset enumeration too large "
            "(rank H_X + k > 20)");
    }

    auto eval_on = [&](const BitVec& v) {
        std::uint64_t acc = constant;
        for (std::size_t q = 0; q < n; ++q) {
            if (v.get(q)) {
                acc = (acc + linear[q]) % mod;
            }
        }
        return acc;
    };
    auto mask_of = [&](const BitVec& v) {
        std::uint64_t m = 0;
        for (std::size_t q = 0; q < n && q < 64; ++q) {
            if (v.get(q)) {
                m |= std::uint64_t(1) << q;
            }
        }
        return m;
    };

    TransversalAction out;
    out.kappa = kappa;
    out.coset_values.assign(std::size_t(1) << k, 0);
    for (std::uint64_t a = 0; a < (std::uint64_t(1) << k); ++a) {
        BitVec base(n);
        for (std::size_t i = 0; i < k; ++i) {
            if ((a >> i) & 1u) {
                base.xor_with(css.logical_x[i]);
            }
        }
        bool first = true;
        std::uint64_t value = 0;
        std::uint64_t first_mask = 0;
        for (std::uint64_t u = 0; u < (std::uint64_t(1) << rx); ++u) {
            BitVec v = base;
            for (std::size_t i = 0; i < rx; ++i) {
                if ((u >> i) & 1u) {
                    v.xor_with(css.h_x[i]);
                }
            }
            const std::uint64_t val = eval_on(v);
            if (first) {
                value = val;
                first_mask = mask_of(v);
                first = false;
            } else if (val != value) {
                out.preserves_codespace = false;
                out.violating_coset = a;
                out.witness_a = first_mask;
                out.witness_b = mask_of(v);
                return out;
            }
        }
        out.coset_values[a] = value;
    }

    out.preserves_codespace = true;
    out.logical = PhasePolynomial::from_truth_table(k, kappa, out.coset_values);
    out.level = diagonal_level(out.logical, level_cap);
    return out;
}

} // namespace qeclab
