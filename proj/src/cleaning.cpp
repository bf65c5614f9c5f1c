#include "qeclab/cleaning.hpp"

#include "qeclab/gf2.hpp"
#include "qeclab/rng.hpp"

#include <stdexcept>

namespace qeclab {

namespace {

// rows of `basis` with both halves restricted to the index set (2|idx| cols)
GF2Matrix restrict_rows(const SymplecticBasis& basis,
                        const std::vector<std::size_t>& idx) {
    GF2Matrix m(basis.size(), 2 * idx.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const PauliOperator& p = basis.row(i);
        for (std::size_t j = 0; j < idx.size(); ++j) {
            if (p.x_bit(idx[j])) {
                m.set(i, j, true);
            }
            if (p.z_bit(idx[j])) {
                m.set(i, idx.size() + j, true);
            }
        }
    }
    return m;
}

// dim of {operators supported on R commuting with every row of basis}
std::size_t dim_centralizer_on(const SymplecticBasis& basis, const Region& r) {
    // outside R the candidate is identity, so only restricted columns
    // constrain; rank of the restricted rows equals the constraint rank
    return 2 * r.size() - restrict_rows(basis, r.qubits()).rank();
}

// dim of span(basis) ∩ P(R)
std::size_t dim_subgroup_on(const SymplecticBasis& basis, const Region& r,
                            std::size_t n) {
    const Region rc = r.complement(n);
    return basis.size() - restrict_rows(basis, rc.qubits()).rank();
}

} // namespace

std::size_t count_logical(const SubsystemCode& code, const Region& r) {
    if (!code.is_stabilizer_code()) {
        throw std::invalid_argument(
            "count_logical: subsystem code, use count_bare/count_dressed");
    }
    return count_dressed(code, r);
}

std::size_t count_bare(const SubsystemCode& code, const Region& r) {
    return dim_centralizer_on(code.gauge(), r) -
           dim_subgroup_on(code.stabilizer(), r, code.num_qubits());
}

std::size_t count_dressed(const SubsystemCode& code, const Region& r) {
    return dim_centralizer_on(code.stabilizer(), r) -
           dim_subgroup_on(code.gauge(), r, code.num_qubits());
}

bool is_bare_cleanable(const SubsystemCode& code, const Region& r) {
    return count_dressed(code, r) == 0;
}

bool is_dressed_cleanable(const SubsystemCode& code, const Region& r) {
    return count_bare(code, r) == 0;
}

bool is_correctable(const SubsystemCode& code, const Region& r) {
    return is_bare_cleanable(code, r);
}

std::optional<PauliOperator> logical_representative_on(const SubsystemCode& code,
                                                       const Region& r,
                                                       LogicalKind kind) {
    const std::size_t n = code.num_qubits();
    const SymplecticBasis& commute_with =
        kind == LogicalKind::Dressed ? code.stabilizer() : code.gauge();
    const SymplecticBasis& triviality =
        kind == LogicalKind::Dressed ? code.gauge() : code.stabilizer();

    const std::vector<std::size_t>& idx = r.qubits();
    GF2Matrix constraints(commute_with.size(), 2 * idx.size());
    for (std::size_t i = 0; i < commute_with.size(); ++i) {
        const PauliOperator& p = commute_with.row(i);
        // symplectic form swaps halves: candidate (x|z) must satisfy
        // <x, p_z> + <z, p_x> = 0
        for (std::size_t j = 0; j < idx.size(); ++j) {
            if (p.z_bit(idx[j])) {
                constraints.set(i, j, true);
            }
            if (p.x_bit(idx[j])) {
                constraints.set(i, idx.size() + j, true);
            }
        }
    }

    for (const BitVec& v : constraints.kernel_basis()) {
        PauliOperator cand(n);
        for (std::size_t j = 0; j < idx.size(); ++j) {
            if (v.get(j)) {
                cand.set_x(idx[j], true);
            }
            if (v.get(idx.size() + j)) {
                cand.set_z(idx[j], true);
            }
        }
        if (!in_span(cand, triviality).in_span) {
            return cand.sign_normalized();
        }
    }
    return std::nullopt;
}

std::optional<PauliOperator> clean_operator(const SubsystemCode& code,
                                            const PauliOperator& p, const Region& r,
                                            LogicalKind kind) {
    if (p.num_qubits() != code.num_qubits()) {
        throw std::invalid_argument("clean_operator: qubit count mismatch");
    }
    const SymplecticBasis& commute_with =
        kind == LogicalKind::Bare ? code.gauge() : code.stabilizer();
    for (const auto& row : commute_with.rows()) {
        if (!commutes(p, row)) {
            throw std::invalid_argument(
                kind == LogicalKind::Bare
                    ? "clean_operator: operator is not a bare logical"
                    : "clean_operator: operator is not a dressed logical");
        }
    }
    // bare logicals are cleaned by stabilizer elements, dressed by gauge
    const SymplecticBasis& multipliers =
        kind == LogicalKind::Bare ? code.stabilizer() : code.gauge();

    const std::vector<std::size_t>& idx = r.qubits();
    GF2Matrix restricted = restrict_rows(multipliers, idx);
    BitVec target(2 * idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j) {
        if (p.x_bit(idx[j])) {
            target.set(j, true);
        }
        if (p.z_bit(idx[j])) {
            target.set(idx.size() + j, true);
        }
    }
    if (!target.any()) {
        return p; // already clean on R
    }

    BitVec coeffs;
    if (!restricted.solve_row_combination(target, coeffs)) {
        return std::nullopt;
    }
    PauliOperator s = PauliOperator::identity(code.num_qubits());
    for (std::size_t i = 0; i < multipliers.size(); ++i) {
        if (coeffs.get(i)) {
            s = multiply(s, multipliers.row(i));
        }
    }
    return multiply(p, s);
}

bool spatially_disjoint(const SubsystemCode& code, const Region& r1,
                        const Region& r2) {
    if (!code.has_geometry()) {
        throw std::runtime_error("spatially_disjoint: code has no geometry");
    }
    const std::size_t n = code.num_qubits();
    const BitVec m1 = r1.mask(n);
    const BitVec m2 = r2.mask(n);
    for (const auto& support : code.geometry().generator_supports) {
        bool hit1 = false, hit2 = false;
        for (std::size_t q : support) {
            hit1 = hit1 || m1.get(q);
            hit2 = hit2 || m2.get(q);
        }
        if (hit1 && hit2) {
            return false;
        }
    }
    return true;
}

namespace {

Region sample_region(const SubsystemCode& code, Rng& rng, RegionSampler sampler,
                     std::size_t size) {
    const std::size_t n = code.num_qubits();
    if (sampler == RegionSampler::Balls) {
        const LatticeGeometry& geo = code.geometry();
        const std::size_t center = rng.below(n);
        const int radius = int(rng.below(size + 1));
        std::vector<std::size_t> qs;
        for (std::size_t q = 0; q < n; ++q) {
            if (geo.distance(center, q) <= radius) {
                qs.push_back(q);
            }
        }
        return Region::from_indices(std::move(qs));
    }
    const std::size_t want = 1 + rng.below(size);
    std::vector<std::size_t> qs;
    while (qs.size() < want) {
        const std::size_t q = rng.below(n);
        bool dup = false;
        for (std::size_t other : qs) {
            dup = dup || other == q;
        }
        if (!dup) {
            qs.push_back(q);
        }
    }
    return Region::from_indices(std::move(qs));
}

} // namespace

UnionLemmaReport verify_union_lemma(const SubsystemCode& code, LogicalKind kind,
                                    std::size_t pairs, std::uint64_t seed,
                                    RegionSampler sampler, std::size_t sampler_size) {
    if (!code.has_geometry()) {
        throw std::runtime_error("verify_union_lemma: code has no geometry");
    }
    auto cleanable = [&](const Region& r) {
        return kind == LogicalKind::Dressed ? is_dressed_cleanable(code, r)
                                            : is_bare_cleanable(code, r);
    };

    UnionLemmaReport report;
    report.kind = kind;
    Rng rng(seed);
    const std::size_t max_attempts = pairs * 200 + 1000;
    while (report.pairs_tested < pairs && report.attempts < max_attempts) {
        ++report.attempts;
        Region r1 = sample_region(code, rng, sampler, sampler_size);
        Region r2 = sample_region(code, rng, sampler, sampler_size);
        if (!spatially_disjoint(code, r1, r2)) {
            continue;
        }
        if (!cleanable(r1) || !cleanable(r2)) {
            continue;
        }
        ++report.pairs_tested;
        Region u = Region::set_union(r1, r2);
        if (!cleanable(u)) {
            const LogicalKind witness_kind =
                kind == LogicalKind::Dressed ? LogicalKind::Bare : LogicalKind::Dressed;
            auto witness = logical_representative_on(code, u, witness_kind);
            report.counterexamples.push_back(
                {std::move(r1), std::move(r2),
                 witness ? *witness : PauliOperator::identity(code.num_qubits())});
        }
    }
    return report;
}

} // namespace qeclab
