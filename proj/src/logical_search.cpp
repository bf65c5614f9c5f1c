#include "qeclab/logical_search.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qeclab {

namespace {

// advance a strictly-increasing support combination; false when exhausted
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t w = c.size();
    std::size_t i = w;
    while (i > 0) {
        --i;
        if (c[i] + 1 <= n - (w - i)) {
            ++c[i];
            for (std::size_t j = i + 1; j < w; ++j) {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    return false;
}

} // namespace

DistanceResult distance(const SubsystemCode& code, std::size_t w_max) {
    if (w_max < 1) {
        throw std::invalid_argument("distance: w_max must be >= 1");
    }
    const std::size_t n = code.num_qubits();
    const SymplecticBasis& stab = code.stabilizer();
    const SymplecticBasis& gauge = code.gauge();

    for (std::size_t w = 1; w <= std::min(w_max, n); ++w) {
        std::vector<std::size_t> support(w);
        for (std::size_t i = 0; i < w; ++i) {
            support[i] = i;
        }
        do {
            // letters per position: 0 = X, 1 = Y, 2 = Z, odometer with the
            // first position most significant
            std::vector<int> letters(w, 0);
            while (true) {
                PauliOperator cand(n);
                for (std::size_t i = 0; i < w; ++i) {
                    if (letters[i] != 2) {
                        cand.set_x(support[i], true);
                    }
                    if (letters[i] != 0) {
                        cand.set_z(support[i], true);
                    }
                }
                bool ok = true;
                for (const auto& row : stab.rows()) {
                    if (!commutes(cand, row)) {
                        ok = false;
                        break;
                    }
                }
                if (ok && !in_span(cand, gauge).in_span) {
                    DistanceResult out;
                    out.exact = true;
                    out.distance = w;
                    out.witness = cand.sign_normalized();
                    return out;
                }
                // next letter assignment
                bool exhausted = true;
                for (std::size_t pos = w; pos-- > 0;) {
                    if (++letters[pos] < 3) {
                        exhausted = false;
                        break;
                    }
                    letters[pos] = 0;
                }
                if (exhausted) {
                    break;
                }
            }
        } while (next_combination(support, n));
    }

    DistanceResult out;
    out.exact = false;
    out.distance = w_max + 1;
    return out;
}

std::optional<PauliOperator> find_logical_in_region(const SubsystemCode& code,
                                                    const Region& r,
                                                    LogicalKind kind) {
    auto rep = logical_representative_on(code, r, kind);
    if (!rep) {
        return std::nullopt;
    }
    // re-verify: commutation plus non-membership in the triviality group
    const SymplecticBasis& commute_with =
        kind == LogicalKind::Dressed ? code.stabilizer() : code.gauge();
    for (const auto& row : commute_with.rows()) {
        if (!commutes(*rep, row)) {
            throw std::logic_error("find_logical_in_region: witness fails commutation");
        }
    }
    const SymplecticBasis& triviality =
        kind == LogicalKind::Dressed ? code.gauge() : code.stabilizer();
    if (in_span(*rep, triviality).in_span) {
        throw std::logic_error("find_logical_in_region: witness is trivial");
    }
    return rep;
}

std::vector<Tube> enumerate_tubes(const LatticeGeometry& geo, int width) {
    if (width < 1 || width >= geo.extent) {
        throw std::invalid_argument("enumerate_tubes: need 1 <= width < extent");
    }
    const std::size_t n = geo.num_qubits();
    std::vector<Tube> tubes;
    for (int axis = 0; axis < geo.dim; ++axis) {
        // window start offsets per non-axis dimension
        std::vector<int> offsets(std::size_t(geo.dim) - 1, 0);
        std::vector<int> limits(std::size_t(geo.dim) - 1, 0);
        std::vector<int> axes;
        for (int a = 0; a < geo.dim; ++a) {
            if (a != axis) {
                axes.push_back(a);
            }
        }
        for (std::size_t i = 0; i < axes.size(); ++i) {
            limits[i] = geo.periodic[std::size_t(axes[i])] ? geo.extent
                                                           : geo.extent - width + 1;
        }
        while (true) {
            std::vector<std::size_t> qs;
            for (std::size_t q = 0; q < n; ++q) {
                bool inside = true;
                for (std::size_t i = 0; i < axes.size(); ++i) {
                    int rel = geo.coord(q, axes[i]) - offsets[i];
                    if (geo.periodic[std::size_t(axes[i])]) {
                        rel = (rel % geo.extent + geo.extent) % geo.extent;
                    }
                    if (rel < 0 || rel >= width) {
                        inside = false;
                        break;
                    }
                }
                if (inside) {
                    qs.push_back(q);
                }
            }
            Tube t;
            t.axis = axis;
            t.offsets = offsets;
            t.region = Region::from_indices(std::move(qs));
            tubes.push_back(std::move(t));

            bool exhausted = true;
            for (std::size_t pos = offsets.size(); pos-- > 0;) {
                if (++offsets[pos] < limits[pos]) {
                    exhausted = false;
                    break;
                }
                offsets[pos] = 0;
            }
            if (exhausted) {
                break;
            }
        }
        if (geo.dim == 1) {
            break; // a 1D lattice has a single tube orientation
        }
    }
    return tubes;
}

StringSearchResult has_string_logical(const SubsystemCode& code, int width) {
    if (!code.has_geometry()) {
        throw std::runtime_error("has_string_logical: code has no geometry");
    }
    StringSearchResult out;
    for (Tube& tube : enumerate_tubes(code.geometry(), width)) {
        ++out.tubes_checked;
        auto witness = find_logical_in_region(code, tube.region, LogicalKind::Dressed);
        if (witness) {
            out.found = true;
            out.witness = std::move(witness);
            out.tube = std::move(tube);
            return out;
        }
    }
    return out;
}

DistanceBoundReport distance_bound_check(std::vector<FamilyPoint> points, int dim,
                                         int level) {
    if (points.size() < 2) {
        throw std::invalid_argument("distance_bound_check: need at least two sizes");
    }
    std::sort(points.begin(), points.end(),
              [](const FamilyPoint& a, const FamilyPoint& b) { return a.L < b.L; });
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i].L == points[i - 1].L) {
            throw std::invalid_argument("distance_bound_check: duplicate size");
        }
    }

    DistanceBoundReport rep;
    rep.dim = dim;
    rep.level = level;
    rep.exponent = dim + 1 - level;
    rep.consistent = true;
    for (const auto& p : points) {
        rep.ratios.push_back(double(p.d) / std::pow(double(p.L), rep.exponent));
    }
    rep.fitted_constant = *std::max_element(rep.ratios.begin(), rep.ratios.end());
    for (std::size_t i = 1; i < rep.ratios.size(); ++i) {
        if (rep.ratios[i] > rep.ratios[i - 1] * (1.0 + 1e-9)) {
            rep.consistent = false;
        }
    }
    return rep;
}

} // namespace qeclab
