#include "qeclab/geometry.hpp"

#include "qeclab/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qeclab {

Region neighborhood(const LatticeGeometry& geo, const Region& r, int radius) {
    if (radius < 0) {
        throw std::invalid_argument("neighborhood: radius must be >= 0");
    }
    if (radius == 0 || r.empty()) {
        return r;
    }
    const std::size_t n = geo.num_qubits();
    std::vector<std::size_t> out;
    for (std::size_t q = 0; q < n; ++q) {
        bool inside = r.contains(q);
        for (std::size_t i = 0; i < r.qubits().size() && !inside; ++i) {
            inside = geo.distance(q, r.qubits()[i]) <= radius;
        }
        if (inside) {
            out.push_back(q);
        }
    }
    return Region::from_indices(std::move(out));
}

std::vector<Region> connected_components(const LatticeGeometry& geo, const Region& r) {
    const auto& qs = r.qubits();
    std::vector<int> label(qs.size(), -1);
    std::vector<Region> comps;
    for (std::size_t i = 0; i < qs.size(); ++i) {
        if (label[i] >= 0) {
            continue;
        }
        std::vector<std::size_t> stack{i}, members;
        label[i] = int(comps.size());
        while (!stack.empty()) {
            const std::size_t cur = stack.back();
            stack.pop_back();
            members.push_back(qs[cur]);
            for (std::size_t j = 0; j < qs.size(); ++j) {
                if (label[j] < 0 && geo.distance(qs[cur], qs[j]) <= 1) {
                    label[j] = label[i];
                    stack.push_back(j);
                }
            }
        }
        comps.push_back(Region::from_indices(std::move(members)));
    }
    return comps;
}

void validate_circuit(const LocalCircuit& c, std::size_t n) {
    for (const auto& layer : c.layers) {
        std::vector<bool> used(n, false);
        for (const auto& gate : layer) {
            for (std::size_t q : gate) {
                if (q >= n) {
                    throw std::invalid_argument("circuit: qubit index out of range");
                }
                if (used[q]) {
                    throw std::invalid_argument(
                        "circuit: overlapping gates within a layer");
                }
                used[q] = true;
            }
        }
    }
}

int circuit_spread(const LatticeGeometry& geo, const LocalCircuit& c) {
    int total = 0;
    for (const auto& layer : c.layers) {
        int layer_max = 0;
        for (const auto& gate : layer) {
            layer_max = std::max(layer_max, geo.support_diameter(gate));
        }
        total += layer_max;
    }
    return total;
}

Region propagate_support(const LocalCircuit& c, const Region& start, std::size_t n) {
    std::vector<bool> in(n, false);
    for (std::size_t q : start.qubits()) {
        in[q] = true;
    }
    for (const auto& layer : c.layers) {
        std::vector<std::size_t> grow;
        for (const auto& gate : layer) {
            bool touches = false;
            for (std::size_t q : gate) {
                touches = touches || in[q];
            }
            if (touches) {
                for (std::size_t q : gate) {
                    grow.push_back(q);
                }
            }
        }
        for (std::size_t q : grow) {
            in[q] = true;
        }
    }
    std::vector<std::size_t> out;
    for (std::size_t q = 0; q < n; ++q) {
        if (in[q]) {
            out.push_back(q);
        }
    }
    return Region::from_indices(std::move(out));
}

bool covers_all(const Partition& p, std::size_t n) {
    std::vector<bool> seen(n, false);
    for (std::size_t q : p.r0.qubits()) {
        seen[q] = true;
    }
    for (const Region& r : p.regions) {
        for (std::size_t q : r.qubits()) {
            seen[q] = true;
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

namespace {

// distance of coordinate c to the nearest tile hyperplane (multiples of t)
int grid_distance(const LatticeGeometry& geo, int c, int t, int axis) {
    const int extent = geo.extent;
    int best = extent;
    for (int g = 0; g < extent; g += t) {
        int d = std::abs(c - g);
        if (geo.periodic[std::size_t(axis)]) {
            d = std::min(d, extent - d);
        }
        best = std::min(best, d);
    }
    return best;
}

} // namespace

Partition fattened_tiling(const LatticeGeometry& geo, int t, std::vector<int> widths) {
    const int dim = geo.dim;
    if (t < 2 || t > geo.extent) {
        throw std::invalid_argument("fattened_tiling: tile size out of range");
    }
    if (widths.empty()) {
        widths.assign(std::size_t(dim), std::max(1, (geo.xi - 1 + 1) / 2));
    }
    if (int(widths.size()) != dim) {
        throw std::invalid_argument("fattened_tiling: need one width per skeleton dim");
    }
    for (int w : widths) {
        if (w < 0 || 4 * w >= t) {
            throw std::invalid_argument("fattened_tiling: widths too large for tile");
        }
    }

    const std::size_t n = geo.num_qubits();
    std::vector<int> assigned(n, -1);
    // R_m (m < D) collects qubits near exactly D-m tile hyperplanes at the
    // m-th width; lower m wins so the families stay disjoint
    for (int m = 0; m < dim; ++m) {
        const int w = widths[std::size_t(m)];
        for (std::size_t q = 0; q < n; ++q) {
            if (assigned[q] >= 0) {
                continue;
            }
            int near = 0;
            for (int ax = 0; ax < dim; ++ax) {
                if (grid_distance(geo, geo.coord(q, ax), t, ax) <= w) {
                    ++near;
                }
            }
            if (near == dim - m) {
                assigned[q] = m;
            }
        }
    }

    Partition p;
    std::vector<std::vector<std::size_t>> buckets(std::size_t(dim) + 1);
    for (std::size_t q = 0; q < n; ++q) {
        buckets[assigned[q] < 0 ? std::size_t(dim) : std::size_t(assigned[q])].push_back(q);
    }
    p.r0 = Region::from_indices(std::move(buckets[0]));
    for (int m = 1; m <= dim; ++m) {
        p.regions.push_back(Region::from_indices(std::move(buckets[std::size_t(m)])));
    }
    p.metadata["scheme"] = "tiling";
    p.metadata["tile"] = std::to_string(t);
    for (int m = 0; m < dim; ++m) {
        p.metadata["width" + std::to_string(m)] = std::to_string(widths[std::size_t(m)]);
    }
    return p;
}

Partition tube_partition(const LatticeGeometry& geo, int q) {
    const int dim = geo.dim;
    if (q < 1 || q > dim) {
        throw std::invalid_argument("tube_partition: need 1 <= q <= D");
    }
    const int regions = dim - q + 1;
    // stack bands along the last axis; each band is a union of parallel
    // q-dimensional slabs whose orientation cycles through the leading axes
    const int stack_axis = dim - 1;
    const std::size_t n = geo.num_qubits();

    Partition p;
    p.metadata["scheme"] = "tubes";
    p.metadata["q"] = std::to_string(q);
    std::vector<std::vector<std::size_t>> buckets(std::size_t(regions));
    for (std::size_t i = 0; i < n; ++i) {
        const int c = geo.coord(i, stack_axis);
        int band = int((long(c) * regions) / geo.extent);
        band = std::min(band, regions - 1);
        buckets[std::size_t(band)].push_back(i);
    }
    for (int j = 0; j < regions; ++j) {
        Region r = Region::from_indices(std::move(buckets[std::size_t(j)]));
        if (j == 0) {
            p.r0 = std::move(r);
        } else {
            p.regions.push_back(std::move(r));
        }
        const int orient = (dim == 1) ? 0 : j % (dim - 1 + (q == dim ? 1 : 0));
        p.metadata["orientation" + std::to_string(j)] =
            "axis" + std::to_string(orient);
        const int lo = int((long(j) * geo.extent) / regions);
        const int hi = int((long(j + 1) * geo.extent) / regions);
        p.metadata["band" + std::to_string(j)] =
            std::to_string(lo) + ".." + std::to_string(hi - 1);
    }
    return p;
}

RandomCellResult random_cell_region(const LatticeGeometry& geo, double p0,
                                    int ball_radius, double cell_constant,
                                    std::uint64_t seed) {
    if (p0 < 0.0 || p0 > 1.0) {
        throw std::invalid_argument("random_cell_region: p0 out of [0,1]");
    }
    if (ball_radius < geo.xi) {
        throw std::invalid_argument("random_cell_region: ball radius below xi");
    }
    const std::size_t n = geo.num_qubits();
    const int dim = geo.dim;

    // sampled loss set, one stream per seed
    Rng loss_rng(seed);
    std::vector<bool> lost(n, false);
    for (std::size_t q = 0; q < n; ++q) {
        lost[q] = loss_rng.uniform() < p0;
    }

    // cell side from the target volume c*log(n), clamped so a padded ball fits
    const int pad = (geo.xi + 2) / 2 + 1;
    const double target_volume = cell_constant * std::log(double(n));
    int side = std::max(1, int(std::ceil(std::pow(target_volume, 1.0 / dim))));
    side = std::max(side, 2 * ball_radius + 1 + 2 * pad);
    side = std::min(side, geo.extent);

    RandomCellResult out;
    out.cell_side = side;
    out.ball_radius = ball_radius;
    const int cells = std::max(1, geo.extent / side);
    out.cells_per_axis.assign(std::size_t(dim), cells);

    // qubits grouped by coordinate for ball lookups
    auto ball_qubits = [&](const std::vector<int>& center) {
        std::vector<std::size_t> qs;
        for (std::size_t qq = 0; qq < n; ++qq) {
            int d = 0;
            for (int ax = 0; ax < dim; ++ax) {
                int dd = std::abs(geo.coord(qq, ax) - center[std::size_t(ax)]);
                if (geo.periodic[std::size_t(ax)]) {
                    dd = std::min(dd, geo.extent - dd);
                }
                d = std::max(d, dd);
            }
            if (d <= ball_radius) {
                qs.push_back(qq);
            }
        }
        return qs;
    };

    std::vector<std::size_t> chosen;
    long total_cells = 1;
    for (int ax = 0; ax < dim; ++ax) {
        total_cells *= cells;
    }
    for (long cell = 0; cell < total_cells; ++cell) {
        // cell index -> per-axis start
        std::vector<int> idx(std::size_t(dim));
        long rest = cell;
        for (int ax = dim - 1; ax >= 0; --ax) {
            idx[std::size_t(ax)] = int(rest % cells);
            rest /= cells;
        }
        std::vector<int> lo(std::size_t(dim)), hi(std::size_t(dim));
        for (int ax = 0; ax < dim; ++ax) {
            lo[std::size_t(ax)] = idx[std::size_t(ax)] * side;
            const int end = (idx[std::size_t(ax)] == cells - 1)
                                ? geo.extent
                                : (idx[std::size_t(ax)] + 1) * side;
            hi[std::size_t(ax)] = end;
        }

        // candidate centers keep the padded ball inside the cell
        std::vector<std::vector<int>> candidates;
        std::vector<int> center(std::size_t(dim));
        auto scan = [&](auto&& self, int ax) -> void {
            if (ax == dim) {
                candidates.push_back(center);
                return;
            }
            for (int c = lo[std::size_t(ax)] + pad + ball_radius;
                 c <= hi[std::size_t(ax)] - 1 - pad - ball_radius; ++c) {
                center[std::size_t(ax)] = c;
                self(self, ax + 1);
            }
        };
        scan(scan, 0);

        // per-cell derived stream fixes the scan order
        Rng cell_rng(seed, std::uint64_t(cell) + 1);
        for (std::size_t i = candidates.size(); i > 1; --i) {
            std::swap(candidates[i - 1], candidates[cell_rng.below(i)]);
        }

        bool found = false;
        for (const auto& cand : candidates) {
            std::vector<std::size_t> qs = ball_qubits(cand);
            if (qs.empty()) {
                continue;
            }
            bool all_lost = true;
            for (std::size_t qq : qs) {
                all_lost = all_lost && lost[qq];
            }
            if (all_lost) {
                out.centers.push_back(cand);
                chosen.insert(chosen.end(), qs.begin(), qs.end());
                found = true;
                break;
            }
        }
        if (!found) {
            out.empty_cells.push_back(std::size_t(cell));
        }
    }

    if (!out.empty_cells.empty()) {
        out.ok = false;
        return out;
    }
    std::sort(chosen.begin(), chosen.end());
    chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
    out.r0 = Region::from_indices(std::move(chosen));
    out.ok = true;
    return out;
}

namespace {

// multilinear blend of 2^m corner positions, unwrapped to the frame of the
// base corner
std::vector<double> blend_corners(const std::vector<std::vector<int>>& corners,
                                  const std::vector<double>& t) {
    const std::size_t dim = corners[0].size();
    std::vector<double> pos(dim, 0.0);
    for (std::size_t b = 0; b < corners.size(); ++b) {
        double w = 1.0;
        for (std::size_t i = 0; i < t.size(); ++i) {
            w *= ((b >> i) & 1u) ? t[i] : (1.0 - t[i]);
        }
        for (std::size_t ax = 0; ax < dim; ++ax) {
            pos[ax] += w * corners[b][ax];
        }
    }
    return pos;
}

} // namespace

Partition skewed_tiling_from_balls(const LatticeGeometry& geo,
                                   const RandomCellResult& balls, int width) {
    if (!balls.ok) {
        throw std::invalid_argument("skewed_tiling_from_balls: ball placement failed");
    }
    const int dim = geo.dim;
    const std::size_t n = geo.num_qubits();
    const auto& cells = balls.cells_per_axis;
    long total_cells = 1;
    for (int ax = 0; ax < dim; ++ax) {
        total_cells *= cells[std::size_t(ax)];
    }
    if (long(balls.centers.size()) != total_cells) {
        throw std::invalid_argument("skewed_tiling_from_balls: center count mismatch");
    }

    auto center_at = [&](std::vector<int> idx) -> std::vector<int> {
        long flat = 0;
        for (int ax = 0; ax < dim; ++ax) {
            int v = idx[std::size_t(ax)] % cells[std::size_t(ax)];
            if (v < 0) {
                v += cells[std::size_t(ax)];
            }
            flat = flat * cells[std::size_t(ax)] + v;
        }
        return balls.centers[std::size_t(flat)];
    };

    // unwrap a corner near the base corner (shift by ±extent per axis)
    auto unwrap = [&](const std::vector<int>& base, std::vector<int> c,
                      const std::vector<int>& idx, const std::vector<int>& base_idx) {
        for (int ax = 0; ax < dim; ++ax) {
            if (idx[std::size_t(ax)] >= cells[std::size_t(ax)] &&
                c[std::size_t(ax)] <= base[std::size_t(ax)]) {
                c[std::size_t(ax)] += geo.extent;
            }
            (void)base_idx;
        }
        return c;
    };

    // rasterize fattened m-faces of the center grid
    std::vector<int> assigned(n, -1); // face dimension per qubit, -1 = none
    const int steps_per_unit = 2;

    std::vector<int> idx(std::size_t(dim), 0);
    auto for_each_cell = [&](auto&& body) {
        std::fill(idx.begin(), idx.end(), 0);
        while (true) {
            body(idx);
            int ax = dim - 1;
            while (ax >= 0) {
                if (++idx[std::size_t(ax)] < cells[std::size_t(ax)]) {
                    break;
                }
                idx[std::size_t(ax)] = 0;
                --ax;
            }
            if (ax < 0) {
                break;
            }
        }
    };

    auto mark_near = [&](const std::vector<double>& pos, int face_dim) {
        for (std::size_t q = 0; q < n; ++q) {
            if (assigned[q] >= 0 && assigned[q] <= face_dim) {
                continue;
            }
            int d = 0;
            for (int ax = 0; ax < dim; ++ax) {
                double dd = std::abs(double(geo.coord(q, ax)) - pos[std::size_t(ax)]);
                if (geo.periodic[std::size_t(ax)]) {
                    dd = std::min(dd, double(geo.extent) - dd);
                }
                d = std::max(d, int(std::floor(dd + 0.5)));
            }
            if (d <= width) {
                assigned[q] = face_dim;
            }
        }
    };

    for (int m = 1; m < dim; ++m) {
        // all m-subsets of axes
        std::vector<int> axes(std::size_t(m));
        for (int i = 0; i < m; ++i) {
            axes[std::size_t(i)] = i;
        }
        while (true) {
            for_each_cell([&](const std::vector<int>& base_idx) {
                // corners of the face spanned by `axes` at base_idx
                std::vector<std::vector<int>> corners;
                const std::vector<int> base = center_at(base_idx);
                for (std::size_t b = 0; b < (std::size_t(1) << m); ++b) {
                    std::vector<int> ci = base_idx;
                    for (int i = 0; i < m; ++i) {
                        if ((b >> i) & 1u) {
                            ci[std::size_t(axes[std::size_t(i)])] += 1;
                        }
                    }
                    corners.push_back(unwrap(base, center_at(ci), ci, base_idx));
                }
                // parameter grid dense enough to not skip lattice sites
                int max_span = 1;
                for (const auto& c : corners) {
                    for (int ax = 0; ax < dim; ++ax) {
                        max_span = std::max(max_span,
                                            std::abs(c[std::size_t(ax)] -
                                                     base[std::size_t(ax)]));
                    }
                }
                const int steps = std::max(1, max_span * steps_per_unit);
                std::vector<int> ti(std::size_t(m), 0);
                while (true) {
                    std::vector<double> t(std::size_t(m));
                    for (int i = 0; i < m; ++i) {
                        t[std::size_t(i)] = double(ti[std::size_t(i)]) / steps;
                    }
                    mark_near(blend_corners(corners, t), m);
                    int i = m - 1;
                    while (i >= 0) {
                        if (++ti[std::size_t(i)] <= steps) {
                            break;
                        }
                        ti[std::size_t(i)] = 0;
                        --i;
                    }
                    if (i < 0) {
                        break;
                    }
                }
            });
            // next axis subset
            int i = m - 1;
            while (i >= 0 && axes[std::size_t(i)] == dim - m + i) {
                --i;
            }
            if (i < 0) {
                break;
            }
            ++axes[std::size_t(i)];
            for (int j = i + 1; j < m; ++j) {
                axes[std::size_t(j)] = axes[std::size_t(j - 1)] + 1;
            }
        }
    }

    Partition p;
    p.r0 = balls.r0;
    p.metadata["scheme"] = "skewed-tiling";
    p.metadata["width"] = std::to_string(width);
    std::vector<std::vector<std::size_t>> buckets(std::size_t(dim));
    for (std::size_t q = 0; q < n; ++q) {
        if (balls.r0.contains(q)) {
            continue; // R0 wins
        }
        const int m = assigned[q] < 0 ? dim : assigned[q];
        buckets[std::size_t(m - 1)].push_back(q);
    }
    for (int m = 1; m <= dim; ++m) {
        p.regions.push_back(Region::from_indices(std::move(buckets[std::size_t(m - 1)])));
    }
    return p;
}

} // namespace qeclab
