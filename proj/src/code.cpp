#include "qeclab/code.hpp"

#include "qeclab/gf2.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qeclab {

Region Region::from_indices(std::vector<std::size_t> qubits) {
    std::sort(qubits.begin(), qubits.end());
    for (std::size_t i = 1; i < qubits.size(); ++i) {
        if (qubits[i] == qubits[i - 1]) {
            throw std::invalid_argument("Region: repeated qubit index " +
                                        std::to_string(qubits[i]));
        }
    }
    Region r;
    r.qubits_ = std::move(qubits);
    return r;
}

Region Region::full(std::size_t n) {
    std::vector<std::size_t> q(n);
    for (std::size_t i = 0; i < n; ++i) {
        q[i] = i;
    }
    Region r;
    r.qubits_ = std::move(q);
    return r;
}

bool Region::contains(std::size_t q) const {
    return std::binary_search(qubits_.begin(), qubits_.end(), q);
}

Region Region::complement(std::size_t n) const {
    std::vector<std::size_t> out;
    out.reserve(n - qubits_.size());
    std::size_t j = 0;
    for (std::size_t q = 0; q < n; ++q) {
        if (j < qubits_.size() && qubits_[j] == q) {
            ++j;
        } else {
            out.push_back(q);
        }
    }
    Region r;
    r.qubits_ = std::move(out);
    return r;
}

Region Region::set_union(const Region& a, const Region& b) {
    std::vector<std::size_t> out;
    std::set_union(a.qubits_.begin(), a.qubits_.end(), b.qubits_.begin(),
                   b.qubits_.end(), std::back_inserter(out));
    Region r;
    r.qubits_ = std::move(out);
    return r;
}

bool Region::is_subset_of(const Region& o) const {
    return std::includes(o.qubits_.begin(), o.qubits_.end(), qubits_.begin(),
                         qubits_.end());
}

BitVec Region::mask(std::size_t n) const {
    BitVec m(n);
    for (std::size_t q : qubits_) {
        if (q >= n) {
            throw std::invalid_argument("Region: qubit index out of range");
        }
        m.set(q, true);
    }
    return m;
}

int LatticeGeometry::axis_distance(int a, int b, int axis) const {
    int d = std::abs(a - b);
    if (periodic[std::size_t(axis)]) {
        d = std::min(d, extent - d);
    }
    return d;
}

int LatticeGeometry::distance(std::size_t q1, std::size_t q2) const {
    int d = 0;
    for (int ax = 0; ax < dim; ++ax) {
        d = std::max(d, axis_distance(coord(q1, ax), coord(q2, ax), ax));
    }
    return d;
}

int LatticeGeometry::support_diameter(const std::vector<std::size_t>& support) const {
    int d = 0;
    for (std::size_t i = 0; i < support.size(); ++i) {
        for (std::size_t j = i + 1; j < support.size(); ++j) {
            d = std::max(d, distance(support[i], support[j]));
        }
    }
    return d;
}

const LatticeGeometry& SubsystemCode::geometry() const {
    if (!geometry_) {
        throw std::runtime_error("code has no lattice geometry");
    }
    return *geometry_;
}

namespace {

// leading column of an echelon row in (x|z) order
std::size_t leading_column(const PauliOperator& p) {
    const std::size_t n = p.num_qubits();
    return p.x().any() ? p.x().first_set() : n + p.z().first_set();
}

bool column_bit(const PauliOperator& p, std::size_t col) {
    const std::size_t n = p.num_qubits();
    return col < n ? p.x_bit(col) : p.z_bit(col - n);
}

// Representatives of span(space) modulo span(subgroup): reduce every row of
// `space` against an RREF echelon seeded with `subgroup`, collecting nonzero
// residuals. Deterministic; residuals are canonical modulo the subgroup.
std::vector<PauliOperator> quotient_representatives(const SymplecticBasis& space,
                                                    const SymplecticBasis& subgroup) {
    struct Entry {
        std::size_t pivot;
        PauliOperator row;
    };
    std::vector<Entry> echelon;
    for (const auto& r : subgroup.rows()) {
        echelon.push_back({leading_column(r), r});
    }
    std::sort(echelon.begin(), echelon.end(),
              [](const Entry& a, const Entry& b) { return a.pivot < b.pivot; });

    std::vector<PauliOperator> reps;
    for (const auto& b : space.rows()) {
        PauliOperator r = b;
        for (const auto& e : echelon) {
            if (column_bit(r, e.pivot)) {
                r = multiply(r, e.row);
            }
        }
        if (r.is_identity()) {
            continue;
        }
        const std::size_t pivot = leading_column(r);
        // keep the echelon in reduced form so a single pass stays exact
        for (auto& e : echelon) {
            if (column_bit(e.row, pivot)) {
                e.row = multiply(e.row, r);
            }
        }
        reps.push_back(r.sign_normalized());
        Entry entry{pivot, r};
        auto it = std::lower_bound(
            echelon.begin(), echelon.end(), entry,
            [](const Entry& a, const Entry& b) { return a.pivot < b.pivot; });
        echelon.insert(it, std::move(entry));
    }
    return reps;
}

} // namespace

SubsystemCode derive_structure(std::vector<PauliOperator> gauge_generators,
                               std::optional<LatticeGeometry> geometry,
                               std::string name) {
    if (gauge_generators.empty()) {
        throw std::invalid_argument("derive_structure: no gauge generators");
    }
    const std::size_t n = gauge_generators[0].num_qubits();
    for (const auto& g : gauge_generators) {
        if (g.num_qubits() != n) {
            throw std::invalid_argument("derive_structure: generator length mismatch");
        }
    }

    SymplecticBasis raw(n, gauge_generators);
    ReduceResult gred = row_reduce(raw);
    const std::size_t g = gred.rank;

    bool abelian = true;
    for (std::size_t i = 0; i < g && abelian; ++i) {
        for (std::size_t j = i + 1; j < g; ++j) {
            if (!commutes(gred.basis.row(i), gred.basis.row(j))) {
                abelian = false;
                break;
            }
        }
    }
    // for an abelian gauge group the generators themselves are the
    // stabilizer group; inconsistent signs have no valid codespace
    if (abelian && gred.contains_minus_identity) {
        throw std::invalid_argument(
            "derive_structure: generators multiply to -identity, "
            "stabilizer group would contain -1");
    }

    SymplecticBasis stab = center(gred.basis);
    const std::size_t s = stab.size();
    if ((g - s) % 2 != 0) {
        throw std::logic_error("derive_structure: g - s is odd");
    }
    const long k_signed = long(n) - long(s) - long(g - s) / 2;
    if (k_signed < 0) {
        throw std::logic_error("derive_structure: negative logical count");
    }
    const std::size_t k = std::size_t(k_signed);

    SymplecticBasis cg = centralizer(gred.basis);
    SymplecticBasis cs = centralizer(stab);

    std::vector<PauliOperator> bare_reps = quotient_representatives(cg, stab);
    std::vector<PauliOperator> dressed_reps = quotient_representatives(cs, gred.basis);
    if (bare_reps.size() != 2 * k || dressed_reps.size() != 2 * k) {
        throw std::logic_error("derive_structure: logical rank mismatch");
    }

    if (geometry) {
        if (geometry->num_qubits() != n) {
            throw std::invalid_argument("derive_structure: geometry qubit count mismatch");
        }
        geometry->generator_supports.clear();
        for (const auto& gen : gauge_generators) {
            geometry->generator_supports.push_back(gen.support());
        }
        for (const auto& sup : geometry->generator_supports) {
            if (geometry->support_diameter(sup) > geometry->xi) {
                throw std::invalid_argument(
                    "derive_structure: generator support exceeds declared xi");
            }
        }
    }

    SubsystemCode code;
    code.n_ = n;
    code.k_ = k;
    code.name_ = std::move(name);
    code.gauge_generators_ = std::move(gauge_generators);
    code.gauge_ = std::move(gred.basis);
    stab.normalize_signs();
    code.stabilizer_ = std::move(stab);
    code.bare_ = SymplecticBasis(n, std::move(bare_reps));
    code.dressed_ = SymplecticBasis(n, std::move(dressed_reps));
    code.geometry_ = std::move(geometry);
    return code;
}

SubsystemCode build_toric(int L) {
    if (L < 2) {
        throw std::invalid_argument("build_toric: L must be >= 2");
    }
    const std::size_t n = 2 * std::size_t(L) * std::size_t(L);
    auto edge0 = [L](int i, int j) {
        i = (i % L + L) % L;
        j = (j % L + L) % L;
        return 2 * std::size_t(i * L + j);
    };
    auto edge1 = [L](int i, int j) {
        i = (i % L + L) % L;
        j = (j % L + L) % L;
        return 2 * std::size_t(i * L + j) + 1;
    };

    std::vector<PauliOperator> gens;
    for (int i = 0; i < L; ++i) {
        for (int j = 0; j < L; ++j) {
            PauliOperator star(n);
            star.set_x(edge0(i, j), true);
            star.set_x(edge0(i - 1, j), true);
            star.set_x(edge1(i, j), true);
            star.set_x(edge1(i, j - 1), true);
            gens.push_back(star);
        }
    }
    for (int i = 0; i < L; ++i) {
        for (int j = 0; j < L; ++j) {
            PauliOperator plaq(n);
            plaq.set_z(edge0(i, j), true);
            plaq.set_z(edge1(i, j), true);
            plaq.set_z(edge0(i, j + 1), true);
            plaq.set_z(edge1(i + 1, j), true);
            gens.push_back(plaq);
        }
    }

    LatticeGeometry geo;
    geo.dim = 2;
    geo.extent = 2 * L;
    geo.periodic = {true, true};
    geo.xi = 2;
    geo.coords.resize(n * 2);
    for (int i = 0; i < L; ++i) {
        for (int j = 0; j < L; ++j) {
            const std::size_t q0 = edge0(i, j);
            geo.coords[q0 * 2] = 2 * i + 1;
            geo.coords[q0 * 2 + 1] = 2 * j;
            const std::size_t q1 = edge1(i, j);
            geo.coords[q1 * 2] = 2 * i;
            geo.coords[q1 * 2 + 1] = 2 * j + 1;
        }
    }
    return derive_structure(std::move(gens), std::move(geo),
                            "toric-" + std::to_string(L));
}

SubsystemCode build_reed_muller(int m) {
    if (m < 3) {
        throw std::invalid_argument("build_reed_muller: m must be >= 3");
    }
    const std::size_t n = (std::size_t(1) << m) - 1;

    // columns of H are the nonzero m-bit vectors 1..n
    GF2Matrix h(std::size_t(m), n);
    for (std::size_t c = 0; c < n; ++c) {
        const std::size_t v = c + 1;
        for (int r = 0; r < m; ++r) {
            if ((v >> r) & 1u) {
                h.set(std::size_t(r), c, true);
            }
        }
    }

    std::vector<PauliOperator> gens;
    for (int r = 0; r < m; ++r) {
        PauliOperator p(n);
        for (std::size_t c = 0; c < n; ++c) {
            if (h.get(std::size_t(r), c)) {
                p.set_x(c, true);
            }
        }
        gens.push_back(p);
    }

    // Z stabilizers: even-weight subcode of ker(H)
    std::vector<BitVec> ker = h.kernel_basis();
    std::size_t odd_idx = ker.size();
    for (std::size_t i = 0; i < ker.size(); ++i) {
        if (ker[i].popcount() % 2 == 1) {
            if (odd_idx == ker.size()) {
                odd_idx = i;
            } else {
                ker[i].xor_with(ker[odd_idx]);
            }
        }
    }
    for (std::size_t i = 0; i < ker.size(); ++i) {
        if (i == odd_idx) {
            continue;
        }
        PauliOperator p(n);
        for (std::size_t c = 0; c < n; ++c) {
            if (ker[i].get(c)) {
                p.set_z(c, true);
            }
        }
        gens.push_back(p);
    }
    return derive_structure(std::move(gens), std::nullopt,
                            "reed-muller-" + std::to_string(m));
}

SubsystemCode build_bacon_shor(int L) {
    if (L < 2) {
        throw std::invalid_argument("build_bacon_shor: L must be >= 2");
    }
    const std::size_t n = std::size_t(L) * std::size_t(L);
    auto q = [L](int i, int j) { return std::size_t(i * L + j); };

    std::vector<PauliOperator> gens;
    for (int i = 0; i < L; ++i) {
        for (int j = 0; j + 1 < L; ++j) {
            PauliOperator p(n);
            p.set_x(q(i, j), true);
            p.set_x(q(i, j + 1), true);
            gens.push_back(p);
        }
    }
    for (int i = 0; i + 1 < L; ++i) {
        for (int j = 0; j < L; ++j) {
            PauliOperator p(n);
            p.set_z(q(i, j), true);
            p.set_z(q(i + 1, j), true);
            gens.push_back(p);
        }
    }

    LatticeGeometry geo;
    geo.dim = 2;
    geo.extent = L;
    geo.periodic = {false, false};
    geo.xi = 1;
    geo.coords.resize(n * 2);
    for (int i = 0; i < L; ++i) {
        for (int j = 0; j < L; ++j) {
            geo.coords[q(i, j) * 2] = i;
            geo.coords[q(i, j) * 2 + 1] = j;
        }
    }
    return derive_structure(std::move(gens), std::move(geo),
                            "bacon-shor-" + std::to_string(L));
}

SubsystemCode build_haah_cubic(int L) {
    if (L < 2) {
        throw std::invalid_argument("build_haah_cubic: L must be >= 2");
    }
    const std::size_t n = 2 * std::size_t(L) * std::size_t(L) * std::size_t(L);
    auto site = [L](int i, int j, int k) {
        i = (i % L + L) % L;
        j = (j % L + L) % L;
        k = (k % L + L) % L;
        return std::size_t((i * L + j) * L + k);
    };

    // cubic code 1 in polynomial form: X-type acts with f = 1+x+y+z on the
    // first qubit and g = 1+xy+yz+zx on the second; Z-type is the antipode
    // pair (g-bar, f-bar)
    static const int f_off[4][3] = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    static const int g_off[4][3] = {{0, 0, 0}, {1, 1, 0}, {0, 1, 1}, {1, 0, 1}};

    std::vector<PauliOperator> gens;
    for (int i = 0; i < L; ++i) {
        for (int j = 0; j < L; ++j) {
            for (int k = 0; k < L; ++k) {
                PauliOperator gx(n);
                for (const auto& o : f_off) {
                    gx.set_x(2 * site(i + o[0], j + o[1], k + o[2]), true);
                }
                for (const auto& o : g_off) {
                    gx.set_x(2 * site(i + o[0], j + o[1], k + o[2]) + 1, true);
                }
                gens.push_back(gx);

                PauliOperator gz(n);
                for (const auto& o : g_off) {
                    gz.set_z(2 * site(i - o[0], j - o[1], k - o[2]), true);
                }
                for (const auto& o : f_off) {
                    gz.set_z(2 * site(i - o[0], j - o[1], k - o[2]) + 1, true);
                }
                gens.push_back(gz);
            }
        }
    }

    LatticeGeometry geo;
    geo.dim = 3;
    geo.extent = L;
    geo.periodic = {true, true, true};
    geo.xi = 2;
    geo.coords.resize(n * 3);
    for (int i = 0; i < L; ++i) {
        for (int j = 0; j < L; ++j) {
            for (int k = 0; k < L; ++k) {
                for (int b = 0; b < 2; ++b) {
                    const std::size_t q = 2 * site(i, j, k) + std::size_t(b);
                    geo.coords[q * 3] = i;
                    geo.coords[q * 3 + 1] = j;
                    geo.coords[q * 3 + 2] = k;
                }
            }
        }
    }
    return derive_structure(std::move(gens), std::move(geo),
                            "haah-" + std::to_string(L));
}

// ---------------------------------------------------------------------------
// interchange format (BNF in docs/formats.md)

std::string encode_code(const SubsystemCode& code) {
    std::ostringstream out;
    out << "format qeclab-code 1\n";
    if (!code.name().empty()) {
        out << "name " << code.name() << "\n";
    }
    out << "n " << code.num_qubits() << "\n";
    if (code.has_geometry()) {
        const LatticeGeometry& g = code.geometry();
        out << "geometry " << g.dim << " " << g.extent << "\n";
        out << "periodic";
        for (bool p : g.periodic) {
            out << " " << (p ? 1 : 0);
        }
        out << "\n";
        out << "xi " << g.xi << "\n";
    }
    out << "gauge " << code.gauge_generators().size() << "\n";
    for (const auto& gen : code.gauge_generators()) {
        out << gen.to_string() << "\n";
    }
    if (code.has_geometry()) {
        const LatticeGeometry& g = code.geometry();
        out << "coords\n";
        for (std::size_t q = 0; q < code.num_qubits(); ++q) {
            for (int ax = 0; ax < g.dim; ++ax) {
                out << (ax ? " " : "") << g.coord(q, ax);
            }
            out << "\n";
        }
    }
    return out.str();
}

namespace {

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& msg) {
    throw std::runtime_error("line " + std::to_string(line_no) + ": " + msg);
}

} // namespace

SubsystemCode decode_code(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;

    long n = -1;
    std::string name;
    bool have_format = false;
    std::optional<LatticeGeometry> geo;
    std::vector<PauliOperator> gens;
    bool have_coords = false;

    auto next_content_line = [&](std::string& out) {
        while (std::getline(in, line)) {
            ++line_no;
            const auto pos = line.find_first_not_of(" \t\r");
            if (pos == std::string::npos || line[pos] == '#') {
                continue;
            }
            out = line;
            return true;
        }
        return false;
    };

    std::string cur;
    while (next_content_line(cur)) {
        std::istringstream ls(cur);
        std::string key;
        ls >> key;
        if (key == "format") {
            std::string fmt;
            int ver = 0;
            ls >> fmt >> ver;
            if (fmt != "qeclab-code" || ver != 1) {
                parse_fail(line_no, "unsupported format '" + fmt + "'");
            }
            have_format = true;
        } else if (key == "name") {
            ls >> name;
        } else if (key == "n") {
            if (!(ls >> n) || n <= 0) {
                parse_fail(line_no, "invalid qubit count");
            }
        } else if (key == "geometry") {
            LatticeGeometry g;
            if (!(ls >> g.dim >> g.extent) || g.dim <= 0 || g.extent <= 0) {
                parse_fail(line_no, "invalid geometry directive");
            }
            g.periodic.assign(std::size_t(g.dim), false);
            geo = std::move(g);
        } else if (key == "periodic") {
            if (!geo) {
                parse_fail(line_no, "periodic before geometry");
            }
            for (int ax = 0; ax < geo->dim; ++ax) {
                int f = 0;
                if (!(ls >> f)) {
                    parse_fail(line_no, "periodic: expected one flag per axis");
                }
                geo->periodic[std::size_t(ax)] = f != 0;
            }
        } else if (key == "xi") {
            if (!geo) {
                parse_fail(line_no, "xi before geometry");
            }
            if (!(ls >> geo->xi) || geo->xi < 0) {
                parse_fail(line_no, "invalid xi");
            }
        } else if (key == "gauge") {
            if (n <= 0) {
                parse_fail(line_no, "gauge block before n");
            }
            long count = -1;
            if (!(ls >> count) || count <= 0) {
                parse_fail(line_no, "invalid gauge generator count");
            }
            for (long i = 0; i < count; ++i) {
                std::string row;
                if (!next_content_line(row)) {
                    parse_fail(line_no, "unexpected end of file inside gauge block");
                }
                std::istringstream rs(row);
                std::string tok;
                rs >> tok;
                PauliOperator p;
                try {
                    p = PauliOperator::from_string(tok);
                } catch (const std::exception& e) {
                    parse_fail(line_no, e.what());
                }
                if (p.num_qubits() != std::size_t(n)) {
                    parse_fail(line_no, "generator has wrong length");
                }
                gens.push_back(std::move(p));
            }
        } else if (key == "coords") {
            if (!geo) {
                parse_fail(line_no, "coords block before geometry");
            }
            if (n <= 0) {
                parse_fail(line_no, "coords block before n");
            }
            geo->coords.assign(std::size_t(n) * std::size_t(geo->dim), 0);
            for (long q = 0; q < n; ++q) {
                std::string row;
                if (!next_content_line(row)) {
                    parse_fail(line_no, "unexpected end of file inside coords block");
                }
                std::istringstream rs(row);
                for (int ax = 0; ax < geo->dim; ++ax) {
                    int c = 0;
                    if (!(rs >> c)) {
                        parse_fail(line_no, "coords: expected " +
                                                std::to_string(geo->dim) +
                                                " integers");
                    }
                    if (c < 0 || c >= geo->extent) {
                        parse_fail(line_no, "coordinate out of [0, extent)");
                    }
                    geo->coords[std::size_t(q) * std::size_t(geo->dim) +
                                std::size_t(ax)] = c;
                }
            }
            have_coords = true;
        } else {
            parse_fail(line_no, "unknown directive '" + key + "'");
        }
    }

    if (!have_format) {
        throw std::runtime_error("line 1: missing 'format qeclab-code 1' header");
    }
    if (n <= 0) {
        throw std::runtime_error("missing qubit count");
    }
    if (gens.empty()) {
        throw std::runtime_error("missing gauge block");
    }
    if (geo && !have_coords) {
        throw std::runtime_error("geometry declared but coords block missing");
    }
    return derive_structure(std::move(gens), std::move(geo), std::move(name));
}

void save_code(const SubsystemCode& code, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    out << encode_code(code);
}

SubsystemCode load_code(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return decode_code(buf.str());
}

} // namespace qeclab
