#include "qeclab/pauli.hpp"

#include "qeclab/gf2.hpp"

#include <stdexcept>

namespace qeclab {

PauliOperator::PauliOperator(BitVec x, BitVec z, int phase)
    : x_(std::move(x)), z_(std::move(z)) {
    if (x_.size() != z_.size()) {
        throw std::invalid_argument("PauliOperator: x/z length mismatch");
    }
    set_phase(phase);
}

PauliOperator PauliOperator::single_x(std::size_t n, std::size_t q) {
    PauliOperator p(n);
    p.set_x(q, true);
    return p;
}

PauliOperator PauliOperator::single_z(std::size_t n, std::size_t q) {
    PauliOperator p(n);
    p.set_z(q, true);
    return p;
}

PauliOperator PauliOperator::single_y(std::size_t n, std::size_t q) {
    PauliOperator p(n);
    p.set_x(q, true);
    p.set_z(q, true);
    p.set_phase(1); // Y = iXZ
    return p;
}

std::size_t PauliOperator::weight() const {
    BitVec u = x_;
    u.xor_with(z_);
    BitVec both = x_;
    both.and_with(z_);
    // |x or z| = |x xor z| + |x and z|
    return u.popcount() + both.popcount();
}

std::vector<std::size_t> PauliOperator::support() const {
    std::vector<std::size_t> s;
    for (std::size_t q = 0; q < num_qubits(); ++q) {
        if (x_.get(q) || z_.get(q)) {
            s.push_back(q);
        }
    }
    return s;
}

PauliOperator PauliOperator::sign_normalized() const {
    PauliOperator p = *this;
    BitVec both = x_;
    both.and_with(z_);
    p.set_phase(int(both.popcount() & 3u));
    return p;
}

std::string PauliOperator::to_string() const {
    BitVec both = x_;
    both.and_with(z_);
    const int y_count = int(both.popcount() & 3u);
    const int sign = ((phase_ - y_count) % 4 + 4) % 4;
    static const char* prefix[4] = {"+", "+i", "-", "-i"};
    std::string out = prefix[sign];
    for (std::size_t q = 0; q < num_qubits(); ++q) {
        const bool xb = x_.get(q);
        const bool zb = z_.get(q);
        out += xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
    }
    return out;
}

PauliOperator PauliOperator::from_string(const std::string& s) {
    std::size_t pos = 0;
    int sign = 0;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        sign = (s[pos] == '-') ? 2 : 0;
        ++pos;
    }
    if (pos < s.size() && s[pos] == 'i') {
        sign += 1;
        ++pos;
    }
    const std::size_t n = s.size() - pos;
    PauliOperator p(n);
    int y_count = 0;
    for (std::size_t q = 0; q < n; ++q) {
        switch (s[pos + q]) {
            case 'I':
                break;
            case 'X':
                p.set_x(q, true);
                break;
            case 'Z':
                p.set_z(q, true);
                break;
            case 'Y':
                p.set_x(q, true);
                p.set_z(q, true);
                ++y_count;
                break;
            default:
                throw std::invalid_argument("Pauli string: bad letter '" +
                                            std::string(1, s[pos + q]) + "'");
        }
    }
    p.set_phase(sign + y_count);
    return p;
}

PauliOperator multiply(const PauliOperator& p, const PauliOperator& q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw std::invalid_argument("multiply: qubit count mismatch");
    }
    const bool reorder = BitVec::and_parity(p.z(), q.x());
    BitVec x = p.x();
    x.xor_with(q.x());
    BitVec z = p.z();
    z.xor_with(q.z());
    return PauliOperator(std::move(x), std::move(z),
                         p.phase() + q.phase() + (reorder ? 2 : 0));
}

PauliOperator inverse(const PauliOperator& p) {
    const bool overlap = BitVec::and_parity(p.x(), p.z());
    return PauliOperator(p.x(), p.z(), -p.phase() + (overlap ? 2 : 0));
}

bool commutes(const PauliOperator& p, const PauliOperator& q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw std::invalid_argument("commutes: qubit count mismatch");
    }
    return BitVec::and_parity(p.x(), q.z()) == BitVec::and_parity(p.z(), q.x());
}

SymplecticBasis::SymplecticBasis(std::size_t n, std::vector<PauliOperator> rows)
    : n_(n), rows_(std::move(rows)) {
    for (const auto& r : rows_) {
        if (r.num_qubits() != n_) {
            throw std::invalid_argument("SymplecticBasis: row length mismatch");
        }
    }
}

void SymplecticBasis::append(const PauliOperator& p) {
    if (p.num_qubits() != n_) {
        throw std::invalid_argument("SymplecticBasis: row length mismatch");
    }
    rows_.push_back(p);
    reduced_ = false;
}

void SymplecticBasis::normalize_signs() {
    for (auto& row : rows_) {
        row = row.sign_normalized();
    }
}

namespace {

// column order: x_0..x_{n-1}, z_0..z_{n-1}
inline bool column_bit(const PauliOperator& p, std::size_t col) {
    const std::size_t n = p.num_qubits();
    return col < n ? p.x_bit(col) : p.z_bit(col - n);
}

} // namespace

ReduceResult row_reduce(const SymplecticBasis& b) {
    const std::size_t n = b.num_qubits();
    std::vector<PauliOperator> work = b.rows();
    bool minus_one = false;

    std::size_t r = 0;
    for (std::size_t c = 0; c < 2 * n && r < work.size(); ++c) {
        std::size_t sel = work.size();
        for (std::size_t i = r; i < work.size(); ++i) {
            if (column_bit(work[i], c)) {
                sel = i;
                break;
            }
        }
        if (sel == work.size()) {
            continue;
        }
        std::swap(work[r], work[sel]);
        for (std::size_t i = 0; i < work.size(); ++i) {
            if (i != r && column_bit(work[i], c)) {
                work[i] = multiply(work[i], work[r]);
            }
        }
        ++r;
    }

    for (std::size_t i = r; i < work.size(); ++i) {
        if (work[i].phase() == 2) {
            minus_one = true;
        }
    }
    work.resize(r);

    ReduceResult out;
    out.basis = SymplecticBasis(n, std::move(work));
    out.basis.reduced_ = true;
    out.rank = r;
    out.contains_minus_identity = minus_one;
    return out;
}

SpanVerdict in_span(const PauliOperator& p, const SymplecticBasis& basis,
                    bool check_phase) {
    const SymplecticBasis* red = &basis;
    ReduceResult rr;
    if (!basis.reduced()) {
        rr = row_reduce(basis);
        red = &rr.basis;
    }
    const std::size_t n = red->num_qubits();
    if (p.num_qubits() != n) {
        throw std::invalid_argument("in_span: qubit count mismatch");
    }

    PauliOperator residual = p;
    PauliOperator product = PauliOperator::identity(n);
    for (const PauliOperator& row : red->rows()) {
        // leading column of this echelon row
        std::size_t lead = row.x().any() ? row.x().first_set()
                                         : n + row.z().first_set();
        if (column_bit(residual, lead)) {
            residual = multiply(residual, row);
            product = multiply(product, row);
        }
    }
    SpanVerdict v;
    v.in_span = residual.is_identity();
    if (v.in_span && check_phase) {
        v.phase_residual = ((p.phase() - product.phase()) % 4 + 4) % 4;
    }
    return v;
}

SymplecticBasis centralizer(const SymplecticBasis& b) {
    const std::size_t n = b.num_qubits();
    // commutation with row r is <v_x, r_z> + <v_z, r_x> = 0, i.e. v lies in
    // the kernel of the matrix whose rows are (r_z | r_x)
    GF2Matrix m(b.size(), 2 * n);
    for (std::size_t i = 0; i < b.size(); ++i) {
        const PauliOperator& r = b.row(i);
        for (std::size_t q = 0; q < n; ++q) {
            if (r.z_bit(q)) {
                m.set(i, q, true);
            }
            if (r.x_bit(q)) {
                m.set(i, n + q, true);
            }
        }
    }
    std::vector<PauliOperator> rows;
    for (const BitVec& v : m.kernel_basis()) {
        PauliOperator p(n);
        for (std::size_t q = 0; q < n; ++q) {
            if (v.get(q)) {
                p.set_x(q, true);
            }
            if (v.get(n + q)) {
                p.set_z(q, true);
            }
        }
        rows.push_back(p.sign_normalized());
    }
    ReduceResult rr = row_reduce(SymplecticBasis(n, std::move(rows)));
    return rr.basis;
}

SymplecticBasis center(const SymplecticBasis& b) {
    ReduceResult rr = row_reduce(b);
    const std::size_t m = rr.rank;
    const std::size_t n = b.num_qubits();

    // element sum_i c_i r_i commutes with every r_j iff c is in the kernel
    // of the Gram matrix of the symplectic form
    GF2Matrix gram(m, m);
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t i = 0; i < m; ++i) {
            if (!commutes(rr.basis.row(i), rr.basis.row(j))) {
                gram.set(j, i, true);
            }
        }
    }
    std::vector<PauliOperator> rows;
    for (const BitVec& c : gram.kernel_basis()) {
        PauliOperator p = PauliOperator::identity(n);
        for (std::size_t i = 0; i < m; ++i) {
            if (c.get(i)) {
                p = multiply(p, rr.basis.row(i));
            }
        }
        rows.push_back(p.sign_normalized());
    }
    ReduceResult red = row_reduce(SymplecticBasis(n, std::move(rows)));
    red.basis.normalize_signs();
    return red.basis;
}

} // namespace qeclab
