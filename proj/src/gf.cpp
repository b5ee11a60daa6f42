#include "rcd/gf.hpp"

#include <algorithm>

namespace rcd {

namespace {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

}  // namespace

PrimeField::PrimeField(unsigned modulus) : modulus_(0) {
    if (modulus > 0xffffu) {
        throw NotPrimeError("modulus " + std::to_string(modulus) + " does not fit in 16 bits");
    }
    if (!is_prime(modulus)) {
        throw NotPrimeError("modulus " + std::to_string(modulus) + " is not prime");
    }
    modulus_ = static_cast<Residue>(modulus);
}

Residue PrimeField::reduce(long long value) const noexcept {
    long long r = value % modulus_;
    if (r < 0) r += modulus_;
    return static_cast<Residue>(r);
}

Residue PrimeField::add(Residue a, Residue b) const noexcept {
    std::uint32_t r = std::uint32_t(a) + b;
    if (r >= modulus_) r -= modulus_;
    return static_cast<Residue>(r);
}

Residue PrimeField::sub(Residue a, Residue b) const noexcept {
    return a >= b ? static_cast<Residue>(a - b) : static_cast<Residue>(a + modulus_ - b);
}

Residue PrimeField::neg(Residue a) const noexcept {
    return a == 0 ? 0 : static_cast<Residue>(modulus_ - a);
}

Residue PrimeField::mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>((std::uint64_t(a) * b) % modulus_);
}

Residue PrimeField::inv(Residue a) const {
    if (a == 0) {
        throw DesignError("division by zero in GF(" + std::to_string(modulus_) + ")");
    }
    long long t = 0, new_t = 1;
    long long r = modulus_, new_r = a;
    while (new_r != 0) {
        long long quot = r / new_r;
        t = std::exchange(new_t, t - quot * new_t);
        r = std::exchange(new_r, r - quot * new_r);
    }
    // r == gcd(a, s) == 1 since s is prime and a != 0
    return reduce(t);
}

bool is_zero_vec(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](Residue x) { return x == 0; });
}

Vec add(const PrimeField& f, const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw BadShapeError("vector length mismatch");
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
    return out;
}

Vec scale(const PrimeField& f, Residue c, const Vec& a) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(c, a[i]);
    return out;
}

Residue dot(const PrimeField& f, const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw BadShapeError("vector length mismatch");
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::uint64_t(a[i]) * b[i];
    return f.reduce(static_cast<long long>(acc % f.modulus()));
}

FieldMatrix::FieldMatrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, 0) {
    if (rows == 0 || cols == 0) {
        throw BadShapeError("matrix dimensions must be positive");
    }
}

FieldMatrix FieldMatrix::from_rows(PrimeField field,
                                   const std::vector<std::vector<long long>>& rows) {
    if (rows.empty() || rows.front().empty()) {
        throw BadShapeError("matrix dimensions must be positive");
    }
    FieldMatrix m(field, rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) {
            throw BadShapeError("ragged rows: row " + std::to_string(r) + " has " +
                                std::to_string(rows[r].size()) + " entries, expected " +
                                std::to_string(m.cols_));
        }
        for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = field.reduce(rows[r][c]);
    }
    return m;
}

FieldMatrix FieldMatrix::identity(PrimeField field, std::size_t n) {
    FieldMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

FieldMatrix FieldMatrix::zero(PrimeField field, std::size_t rows, std::size_t cols) {
    return FieldMatrix(field, rows, cols);
}

FieldMatrix FieldMatrix::ones(PrimeField field, std::size_t rows, std::size_t cols) {
    FieldMatrix m(field, rows, cols);
    std::fill(m.entries_.begin(), m.entries_.end(), Residue(1));
    return m;
}

FieldMatrix FieldMatrix::column(PrimeField field, const Vec& v) {
    FieldMatrix m(field, v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
}

FieldMatrix FieldMatrix::unit_column(PrimeField field, std::size_t dim, std::size_t i) {
    FieldMatrix m(field, dim, 1);
    m(i, 0) = 1;
    return m;
}

FieldMatrix FieldMatrix::hcat(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.field_ != b.field_ || a.rows_ != b.rows_) {
        throw BadShapeError("hcat: incompatible operands");
    }
    FieldMatrix m(a.field_, a.rows_, a.cols_ + b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t c = 0; c < a.cols_; ++c) m(r, c) = a(r, c);
        for (std::size_t c = 0; c < b.cols_; ++c) m(r, a.cols_ + c) = b(r, c);
    }
    return m;
}

FieldMatrix FieldMatrix::vcat(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.field_ != b.field_ || a.cols_ != b.cols_) {
        throw BadShapeError("vcat: incompatible operands");
    }
    FieldMatrix m(a.field_, a.rows_ + b.rows_, a.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t c = 0; c < a.cols_; ++c) m(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows_; ++r)
        for (std::size_t c = 0; c < a.cols_; ++c) m(a.rows_ + r, c) = b(r, c);
    return m;
}

Vec FieldMatrix::row(std::size_t r) const {
    return Vec(entries_.begin() + r * cols_, entries_.begin() + (r + 1) * cols_);
}

Vec FieldMatrix::col(std::size_t c) const {
    Vec out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

FieldMatrix FieldMatrix::row_slice(std::size_t first, std::size_t count) const {
    if (first + count > rows_ || count == 0) throw BadShapeError("row_slice out of range");
    FieldMatrix m(field_, count, cols_);
    for (std::size_t r = 0; r < count; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(first + r, c);
    return m;
}

FieldMatrix FieldMatrix::transposed() const {
    FieldMatrix m(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
    return m;
}

FieldMatrix FieldMatrix::plus(const FieldMatrix& other) const {
    if (field_ != other.field_ || rows_ != other.rows_ || cols_ != other.cols_) {
        throw BadShapeError("plus: incompatible operands");
    }
    FieldMatrix m(field_, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        m.entries_[i] = field_.add(entries_[i], other.entries_[i]);
    }
    return m;
}

FieldMatrix FieldMatrix::times(const FieldMatrix& other) const {
    if (field_ != other.field_ || cols_ != other.rows_) {
        throw BadShapeError("times: incompatible operands");
    }
    FieldMatrix m(field_, rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < other.cols_; ++c) {
            std::uint64_t acc = 0;
            for (std::size_t k = 0; k < cols_; ++k) {
                acc += std::uint64_t((*this)(r, k)) * other(k, c);
            }
            m(r, c) = field_.reduce(static_cast<long long>(acc % field_.modulus()));
        }
    }
    return m;
}

Vec FieldMatrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw BadShapeError("apply: vector length mismatch");
    Vec out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint64_t acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) acc += std::uint64_t((*this)(r, c)) * v[c];
        out[r] = field_.reduce(static_cast<long long>(acc % field_.modulus()));
    }
    return out;
}

RrefResult rref(const FieldMatrix& m) {
    const PrimeField& f = m.field();
    FieldMatrix e = m;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < e.cols() && r < e.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < e.rows() && e(pivot, c) == 0) ++pivot;
        if (pivot == e.rows()) continue;
        if (pivot != r) {
            for (std::size_t k = 0; k < e.cols(); ++k) std::swap(e(r, k), e(pivot, k));
        }
        Residue scale = f.inv(e(r, c));
        for (std::size_t k = c; k < e.cols(); ++k) e(r, k) = f.mul(scale, e(r, k));
        for (std::size_t i = 0; i < e.rows(); ++i) {
            if (i == r || e(i, c) == 0) continue;
            Residue factor = e(i, c);
            for (std::size_t k = c; k < e.cols(); ++k) {
                e(i, k) = f.sub(e(i, k), f.mul(factor, e(r, k)));
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return RrefResult{std::move(e), pivots.size(), std::move(pivots)};
}

std::size_t rank_of(const FieldMatrix& m) { return rref(m).rank; }

std::vector<Vec> nullspace_basis(const FieldMatrix& m) {
    const PrimeField& f = m.field();
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;

    std::vector<Vec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v(m.cols(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) {
            v[r.pivot_cols[i]] = f.neg(r.echelon(i, free));
        }
        // leading-one normalization keeps word lists canonical
        std::size_t lead = 0;
        while (v[lead] == 0) ++lead;
        if (v[lead] != 1) v = scale(f, f.inv(v[lead]), v);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool columns_independent(const FieldMatrix& m, std::span<const std::size_t> subset) {
    if (subset.empty()) return true;
    std::vector<bool> seen(m.cols(), false);
    for (std::size_t c : subset) {
        if (c >= m.cols()) {
            throw BadShapeError("column index " + std::to_string(c) + " out of range");
        }
        if (seen[c]) throw BadShapeError("duplicate column index " + std::to_string(c));
        seen[c] = true;
    }
    if (subset.size() > m.rows()) return false;
    FieldMatrix sub(m.field(), m.rows(), subset.size());
    for (std::size_t j = 0; j < subset.size(); ++j) {
        for (std::size_t r = 0; r < m.rows(); ++r) sub(r, j) = m(r, subset[j]);
    }
    return rank_of(sub) == subset.size();
}

bool max_independent_check(const FieldMatrix& m, std::size_t t) {
    if (t == 0) throw BadShapeError("subset size must be at least 1");
    if (t > m.cols()) {
        throw BadShapeError("subset size " + std::to_string(t) + " exceeds column count " +
                            std::to_string(m.cols()));
    }
    std::vector<std::size_t> idx(t);
    for (std::size_t i = 0; i < t; ++i) idx[i] = i;
    while (true) {
        if (!columns_independent(m, idx)) return false;
        // next combination, lexicographic
        std::size_t i = t;
        while (i > 0) {
            --i;
            if (idx[i] != i + m.cols() - t) break;
            if (i == 0) return true;
        }
        ++idx[i];
        for (std::size_t j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace rcd
