#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rcd/errors.hpp"

namespace rcd {

using Residue = std::uint16_t;
using Vec = std::vector<Residue>;

// Arithmetic in GF(s) for a prime s. Residues live in [0, s); every result is
// reduced eagerly. Products go through 64-bit intermediates, so any prime that
// fits in 16 bits is safe.
class PrimeField {
public:
    explicit PrimeField(unsigned modulus);

    Residue modulus() const noexcept { return modulus_; }

    Residue reduce(long long value) const noexcept;
    Residue add(Residue a, Residue b) const noexcept;
    Residue sub(Residue a, Residue b) const noexcept;
    Residue neg(Residue a) const noexcept;
    Residue mul(Residue a, Residue b) const noexcept;
    // Inverse by extended Euclid (no special case at s = 2). Throws on zero.
    Residue inv(Residue a) const;

    bool operator==(const PrimeField&) const = default;

private:
    Residue modulus_;
};

bool is_zero_vec(const Vec& v);
Vec add(const PrimeField& f, const Vec& a, const Vec& b);
Vec scale(const PrimeField& f, Residue c, const Vec& a);
Residue dot(const PrimeField& f, const Vec& a, const Vec& b);

// Dense row-major matrix over GF(s). Entries are always reduced residues.
class FieldMatrix {
public:
    FieldMatrix(PrimeField field, std::size_t rows, std::size_t cols);

    // Builds from integer rows (negatives and values >= s are reduced mod s).
    static FieldMatrix from_rows(PrimeField field, const std::vector<std::vector<long long>>& rows);

    static FieldMatrix identity(PrimeField field, std::size_t n);
    static FieldMatrix zero(PrimeField field, std::size_t rows, std::size_t cols);
    static FieldMatrix ones(PrimeField field, std::size_t rows, std::size_t cols);
    static FieldMatrix column(PrimeField field, const Vec& v);
    static FieldMatrix unit_column(PrimeField field, std::size_t dim, std::size_t i);
    static FieldMatrix hcat(const FieldMatrix& a, const FieldMatrix& b);
    static FieldMatrix vcat(const FieldMatrix& a, const FieldMatrix& b);

    const PrimeField& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Residue operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    Residue& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

    Vec row(std::size_t r) const;
    Vec col(std::size_t c) const;
    FieldMatrix row_slice(std::size_t first, std::size_t count) const;
    FieldMatrix transposed() const;
    FieldMatrix plus(const FieldMatrix& other) const;
    FieldMatrix times(const FieldMatrix& other) const;
    Vec apply(const Vec& v) const;  // m * v

    bool operator==(const FieldMatrix&) const = default;

private:
    PrimeField field_;
    std::size_t rows_;
    std::size_t cols_;
    Vec entries_;
};

struct RrefResult {
    FieldMatrix echelon;                  // the unique reduced row echelon form
    std::size_t rank;
    std::vector<std::size_t> pivot_cols;  // strictly increasing
};

RrefResult rref(const FieldMatrix& m);
std::size_t rank_of(const FieldMatrix& m);

// Basis of {v : m v = 0}, one vector per free column in ascending column
// order, each normalized so its first nonzero entry is 1.
std::vector<Vec> nullspace_basis(const FieldMatrix& m);

// True iff the selected columns are linearly independent; the empty subset is
// independent. Indices must be distinct and in range.
bool columns_independent(const FieldMatrix& m, std::span<const std::size_t> subset);

// True iff every t-subset of columns is independent. Subsets are visited in
// lexicographic order with a short-circuit on the first dependent one.
bool max_independent_check(const FieldMatrix& m, std::size_t t);

}  // namespace rcd
