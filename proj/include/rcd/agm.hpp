#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rcd/gf.hpp"

namespace rcd {

// An n-vector over GF(s) identified up to nonzero scalar multiples; names an
// effect or a defining relation. Canonical: first nonzero coefficient is 1.
struct Word {
    Vec coeffs;

    auto operator<=>(const Word&) const = default;
};

Word make_word(const PrimeField& f, const Vec& coeffs);
std::size_t weight(const Word& w);

// Factor label, alphabetic for n <= 26 ("A".."Z"), positional ("F1"..) beyond.
std::string factor_label(std::size_t index, std::size_t n);
// Renders a word as its interaction name, e.g. (0,1,1,1,1,2,0) -> "BCDEF2".
std::string word_to_label(const Word& w);

// Validated (p+q) x n full-row-rank generator matrix over GF(s). The first p
// rows (gc) span the column key block of the expanded array, the last q rows
// (gr) span the row key block.
class ArrayGeneratorMatrix {
public:
    static ArrayGeneratorMatrix validated(unsigned s, std::size_t p, std::size_t q,
                                          FieldMatrix raw);

    const PrimeField& field() const noexcept { return matrix_.field(); }
    unsigned s() const noexcept { return matrix_.field().modulus(); }
    std::size_t p() const noexcept { return p_; }
    std::size_t q() const noexcept { return q_; }
    std::size_t n() const noexcept { return matrix_.cols(); }
    std::size_t k() const noexcept { return n() - p_ - q_; }

    const FieldMatrix& matrix() const noexcept { return matrix_; }
    FieldMatrix gc() const { return matrix_.row_slice(0, p_); }
    FieldMatrix gr() const { return matrix_.row_slice(p_, q_); }
    Vec column(std::size_t i) const { return matrix_.col(i); }
    Vec gc_column(std::size_t i) const;
    Vec gr_column(std::size_t i) const;

    // Swaps the two row blocks, exchanging the roles of rows and columns.
    ArrayGeneratorMatrix transposed_blocks() const;

    bool operator==(const ArrayGeneratorMatrix&) const = default;

private:
    ArrayGeneratorMatrix(std::size_t p, std::size_t q, FieldMatrix m)
        : p_(p), q_(q), matrix_(std::move(m)) {}
    std::size_t p_;
    std::size_t q_;
    FieldMatrix matrix_;
};

// The expanded s^p x s^q array; cell (i,j) holds the level combination
// x_i + y_j, where x ranges over the span of gc and y over the span of gr.
class RowColumnDesign {
public:
    RowColumnDesign(unsigned s, std::size_t p, std::size_t q, std::size_t n,
                    std::vector<Vec> cells);

    unsigned s() const noexcept { return s_; }
    std::size_t p() const noexcept { return p_; }
    std::size_t q() const noexcept { return q_; }
    std::size_t n() const noexcept { return n_; }
    std::size_t row_count() const noexcept { return rows_; }
    std::size_t col_count() const noexcept { return cols_; }
    std::size_t cell_count() const noexcept { return cells_.size(); }
    const Vec& cell(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }

private:
    unsigned s_;
    std::size_t p_, q_, n_, rows_, cols_;
    std::vector<Vec> cells_;
};

inline constexpr std::size_t kDefaultCellCap = 19683;  // 3^9

// Expansion enumerates each block's combinations by a base-s counter whose
// most significant digit multiplies the first generator row; index 0 is the
// zero combination, so cell (0,0) is the zero vector.
RowColumnDesign expand(const ArrayGeneratorMatrix& agm, std::size_t cell_cap = kDefaultCellCap);

// All (s^k - 1)/(s - 1) canonical words orthogonal to every row of the
// generator matrix, lexicographically sorted; empty when k = 0.
std::vector<Word> defining_subgroup(const ArrayGeneratorMatrix& agm);

// Minimum weight over the defining subgroup; nullopt (unbounded) when k = 0.
std::optional<std::size_t> resolution(const ArrayGeneratorMatrix& agm);

}  // namespace rcd
