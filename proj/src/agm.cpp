#include "rcd/agm.hpp"

#include <algorithm>

namespace rcd {

Word make_word(const PrimeField& f, const Vec& coeffs) {
    std::size_t lead = 0;
    while (lead < coeffs.size() && coeffs[lead] == 0) ++lead;
    if (lead == coeffs.size()) throw BadShapeError("the zero vector is not a word");
    if (coeffs[lead] == 1) return Word{coeffs};
    return Word{scale(f, f.inv(coeffs[lead]), coeffs)};
}

std::size_t weight(const Word& w) {
    return static_cast<std::size_t>(
        std::count_if(w.coeffs.begin(), w.coeffs.end(), [](Residue x) { return x != 0; }));
}

std::string factor_label(std::size_t index, std::size_t n) {
    if (n <= 26) return std::string(1, static_cast<char>('A' + index));
    return "F" + std::to_string(index + 1);
}

std::string word_to_label(const Word& w) {
    const std::size_t n = w.coeffs.size();
    std::string label;
    for (std::size_t i = 0; i < n; ++i) {
        if (w.coeffs[i] == 0) continue;
        label += factor_label(i, n);
        if (w.coeffs[i] > 1) {
            if (n > 26) label += "^";
            label += std::to_string(w.coeffs[i]);
        }
    }
    return label;
}

ArrayGeneratorMatrix ArrayGeneratorMatrix::validated(unsigned s, std::size_t p, std::size_t q,
                                                     FieldMatrix raw) {
    PrimeField field(s);  // throws NotPrimeError for composite s
    if (raw.field() != field) {
        throw BadShapeError("matrix modulus does not match the requested level");
    }
    if (p < 1 || q < 1) throw BadShapeError("p and q must be at least 1");
    if (raw.rows() != p + q) {
        throw BadShapeError("expected " + std::to_string(p + q) + " rows, got " +
                            std::to_string(raw.rows()));
    }
    if (p + q > raw.cols()) {
        throw BadShapeError("p + q = " + std::to_string(p + q) + " exceeds factor count " +
                            std::to_string(raw.cols()) + " (replicated designs are rejected)");
    }
    std::size_t r = rank_of(raw);
    if (r != p + q) throw RankDeficientError(r, p + q);
    return ArrayGeneratorMatrix(p, q, std::move(raw));
}

Vec ArrayGeneratorMatrix::gc_column(std::size_t i) const {
    Vec out(p_);
    for (std::size_t r = 0; r < p_; ++r) out[r] = matrix_(r, i);
    return out;
}

Vec ArrayGeneratorMatrix::gr_column(std::size_t i) const {
    Vec out(q_);
    for (std::size_t r = 0; r < q_; ++r) out[r] = matrix_(p_ + r, i);
    return out;
}

ArrayGeneratorMatrix ArrayGeneratorMatrix::transposed_blocks() const {
    return validated(s(), q_, p_, FieldMatrix::vcat(gr(), gc()));
}

RowColumnDesign::RowColumnDesign(unsigned s, std::size_t p, std::size_t q, std::size_t n,
                                 std::vector<Vec> cells)
    : s_(s), p_(p), q_(q), n_(n), rows_(1), cols_(1), cells_(std::move(cells)) {
    for (std::size_t i = 0; i < p_; ++i) rows_ *= s_;
    for (std::size_t j = 0; j < q_; ++j) cols_ *= s_;
    if (cells_.size() != rows_ * cols_) throw BadShapeError("cell grid has wrong size");
}

namespace {

// All s^m combinations of the given generator rows. The combination index is
// read base-s with the first row as the most significant digit, so index 0 is
// the zero vector.
std::vector<Vec> span_combinations(const FieldMatrix& generators) {
    const PrimeField& f = generators.field();
    const unsigned s = f.modulus();
    const std::size_t m = generators.rows();
    std::size_t total = 1;
    for (std::size_t i = 0; i < m; ++i) total *= s;

    std::vector<Vec> out;
    out.reserve(total);
    std::vector<Residue> digits(m, 0);
    while (true) {
        Vec v(generators.cols(), 0);
        for (std::size_t r = 0; r < m; ++r) {
            if (digits[r] == 0) continue;
            for (std::size_t c = 0; c < generators.cols(); ++c) {
                v[c] = f.add(v[c], f.mul(digits[r], generators(r, c)));
            }
        }
        out.push_back(std::move(v));
        bool wrapped = true;
        for (std::size_t pos = m; pos-- > 0;) {
            if (digits[pos] + 1u < s) {
                ++digits[pos];
                wrapped = false;
                break;
            }
            digits[pos] = 0;
        }
        if (wrapped) break;
    }
    return out;
}

}  // namespace

RowColumnDesign expand(const ArrayGeneratorMatrix& agm, std::size_t cell_cap) {
    const unsigned s = agm.s();
    std::size_t cells = 1;
    for (std::size_t i = 0; i < agm.p() + agm.q(); ++i) {
        if (cells > cell_cap / s) {
            throw CellCapExceededError("expansion needs s^(p+q) cells, which exceeds the cap of " +
                                       std::to_string(cell_cap));
        }
        cells *= s;
    }
    if (cells > cell_cap) {
        throw CellCapExceededError("expansion needs " + std::to_string(cells) +
                                   " cells, which exceeds the cap of " + std::to_string(cell_cap));
    }

    std::vector<Vec> xs = span_combinations(agm.gc());
    std::vector<Vec> ys = span_combinations(agm.gr());
    std::vector<Vec> grid;
    grid.reserve(xs.size() * ys.size());
    for (const Vec& x : xs) {
        for (const Vec& y : ys) {
            grid.push_back(add(agm.field(), x, y));
        }
    }
    return RowColumnDesign(s, agm.p(), agm.q(), agm.n(), std::move(grid));
}

std::vector<Word> defining_subgroup(const ArrayGeneratorMatrix& agm) {
    const PrimeField& f = agm.field();
    std::vector<Vec> basis = nullspace_basis(agm.matrix());
    const std::size_t k = basis.size();
    const unsigned s = f.modulus();

    std::vector<Word> words;
    if (k == 0) return words;

    // Nonzero coefficient tuples up to scalar: fix the first nonzero
    // coefficient to 1, matching the canonical leading-one representatives.
    std::vector<Residue> coeff(k, 0);
    for (std::size_t lead = k; lead-- > 0;) {
        std::fill(coeff.begin(), coeff.end(), Residue(0));
        coeff[lead] = 1;
        while (true) {
            Vec w(agm.n(), 0);
            for (std::size_t i = lead; i < k; ++i) {
                if (coeff[i] == 0) continue;
                for (std::size_t c = 0; c < agm.n(); ++c) {
                    w[c] = f.add(w[c], f.mul(coeff[i], basis[i][c]));
                }
            }
            words.push_back(make_word(f, w));
            bool wrapped = true;
            for (std::size_t pos = k; pos-- > lead + 1;) {
                if (coeff[pos] + 1u < s) {
                    ++coeff[pos];
                    wrapped = false;
                    break;
                }
                coeff[pos] = 0;
            }
            if (wrapped) break;
        }
    }
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return words;
}

std::optional<std::size_t> resolution(const ArrayGeneratorMatrix& agm) {
    std::vector<Word> words = defining_subgroup(agm);
    if (words.empty()) return std::nullopt;
    std::size_t best = agm.n() + 1;
    for (const Word& w : words) best = std::min(best, weight(w));
    return best;
}

}  // namespace rcd
