#include "rcd/oracle.hpp"

#include <algorithm>
#include <functional>

#include "rcd/confounding.hpp"

namespace rcd {

std::size_t EffectPartition::nonempty_classes() const {
    return static_cast<std::size_t>(
        std::count_if(class_sizes.begin(), class_sizes.end(), [](std::size_t c) { return c > 0; }));
}

EffectPartition partition_of(const RowColumnDesign& design, PartitionSource source) {
    if (source == PartitionSource::Word) {
        throw BadShapeError("word partitions take the word overload");
    }
    EffectPartition part;
    part.source = source;
    part.class_of.resize(design.cell_count());
    const std::size_t classes =
        source == PartitionSource::Row ? design.row_count() : design.col_count();
    part.class_sizes.assign(classes, 0);
    for (std::size_t i = 0; i < design.row_count(); ++i) {
        for (std::size_t j = 0; j < design.col_count(); ++j) {
            std::size_t cls = source == PartitionSource::Row ? i : j;
            part.class_of[i * design.col_count() + j] = static_cast<std::uint32_t>(cls);
            ++part.class_sizes[cls];
        }
    }
    return part;
}

EffectPartition partition_of(const RowColumnDesign& design, const Word& word) {
    if (word.coeffs.size() != design.n()) {
        throw BadShapeError("word length does not match the factor count");
    }
    PrimeField f(design.s());
    EffectPartition part;
    part.source = PartitionSource::Word;
    part.word = word;
    part.class_of.resize(design.cell_count());
    part.class_sizes.assign(design.s(), 0);
    for (std::size_t i = 0; i < design.row_count(); ++i) {
        for (std::size_t j = 0; j < design.col_count(); ++j) {
            Residue value = dot(f, word.coeffs, design.cell(i, j));
            part.class_of[i * design.col_count() + j] = value;
            ++part.class_sizes[value];
        }
    }
    return part;
}

bool orthogonal(const EffectPartition& a, const EffectPartition& b) {
    if (a.cell_count() != b.cell_count()) {
        throw BadShapeError("partitions come from different designs");
    }
    const std::size_t n_cells = a.cell_count();
    const std::size_t ca = a.class_sizes.size();
    const std::size_t cb = b.class_sizes.size();
    std::vector<unsigned long long> counts(ca * cb, 0);
    for (std::size_t cell = 0; cell < n_cells; ++cell) {
        ++counts[a.class_of[cell] * cb + b.class_of[cell]];
    }
    for (std::size_t i = 0; i < ca; ++i) {
        for (std::size_t j = 0; j < cb; ++j) {
            unsigned long long expected =
                static_cast<unsigned long long>(a.class_sizes[i]) * b.class_sizes[j];
            if (counts[i * cb + j] * n_cells != expected) return false;
        }
    }
    return true;
}

OracleReport oracle_classify(const RowColumnDesign& design) {
    const unsigned s = design.s();
    const std::size_t n = design.n();
    PrimeField f(s);

    std::vector<Word> words;
    for (std::size_t i = 0; i < n; ++i) {
        Vec w(n, 0);
        w[i] = 1;
        words.push_back(Word{w});
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (Residue v = 1; v < s; ++v) {
                Vec w(n, 0);
                w[i] = 1;
                w[j] = v;
                words.push_back(Word{w});
            }
        }
    }

    EffectPartition rows = partition_of(design, PartitionSource::Row);
    EffectPartition cols = partition_of(design, PartitionSource::Column);
    std::vector<EffectPartition> parts;
    parts.reserve(words.size());
    for (const Word& w : words) parts.push_back(partition_of(design, w));

    std::vector<bool> clean(words.size(), true);
    for (std::size_t e = 0; e < parts.size(); ++e) {
        if (parts[e].nonempty_classes() != s) clean[e] = false;  // degenerate: defining word
        if (clean[e] && !(orthogonal(parts[e], rows) && orthogonal(parts[e], cols))) {
            clean[e] = false;
        }
    }
    for (std::size_t e = 0; e < parts.size(); ++e) {
        for (std::size_t other = e + 1; other < parts.size(); ++other) {
            if (!clean[e] && !clean[other]) continue;
            if (!orthogonal(parts[e], parts[other])) {
                clean[e] = false;
                clean[other] = false;
            }
        }
    }

    OracleReport report;
    report.s = s;
    report.n = n;
    std::size_t e = 0;
    for (std::size_t i = 0; i < n; ++i, ++e) report.main_unconfounded.push_back(clean[e]);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            std::vector<bool> comps;
            bool all = true;
            for (Residue v = 1; v < s; ++v, ++e) {
                comps.push_back(clean[e]);
                all = all && clean[e];
            }
            report.component_unconfounded.push_back(std::move(comps));
            report.pair_unconfounded.push_back(all);
        }
    }
    return report;
}

namespace {

// Canonical bases of all dim-dimensional subspaces of GF(s)^n: full-rank
// reduced-echelon dim x n matrices, enumerated pivot set by pivot set with the
// free entries counting base s. Deterministic order.
void for_each_canonical_basis(const PrimeField& f, std::size_t dim, std::size_t n,
                              const std::function<void(const FieldMatrix&)>& fn) {
    const unsigned s = f.modulus();
    std::vector<std::size_t> pivots(dim);
    for (std::size_t i = 0; i < dim; ++i) pivots[i] = i;

    while (true) {
        // free positions: to the right of the row's pivot, not a pivot column
        std::vector<bool> is_pivot(n, false);
        for (std::size_t c : pivots) is_pivot[c] = true;
        std::vector<std::pair<std::size_t, std::size_t>> free_pos;
        for (std::size_t r = 0; r < dim; ++r) {
            for (std::size_t c = pivots[r] + 1; c < n; ++c) {
                if (!is_pivot[c]) free_pos.emplace_back(r, c);
            }
        }

        FieldMatrix m(f, dim, n);
        for (std::size_t r = 0; r < dim; ++r) m(r, pivots[r]) = 1;
        std::vector<Residue> digits(free_pos.size(), 0);
        while (true) {
            for (std::size_t i = 0; i < free_pos.size(); ++i) {
                m(free_pos[i].first, free_pos[i].second) = digits[i];
            }
            fn(m);
            bool wrapped = true;
            for (std::size_t pos = digits.size(); pos-- > 0;) {
                if (digits[pos] + 1u < s) {
                    ++digits[pos];
                    wrapped = false;
                    break;
                }
                digits[pos] = 0;
            }
            if (wrapped) break;
        }

        // next pivot combination
        std::size_t i = dim;
        bool done = false;
        while (i > 0) {
            --i;
            if (pivots[i] != i + n - dim) break;
            if (i == 0) done = true;
        }
        if (done) break;
        ++pivots[i];
        for (std::size_t j = i + 1; j < dim; ++j) pivots[j] = pivots[j - 1] + 1;
    }
}

}  // namespace

SearchResult exhaustive_optimum(unsigned s, std::size_t p, std::size_t q, std::size_t n,
                                unsigned long long cap) {
    PrimeField f(s);
    if (p < 1 || q < 1 || p + q > n) throw BadShapeError("need p, q >= 1 and p + q <= n");

    unsigned long long raw = 1;
    for (std::size_t i = 0; i < (p + q) * n; ++i) {
        if (raw > cap / s) {
            throw SearchSpaceTooLargeError("raw candidate space s^((p+q)n) exceeds the cap of " +
                                           std::to_string(cap));
        }
        raw *= s;
    }
    if (raw > cap) {
        throw SearchSpaceTooLargeError("raw candidate space " + std::to_string(raw) +
                                       " exceeds the cap of " + std::to_string(cap));
    }

    std::vector<FieldMatrix> col_bases;
    for_each_canonical_basis(f, p, n, [&](const FieldMatrix& m) { col_bases.push_back(m); });
    std::vector<FieldMatrix> row_bases;
    if (q == p) {
        row_bases = col_bases;
    } else {
        for_each_canonical_basis(f, q, n, [&](const FieldMatrix& m) { row_bases.push_back(m); });
    }

    SearchResult result;
    for (const FieldMatrix& gc : col_bases) {
        for (const FieldMatrix& gr : row_bases) {
            ++result.candidates;
            FieldMatrix stacked = FieldMatrix::vcat(gc, gr);
            if (rank_of(stacked) != p + q) continue;
            ArrayGeneratorMatrix agm = ArrayGeneratorMatrix::validated(s, p, q, std::move(stacked));
            ConfoundingReport report = classify(agm);
            if (!report.mains_clean) continue;
            ++result.admissible;
            if (!result.best || report.unconfounded_2fi > result.best->unconfounded_2fi) {
                result.best = SearchOptimum{report.unconfounded_2fi, agm};
            }
        }
    }
    return result;
}

}  // namespace rcd
