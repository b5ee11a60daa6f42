#pragma once

#include <cstdint>
#include <optional>

#include "rcd/agm.hpp"

namespace rcd {

enum class PartitionSource { Row, Column, Word };

// Cells of the expanded design grouped by row index, column index, or the
// value of a word on the cell's level combination.
struct EffectPartition {
    PartitionSource source = PartitionSource::Word;
    std::optional<Word> word;
    std::vector<std::uint32_t> class_of;  // cell index (row-major) -> class
    std::vector<std::size_t> class_sizes;

    std::size_t cell_count() const noexcept { return class_of.size(); }
    std::size_t nonempty_classes() const;
};

EffectPartition partition_of(const RowColumnDesign& design, PartitionSource source);
EffectPartition partition_of(const RowColumnDesign& design, const Word& word);

// Proportional-frequency condition: every class intersection has size
// |A_i| * |B_j| / N exactly. For the equal-class-size partitions produced by
// these coset designs this is equivalent to uncorrelated effect estimators,
// which is what makes this an independent check of the matrix classifier.
bool orthogonal(const EffectPartition& a, const EffectPartition& b);

// Unconfounded bits derived purely from the expanded design: an effect is
// unconfounded iff its partition has all s classes nonempty and is orthogonal
// to the row partition, the column partition, and every other effect partition
// (a coinciding partition fails orthogonality, which covers aliasing).
struct OracleReport {
    unsigned s = 0;
    std::size_t n = 0;
    std::vector<bool> main_unconfounded;                    // per factor
    std::vector<std::vector<bool>> component_unconfounded;  // per pair (lex), s-1 entries
    std::vector<bool> pair_unconfounded;                    // per pair (lex)
};

OracleReport oracle_classify(const RowColumnDesign& design);

struct SearchOptimum {
    std::size_t unconfounded_2fi = 0;
    ArrayGeneratorMatrix witness;
};

struct SearchResult {
    unsigned long long candidates = 0;  // basis pairs examined
    unsigned long long admissible = 0;  // full row rank with clean main effects
    std::optional<SearchOptimum> best;  // empty when no admissible matrix exists

    bool feasible() const noexcept { return best.has_value(); }
};

inline constexpr unsigned long long kDefaultSearchCap = 1ull << 24;

// Exhausts generator matrices up to block basis change: the column and row
// blocks are enumerated as canonical (reduced-echelon) subspace bases, joint
// full rank is required, and the classifier runs without expanding anything.
// The raw space s^((p+q) n) must stay within `cap`.
SearchResult exhaustive_optimum(unsigned s, std::size_t p, std::size_t q, std::size_t n,
                                unsigned long long cap = kDefaultSearchCap);

}  // namespace rcd
