#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rcd/agm.hpp"

namespace rcd {

enum class DesignKind { FullFactorial, FractionalMinusOne };

// One branch per construction family, keyed by level parity, design kind and
// the block-exponent range it covers.
enum class Branch {
    FullP1,
    FullP2,
    FullP3Plus,
    TwoLevelP1,
    TwoLevelP2Q2,
    TwoLevelP2Q3,
    TwoLevelP2Q4,
    TwoLevelP2Q5Plus,
    TwoLevelP3Plus,
    OddP1,
    OddP2Q2,
    OddP2Q3,
    OddP2Q4,
    OddP2Q5Plus,
    OddP3Plus,
};

std::string to_string(Branch branch);

// What each branch is warranted to satisfy. Prop2 branches have efficiency 1;
// Prop3 branches certify 2fi-optimality for p = 1; ExternalBound branches are
// optimal with efficiency < 1 and carry a pinned unconfounded-2fi count.
enum class ProvenCertificate { Prop2, Prop3, ExternalBound };

struct ConstructionRequest {
    unsigned s = 0;
    std::size_t p = 0;
    std::size_t q = 0;
    DesignKind kind = DesignKind::FullFactorial;
};

struct Construction {
    ArrayGeneratorMatrix agm;
    Branch branch;
    ProvenCertificate certificate;
    // pinned for ExternalBound branches (4, 11 and 8 unconfounded pairs)
    std::optional<std::size_t> expected_unconfounded_2fi;
    std::string note;
};

// Named helper blocks used by the constructions.
FieldMatrix antidiagonal_matrix(PrimeField f, std::size_t v);  // 1 where i + j = v + 1
FieldMatrix upper_ones_matrix(PrimeField f, std::size_t v);    // 1 where i <= j
FieldMatrix l_matrix(PrimeField f, std::size_t v);             // I + K (I + J)

// Greedily picks `extra` nonzero columns so the combined point histogram of
// (fixed | result) stays within one of balanced: each step appends the
// lexicographically smallest point whose running count is minimal. Requires
// the histogram of `fixed` to be within one of balanced already.
std::vector<Vec> select_star_columns(const FieldMatrix& fixed, std::size_t extra);

// Dispatches on (level parity, kind, p, q). Throws InadmissibleError for the
// parameter sets where no construction exists, UnsupportedParametersError for
// p > q (transpose the request instead), and NotPrimeError for composite s.
Construction construct(const ConstructionRequest& request);

}  // namespace rcd
