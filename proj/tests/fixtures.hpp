#pragma once

// Golden inputs shared by the unit and acceptance suites: two fully analyzed
// 3^7 generator matrices plus the reference instances of every construction
// branch, with expected analysis facts frozen alongside.

#include <string>
#include <vector>

#include "rcd/agm.hpp"
#include "rcd/constructions.hpp"

namespace fixtures {

using rcd::ArrayGeneratorMatrix;
using rcd::DesignKind;
using rcd::FieldMatrix;
using rcd::PrimeField;

inline ArrayGeneratorMatrix make(unsigned s, std::size_t p, std::size_t q,
                                 const std::vector<std::vector<long long>>& rows) {
    return ArrayGeneratorMatrix::validated(s, p, q, FieldMatrix::from_rows(PrimeField(s), rows));
}

// s=3, 3^3 x 3^2 rows-by-columns, n=7, resolution IV, efficiency 1/2.
inline ArrayGeneratorMatrix golden_res4() {
    return make(3, 3, 2,
                {{1, 0, 0, 2, 2, 1, 0},
                 {1, 1, 2, 1, 2, 0, 0},
                 {2, 2, 2, 2, 0, 0, 1},
                 {1, 1, 1, 0, 1, 0, 1},
                 {0, 1, 2, 1, 0, 1, 1}});
}

inline const std::vector<std::string>& golden_res4_words() {
    static const std::vector<std::string> words{"BCDEF2", "BC2D2EG2", "BEFG", "CDFG2"};
    return words;
}

inline const std::vector<std::string>& golden_res4_unconfounded_pairs() {
    static const std::vector<std::string> pairs{"AxB", "AxC", "AxD", "AxF", "AxG",
                                                "BxC", "BxD", "CxE", "DxE"};
    return pairs;
}

inline const std::vector<std::string>& golden_res4_row_confounded_pairs() {
    static const std::vector<std::string> pairs{"AxE", "BxG", "DxF"};
    return pairs;
}

// Published layout of the expanded golden_res4 design (rows and columns were
// shuffled for publication, so only set-level equality is promised): the cells
// of one full row block and one full column block.
inline const std::vector<std::string>& golden_res4_first_row_cells() {
    static const std::vector<std::string> cells{
        "0000000", "1110101", "0121011", "1201112", "1022120",
        "2220202", "0212022", "2102221", "2011210"};
    return cells;
}

inline const std::vector<std::string>& golden_res4_first_col_cells() {
    static const std::vector<std::string> cells{
        "0000000", "1002210", "1121200", "2222001", "2120110", "0211010", "0221211",
        "2110212", "0010201", "2202202", "2001120", "2212100", "1111002", "1210220",
        "0122020", "0112122", "1220121", "0020102", "1101101", "1012111", "2011021",
        "2100011", "0201112", "2021222", "1022012", "1200022", "0102221"};
    return cells;
}

// Same parameters with the blocks swapped (s=3, 3^2 x 3^3): resolution V,
// efficiency 1.
inline ArrayGeneratorMatrix golden_res5() {
    return make(3, 2, 3,
                {{1, 1, 1, 0, 1, 0, 1},
                 {0, 1, 2, 1, 0, 1, 1},
                 {1, 0, 0, 2, 2, 1, 1},
                 {1, 1, 2, 1, 2, 0, 1},
                 {2, 2, 2, 2, 0, 0, 1}});
}

inline const std::vector<std::string>& golden_res5_words() {
    static const std::vector<std::string> words{"BCDEF2", "AB2D2EG2", "ACE2F2G2", "ABC2DFG2"};
    return words;
}

// One reference matrix per construction branch. `star_cols` counts trailing
// columns whose top-p block is a free balanced choice; everything else must
// match construct() bit-exactly.
struct ReferenceCase {
    std::string name;
    unsigned s;
    std::size_t p, q;
    DesignKind kind;
    std::size_t star_cols;
    ArrayGeneratorMatrix agm;
};

inline std::vector<ReferenceCase> reference_cases() {
    std::vector<ReferenceCase> cases;
    auto full = DesignKind::FullFactorial;
    auto frac = DesignKind::FractionalMinusOne;

    for (unsigned s : {3u, 5u, 7u}) {
        cases.push_back({"full p=1 s=" + std::to_string(s), s, 1, 2, full, 0,
                         make(s, 1, 2, {{1, 1, 1}, {1, 2, 1}, {1, 1, 2}})});
    }
    cases.push_back({"full p=2 s=3", 3, 2, 3, full, 1,
                     make(3, 2, 3,
                          {{1, 0, 1, 1, 1},
                           {0, 1, 2, 1, 1},
                           {1, 0, 2, 1, 0},
                           {0, 1, 2, 2, 0},
                           {0, 0, 0, 0, 1}})});
    cases.push_back({"full p=3 s=5", 5, 3, 4, full, 1,
                     make(5, 3, 4,
                          {{1, 0, 0, 1, 1, 2, 1},
                           {0, 1, 0, 1, 2, 1, 1},
                           {0, 0, 1, 2, 1, 1, 1},
                           {0, 0, 1, 3, 1, 1, 0},
                           {0, 1, 0, 1, 3, 1, 0},
                           {1, 0, 0, 1, 1, 3, 0},
                           {0, 0, 0, 0, 0, 0, 1}})});
    cases.push_back({"two-level p=1 q=3", 2, 1, 3, frac, 0,
                     make(2, 1, 3,
                          {{1, 1, 1, 1, 1}, {1, 0, 1, 1, 0}, {1, 1, 0, 1, 0}, {1, 1, 1, 0, 1}})});
    cases.push_back({"two-level p=2 q=3", 2, 2, 3, frac, 0,
                     make(2, 2, 3,
                          {{1, 0, 1, 0, 1, 1},
                           {0, 1, 1, 1, 0, 1},
                           {1, 0, 0, 0, 1, 0},
                           {0, 1, 1, 0, 0, 0},
                           {1, 1, 0, 1, 0, 1}})});
    cases.push_back({"two-level p=2 q=4", 2, 2, 4, frac, 0,
                     make(2, 2, 4,
                          {{1, 0, 1, 0, 1, 1, 1},
                           {0, 1, 1, 1, 0, 1, 0},
                           {1, 0, 0, 0, 1, 1, 0},
                           {0, 1, 1, 0, 0, 0, 0},
                           {1, 1, 0, 1, 0, 0, 0},
                           {0, 0, 0, 0, 0, 1, 1}})});
    cases.push_back({"two-level p=2 q=5", 2, 2, 5, frac, 2,
                     make(2, 2, 5,
                          {{1, 0, 1, 0, 1, 1, 1, 0},
                           {0, 1, 1, 1, 0, 1, 0, 1},
                           {1, 0, 0, 0, 1, 1, 0, 0},
                           {0, 1, 1, 0, 0, 1, 0, 0},
                           {1, 1, 0, 1, 0, 1, 0, 0},
                           {0, 0, 0, 0, 0, 1, 1, 0},
                           {0, 0, 0, 0, 0, 1, 0, 1}})});
    cases.push_back({"two-level p=3 q=4", 2, 3, 4, frac, 1,
                     make(2, 3, 4,
                          {{1, 0, 0, 0, 1, 1, 1, 1},
                           {0, 1, 0, 1, 0, 1, 1, 0},
                           {0, 0, 1, 1, 1, 0, 1, 0},
                           {1, 1, 1, 1, 0, 0, 0, 0},
                           {0, 1, 1, 0, 0, 1, 1, 0},
                           {0, 0, 1, 1, 1, 1, 0, 0},
                           {0, 0, 0, 0, 0, 0, 0, 1}})});
    for (unsigned s : {3u, 5u, 7u}) {
        cases.push_back({"odd p=1 s=" + std::to_string(s), s, 1, 2, frac, 0,
                         make(s, 1, 2, {{1, 1, 1, 2}, {1, 2, 1, 1}, {1, 1, 2, 1}})});
    }
    cases.push_back({"odd p=2 q=2 s=5", 5, 2, 2, frac, 0,
                     make(5, 2, 2,
                          {{1, 0, 1, 1, 1}, {0, 1, 3, 2, 1}, {1, 0, 2, 1, 2}, {0, 1, 3, 3, 2}})});
    cases.push_back({"odd p=2 q=3 s=3", 3, 2, 3, frac, 0,
                     make(3, 2, 3,
                          {{1, 0, 1, 1, 1, 1},
                           {0, 1, 2, 1, 1, 2},
                           {1, 0, 2, 1, 1, 0},
                           {0, 1, 2, 2, 0, 0},
                           {0, 0, 0, 0, 1, 1}})});
    cases.push_back({"odd p=2 q=4 s=5", 5, 2, 4, frac, 0,
                     make(5, 2, 4,
                          {{1, 0, 1, 1, 1, 1, 1},
                           {0, 1, 2, 1, 4, 3, 2},
                           {1, 0, 2, 1, 0, 0, 0},
                           {0, 1, 2, 2, 1, 0, 0},
                           {0, 0, 0, 0, 1, 1, 0},
                           {0, 0, 0, 0, 1, 2, 1}})});
    cases.push_back({"odd p=2 q=5 s=5", 5, 2, 5, frac, 3,
                     make(5, 2, 5,
                          {{1, 0, 1, 1, 1, 1, 0, 1},
                           {0, 1, 2, 1, 4, 0, 1, 3},
                           {1, 0, 2, 1, 1, 0, 0, 0},
                           {0, 1, 2, 2, 4, 0, 0, 0},
                           {0, 0, 0, 0, 1, 1, 0, 0},
                           {0, 0, 0, 0, 1, 0, 1, 0},
                           {0, 0, 0, 0, 1, 0, 0, 1}})});
    cases.push_back({"odd p=3 q=4 s=3", 3, 3, 4, frac, 1,
                     make(3, 3, 4,
                          {{1, 0, 0, 1, 1, 2, 1, 1},
                           {0, 1, 0, 1, 2, 1, 1, 1},
                           {0, 0, 1, 2, 1, 1, 1, 0},
                           {0, 0, 1, 0, 1, 1, 0, 0},
                           {0, 1, 0, 1, 0, 1, 2, 0},
                           {1, 0, 0, 1, 1, 0, 1, 0},
                           {0, 0, 0, 0, 0, 0, 0, 1}})});
    cases.push_back({"odd p=3 q=4 s=5", 5, 3, 4, frac, 1,
                     make(5, 3, 4,
                          {{1, 0, 0, 1, 1, 2, 1, 1},
                           {0, 1, 0, 1, 2, 1, 1, 1},
                           {0, 0, 1, 2, 1, 1, 1, 0},
                           {0, 0, 1, 3, 1, 1, 3, 0},
                           {0, 1, 0, 1, 3, 1, 2, 0},
                           {1, 0, 0, 1, 1, 3, 1, 0},
                           {0, 0, 0, 0, 0, 0, 0, 1}})});
    return cases;
}

// The explicit two-level p=q=2 matrix (n=5) that the p=2 family starts from.
inline ArrayGeneratorMatrix two_level_p2_q2() {
    return make(2, 2, 2, {{1, 1, 0, 1, 1}, {0, 1, 1, 1, 1}, {1, 1, 1, 0, 1}, {1, 0, 1, 1, 1}});
}

}  // namespace fixtures
