#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "rcd/confounding.hpp"
#include "rcd/constructions.hpp"
#include "rcd/oracle.hpp"

using namespace rcd;

namespace {

Word word_of(const ArrayGeneratorMatrix& agm, std::initializer_list<std::pair<std::size_t, int>> terms) {
    Vec coeffs(agm.n(), 0);
    for (auto [factor, coeff] : terms) coeffs[factor] = agm.field().reduce(coeff);
    return make_word(agm.field(), coeffs);
}

bool classes_are_row_unions(const EffectPartition& part, const RowColumnDesign& design) {
    for (std::size_t i = 0; i < design.row_count(); ++i) {
        std::uint32_t cls = part.class_of[i * design.col_count()];
        for (std::size_t j = 1; j < design.col_count(); ++j) {
            if (part.class_of[i * design.col_count() + j] != cls) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("partitions") {
    ArrayGeneratorMatrix agm = fixtures::golden_res4();
    RowColumnDesign design = expand(agm);

    SUBCASE("row and column partitions have the grid shape") {
        EffectPartition rows = partition_of(design, PartitionSource::Row);
        CHECK(rows.class_sizes == std::vector<std::size_t>(27, 9));
        EffectPartition cols = partition_of(design, PartitionSource::Column);
        CHECK(cols.class_sizes == std::vector<std::size_t>(9, 27));
    }

    SUBCASE("effect word partitions split the cells evenly") {
        EffectPartition main_a = partition_of(design, word_of(agm, {{0, 1}}));
        CHECK(main_a.class_sizes == std::vector<std::size_t>(3, 81));
        CHECK(main_a.nonempty_classes() == 3);
    }

    SUBCASE("a defining word collapses to a single class of whole rows") {
        // B+E+F+G is orthogonal to the whole design
        EffectPartition part =
            partition_of(design, word_of(agm, {{1, 1}, {4, 1}, {5, 1}, {6, 1}}));
        CHECK(part.nonempty_classes() == 1);
        CHECK(part.class_sizes[0] == design.cell_count());
        CHECK(classes_are_row_unions(part, design));
    }

    SUBCASE("the row-confounded component of AxE is constant on rows") {
        EffectPartition part = partition_of(design, word_of(agm, {{0, 1}, {4, 2}}));
        CHECK(classes_are_row_unions(part, design));
        CHECK_FALSE(orthogonal(part, partition_of(design, PartitionSource::Row)));
        // the other component varies within rows and stays orthogonal to them
        EffectPartition other = partition_of(design, word_of(agm, {{0, 1}, {4, 1}}));
        CHECK(orthogonal(other, partition_of(design, PartitionSource::Row)));
    }
}

TEST_CASE("orthogonality") {
    ArrayGeneratorMatrix agm = fixtures::golden_res4();
    RowColumnDesign design = expand(agm);
    EffectPartition rows = partition_of(design, PartitionSource::Row);
    EffectPartition cols = partition_of(design, PartitionSource::Column);

    SUBCASE("rows against columns: one cell per intersection") {
        CHECK(orthogonal(rows, cols));
        CHECK(orthogonal(cols, rows));
    }

    SUBCASE("an unconfounded component is orthogonal to everything else") {
        EffectPartition ab = partition_of(design, word_of(agm, {{0, 1}, {1, 1}}));
        CHECK(orthogonal(ab, rows));
        CHECK(orthogonal(ab, cols));
        for (std::size_t i = 0; i < agm.n(); ++i) {
            for (std::size_t j = i + 1; j < agm.n(); ++j) {
                for (int v = 1; v <= 2; ++v) {
                    if (i == 0 && j == 1 && v == 1) continue;
                    EffectPartition other =
                        partition_of(design, word_of(agm, {{i, 1}, {j, v}}));
                    CHECK(orthogonal(ab, other));
                }
            }
            if (i != 0 && i != 1) {
                CHECK(orthogonal(ab, partition_of(design, word_of(agm, {{i, 1}}))));
            }
        }
    }

    SUBCASE("the trivial one-class partition is orthogonal to everything") {
        EffectPartition trivial =
            partition_of(design, word_of(agm, {{1, 1}, {4, 1}, {5, 1}, {6, 1}}));
        CHECK(orthogonal(trivial, rows));
        CHECK(orthogonal(trivial, cols));
        CHECK(orthogonal(trivial, partition_of(design, word_of(agm, {{0, 1}}))));
    }

    SUBCASE("full factorial: all distinct effect partitions are mutually orthogonal") {
        Construction full = construct({3, 2, 3, DesignKind::FullFactorial});
        RowColumnDesign grid = expand(full.agm);  // 243 cells
        std::vector<EffectPartition> parts;
        for (std::size_t i = 0; i < full.agm.n(); ++i) {
            parts.push_back(partition_of(grid, word_of(full.agm, {{i, 1}})));
            for (std::size_t j = i + 1; j < full.agm.n(); ++j) {
                for (int v = 1; v <= 2; ++v) {
                    parts.push_back(partition_of(grid, word_of(full.agm, {{i, 1}, {j, v}})));
                }
            }
        }
        for (std::size_t a = 0; a < parts.size(); ++a) {
            for (std::size_t b = a + 1; b < parts.size(); ++b) {
                CHECK(orthogonal(parts[a], parts[b]));
            }
        }
    }
}

TEST_CASE("oracle classification agrees with the published counts") {
    SUBCASE("golden resolution-IV design has exactly 9 clean pairs") {
        OracleReport oracle = oracle_classify(expand(fixtures::golden_res4()));
        for (bool bit : oracle.main_unconfounded) CHECK(bit);
        std::size_t clean =
            std::count(oracle.pair_unconfounded.begin(), oracle.pair_unconfounded.end(), true);
        CHECK(clean == 9);
    }

    SUBCASE("golden resolution-V design reaches the bound") {
        OracleReport oracle = oracle_classify(expand(fixtures::golden_res5()));
        std::size_t clean =
            std::count(oracle.pair_unconfounded.begin(), oracle.pair_unconfounded.end(), true);
        CHECK(clean == 18);
    }

    SUBCASE("two-level n=5 design keeps AB, AD, BC, CD") {
        ArrayGeneratorMatrix agm = fixtures::two_level_p2_q2();
        OracleReport oracle = oracle_classify(expand(agm));  // 32 cells
        std::set<std::string> clean;
        std::size_t idx = 0;
        for (std::size_t i = 0; i < agm.n(); ++i) {
            for (std::size_t j = i + 1; j < agm.n(); ++j, ++idx) {
                if (oracle.pair_unconfounded[idx]) {
                    clean.insert(factor_label(i, agm.n()) + "x" + factor_label(j, agm.n()));
                }
            }
        }
        CHECK(clean == std::set<std::string>{"AxB", "AxD", "BxC", "CxD"});
    }
}

TEST_CASE("oracle equals the matrix classifier on expandable fixtures") {
    std::vector<ArrayGeneratorMatrix> agms{fixtures::golden_res4(), fixtures::golden_res5(),
                                           fixtures::two_level_p2_q2()};
    for (const auto& ref : fixtures::reference_cases()) {
        std::size_t cells = 1;
        for (std::size_t i = 0; i < ref.p + ref.q; ++i) cells *= ref.s;
        if (cells <= 243) agms.push_back(ref.agm);
    }
    for (const ArrayGeneratorMatrix& agm : agms) {
        ConfoundingReport classifier = classify(agm);
        OracleReport brute = oracle_classify(expand(agm));
        for (std::size_t i = 0; i < agm.n(); ++i) {
            CHECK(classifier.mains[i].unconfounded() == brute.main_unconfounded[i]);
        }
        for (std::size_t idx = 0; idx < classifier.interactions.size(); ++idx) {
            CHECK(classifier.interactions[idx].unconfounded() == brute.pair_unconfounded[idx]);
            for (std::size_t v = 0; v < classifier.interactions[idx].components.size(); ++v) {
                CHECK(classifier.interactions[idx].components[v].unconfounded() ==
                      brute.component_unconfounded[idx][v]);
            }
        }
    }
}

TEST_CASE("oracle equals the matrix classifier on random generators") {
    // no resolution filter: degenerate inputs (short defining words, repeated
    // columns) must classify identically through both routes too
    std::mt19937 rng(20240605);
    int built = 0;
    while (built < 60) {
        unsigned s = (rng() % 2) ? 2u : 3u;
        std::size_t p = 1 + rng() % 2, q = 1 + rng() % 2;
        std::size_t n = p + q + rng() % 3;
        std::size_t cells = 1;
        for (std::size_t i = 0; i < p + q; ++i) cells *= s;
        if (cells > 243) continue;

        PrimeField f(s);
        FieldMatrix raw(f, p + q, n);
        for (std::size_t r = 0; r < p + q; ++r)
            for (std::size_t c = 0; c < n; ++c) raw(r, c) = static_cast<Residue>(rng() % s);
        if (rank_of(raw) != p + q) continue;
        ++built;

        ArrayGeneratorMatrix agm = ArrayGeneratorMatrix::validated(s, p, q, raw);
        ConfoundingReport classifier = classify(agm);
        OracleReport brute = oracle_classify(expand(agm));
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(classifier.mains[i].unconfounded() == brute.main_unconfounded[i]);
        }
        for (std::size_t idx = 0; idx < classifier.interactions.size(); ++idx) {
            CHECK(classifier.interactions[idx].unconfounded() == brute.pair_unconfounded[idx]);
            for (std::size_t v = 0; v < classifier.interactions[idx].components.size(); ++v) {
                CHECK(classifier.interactions[idx].components[v].unconfounded() ==
                      brute.component_unconfounded[idx][v]);
            }
        }
    }
}

TEST_CASE("exhaustive search") {
    SUBCASE("one-dimensional blocks over three factors are infeasible") {
        SearchResult two = exhaustive_optimum(2, 1, 1, 3);
        CHECK_FALSE(two.feasible());
        CHECK(two.candidates == 49);  // 7 x 7 canonical line pairs
        SearchResult three = exhaustive_optimum(3, 1, 1, 3);
        CHECK_FALSE(three.feasible());
    }

    SUBCASE("the p=1 q=3 two-level construction attains the search maximum") {
        SearchResult search = exhaustive_optimum(2, 1, 3, 5);
        REQUIRE(search.feasible());
        Construction built = construct({2, 1, 3, DesignKind::FractionalMinusOne});
        CHECK(search.best->unconfounded_2fi == classify(built.agm).unconfounded_2fi);
        CHECK(search.best->unconfounded_2fi == 0);  // phi(2,1,3,5) = 0
        CHECK(classify(search.best->witness).mains_clean);
    }

    SUBCASE("the raw-space cap is enforced") {
        CHECK_THROWS_AS(exhaustive_optimum(3, 2, 2, 5), SearchSpaceTooLargeError);
        CHECK_THROWS_AS(exhaustive_optimum(2, 2, 3, 6, 1000), SearchSpaceTooLargeError);
    }
}
