#include "rcd/constructions.hpp"

#include <algorithm>

#include "rcd/pg.hpp"

namespace rcd {

std::string to_string(Branch branch) {
    switch (branch) {
        case Branch::FullP1: return "full p=1";
        case Branch::FullP2: return "full p=2";
        case Branch::FullP3Plus: return "full p>=3";
        case Branch::TwoLevelP1: return "two-level fractional p=1";
        case Branch::TwoLevelP2Q2: return "two-level fractional p=2 q=2";
        case Branch::TwoLevelP2Q3: return "two-level fractional p=2 q=3";
        case Branch::TwoLevelP2Q4: return "two-level fractional p=2 q=4";
        case Branch::TwoLevelP2Q5Plus: return "two-level fractional p=2 q>=5";
        case Branch::TwoLevelP3Plus: return "two-level fractional p>=3";
        case Branch::OddP1: return "odd-prime fractional p=1";
        case Branch::OddP2Q2: return "odd-prime fractional p=2 q=2";
        case Branch::OddP2Q3: return "odd-prime fractional p=2 q=3";
        case Branch::OddP2Q4: return "odd-prime fractional p=2 q=4";
        case Branch::OddP2Q5Plus: return "odd-prime fractional p=2 q>=5";
        case Branch::OddP3Plus: return "odd-prime fractional p>=3";
    }
    return "?";
}

FieldMatrix antidiagonal_matrix(PrimeField f, std::size_t v) {
    FieldMatrix m(f, v, v);
    for (std::size_t i = 0; i < v; ++i) m(i, v - 1 - i) = 1;
    return m;
}

FieldMatrix upper_ones_matrix(PrimeField f, std::size_t v) {
    FieldMatrix m(f, v, v);
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t j = i; j < v; ++j) m(i, j) = 1;
    return m;
}

FieldMatrix l_matrix(PrimeField f, std::size_t v) {
    FieldMatrix k = upper_ones_matrix(f, v);
    FieldMatrix i = FieldMatrix::identity(f, v);
    return i.plus(k.times(i.plus(FieldMatrix::ones(f, v, v))));
}

std::vector<Vec> select_star_columns(const FieldMatrix& fixed, std::size_t extra) {
    std::map<PGPoint, std::size_t> hist = point_histogram(fixed);

    auto spread_witness = [&hist]() {
        std::size_t lo = static_cast<std::size_t>(-1), hi = 0;
        std::string text;
        for (const auto& [point, count] : hist) {
            lo = std::min(lo, count);
            hi = std::max(hi, count);
            if (!text.empty()) text += ",";
            text += std::to_string(count);
        }
        return std::tuple{lo, hi, text};
    };

    auto [lo, hi, text] = spread_witness();
    if (hi > lo + 1) {
        throw BalanceInfeasibleError("point histogram {" + text + "} is not within one of balanced");
    }

    std::vector<Vec> chosen;
    chosen.reserve(extra);
    for (std::size_t step = 0; step < extra; ++step) {
        std::size_t min_count = static_cast<std::size_t>(-1);
        for (const auto& [point, count] : hist) min_count = std::min(min_count, count);
        for (auto& [point, count] : hist) {
            if (count == min_count) {
                chosen.push_back(point.coords());
                ++count;
                break;
            }
        }
    }

    auto [lo2, hi2, text2] = spread_witness();
    if (hi2 > lo2 + 1) {
        throw BalanceInfeasibleError("selection left histogram {" + text2 + "} unbalanced");
    }
    return chosen;
}

namespace {

// Writes whole blocks into a (p+q) x n residue grid, then validates the result.
class Assembler {
public:
    Assembler(PrimeField f, std::size_t rows, std::size_t cols)
        : field_(f), grid_(f, rows, cols) {}

    void put(std::size_t r0, std::size_t c0, const FieldMatrix& block) {
        for (std::size_t r = 0; r < block.rows(); ++r)
            for (std::size_t c = 0; c < block.cols(); ++c) grid_(r0 + r, c0 + c) = block(r, c);
    }

    void put_col(std::size_t r0, std::size_t c0, const Vec& v) {
        for (std::size_t r = 0; r < v.size(); ++r) grid_(r0 + r, c0) = v[r];
    }

    void put_cols(std::size_t r0, std::size_t c0, const std::vector<Vec>& cols) {
        for (std::size_t c = 0; c < cols.size(); ++c) put_col(r0, c0 + c, cols[c]);
    }

    void set(std::size_t r, std::size_t c, long long value) { grid_(r, c) = field_.reduce(value); }

    FieldMatrix take() { return std::move(grid_); }

private:
    PrimeField field_;
    FieldMatrix grid_;
};

Vec ones_vec(std::size_t len) { return Vec(len, 1); }

Vec unit_vec(std::size_t len, std::size_t i) {
    Vec v(len, 0);
    v[i] = 1;
    return v;
}

Construction finish(const ConstructionRequest& req, std::size_t n, FieldMatrix g, Branch branch,
                    ProvenCertificate cert, std::optional<std::size_t> expected = std::nullopt,
                    std::string note = {}) {
    (void)n;
    return Construction{ArrayGeneratorMatrix::validated(req.s, req.p, req.q, std::move(g)), branch,
                        cert, expected, std::move(note)};
}

Construction construct_full(const ConstructionRequest& req) {
    PrimeField f(req.s);
    const std::size_t p = req.p, q = req.q, n = p + q;

    if (p == 1) {
        Assembler a(f, n, n);
        for (std::size_t c = 0; c < n; ++c) a.set(0, c, 1);  // 1 | 1_q^T
        a.put_col(1, 0, ones_vec(q));
        a.put(1, 1, FieldMatrix::identity(f, q).plus(FieldMatrix::ones(f, q, q)));
        return finish(req, n, a.take(), Branch::FullP1, ProvenCertificate::Prop3);
    }

    if (p == 2) {
        FieldMatrix m2 = FieldMatrix::from_rows(f, {{1, 1}, {2, 1}});
        FieldMatrix fixed = FieldMatrix::hcat(FieldMatrix::identity(f, 2), m2);
        Assembler a(f, n, n);
        a.put(0, 0, fixed);
        a.put_cols(0, 4, select_star_columns(fixed, q - 2));
        a.put(2, 0, FieldMatrix::identity(f, 2));
        a.put(2, 2, m2.plus(FieldMatrix::identity(f, 2)));
        if (q > 2) a.put(4, 4, FieldMatrix::identity(f, q - 2));
        return finish(req, n, a.take(), Branch::FullP2, ProvenCertificate::Prop2);
    }

    FieldMatrix jh = FieldMatrix::ones(f, p, p).plus(antidiagonal_matrix(f, p));
    FieldMatrix fixed = FieldMatrix::hcat(FieldMatrix::identity(f, p), jh);
    FieldMatrix j2i(f, p, p);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) j2i(i, j) = f.reduce(i == j ? 3 : 1);
    Assembler a(f, n, n);
    a.put(0, 0, fixed);
    a.put_cols(0, 2 * p, select_star_columns(fixed, q - p));
    a.put(p, 0, antidiagonal_matrix(f, p));
    a.put(p, p, j2i);
    if (q > p) a.put(2 * p, 2 * p, FieldMatrix::identity(f, q - p));
    return finish(req, n, a.take(), Branch::FullP3Plus, ProvenCertificate::Prop2);
}

Construction construct_two_level(const ConstructionRequest& req) {
    PrimeField f(2);
    const std::size_t p = req.p, q = req.q, n = p + q + 1;

    if (p == 1) {
        Assembler a(f, 1 + q, n);
        for (std::size_t c = 0; c < n; ++c) a.set(0, c, 1);  // 1 | 1_q^T | 1
        a.put_col(1, 0, ones_vec(q));
        a.put(1, 1, FieldMatrix::identity(f, q).plus(FieldMatrix::ones(f, q, q)));
        a.put_col(1, n - 1, unit_vec(q, q - 1));  // e_q
        return finish(req, n, a.take(), Branch::TwoLevelP1, ProvenCertificate::Prop3);
    }

    if (p == 2 && q == 2) {
        FieldMatrix g = FieldMatrix::from_rows(f, {{1, 1, 0, 1, 1},
                                                   {0, 1, 1, 1, 1},
                                                   {1, 1, 1, 0, 1},
                                                   {1, 0, 1, 1, 1}});
        return finish(req, n, std::move(g), Branch::TwoLevelP2Q2, ProvenCertificate::ExternalBound,
                      4, "optimal with 4 of 8 bounded pairs; the efficiency-1 conditions cannot hold");
    }

    if (p == 2) {
        FieldMatrix e = FieldMatrix::from_rows(f, {{1, 0}, {0, 1}, {1, 1}});
        FieldMatrix ff = FieldMatrix::from_rows(f, {{1, 0, 1}, {1, 1, 0}});
        FieldMatrix i3ef = FieldMatrix::identity(f, 3).plus(e.times(ff));

        if (q == 3) {
            Assembler a(f, 5, 6);
            a.put(0, 0, FieldMatrix::identity(f, 2));
            a.put(0, 2, ff);
            a.put_col(0, 5, ones_vec(2));
            a.put(2, 0, e);
            a.put(2, 2, i3ef);
            a.put_col(2, 5, unit_vec(3, 2));  // e_3
            return finish(req, n, a.take(), Branch::TwoLevelP2Q3, ProvenCertificate::ExternalBound,
                          11,
                          "optimal with 11 of 12 bounded pairs; the efficiency-1 conditions cannot hold");
        }
        if (q == 4) {
            Assembler a(f, 6, 7);
            a.put(0, 0, FieldMatrix::identity(f, 2));
            a.put(0, 2, ff);
            a.put_col(0, 5, ones_vec(2));
            a.put_col(0, 6, unit_vec(2, 0));  // e_1
            a.put(2, 0, e);
            a.put(2, 2, i3ef);
            a.put_col(2, 5, unit_vec(3, 0));  // e_1
            a.set(5, 5, 1);
            a.set(5, 6, 1);
            return finish(req, n, a.take(), Branch::TwoLevelP2Q4, ProvenCertificate::Prop2);
        }
        // q >= 5
        FieldMatrix fixed = FieldMatrix::hcat(
            FieldMatrix::hcat(FieldMatrix::identity(f, 2), ff),
            FieldMatrix::column(f, ones_vec(2)));
        Assembler a(f, 2 + q, n);
        a.put(0, 0, fixed);
        a.put_cols(0, 6, select_star_columns(fixed, q - 3));
        a.put(2, 0, e);
        a.put(2, 2, i3ef);
        a.put_col(2, 5, ones_vec(3));
        a.put_col(5, 5, ones_vec(q - 3));
        a.put(5, 6, FieldMatrix::identity(f, q - 3));
        return finish(req, n, a.take(), Branch::TwoLevelP2Q5Plus, ProvenCertificate::Prop2);
    }

    // p >= 3
    FieldMatrix k = upper_ones_matrix(f, p);
    FieldMatrix fixed = FieldMatrix::hcat(
        FieldMatrix::hcat(FieldMatrix::identity(f, p),
                          FieldMatrix::identity(f, p).plus(FieldMatrix::ones(f, p, p))),
        FieldMatrix::column(f, ones_vec(p)));
    Vec k1plus1 = add(f, k.apply(ones_vec(p)), ones_vec(p));
    Assembler a(f, p + q, n);
    a.put(0, 0, fixed);
    a.put_cols(0, 2 * p + 1, select_star_columns(fixed, q - p));
    a.put(p, 0, k);
    a.put(p, p, l_matrix(f, p));
    a.put_col(p, 2 * p, k1plus1);
    if (q > p) a.put(2 * p, 2 * p + 1, FieldMatrix::identity(f, q - p));
    return finish(req, n, a.take(), Branch::TwoLevelP3Plus, ProvenCertificate::Prop2);
}

Construction construct_odd_fractional(const ConstructionRequest& req) {
    PrimeField f(req.s);
    const unsigned s = req.s;
    const std::size_t p = req.p, q = req.q, n = p + q + 1;

    if (p == 1) {
        Assembler a(f, 1 + q, n);
        for (std::size_t c = 0; c + 1 < n; ++c) a.set(0, c, 1);  // 1 | 1_q^T
        a.set(0, n - 1, 2);
        a.put_col(1, 0, ones_vec(q));
        a.put(1, 1, FieldMatrix::identity(f, q).plus(FieldMatrix::ones(f, q, q)));
        a.put_col(1, n - 1, ones_vec(q));
        return finish(req, n, a.take(), Branch::OddP1, ProvenCertificate::Prop3);
    }

    if (p == 2 && q == 2) {
        // vector parameters depend on the level
        const bool three = (s == 3);
        FieldMatrix m2 = three ? FieldMatrix::from_rows(f, {{1, 1}, {2, 1}})
                               : FieldMatrix::from_rows(f, {{1, 1}, {3, 2}});
        Vec va = three ? Vec{1, 2} : Vec{1, 1};
        Vec vb = three ? Vec{2, 0} : Vec{2, 2};
        Assembler a(f, 4, 5);
        a.put(0, 0, FieldMatrix::identity(f, 2));
        a.put(0, 2, m2);
        a.put_col(0, 4, va);
        a.put(2, 0, FieldMatrix::identity(f, 2));
        a.put(2, 2, m2.plus(FieldMatrix::identity(f, 2)));
        a.put_col(2, 4, vb);
        if (three) {
            return finish(req, n, a.take(), Branch::OddP2Q2, ProvenCertificate::ExternalBound, 8,
                          "optimal with 8 of 9 bounded pairs; the efficiency-1 conditions cannot hold");
        }
        return finish(req, n, a.take(), Branch::OddP2Q2, ProvenCertificate::Prop2);
    }

    if (p == 2) {
        FieldMatrix m2 = FieldMatrix::from_rows(f, {{1, 1}, {2, 1}});
        FieldMatrix m2i = m2.plus(FieldMatrix::identity(f, 2));

        if (q == 3) {
            Vec va = {1, f.reduce(static_cast<long long>(s) - 2)};
            Vec vb = {1, f.reduce(static_cast<long long>(s) - 1)};
            Assembler a(f, 5, 6);
            a.put(0, 0, FieldMatrix::identity(f, 2));
            a.put(0, 2, m2);
            a.put_col(0, 4, va);
            a.put_col(0, 5, vb);
            a.put(2, 0, FieldMatrix::identity(f, 2));
            a.put(2, 2, m2i);
            a.put_col(2, 4, unit_vec(2, 0));  // e_1
            a.set(4, 4, 1);
            a.set(4, 5, 1);
            return finish(req, n, a.take(), Branch::OddP2Q3, ProvenCertificate::Prop2);
        }
        if (q == 4) {
            Vec va = {1, f.reduce(static_cast<long long>(s) - 1)};
            Vec vb = {1, f.reduce(static_cast<long long>(s) - 2)};
            Vec vc = {1, f.reduce(static_cast<long long>(s) - 3)};
            Assembler a(f, 6, 7);
            a.put(0, 0, FieldMatrix::identity(f, 2));
            a.put(0, 2, m2);
            a.put_col(0, 4, va);
            a.put_col(0, 5, vb);
            a.put_col(0, 6, vc);
            a.put(2, 0, FieldMatrix::identity(f, 2));
            a.put(2, 2, m2i);
            a.put_col(2, 4, unit_vec(2, 1));  // e_2
            a.put_col(4, 4, ones_vec(2));
            a.put_col(4, 5, Vec{1, 2});  // e_1 + 2 e_2
            a.put_col(4, 6, unit_vec(2, 1));
            return finish(req, n, a.take(), Branch::OddP2Q4, ProvenCertificate::Prop2);
        }
        // q >= 5
        Vec va = {1, f.reduce(static_cast<long long>(s) - 1)};
        FieldMatrix fixed = FieldMatrix::hcat(
            FieldMatrix::hcat(FieldMatrix::identity(f, 2), m2), FieldMatrix::column(f, va));
        Assembler a(f, 2 + q, n);
        a.put(0, 0, fixed);
        a.put_cols(0, 5, select_star_columns(fixed, q - 2));
        a.put(2, 0, FieldMatrix::identity(f, 2));
        a.put(2, 2, m2i);
        a.put_col(2, 4, va);
        a.put_col(4, 4, ones_vec(q - 2));
        a.put(4, 5, FieldMatrix::identity(f, q - 2));
        return finish(req, n, a.take(), Branch::OddP2Q5Plus, ProvenCertificate::Prop2);
    }

    // p >= 3
    FieldMatrix jh = FieldMatrix::ones(f, p, p).plus(antidiagonal_matrix(f, p));
    FieldMatrix j2i(f, p, p);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) j2i(i, j) = f.reduce(i == j ? 3 : 1);
    Vec vb(p, 2);  // 2 a + e_1 - e_p with a = 1_p
    vb[0] = f.reduce(3);
    vb[p - 1] = f.reduce(1);
    FieldMatrix fixed = FieldMatrix::hcat(FieldMatrix::hcat(FieldMatrix::identity(f, p), jh),
                                          FieldMatrix::column(f, ones_vec(p)));
    Assembler a(f, p + q, n);
    a.put(0, 0, fixed);
    a.put_cols(0, 2 * p + 1, select_star_columns(fixed, q - p));
    a.put(p, 0, antidiagonal_matrix(f, p));
    a.put(p, p, j2i);
    a.put_col(p, 2 * p, vb);
    if (q > p) a.put(2 * p, 2 * p + 1, FieldMatrix::identity(f, q - p));
    return finish(req, n, a.take(), Branch::OddP3Plus, ProvenCertificate::Prop2);
}

}  // namespace

Construction construct(const ConstructionRequest& req) {
    PrimeField f(req.s);  // validates primality and size
    if (req.p < 1 || req.q < 1) throw BadShapeError("p and q must be at least 1");
    if (req.p > req.q) {
        throw UnsupportedParametersError(
            "constructions assume p <= q; transpose the request (and the resulting design)");
    }

    if (req.kind == DesignKind::FullFactorial) {
        if (req.s == 2) {
            throw InadmissibleError(
                "full factorial construction is available for odd prime levels only");
        }
        return construct_full(req);
    }

    if (req.s == 2) {
        if (req.p == 1 && req.q <= 2) {
            throw InadmissibleError(
                "no two-level fractional construction for p = 1, q <= 2: at least one main "
                "effect is always confounded");
        }
        return construct_two_level(req);
    }
    if (req.p == 1 && req.q == 1) {
        throw InadmissibleError(
            "no odd-prime fractional construction for p = q = 1: at least one main effect is "
            "always confounded");
    }
    return construct_odd_fractional(req);
}

}  // namespace rcd
