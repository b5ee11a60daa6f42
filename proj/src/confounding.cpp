#include "rcd/confounding.hpp"

#include <algorithm>
#include <map>

#include "rcd/pg.hpp"

namespace rcd {

std::string to_string(EffectState state) {
    switch (state) {
        case EffectState::Unconfounded: return "unconfounded";
        case EffectState::AliasedWithEffect: return "aliased_with_effect";
        case EffectState::ColumnConfounded: return "column_confounded";
        case EffectState::RowConfounded: return "row_confounded";
    }
    return "?";
}

std::string to_string(OptimalCertificate cert) {
    switch (cert) {
        case OptimalCertificate::None: return "none";
        case OptimalCertificate::Prop2: return "prop2";
        case OptimalCertificate::Prop3: return "prop3";
        case OptimalCertificate::External: return "external";
    }
    return "?";
}

const InteractionStatus& ConfoundingReport::interaction(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    std::size_t idx = i * (2 * n - i - 1) / 2 + (j - i - 1);
    return interactions.at(idx);
}

namespace {

struct EffectWord {
    Word word;
    bool is_main;
    std::size_t first, second;  // factors (second unused for mains)
    Residue v;                  // component index, 0 for mains
};

EffectState collapse(bool aliased, bool column, bool row) {
    if (aliased) return EffectState::AliasedWithEffect;
    if (column) return EffectState::ColumnConfounded;
    if (row) return EffectState::RowConfounded;
    return EffectState::Unconfounded;
}

}  // namespace

ConfoundingReport classify(const ArrayGeneratorMatrix& agm) {
    const PrimeField& f = agm.field();
    const unsigned s = agm.s();
    const std::size_t n = agm.n();
    const std::size_t p = agm.p();

    // Enumerate all effect words: n mains, then (s-1) components per pair.
    std::vector<EffectWord> effects;
    effects.reserve(n + n * (n - 1) / 2 * (s - 1));
    for (std::size_t i = 0; i < n; ++i) {
        Vec w(n, 0);
        w[i] = 1;
        effects.push_back({Word{w}, true, i, i, 0});
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (Residue v = 1; v < s; ++v) {
                Vec w(n, 0);
                w[i] = 1;
                w[j] = v;
                effects.push_back({Word{w}, false, i, j, v});
            }
        }
    }

    // Image of a word under G determines everything: gc w = 0 confounds with
    // columns, gr w = 0 with rows, proportional images alias two effects, and
    // a zero image means the word is a defining word (aliased with identity).
    std::vector<Vec> images(effects.size());
    std::vector<ComponentStatus> statuses(effects.size());
    std::map<PGPoint, std::vector<std::size_t>> image_classes;
    for (std::size_t e = 0; e < effects.size(); ++e) {
        const EffectWord& eff = effects[e];
        Vec img = agm.column(eff.first);
        if (!eff.is_main) {
            Vec other = agm.column(eff.second);
            for (std::size_t r = 0; r < img.size(); ++r) {
                img[r] = f.add(img[r], f.mul(eff.v, other[r]));
            }
        }
        ComponentStatus st;
        st.word = eff.word;
        if (is_zero_vec(img)) {
            st.aliased = true;  // defining word: indistinguishable from the identity
        } else {
            bool col_zero = true, row_zero = true;
            for (std::size_t r = 0; r < p; ++r) col_zero = col_zero && img[r] == 0;
            for (std::size_t r = p; r < img.size(); ++r) row_zero = row_zero && img[r] == 0;
            st.column = col_zero;
            st.row = row_zero;
            image_classes[canonicalize(f, img)].push_back(e);
        }
        images[e] = std::move(img);
        statuses[e] = std::move(st);
    }

    for (const auto& [point, members] : image_classes) {
        if (members.size() < 2) continue;
        for (std::size_t e : members) {
            statuses[e].aliased = true;
            // witness: a main effect if one shares the image, else the
            // lexicographically smallest of the other words
            std::optional<Word> witness;
            for (std::size_t other : members) {
                if (other == e) continue;
                if (effects[other].is_main) {
                    witness = effects[other].word;
                    break;
                }
                if (!witness || effects[other].word < *witness) witness = effects[other].word;
            }
            statuses[e].alias_witness = std::move(witness);
        }
    }
    for (ComponentStatus& st : statuses) {
        st.state = collapse(st.aliased, st.column, st.row);
    }

    ConfoundingReport report;
    report.s = s;
    report.p = p;
    report.q = agm.q();
    report.n = n;

    std::size_t e = 0;
    for (std::size_t i = 0; i < n; ++i, ++e) {
        MainEffectStatus main;
        main.factor = i;
        main.label = factor_label(i, n);
        main.status = statuses[e];
        report.mains.push_back(std::move(main));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            InteractionStatus inter;
            inter.first = i;
            inter.second = j;
            inter.label = factor_label(i, n) + "x" + factor_label(j, n);
            for (Residue v = 1; v < s; ++v, ++e) {
                const ComponentStatus& st = statuses[e];
                inter.aliased = inter.aliased || st.aliased;
                inter.column = inter.column || st.column;
                inter.row = inter.row || st.row;
                if (st.aliased && !inter.alias_witness) inter.alias_witness = st.alias_witness;
                inter.components.push_back(st);
            }
            inter.state = collapse(inter.aliased, inter.column, inter.row);
            if (inter.unconfounded()) ++report.unconfounded_2fi;
            report.interactions.push_back(std::move(inter));
        }
    }

    report.mains_clean = std::all_of(report.mains.begin(), report.mains.end(),
                                     [](const MainEffectStatus& m) { return m.unconfounded(); });
    report.phi = phi_bound(s, p, agm.q(), n);
    if (report.mains_clean && report.phi > 0) {
        report.efficiency = make_rational(static_cast<long long>(report.unconfounded_2fi),
                                          static_cast<long long>(report.phi));
    }

    if (p >= 2) {
        if (check_prop2(agm).pass()) report.certificate = OptimalCertificate::Prop2;
    } else {
        if (check_prop3(agm).pass()) report.certificate = OptimalCertificate::Prop3;
    }
    return report;
}

unsigned long long phi_bound(unsigned s, std::size_t p, std::size_t q, std::size_t n) {
    if (p < 1 || q < 1 || n < 2) throw BadShapeError("phi requires p, q >= 1 and n >= 2");
    const std::size_t m = std::min(p, q);
    unsigned long long r = 0, power = 1;
    for (std::size_t i = 0; i < m; ++i) {
        r += power;
        if (i + 1 < m) {
            if (power > static_cast<unsigned long long>(-1) / s) {
                throw BadShapeError("phi bound overflows");
            }
            power *= s;
        }
    }
    const unsigned long long alpha = n / r;
    const unsigned long long beta = n - r * alpha;
    const unsigned long long pairs = static_cast<unsigned long long>(n) * (n - 1) / 2;
    const unsigned long long alpha_pairs = alpha >= 2 ? alpha * (alpha - 1) / 2 : 0;
    return pairs - r * alpha_pairs - alpha * beta;
}

namespace {

std::optional<std::vector<std::size_t>> first_dependent_subset(const FieldMatrix& m,
                                                               std::size_t t) {
    std::vector<std::size_t> idx(t);
    for (std::size_t i = 0; i < t; ++i) idx[i] = i;
    while (true) {
        if (!columns_independent(m, idx)) return idx;
        std::size_t i = t;
        while (i > 0) {
            --i;
            if (idx[i] != i + m.cols() - t) break;
            if (i == 0) return std::nullopt;
        }
        ++idx[i];
        for (std::size_t j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::string subset_to_string(const std::vector<std::size_t>& subset) {
    std::string out = "{";
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(subset[i]);
    }
    return out + "}";
}

std::vector<std::size_t> zero_columns(const FieldMatrix& m) {
    std::vector<std::size_t> zeros;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_zero_vec(m.col(c))) zeros.push_back(c);
    }
    return zeros;
}

bool proportional(const PrimeField& f, const Vec& a, const Vec& b) {
    return canonicalize(f, a) == canonicalize(f, b);
}

}  // namespace

Prop2Result check_prop2(const ArrayGeneratorMatrix& agm) {
    if (agm.p() < 2) {
        throw WrongPropositionError("this certificate applies to p >= 2 only");
    }
    const PrimeField& f = agm.field();
    const std::size_t n = agm.n();
    Prop2Result result;

    // hypothesis: any four columns independent (full column rank when n <= 3)
    if (n >= 4) {
        if (auto dep = first_dependent_subset(agm.matrix(), 4)) {
            result.outcome = CheckOutcome::HypothesisFailed;
            result.failures.push_back("columns " + subset_to_string(*dep) +
                                      " are linearly dependent");
            return result;
        }
    } else if (rank_of(agm.matrix()) != n) {
        result.outcome = CheckOutcome::HypothesisFailed;
        result.failures.push_back("matrix does not have full column rank");
        return result;
    }

    FieldMatrix gc = agm.gc();
    FieldMatrix gr = agm.gr();

    result.cond1 = true;
    for (std::size_t c : zero_columns(gc)) {
        result.cond1 = false;
        result.failures.push_back("condition 1: column " + std::to_string(c) +
                                  " of the column block is zero");
    }
    for (std::size_t c : zero_columns(gr)) {
        result.cond1 = false;
        result.failures.push_back("condition 1: column " + std::to_string(c) +
                                  " of the row block is zero");
    }

    if (result.cond1) {
        unsigned long long denom = 1;
        for (std::size_t i = 0; i < agm.p(); ++i) denom *= agm.s();
        const unsigned long long alpha = (agm.s() - 1) * static_cast<unsigned long long>(n) /
                                         (denom - 1);
        result.cond2 = true;
        for (const auto& [point, count] : point_histogram(gc)) {
            if (count != alpha && count != alpha + 1) {
                result.cond2 = false;
                std::string coords;
                for (Residue x : point.coords()) coords += std::to_string(x);
                result.failures.push_back("condition 2: point (" + coords + ") covered " +
                                          std::to_string(count) + " times, want " +
                                          std::to_string(alpha) + " or " +
                                          std::to_string(alpha + 1));
            }
        }

        result.cond3 = true;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                Vec ci = gc.col(i), cj = gc.col(j);
                Vec ri = gr.col(i), rj = gr.col(j);
                if (!proportional(f, ci, cj) && proportional(f, ri, rj)) {
                    result.cond3 = false;
                    result.failures.push_back(
                        "condition 3: factors " + std::to_string(i) + " and " +
                        std::to_string(j) +
                        " share a row-block point but not a column-block point");
                }
            }
        }
    }

    result.outcome = (result.cond1 && result.cond2 && result.cond3) ? CheckOutcome::Pass
                                                                    : CheckOutcome::ConditionsFailed;
    return result;
}

Prop3Result check_prop3(const ArrayGeneratorMatrix& agm) {
    if (agm.p() != 1) {
        throw WrongPropositionError("this certificate applies to p = 1 only");
    }
    const std::size_t n = agm.n();
    Prop3Result result;

    if (n >= 3) {
        if (auto dep = first_dependent_subset(agm.matrix(), 3)) {
            result.outcome = CheckOutcome::HypothesisFailed;
            result.failures.push_back("columns " + subset_to_string(*dep) +
                                      " are linearly dependent");
            return result;
        }
    } else if (rank_of(agm.matrix()) != n) {
        result.outcome = CheckOutcome::HypothesisFailed;
        result.failures.push_back("matrix does not have full column rank");
        return result;
    }

    bool pass = true;
    for (std::size_t c : zero_columns(agm.gc())) {
        pass = false;
        result.failures.push_back("column " + std::to_string(c) + " of the column block is zero");
    }
    for (std::size_t c : zero_columns(agm.gr())) {
        pass = false;
        result.failures.push_back("column " + std::to_string(c) + " of the row block is zero");
    }
    result.outcome = pass ? CheckOutcome::Pass : CheckOutcome::ConditionsFailed;
    return result;
}

Rational efficiency(const ArrayGeneratorMatrix& agm) {
    ConfoundingReport report = classify(agm);
    if (!report.mains_clean) {
        throw MainEffectConfoundedError("efficiency is undefined: a main effect is confounded");
    }
    if (report.phi == 0) {
        throw DesignError("efficiency is undefined: the bound is zero");
    }
    return make_rational(static_cast<long long>(report.unconfounded_2fi),
                         static_cast<long long>(report.phi));
}

}  // namespace rcd
