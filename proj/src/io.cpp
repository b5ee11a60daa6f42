#include "rcd/io.hpp"

#include <cctype>
#include <fstream>
#include <ostream>
#include <sstream>

namespace rcd {

namespace {

struct LineTokenizer {
    const std::string& text;
    std::size_t line_no;
    std::size_t pos = 0;

    // returns the token and its 1-based starting column
    std::optional<std::pair<std::string, std::size_t>> next() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos >= text.size()) return std::nullopt;
        std::size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        return std::pair{text.substr(start, pos - start), start + 1};
    }
};

long long parse_number(const std::string& token, std::size_t line, std::size_t column) {
    for (char ch : token) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            throw ParseError(line, column, "expected a nonnegative integer, got '" + token + "'");
        }
    }
    if (token.size() > 9) throw ParseError(line, column, "number out of range");
    return std::stoll(token);
}

}  // namespace

ArrayGeneratorMatrix read_agm(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;

    auto next_content_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            for (char ch : line) {
                if (!std::isspace(static_cast<unsigned char>(ch))) return true;
            }
        }
        ++line_no;
        return false;
    };

    if (!next_content_line()) throw ParseError(1, 1, "missing header line 's p q n'");
    LineTokenizer header{line, line_no};
    long long values[4];
    for (int i = 0; i < 4; ++i) {
        auto token = header.next();
        if (!token) {
            throw ParseError(line_no, line.size() + 1, "header needs four values: s p q n");
        }
        values[i] = parse_number(token->first, line_no, token->second);
    }
    if (auto extra = header.next()) {
        throw ParseError(line_no, extra->second, "unexpected token after header");
    }
    const long long s = values[0], p = values[1], q = values[2], n = values[3];
    if (s < 2 || s > 0xffff) throw ParseError(line_no, 1, "level s out of range");
    if (p < 1 || q < 1 || n < 1 || p + q > n) {
        throw ParseError(line_no, 1, "need p >= 1, q >= 1 and p + q <= n");
    }

    PrimeField field(static_cast<unsigned>(s));  // NotPrimeError for composite s
    FieldMatrix m(field, static_cast<std::size_t>(p + q), static_cast<std::size_t>(n));
    for (long long r = 0; r < p + q; ++r) {
        if (!next_content_line()) {
            throw ParseError(line_no, 1,
                             "expected " + std::to_string(p + q) + " matrix rows, got " +
                                 std::to_string(r));
        }
        LineTokenizer row{line, line_no};
        for (long long c = 0; c < n; ++c) {
            auto token = row.next();
            if (!token) {
                throw ParseError(line_no, line.size() + 1,
                                 "row has fewer than " + std::to_string(n) + " entries");
            }
            long long value = parse_number(token->first, line_no, token->second);
            if (value >= s) {
                throw ParseError(line_no, token->second,
                                 "entry " + std::to_string(value) + " is not a residue mod " +
                                     std::to_string(s));
            }
            m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
                static_cast<Residue>(value);
        }
        if (auto extra = row.next()) {
            throw ParseError(line_no, extra->second,
                             "row has more than " + std::to_string(n) + " entries");
        }
    }
    return ArrayGeneratorMatrix::validated(static_cast<unsigned>(s), static_cast<std::size_t>(p),
                                           static_cast<std::size_t>(q), std::move(m));
}

ArrayGeneratorMatrix read_agm_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    return read_agm(in);
}

void write_agm(std::ostream& out, const ArrayGeneratorMatrix& agm) {
    out << agm.s() << " " << agm.p() << " " << agm.q() << " " << agm.n() << "\n";
    const FieldMatrix& m = agm.matrix();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) out << " ";
            out << m(r, c);
        }
        out << "\n";
    }
}

void write_agm_file(const std::string& path, const ArrayGeneratorMatrix& agm) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    write_agm(out, agm);
    if (!out) throw IoError("write to '" + path + "' failed");
}

namespace {

std::string cell_string(const Vec& cell, unsigned s) {
    std::string text;
    if (s <= 9) {
        for (Residue x : cell) text += static_cast<char>('0' + x);
        return text;
    }
    text = "\"";
    for (std::size_t i = 0; i < cell.size(); ++i) {
        if (i) text += ",";
        text += std::to_string(cell[i]);
    }
    return text + "\"";
}

}  // namespace

void write_design_csv(std::ostream& out, const RowColumnDesign& design) {
    for (std::size_t i = 0; i < design.row_count(); ++i) {
        for (std::size_t j = 0; j < design.col_count(); ++j) {
            if (j) out << ",";
            out << cell_string(design.cell(i, j), design.s());
        }
        out << "\n";
    }
}

nlohmann::json design_to_json(const RowColumnDesign& design) {
    nlohmann::json cells = nlohmann::json::array();
    for (std::size_t i = 0; i < design.row_count(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < design.col_count(); ++j) {
            row.push_back(design.cell(i, j));
        }
        cells.push_back(std::move(row));
    }
    return nlohmann::json{{"version", kToolVersion},
                          {"s", design.s()},
                          {"p", design.p()},
                          {"q", design.q()},
                          {"n", design.n()},
                          {"k", design.n() - design.p() - design.q()},
                          {"cells", std::move(cells)}};
}

Analysis analyze(const ArrayGeneratorMatrix& agm) {
    Analysis a{classify(agm), resolution(agm), defining_subgroup(agm), std::nullopt, std::nullopt};
    if (agm.p() >= 2) {
        a.prop2 = check_prop2(agm);
    } else {
        a.prop3 = check_prop3(agm);
    }
    return a;
}

namespace {

std::string witness_label(const ComponentStatus& st) {
    if (!st.aliased) return "";
    return st.alias_witness ? word_to_label(*st.alias_witness) : "I";
}

nlohmann::json component_json(const ComponentStatus& st) {
    nlohmann::json j{{"label", word_to_label(st.word)}, {"status", to_string(st.state)}};
    if (st.aliased) {
        j["witness"] = witness_label(st);
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

std::string outcome_string(CheckOutcome outcome) {
    switch (outcome) {
        case CheckOutcome::Pass: return "pass";
        case CheckOutcome::HypothesisFailed: return "hypothesis_failed";
        case CheckOutcome::ConditionsFailed: return "conditions_failed";
    }
    return "?";
}

}  // namespace

nlohmann::json report_to_json(const Analysis& analysis) {
    const ConfoundingReport& report = analysis.report;
    nlohmann::json effects = nlohmann::json::array();
    for (const MainEffectStatus& main : report.mains) {
        nlohmann::json j{{"label", main.label}, {"status", to_string(main.status.state)}};
        j["witness"] = main.status.aliased ? nlohmann::json(witness_label(main.status))
                                           : nlohmann::json(nullptr);
        effects.push_back(std::move(j));
    }
    for (const InteractionStatus& inter : report.interactions) {
        nlohmann::json j{{"label", inter.label}, {"status", to_string(inter.state)}};
        j["witness"] = inter.alias_witness ? nlohmann::json(word_to_label(*inter.alias_witness))
                       : inter.aliased     ? nlohmann::json("I")
                                           : nlohmann::json(nullptr);
        nlohmann::json comps = nlohmann::json::array();
        for (const ComponentStatus& st : inter.components) comps.push_back(component_json(st));
        j["components"] = std::move(comps);
        effects.push_back(std::move(j));
    }

    nlohmann::json words = nlohmann::json::array();
    for (const Word& w : analysis.defining_words) words.push_back(word_to_label(w));

    nlohmann::json efficiency = nullptr;
    if (report.efficiency) {
        efficiency = nlohmann::json{{"num", report.efficiency->num},
                                    {"den", report.efficiency->den},
                                    {"decimal", decimal_string(*report.efficiency)}};
    }

    nlohmann::json certificates{{"optimal", to_string(report.certificate)}};
    if (analysis.prop2) {
        certificates["prop2"] = nlohmann::json{{"outcome", outcome_string(analysis.prop2->outcome)},
                                               {"failures", analysis.prop2->failures}};
    }
    if (analysis.prop3) {
        certificates["prop3"] = nlohmann::json{{"outcome", outcome_string(analysis.prop3->outcome)},
                                               {"failures", analysis.prop3->failures}};
    }

    return nlohmann::json{
        {"version", kToolVersion},
        {"s", report.s},
        {"p", report.p},
        {"q", report.q},
        {"n", report.n},
        {"k", report.n - report.p - report.q},
        {"resolution",
         analysis.resolution ? nlohmann::json(*analysis.resolution) : nlohmann::json(nullptr)},
        {"defining_words", std::move(words)},
        {"effects", std::move(effects)},
        {"t_D", report.unconfounded_2fi},
        {"phi", report.phi},
        {"efficiency", std::move(efficiency)},
        {"certificates", std::move(certificates)},
    };
}

std::string roman_numeral(std::size_t value) {
    static constexpr std::pair<std::size_t, const char*> steps[] = {
        {1000, "M"}, {900, "CM"}, {500, "D"}, {400, "CD"}, {100, "C"}, {90, "XC"}, {50, "L"},
        {40, "XL"},  {10, "X"},   {9, "IX"},  {5, "V"},    {4, "IV"},  {1, "I"},
    };
    std::string out;
    for (const auto& [step, digits] : steps) {
        while (value >= step) {
            out += digits;
            value -= step;
        }
    }
    return out;
}

void write_report_text(std::ostream& out, const Analysis& analysis) {
    const ConfoundingReport& report = analysis.report;
    out << "generator: s=" << report.s << " p=" << report.p << " q=" << report.q
        << " n=" << report.n << " k=" << (report.n - report.p - report.q) << "\n";

    if (analysis.resolution) {
        out << "resolution: " << roman_numeral(*analysis.resolution) << " ("
            << *analysis.resolution << ")\n";
    } else {
        out << "resolution: unbounded (full factorial)\n";
    }

    out << "defining words:";
    if (analysis.defining_words.empty()) {
        out << " none";
    } else {
        for (const Word& w : analysis.defining_words) out << " " << word_to_label(w);
    }
    out << "\n";

    out << "main effects:\n";
    for (const MainEffectStatus& main : report.mains) {
        out << "  " << main.label << "  " << to_string(main.status.state);
        if (main.status.aliased) out << " [" << witness_label(main.status) << "]";
        out << "\n";
    }

    out << "two-factor interactions:\n";
    for (const InteractionStatus& inter : report.interactions) {
        out << "  " << inter.label << "  " << to_string(inter.state);
        if (inter.aliased) {
            out << " [" << (inter.alias_witness ? word_to_label(*inter.alias_witness) : "I")
                << "]";
        }
        out << "\n";
    }

    out << "t_D = " << report.unconfounded_2fi << " of " << report.n * (report.n - 1) / 2
        << " pairs, phi = " << report.phi << "\n";
    if (report.efficiency) {
        out << "efficiency = " << report.efficiency->num << "/" << report.efficiency->den << " = "
            << decimal_string(*report.efficiency) << "\n";
    } else if (!report.mains_clean) {
        out << "efficiency undefined: a main effect is confounded\n";
    } else {
        out << "efficiency undefined: phi = 0\n";
    }
    out << "certificate: " << to_string(report.certificate) << "\n";
}

}  // namespace rcd
