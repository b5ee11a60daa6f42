#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "rcd/agm.hpp"
#include "rcd/confounding.hpp"

namespace rcd {

inline constexpr const char* kToolName = "rcdesign";
inline constexpr const char* kToolVersion = "0.1.0";

// Text format: a header line "s p q n", then p+q lines of n space-separated
// residues. Parse faults carry the 1-based line and column of the offender.
ArrayGeneratorMatrix read_agm(std::istream& in);
ArrayGeneratorMatrix read_agm_file(const std::string& path);
void write_agm(std::ostream& out, const ArrayGeneratorMatrix& agm);
void write_agm_file(const std::string& path, const ArrayGeneratorMatrix& agm);

// One line per design row; cells are digit strings for s <= 9 and quoted
// comma-separated digits beyond (two-digit levels would be ambiguous glued).
void write_design_csv(std::ostream& out, const RowColumnDesign& design);
nlohmann::json design_to_json(const RowColumnDesign& design);

// Everything cmd_analyze shows, assembled once.
struct Analysis {
    ConfoundingReport report;
    std::optional<std::size_t> resolution;  // nullopt = unbounded (k = 0)
    std::vector<Word> defining_words;
    std::optional<Prop2Result> prop2;  // present when p >= 2
    std::optional<Prop3Result> prop3;  // present when p == 1
};

Analysis analyze(const ArrayGeneratorMatrix& agm);

nlohmann::json report_to_json(const Analysis& analysis);
void write_report_text(std::ostream& out, const Analysis& analysis);

std::string roman_numeral(std::size_t value);

}  // namespace rcd
