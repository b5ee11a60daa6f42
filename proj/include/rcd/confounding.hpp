#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rcd/agm.hpp"
#include "rcd/rational.hpp"

namespace rcd {

enum class EffectState {
    Unconfounded,
    AliasedWithEffect,
    ColumnConfounded,
    RowConfounded,
};

std::string to_string(EffectState state);

// One main effect word e_i or one interaction component word e_i + v e_j.
// `state` collapses the clause bits with precedence alias > column > row; the
// bits themselves are kept for tests and set reporting.
struct ComponentStatus {
    Word word;
    EffectState state = EffectState::Unconfounded;
    bool aliased = false;
    bool column = false;
    bool row = false;
    std::optional<Word> alias_witness;  // another effect word, or the identity

    bool unconfounded() const noexcept { return state == EffectState::Unconfounded; }
};

struct MainEffectStatus {
    std::size_t factor = 0;
    std::string label;
    ComponentStatus status;

    bool unconfounded() const noexcept { return status.unconfounded(); }
};

// A two-factor interaction is unconfounded only if every one of its s-1
// components is; the collapsed state and bits aggregate over components.
struct InteractionStatus {
    std::size_t first = 0;
    std::size_t second = 0;
    std::string label;
    std::vector<ComponentStatus> components;
    EffectState state = EffectState::Unconfounded;
    bool aliased = false;
    bool column = false;
    bool row = false;
    std::optional<Word> alias_witness;

    bool unconfounded() const noexcept { return state == EffectState::Unconfounded; }
};

enum class OptimalCertificate { None, Prop2, Prop3, External };

std::string to_string(OptimalCertificate cert);

struct ConfoundingReport {
    unsigned s = 0;
    std::size_t p = 0, q = 0, n = 0;
    std::vector<MainEffectStatus> mains;
    std::vector<InteractionStatus> interactions;  // pairs (i, j), i < j, lexicographic
    bool mains_clean = false;
    std::size_t unconfounded_2fi = 0;  // t_D
    unsigned long long phi = 0;
    // t_D / phi; absent when a main effect is confounded or phi = 0.
    std::optional<Rational> efficiency;
    OptimalCertificate certificate = OptimalCertificate::None;

    const InteractionStatus& interaction(std::size_t i, std::size_t j) const;
};

// Classifies every main effect and every interaction component from the
// generator matrix alone: a component word w is column-confounded iff gc w = 0,
// row-confounded iff gr w = 0, and aliased iff another effect word has a
// proportional image G w' ~ G w (a word with image zero is aliased with the
// identity). No expansion of the design is performed.
ConfoundingReport classify(const ArrayGeneratorMatrix& agm);

// Upper bound on the number of unconfounded two-factor interactions.
unsigned long long phi_bound(unsigned s, std::size_t p, std::size_t q, std::size_t n);

enum class CheckOutcome { Pass, HypothesisFailed, ConditionsFailed };

struct Prop2Result {
    CheckOutcome outcome = CheckOutcome::Pass;
    // condition flags are meaningful only when the hypothesis holds
    bool cond1 = false, cond2 = false, cond3 = false;
    std::vector<std::string> failures;

    bool pass() const noexcept { return outcome == CheckOutcome::Pass; }
};

struct Prop3Result {
    CheckOutcome outcome = CheckOutcome::Pass;
    std::vector<std::string> failures;

    bool pass() const noexcept { return outcome == CheckOutcome::Pass; }
};

// Certificate for efficiency 1 when p >= 2: requires any four columns of G
// independent (full column rank when n <= 3), no zero column in gc or gr, a
// balanced gc point histogram, and gr collapsing no finer than gc.
// Throws WrongPropositionError when p < 2.
Prop2Result check_prop2(const ArrayGeneratorMatrix& agm);

// Certificate for p = 1: requires any three columns independent (full column
// rank when n = 2); passes iff no column of gc or gr is zero.
// Throws WrongPropositionError when p != 1.
Prop3Result check_prop3(const ArrayGeneratorMatrix& agm);

// t_D / phi as an exact rational. Throws MainEffectConfoundedError when some
// main effect is confounded, and DesignError when phi = 0 (p = 1 or q = 1,
// where the ratio is undefined).
Rational efficiency(const ArrayGeneratorMatrix& agm);

}  // namespace rcd
