#pragma once

// Checker for the labelled natural deduction system.
//
// Derivations are trees whose leaves are named assumptions. A rule node
// records, per premise, the ids it discharges in that premise's subtree and,
// for IAndE / IOrE, the two fresh label atoms p and q. The checker compares
// labels syntactically; any semantic label reasoning has to go through Taut
// and Sub. Formulas must be core (derived connectives pre-expanded).

#include "lt/syntax.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lt {

enum class RuleName {
    AndI,
    AndE_L,
    AndE_R,
    OrI_L,
    OrI_R,
    OrE,
    NotI,
    NotE,
    RAA,
    BotE,
    IAndI,
    IAndE,
    IOrI,
    IOrE,
    INotI,
    INotE,
    Taut,
    Sub,
};

std::string_view name(RuleName r) noexcept;
std::optional<RuleName> parse_rule_name(std::string_view text) noexcept;

class Derivation {
public:
    static Derivation assume(std::string id, LabelledFormula lf);
    static Derivation rule(RuleName rule, LabelledFormula conclusion, std::vector<Derivation> premises,
                           std::vector<std::vector<std::string>> discharges = {}, std::vector<atom_index> fresh = {});

    bool is_assumption() const noexcept { return !rule_.has_value(); }
    /// Only meaningful for assumptions.
    const std::string &id() const noexcept { return id_; }
    /// Only meaningful for rule nodes.
    RuleName rule_name() const { return rule_.value(); }
    const LabelledFormula &conclusion() const noexcept { return conclusion_; }
    const std::vector<Derivation> &premises() const noexcept { return premises_; }
    /// Either empty or one list per premise.
    const std::vector<std::vector<std::string>> &discharges() const noexcept { return discharges_; }
    const std::vector<atom_index> &fresh() const noexcept { return fresh_; }

    /// Ids discharged in premise i; empty when none are listed.
    std::span<const std::string> discharged_in(std::size_t i) const;

private:
    Derivation(LabelledFormula lf) : conclusion_(std::move(lf)) {}

    std::optional<RuleName> rule_;
    std::string id_;
    LabelledFormula conclusion_;
    std::vector<Derivation> premises_;
    std::vector<std::vector<std::string>> discharges_;
    std::vector<atom_index> fresh_;
};

enum class violation_kind { shape, discharge, freshness, taut, open_assumption };

std::string_view name(violation_kind k) noexcept;

struct Violation {
    std::vector<std::size_t> path; ///< premise indices from the root
    violation_kind kind = violation_kind::shape;
    std::string detail;
};

struct CheckResult {
    std::optional<Violation> violation;
    bool ok() const noexcept { return !violation; }
};

/// Checks every node bottom-up, left to right, then the open assumptions at
/// the root against Γ. Reports the first violation found.
CheckResult check(const Derivation &d, std::span<const LabelledFormula> gamma);

/// Classical (a_1 & ... & a_k) -> b by truth table; k = 0 is allowed.
/// Throws lt::limit_exceeded above taut_atom_limit distinct atoms.
inline constexpr std::size_t taut_atom_limit = 20;
bool taut_oracle(std::span<const Label> hypotheses, const Label &target);

using OpenAssumptions = std::map<std::string, LabelledFormula>;

/// Assumptions open in the subtree at `path`. Throws std::out_of_range on a bad path.
OpenAssumptions open_assumptions(const Derivation &d, std::span<const std::size_t> path = {});

} // namespace lt
