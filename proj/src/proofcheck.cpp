#include "lt/proofcheck.hpp"

#include "lt/error.hpp"

#include <algorithm>
#include <array>

namespace lt {

namespace {

constexpr std::array rule_names{
    std::pair{RuleName::AndI, "AndI"},   std::pair{RuleName::AndE_L, "AndE_L"}, std::pair{RuleName::AndE_R, "AndE_R"},
    std::pair{RuleName::OrI_L, "OrI_L"}, std::pair{RuleName::OrI_R, "OrI_R"},   std::pair{RuleName::OrE, "OrE"},
    std::pair{RuleName::NotI, "NotI"},   std::pair{RuleName::NotE, "NotE"},     std::pair{RuleName::RAA, "RAA"},
    std::pair{RuleName::BotE, "BotE"},   std::pair{RuleName::IAndI, "IAndI"},   std::pair{RuleName::IAndE, "IAndE"},
    std::pair{RuleName::IOrI, "IOrI"},   std::pair{RuleName::IOrE, "IOrE"},     std::pair{RuleName::INotI, "INotI"},
    std::pair{RuleName::INotE, "INotE"}, std::pair{RuleName::Taut, "Taut"},     std::pair{RuleName::Sub, "Sub"},
};

} // namespace

std::string_view name(RuleName r) noexcept {
    for (auto [k, v] : rule_names)
        if (k == r)
            return v;
    return "?";
}

std::optional<RuleName> parse_rule_name(std::string_view text) noexcept {
    for (auto [k, v] : rule_names)
        if (text == v)
            return k;
    return std::nullopt;
}

std::string_view name(violation_kind k) noexcept {
    switch (k) {
    case violation_kind::shape:
        return "shape";
    case violation_kind::discharge:
        return "discharge";
    case violation_kind::freshness:
        return "freshness";
    case violation_kind::taut:
        return "taut";
    case violation_kind::open_assumption:
        return "open-assumption";
    }
    return "?";
}

Derivation Derivation::assume(std::string id, LabelledFormula lf) {
    Derivation d(std::move(lf));
    d.id_ = std::move(id);
    return d;
}

Derivation Derivation::rule(RuleName rule, LabelledFormula conclusion, std::vector<Derivation> premises,
                            std::vector<std::vector<std::string>> discharges, std::vector<atom_index> fresh) {
    Derivation d(std::move(conclusion));
    d.rule_ = rule;
    d.premises_ = std::move(premises);
    d.discharges_ = std::move(discharges);
    d.fresh_ = std::move(fresh);
    return d;
}

std::span<const std::string> Derivation::discharged_in(std::size_t i) const {
    if (i < discharges_.size())
        return discharges_[i];
    return {};
}

namespace {

bool eval_label(const Label &a, const std::map<atom_index, bool> &v) {
    switch (a.kind()) {
    case label_kind::bot:
        return false;
    case label_kind::atom:
        return v.at(a.index());
    case label_kind::neg:
        return !eval_label(a.child(0), v);
    case label_kind::lor:
        return eval_label(a.child(0), v) || eval_label(a.child(1), v);
    case label_kind::land:
        return eval_label(a.child(0), v) && eval_label(a.child(1), v);
    }
    return false;
}

} // namespace

bool taut_oracle(std::span<const Label> hypotheses, const Label &target) {
    std::set<atom_index> atoms = label_atoms(target);
    for (const auto &h : hypotheses)
        atoms.merge(label_atoms(h));
    if (atoms.size() > taut_atom_limit)
        throw limit_exceeded("taut: " + std::to_string(atoms.size()) + " atoms exceed the limit of " +
                             std::to_string(taut_atom_limit));

    const std::vector<atom_index> order(atoms.begin(), atoms.end());
    std::map<atom_index, bool> v;
    for (std::uint64_t row = 0; row < (std::uint64_t{1} << order.size()); ++row) {
        for (std::size_t i = 0; i < order.size(); ++i)
            v[order[i]] = (row >> i) & 1u;
        bool all = std::ranges::all_of(hypotheses, [&](const Label &h) { return eval_label(h, v); });
        if (all && !eval_label(target, v))
            return false;
    }
    return true;
}

namespace {

OpenAssumptions open_of(const Derivation &d) {
    if (d.is_assumption())
        return {{d.id(), d.conclusion()}};
    OpenAssumptions out;
    for (std::size_t i = 0; i < d.premises().size(); ++i) {
        auto sub = open_of(d.premises()[i]);
        for (const auto &id : d.discharged_in(i))
            sub.erase(id);
        out.merge(sub);
    }
    return out;
}

struct failure {
    violation_kind kind;
    std::string detail;
};

class checker {
public:
    checker(OpenAssumptions root_open) : root_open_(std::move(root_open)) {}

    std::optional<Violation> run(const Derivation &d) {
        path_.clear();
        return visit(d);
    }

private:
    std::optional<Violation> visit(const Derivation &d) {
        for (std::size_t i = 0; i < d.premises().size(); ++i) {
            path_.push_back(i);
            auto v = visit(d.premises()[i]);
            path_.pop_back();
            if (v)
                return v;
        }
        if (auto f = node(d))
            return Violation{path_, f->kind, std::move(f->detail)};
        return std::nullopt;
    }

    std::optional<failure> node(const Derivation &d);

    OpenAssumptions root_open_;
    std::map<std::string, LabelledFormula> seen_;
    std::vector<std::size_t> path_;
};

std::optional<failure> shape(std::string detail) { return failure{violation_kind::shape, std::move(detail)}; }

bool is(const Formula &f, connective c) { return f.kind() == c; }

Formula itop() { return Formula::int_not(Formula::int_bot()); }

std::string show(const LabelledFormula &lf) { return to_string(lf); }

// Each id discharged in premise i must be open there and match one of `patterns`.
std::optional<failure> discharge_ok(const Derivation &d, std::size_t i, const std::vector<LabelledFormula> &patterns) {
    const auto ids = d.discharged_in(i);
    if (ids.empty())
        return std::nullopt;
    const auto open = open_of(d.premises()[i]);
    for (const auto &id : ids) {
        auto it = open.find(id);
        if (it == open.end())
            return failure{violation_kind::discharge, "premise " + std::to_string(i) + " has no open assumption " + id};
        if (std::ranges::find(patterns, it->second) == patterns.end())
            return failure{violation_kind::discharge,
                           "assumption " + id + " (" + show(it->second) + ") cannot be discharged here"};
    }
    return std::nullopt;
}

std::optional<failure> no_discharges(const Derivation &d) {
    for (const auto &ids : d.discharges())
        if (!ids.empty())
            return failure{violation_kind::discharge, std::string(name(d.rule_name())) + " discharges nothing"};
    return std::nullopt;
}

std::optional<failure> premise_count(const Derivation &d, std::size_t n) {
    if (d.premises().size() != n)
        return shape(std::string(name(d.rule_name())) + " takes " + std::to_string(n) + " premise(s), got " +
                     std::to_string(d.premises().size()));
    return std::nullopt;
}

std::optional<failure> checker::node(const Derivation &d) {
    const auto &c = d.conclusion();
    if (!is_core(c.formula))
        return shape("formula is not core: " + show(c));

    if (d.is_assumption()) {
        auto [it, inserted] = seen_.try_emplace(d.id(), c);
        if (!inserted && !(it->second == c))
            return shape("assumption id " + d.id() + " is used for different formulas");
        return std::nullopt;
    }

    const RuleName r = d.rule_name();
    if (!d.discharges().empty() && d.discharges().size() != d.premises().size())
        return failure{violation_kind::discharge, "discharges must list one id-list per premise"};
    if (!d.fresh().empty() && r != RuleName::IAndE && r != RuleName::IOrE)
        return shape(std::string(name(r)) + " declares no fresh atoms");
    for (std::size_t i = 0; i < d.premises().size(); ++i)
        if (d.discharged_in(i).size() != 0 && !(r == RuleName::OrE || r == RuleName::NotI || r == RuleName::RAA ||
                                                r == RuleName::IAndE || r == RuleName::IOrE))
            return no_discharges(d);

    auto prem = [&](std::size_t i) -> const LabelledFormula & { return d.premises()[i].conclusion(); };
    const Label &a = c.label;
    const Formula &f = c.formula;

    switch (r) {
    case RuleName::AndI:
        if (auto e = premise_count(d, 2))
            return e;
        if (!is(f, connective::ext_and) || !(prem(0) == LabelledFormula{a, f.child(0)}) ||
            !(prem(1) == LabelledFormula{a, f.child(1)}))
            return shape("AndI needs a:φ and a:ψ above a:φ & ψ");
        return std::nullopt;

    case RuleName::AndE_L:
    case RuleName::AndE_R: {
        if (auto e = premise_count(d, 1))
            return e;
        const auto &p = prem(0);
        const std::size_t side = r == RuleName::AndE_L ? 0 : 1;
        if (!(p.label == a) || !is(p.formula, connective::ext_and) || !(p.formula.child(side) == f))
            return shape(std::string(name(r)) + " does not project the conclusion from a conjunction");
        return std::nullopt;
    }

    case RuleName::OrI_L:
    case RuleName::OrI_R: {
        if (auto e = premise_count(d, 1))
            return e;
        const std::size_t side = r == RuleName::OrI_L ? 0 : 1;
        if (!is(f, connective::ext_or) || !(prem(0) == LabelledFormula{a, f.child(side)}))
            return shape(std::string(name(r)) + " premise is not the matching disjunct");
        return std::nullopt;
    }

    case RuleName::OrE: {
        if (auto e = premise_count(d, 3))
            return e;
        const auto &major = prem(0);
        if (!is(major.formula, connective::ext_or))
            return shape("OrE major premise is not a disjunction");
        if (!(prem(1) == c) || !(prem(2) == c))
            return shape("OrE minor premises must both conclude " + show(c));
        if (!d.discharged_in(0).empty())
            return failure{violation_kind::discharge, "OrE discharges nothing in its major premise"};
        if (auto e = discharge_ok(d, 1, {{major.label, major.formula.child(0)}}))
            return e;
        return discharge_ok(d, 2, {{major.label, major.formula.child(1)}});
    }

    case RuleName::NotI:
        if (auto e = premise_count(d, 1))
            return e;
        if (!is(f, connective::ext_not) || !is(prem(0).formula, connective::ext_bot))
            return shape("NotI needs b:bot above a:!φ");
        return discharge_ok(d, 0, {{a, f.child(0)}});

    case RuleName::NotE:
        if (auto e = premise_count(d, 2))
            return e;
        if (!is(f, connective::ext_bot) || !(prem(0).label == a) ||
            !(prem(1) == LabelledFormula{a, Formula::ext_not(prem(0).formula)}))
            return shape("NotE needs a:φ and a:!φ above a:bot");
        return std::nullopt;

    case RuleName::RAA:
        if (auto e = premise_count(d, 1))
            return e;
        if (!is(prem(0).formula, connective::ext_bot))
            return shape("RAA needs b:bot above a:φ");
        return discharge_ok(d, 0, {{a, Formula::ext_not(f)}});

    case RuleName::BotE:
        if (auto e = premise_count(d, 1))
            return e;
        if (!is(prem(0).formula, connective::ext_bot))
            return shape("BotE premise is not a:bot");
        return std::nullopt;

    case RuleName::IAndI:
    case RuleName::IOrI: {
        if (auto e = premise_count(d, 2))
            return e;
        const bool conj = r == RuleName::IAndI;
        const auto want = conj ? connective::int_and : connective::int_or;
        const Label lab = conj ? Label::land(prem(0).label, prem(1).label) : Label::lor(prem(0).label, prem(1).label);
        if (!is(f, want) || !(a == lab) || !(prem(0).formula == f.child(0)) || !(prem(1).formula == f.child(1)))
            return shape(std::string(name(r)) + " conclusion does not combine its premises");
        return std::nullopt;
    }

    case RuleName::IAndE:
    case RuleName::IOrE: {
        if (auto e = premise_count(d, 2))
            return e;
        const bool conj = r == RuleName::IAndE;
        const auto &major = prem(0);
        if (!is(major.formula, conj ? connective::int_and : connective::int_or))
            return shape(std::string(name(r)) + " major premise has the wrong main connective");
        if (!(prem(1) == c))
            return shape(std::string(name(r)) + " minor premise must conclude " + show(c));
        if (d.fresh().size() != 2)
            return shape(std::string(name(r)) + " declares exactly two fresh atoms");
        if (!d.discharged_in(0).empty())
            return failure{violation_kind::discharge, std::string(name(r)) + " discharges nothing in its major premise"};

        const atom_index p = d.fresh()[0], q = d.fresh()[1];
        const Label lp = Label::atom(p), lq = Label::atom(q);
        const Label joined = conj ? Label::land(lp, lq) : Label::lor(lp, lq);
        if (auto e = discharge_ok(d, 1,
                                  {{lp, major.formula.child(0)},
                                   {lq, major.formula.child(1)},
                                   label_equality(major.label, joined)}))
            return e;

        auto fresh_fail = [&](const std::string &why) {
            return failure{violation_kind::freshness, "fresh atoms p" + std::to_string(p) + ", p" + std::to_string(q) + " " + why};
        };
        if (p == q)
            return fresh_fail("are not distinct");
        std::set<atom_index> used = label_atoms(major.label);
        used.merge(label_atoms(a));
        for (const auto &[id, lf] : root_open_)
            used.merge(label_atoms(lf.label));
        for (const auto &[id, lf] : open_of(d))
            used.merge(label_atoms(lf.label));
        if (used.contains(p) || used.contains(q))
            return fresh_fail("occur in an uncancelled assumption or in the rule's labels");
        return std::nullopt;
    }

    case RuleName::INotI:
        if (auto e = premise_count(d, 1))
            return e;
        if (!is(f, connective::int_not) || !(a == Label::neg(prem(0).label)) || !(f.child(0) == prem(0).formula))
            return shape("INotI needs a:φ above !a : i!φ");
        return std::nullopt;

    case RuleName::INotE:
        if (auto e = premise_count(d, 1))
            return e;
        if (!is(prem(0).formula, connective::int_not) || !(a == Label::neg(prem(0).label)) ||
            !(prem(0).formula.child(0) == f))
            return shape("INotE needs a : i!φ above !a:φ");
        return std::nullopt;

    case RuleName::Taut: {
        const Formula top = itop();
        if (!(f == top))
            return shape("Taut concludes b : i!ibot");
        std::vector<Label> hyps;
        for (std::size_t i = 0; i < d.premises().size(); ++i) {
            if (!(prem(i).formula == top))
                return shape("Taut premises have the form a : i!ibot");
            hyps.push_back(prem(i).label);
        }
        bool valid = false;
        try {
            valid = taut_oracle(hyps, a);
        } catch (const limit_exceeded &ex) {
            return failure{violation_kind::taut, ex.what()};
        }
        if (!valid)
            return failure{violation_kind::taut, "premise labels do not classically entail " + to_string(a)};
        return std::nullopt;
    }

    case RuleName::Sub:
        if (auto e = premise_count(d, 2))
            return e;
        if (!(prem(1).formula == f) || !(prem(0) == label_equality(a, prem(1).label)))
            return shape("Sub needs a = b and b:φ above a:φ");
        return std::nullopt;
    }
    return shape("unknown rule");
}

} // namespace

CheckResult check(const Derivation &d, std::span<const LabelledFormula> gamma) {
    const auto root_open = open_of(d);
    checker c(root_open);
    if (auto v = c.run(d))
        return {std::move(v)};
    for (const auto &[id, lf] : root_open)
        if (std::ranges::find(gamma, lf) == gamma.end())
            return {Violation{{}, violation_kind::open_assumption, "open assumption " + id + " (" + show(lf) + ") is not in Γ"}};
    return {};
}

OpenAssumptions open_assumptions(const Derivation &d, std::span<const std::size_t> path) {
    const Derivation *cur = &d;
    for (auto i : path)
        cur = &cur->premises().at(i);
    return open_of(*cur);
}

} // namespace lt
