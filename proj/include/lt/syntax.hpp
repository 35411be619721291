#pragma once

// Formulas, labels and labelled formulas of the logic of teams.
//
// Formulas are immutable trees with shared structure; copying a Formula is
// a reference-count bump. Derived connectives (top, nb, down, box, ~, ...)
// are kept as first-class nodes so that they can be evaluated either
// natively or after expansion into the eight core connectives.

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lt {

using var_index = std::uint32_t;
using atom_index = std::uint32_t;

enum class connective : std::uint8_t {
    ext_bot,
    int_bot,
    var,
    ext_not,
    int_not,
    ext_or,
    ext_and,
    int_or,
    int_and,
    derived,
};

enum class derived_tag : std::uint8_t {
    ext_top,     // !bot
    int_top,     // i!ibot
    nb,          // !ibot
    down,        // f i& top
    up,          // f i| top
    diamond,     // up down f
    box,         // !dia !f
    implies,     // !f | g
    strict_not,  // !up(down f & nb)
    circle_star, // (f & nb) i| (g & nb)
};

/// Number of children a derived node carries.
std::size_t arity(derived_tag tag) noexcept;
std::string_view name(derived_tag tag) noexcept;
std::string_view name(connective c) noexcept;

class Formula {
public:
    static Formula ext_bot();
    static Formula int_bot();
    static Formula var(var_index index);
    static Formula ext_not(Formula f);
    static Formula int_not(Formula f);
    static Formula ext_or(Formula l, Formula r);
    static Formula ext_and(Formula l, Formula r);
    static Formula int_or(Formula l, Formula r);
    static Formula int_and(Formula l, Formula r);
    /// Throws std::invalid_argument when children.size() != arity(tag).
    static Formula derived(derived_tag tag, std::vector<Formula> children);

    // Shorthands for the derived constructors.
    static Formula ext_top() { return derived(derived_tag::ext_top, {}); }
    static Formula int_top() { return derived(derived_tag::int_top, {}); }
    static Formula nb() { return derived(derived_tag::nb, {}); }
    static Formula down(Formula f) { return derived(derived_tag::down, {std::move(f)}); }
    static Formula up(Formula f) { return derived(derived_tag::up, {std::move(f)}); }
    static Formula diamond(Formula f) { return derived(derived_tag::diamond, {std::move(f)}); }
    static Formula box(Formula f) { return derived(derived_tag::box, {std::move(f)}); }
    static Formula strict_not(Formula f) { return derived(derived_tag::strict_not, {std::move(f)}); }
    static Formula implies(Formula l, Formula r) { return derived(derived_tag::implies, {std::move(l), std::move(r)}); }
    static Formula circle_star(Formula l, Formula r) {
        return derived(derived_tag::circle_star, {std::move(l), std::move(r)});
    }

    connective kind() const noexcept { return node_->kind; }
    /// Only meaningful for connective::var.
    var_index index() const noexcept { return node_->index; }
    /// Only meaningful for connective::derived.
    derived_tag tag() const noexcept { return node_->tag; }
    std::span<const Formula> children() const noexcept { return node_->children; }
    const Formula &child(std::size_t i) const { return node_->children.at(i); }

    bool is_derived() const noexcept { return kind() == connective::derived; }

    friend bool operator==(const Formula &a, const Formula &b) noexcept;

private:
    struct node {
        connective kind;
        derived_tag tag;
        var_index index;
        std::vector<Formula> children;
    };

    explicit Formula(std::shared_ptr<const node> n) : node_(std::move(n)) {}
    static Formula make(connective kind, derived_tag tag, var_index index, std::vector<Formula> children);

    std::shared_ptr<const node> node_;
};

enum class label_kind : std::uint8_t { bot, atom, neg, lor, land };

class Label {
public:
    static Label bot();
    static Label atom(atom_index index);
    static Label neg(Label a);
    static Label lor(Label l, Label r);
    static Label land(Label l, Label r);
    /// (a | !b) & (!a | b)
    static Label iff(const Label &a, const Label &b);

    label_kind kind() const noexcept { return node_->kind; }
    atom_index index() const noexcept { return node_->index; }
    std::span<const Label> children() const noexcept { return node_->children; }
    const Label &child(std::size_t i) const { return node_->children.at(i); }

    friend bool operator==(const Label &a, const Label &b) noexcept;

private:
    struct node {
        label_kind kind;
        atom_index index;
        std::vector<Label> children;
    };
    explicit Label(std::shared_ptr<const node> n) : node_(std::move(n)) {}
    static Label make(label_kind kind, atom_index index, std::vector<Label> children);

    std::shared_ptr<const node> node_;
};

struct LabelledFormula {
    Label label;
    Formula formula;

    friend bool operator==(const LabelledFormula &, const LabelledFormula &) = default;
};

/// The labelled formula `a = b`, i.e. (a <-> b) : i!ibot.
LabelledFormula label_equality(const Label &a, const Label &b);

using Substitution = std::map<var_index, Formula>;

// Parsing. All three throw lt::syntax_error.
Formula parse_formula(std::string_view text);
Label parse_label(std::string_view text);
/// Accepts `<label> : <formula>` and the sugar `<label> = <label>`.
LabelledFormula parse_labelled(std::string_view text);

// Printing; the output re-parses to a structurally equal tree.
std::string to_string(const Formula &f);
std::string to_string(const Label &a);
std::string to_string(const LabelledFormula &lf);

/// Constructor-style dump, e.g. `IntOr(Var(0), StrictNot(Var(0)))`.
std::string dump(const Formula &f);

/// Replaces every derived node by its definition; the result is core.
Formula expand(const Formula &f);
bool is_core(const Formula &f) noexcept;

/// Simultaneous replacement of variables; unmapped variables stay put.
Formula substitute(const Formula &f, const Substitution &sigma);

std::set<var_index> free_vars(const Formula &f);
std::set<atom_index> label_atoms(const Label &a);
/// Height of the tree: leaves have depth 1.
std::size_t depth(const Formula &f) noexcept;

} // namespace lt
