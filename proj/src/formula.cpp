#include "lt/syntax.hpp"

#include <algorithm>
#include <stdexcept>

namespace lt {

std::size_t arity(derived_tag tag) noexcept {
    switch (tag) {
    case derived_tag::ext_top:
    case derived_tag::int_top:
    case derived_tag::nb:
        return 0;
    case derived_tag::down:
    case derived_tag::up:
    case derived_tag::diamond:
    case derived_tag::box:
    case derived_tag::strict_not:
        return 1;
    case derived_tag::implies:
    case derived_tag::circle_star:
        return 2;
    }
    return 0;
}

std::string_view name(derived_tag tag) noexcept {
    switch (tag) {
    case derived_tag::ext_top: return "ExtTop";
    case derived_tag::int_top: return "IntTop";
    case derived_tag::nb: return "NB";
    case derived_tag::down: return "Down";
    case derived_tag::up: return "Up";
    case derived_tag::diamond: return "Diamond";
    case derived_tag::box: return "Box";
    case derived_tag::implies: return "Implies";
    case derived_tag::strict_not: return "StrictNot";
    case derived_tag::circle_star: return "CircleStar";
    }
    return "?";
}

std::string_view name(connective c) noexcept {
    switch (c) {
    case connective::ext_bot: return "ExtBot";
    case connective::int_bot: return "IntBot";
    case connective::var: return "Var";
    case connective::ext_not: return "ExtNot";
    case connective::int_not: return "IntNot";
    case connective::ext_or: return "ExtOr";
    case connective::ext_and: return "ExtAnd";
    case connective::int_or: return "IntOr";
    case connective::int_and: return "IntAnd";
    case connective::derived: return "Derived";
    }
    return "?";
}

Formula Formula::make(connective kind, derived_tag tag, var_index index, std::vector<Formula> children) {
    return Formula(std::make_shared<const node>(node{kind, tag, index, std::move(children)}));
}

Formula Formula::ext_bot() {
    static const Formula f = make(connective::ext_bot, derived_tag::ext_top, 0, {});
    return f;
}

Formula Formula::int_bot() {
    static const Formula f = make(connective::int_bot, derived_tag::ext_top, 0, {});
    return f;
}

Formula Formula::var(var_index index) { return make(connective::var, derived_tag::ext_top, index, {}); }

Formula Formula::ext_not(Formula f) { return make(connective::ext_not, derived_tag::ext_top, 0, {std::move(f)}); }
Formula Formula::int_not(Formula f) { return make(connective::int_not, derived_tag::ext_top, 0, {std::move(f)}); }

Formula Formula::ext_or(Formula l, Formula r) {
    return make(connective::ext_or, derived_tag::ext_top, 0, {std::move(l), std::move(r)});
}
Formula Formula::ext_and(Formula l, Formula r) {
    return make(connective::ext_and, derived_tag::ext_top, 0, {std::move(l), std::move(r)});
}
Formula Formula::int_or(Formula l, Formula r) {
    return make(connective::int_or, derived_tag::ext_top, 0, {std::move(l), std::move(r)});
}
Formula Formula::int_and(Formula l, Formula r) {
    return make(connective::int_and, derived_tag::ext_top, 0, {std::move(l), std::move(r)});
}

Formula Formula::derived(derived_tag tag, std::vector<Formula> children) {
    if (children.size() != arity(tag))
        throw std::invalid_argument("derived connective " + std::string(name(tag)) + " expects " +
                                    std::to_string(arity(tag)) + " children");
    return make(connective::derived, tag, 0, std::move(children));
}

bool operator==(const Formula &a, const Formula &b) noexcept {
    if (a.node_ == b.node_)
        return true;
    if (a.kind() != b.kind())
        return false;
    switch (a.kind()) {
    case connective::var:
        return a.index() == b.index();
    case connective::derived:
        if (a.tag() != b.tag())
            return false;
        break;
    default:
        break;
    }
    return std::ranges::equal(a.children(), b.children());
}

namespace {

Formula top() { return Formula::ext_not(Formula::ext_bot()); }
Formula not_bottom() { return Formula::ext_not(Formula::int_bot()); }

// Each definition is applied to already-expanded children.
Formula unfold(derived_tag tag, std::span<const Formula> c) {
    switch (tag) {
    case derived_tag::ext_top:
        return top();
    case derived_tag::int_top:
        return Formula::int_not(Formula::int_bot());
    case derived_tag::nb:
        return not_bottom();
    case derived_tag::down:
        return Formula::int_and(c[0], top());
    case derived_tag::up:
        return Formula::int_or(c[0], top());
    case derived_tag::diamond:
        return Formula::int_or(Formula::int_and(c[0], top()), top());
    case derived_tag::box: {
        auto inner = Formula::ext_not(c[0]);
        return Formula::ext_not(Formula::int_or(Formula::int_and(inner, top()), top()));
    }
    case derived_tag::implies:
        return Formula::ext_or(Formula::ext_not(c[0]), c[1]);
    case derived_tag::strict_not: {
        auto lowered = Formula::ext_and(Formula::int_and(c[0], top()), not_bottom());
        return Formula::ext_not(Formula::int_or(lowered, top()));
    }
    case derived_tag::circle_star:
        return Formula::int_or(Formula::ext_and(c[0], not_bottom()), Formula::ext_and(c[1], not_bottom()));
    }
    throw std::logic_error("unknown derived tag");
}

Formula rebuild(const Formula &f, std::vector<Formula> kids) {
    switch (f.kind()) {
    case connective::ext_not: return Formula::ext_not(std::move(kids[0]));
    case connective::int_not: return Formula::int_not(std::move(kids[0]));
    case connective::ext_or: return Formula::ext_or(std::move(kids[0]), std::move(kids[1]));
    case connective::ext_and: return Formula::ext_and(std::move(kids[0]), std::move(kids[1]));
    case connective::int_or: return Formula::int_or(std::move(kids[0]), std::move(kids[1]));
    case connective::int_and: return Formula::int_and(std::move(kids[0]), std::move(kids[1]));
    case connective::derived: return Formula::derived(f.tag(), std::move(kids));
    default: return f;
    }
}

} // namespace

bool is_core(const Formula &f) noexcept {
    if (f.is_derived())
        return false;
    return std::ranges::all_of(f.children(), [](const Formula &c) { return is_core(c); });
}

Formula expand(const Formula &f) {
    if (is_core(f))
        return f;
    std::vector<Formula> kids;
    kids.reserve(f.children().size());
    for (const auto &c : f.children())
        kids.push_back(expand(c));
    if (f.is_derived())
        return unfold(f.tag(), kids);
    return rebuild(f, std::move(kids));
}

Formula substitute(const Formula &f, const Substitution &sigma) {
    if (f.kind() == connective::var) {
        auto it = sigma.find(f.index());
        return it == sigma.end() ? f : it->second;
    }
    if (f.children().empty())
        return f;
    std::vector<Formula> kids;
    kids.reserve(f.children().size());
    for (const auto &c : f.children())
        kids.push_back(substitute(c, sigma));
    return rebuild(f, std::move(kids));
}

namespace {
void collect_vars(const Formula &f, std::set<var_index> &out) {
    if (f.kind() == connective::var)
        out.insert(f.index());
    for (const auto &c : f.children())
        collect_vars(c, out);
}
} // namespace

std::set<var_index> free_vars(const Formula &f) {
    std::set<var_index> out;
    collect_vars(f, out);
    return out;
}

std::size_t depth(const Formula &f) noexcept {
    std::size_t d = 0;
    for (const auto &c : f.children())
        d = std::max(d, depth(c));
    return d + 1;
}

std::string dump(const Formula &f) {
    std::string out;
    if (f.is_derived())
        out = std::string(name(f.tag()));
    else
        out = std::string(name(f.kind()));
    if (f.kind() == connective::var)
        return out + "(" + std::to_string(f.index()) + ")";
    if (f.children().empty())
        return out;
    out += '(';
    bool first = true;
    for (const auto &c : f.children()) {
        if (!first)
            out += ", ";
        first = false;
        out += dump(c);
    }
    out += ')';
    return out;
}

} // namespace lt
