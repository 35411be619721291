#include "lt/semantics.hpp"

#include "lt/error.hpp"

#include <stdexcept>

namespace lt {

unbound_symbol::unbound_symbol(std::string s) : error("unbound symbol " + s), symbol_(std::move(s)) {}

Homomorphism::Homomorphism(AlgebraSpec alg, std::map<var_index, Denotation> assignment) : alg_(alg) {
    for (auto &[v, d] : assignment)
        bind(v, std::move(d));
}

void Homomorphism::bind(var_index v, Denotation d) {
    if (!(d.algebra() == alg_))
        throw algebra_mismatch("binding P" + std::to_string(v) + " to a denotation of another algebra");
    assignment_.insert_or_assign(v, std::move(d));
}

const Denotation &Homomorphism::at(var_index v) const {
    auto it = assignment_.find(v);
    if (it == assignment_.end())
        throw unbound_symbol("P" + std::to_string(v));
    return it->second;
}

LabelValuation::LabelValuation(AlgebraSpec alg, std::map<atom_index, Element> assignment) : alg_(alg) {
    for (auto [p, a] : assignment)
        bind(p, a);
}

void LabelValuation::bind(atom_index p, Element a) {
    if (a.bits > alg_.mask())
        throw algebra_mismatch("label value for p" + std::to_string(p) + " is outside the algebra");
    assignment_.insert_or_assign(p, a);
}

Element LabelValuation::at(atom_index p) const {
    auto it = assignment_.find(p);
    if (it == assignment_.end())
        throw unbound_symbol("p" + std::to_string(p));
    return it->second;
}

Denotation eval_native_derived(AlgebraSpec alg, derived_tag tag, std::span<const Denotation> args) {
    if (args.size() != arity(tag))
        throw std::invalid_argument("wrong number of arguments for " + std::string(name(tag)));
    switch (tag) {
    case derived_tag::ext_top:
        return Denotation::full(alg);
    case derived_tag::int_top:
        return Denotation::of(alg, {top(alg)});
    case derived_tag::nb:
        return ext_not(int_bot(alg));
    case derived_tag::down:
        return down_closure(args[0]);
    case derived_tag::up:
        return up_closure(args[0]);
    case derived_tag::diamond:
        return args[0].is_empty() ? Denotation::empty(alg) : Denotation::full(alg);
    case derived_tag::box:
        return args[0].is_full() ? Denotation::full(alg) : Denotation::empty(alg);
    case derived_tag::implies:
        return ext_or(ext_not(args[0]), args[1]);
    case derived_tag::strict_not:
        return strict_neg(args[0]);
    case derived_tag::circle_star: {
        auto nb = ext_not(int_bot(alg));
        return int_or(ext_and(args[0], nb), ext_and(args[1], nb));
    }
    }
    throw std::logic_error("unknown derived tag");
}

namespace {

Denotation eval_tree(const Homomorphism &h, const Formula &f) {
    const auto alg = h.algebra();
    switch (f.kind()) {
    case connective::ext_bot: return ext_bot(alg);
    case connective::int_bot: return int_bot(alg);
    case connective::var: return h.at(f.index());
    case connective::ext_not: return ext_not(eval_tree(h, f.child(0)));
    case connective::int_not: return int_not(eval_tree(h, f.child(0)));
    case connective::ext_or: return ext_or(eval_tree(h, f.child(0)), eval_tree(h, f.child(1)));
    case connective::ext_and: return ext_and(eval_tree(h, f.child(0)), eval_tree(h, f.child(1)));
    case connective::int_or: return int_or(eval_tree(h, f.child(0)), eval_tree(h, f.child(1)));
    case connective::int_and: return int_and(eval_tree(h, f.child(0)), eval_tree(h, f.child(1)));
    case connective::derived: {
        std::vector<Denotation> args;
        args.reserve(f.children().size());
        for (const auto &c : f.children())
            args.push_back(eval_tree(h, c));
        return eval_native_derived(alg, f.tag(), args);
    }
    }
    throw std::logic_error("unknown connective");
}

} // namespace

Denotation eval(const Homomorphism &h, const Formula &f, eval_mode mode) {
    if (mode == eval_mode::expand && !is_core(f))
        return eval_tree(h, expand(f));
    return eval_tree(h, f);
}

Element eval_label(const LabelValuation &h, const Label &a) {
    const auto alg = h.algebra();
    switch (a.kind()) {
    case label_kind::bot: return bottom(alg);
    case label_kind::atom: return h.at(a.index());
    case label_kind::neg: return complement(alg, eval_label(h, a.child(0)));
    case label_kind::lor: return join(eval_label(h, a.child(0)), eval_label(h, a.child(1)));
    case label_kind::land: return meet(eval_label(h, a.child(0)), eval_label(h, a.child(1)));
    }
    throw std::logic_error("unknown label kind");
}

bool satisfies(const LabelValuation &h, const Homomorphism &hom, const LabelledFormula &lf) {
    if (!(h.algebra() == hom.algebra()))
        throw algebra_mismatch("label valuation and homomorphism use different algebras");
    return eval(hom, lf.formula).contains(eval_label(h, lf.label));
}

Homomorphism compose(const Homomorphism &h, const Substitution &sigma) {
    Homomorphism out(h.algebra());
    for (const auto &[v, d] : h.assignment())
        out.bind(v, d);
    for (const auto &[v, image] : sigma)
        out.bind(v, eval(h, image));
    return out;
}

} // namespace lt
