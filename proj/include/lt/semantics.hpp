#pragma once

#include "lt/algebra.hpp"
#include "lt/syntax.hpp"

#include <map>

namespace lt {

/// H : Fm -> P B, determined by its values on the variables it binds.
class Homomorphism {
public:
    explicit Homomorphism(AlgebraSpec alg) : alg_(alg) {}
    Homomorphism(AlgebraSpec alg, std::map<var_index, Denotation> assignment);

    AlgebraSpec algebra() const noexcept { return alg_; }
    const std::map<var_index, Denotation> &assignment() const noexcept { return assignment_; }

    /// Throws lt::algebra_mismatch when d lives in another algebra.
    void bind(var_index v, Denotation d);
    bool binds(var_index v) const { return assignment_.contains(v); }
    /// Throws lt::unbound_symbol.
    const Denotation &at(var_index v) const;

    friend bool operator==(const Homomorphism &, const Homomorphism &) = default;

private:
    AlgebraSpec alg_;
    std::map<var_index, Denotation> assignment_;
};

/// h : Lb -> B.
class LabelValuation {
public:
    explicit LabelValuation(AlgebraSpec alg) : alg_(alg) {}
    LabelValuation(AlgebraSpec alg, std::map<atom_index, Element> assignment);

    AlgebraSpec algebra() const noexcept { return alg_; }
    const std::map<atom_index, Element> &assignment() const noexcept { return assignment_; }

    void bind(atom_index p, Element a);
    Element at(atom_index p) const;

    friend bool operator==(const LabelValuation &, const LabelValuation &) = default;

private:
    AlgebraSpec alg_;
    std::map<atom_index, Element> assignment_;
};

enum class eval_mode {
    expand, ///< unfold derived connectives first, then evaluate the core formula
    native, ///< evaluate derived connectives with their set-level definitions
};

Denotation eval(const Homomorphism &h, const Formula &f, eval_mode mode = eval_mode::expand);

/// Set-level meaning of a derived connective applied to already-evaluated arguments.
Denotation eval_native_derived(AlgebraSpec alg, derived_tag tag, std::span<const Denotation> args);

Element eval_label(const LabelValuation &h, const Label &a);

/// h(a) ∈ H(φ).
bool satisfies(const LabelValuation &h, const Homomorphism &hom, const LabelledFormula &lf);

/// H∘σ: every variable bound by H or mapped by σ gets eval(H, σ(v)).
Homomorphism compose(const Homomorphism &h, const Substitution &sigma);

} // namespace lt
