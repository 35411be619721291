#pragma once

// Entailment over finite powerset algebras: local entailment for a fixed
// homomorphism, exhaustive countermodel search for a fixed algebra 2^n,
// labelled entailment, and the principal-variable class.
//
// Enumeration order is canonical: variables ascending (the smallest index is
// the most significant digit), each variable ranging over its candidate
// denotations in ascending little-endian integer order. Label atoms follow
// the homomorphism digits in the same way. The reported countermodel is the
// first one in that order whatever the number of worker threads.

#include "lt/algebra.hpp"
#include "lt/semantics.hpp"
#include "lt/syntax.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <vector>

namespace lt {

/// Enumeration engines cap the algebra at 2^4 (denotations are 16-bit sets).
inline constexpr unsigned max_search_atoms = 4;
inline constexpr unsigned default_max_n = 3;
inline constexpr std::uint64_t default_budget = std::uint64_t{1} << 22;

enum class class_restriction {
    all,
    principal_variables, ///< every variable denotes a non-empty principal ideal
};

enum class search_status { entailed, countermodel, budget_exceeded };

struct EngineOptions {
    std::uint64_t budget = default_budget; ///< homomorphisms (or (H, h) pairs) per algebra
    unsigned jobs = 1;
};

struct Countermodel {
    Homomorphism hom;
    /// Member of every premise denotation but not of the conclusion's.
    Element witness;
    /// Present for labelled queries; witness is then h(b).
    std::optional<LabelValuation> labels;

    AlgebraSpec algebra() const { return hom.algebra(); }
};

struct LocalResult {
    bool holds = true;
    std::optional<Element> witness; ///< smallest violating element
};

/// ⋂ H(Δ) ⊆ H(ψ); an empty Δ intersects to the whole carrier.
LocalResult local_entails(const Homomorphism &h, std::span<const Formula> premises, const Formula &conclusion);

struct AlgebraVerdict {
    search_status status = search_status::entailed;
    std::optional<Countermodel> countermodel;
    std::uint64_t explored = 0; ///< candidates examined in canonical order
    std::uint64_t space = 0;    ///< size of the whole candidate space (saturating)
};

/// Exhaustive search over every H : Fm -> P(2^n) on the free variables.
AlgebraVerdict algebra_entails(unsigned n, std::span<const Formula> premises, const Formula &conclusion,
                               class_restriction restriction = class_restriction::all,
                               const EngineOptions &options = {});

struct SearchReport {
    search_status status = search_status::entailed;
    /// Algebra of the countermodel, the last algebra fully checked when
    /// entailed, or the algebra whose budget ran out.
    unsigned n = 0;
    std::optional<Countermodel> countermodel;
    std::uint64_t explored = 0;
};

/// Runs algebra_entails for n = 0, 1, ..., max_n and stops at the first
/// countermodel or exhausted budget.
SearchReport find_countermodel(std::span<const Formula> premises, const Formula &conclusion, unsigned max_n,
                               class_restriction restriction = class_restriction::all,
                               const EngineOptions &options = {});

/// Quantifies over both H and the label valuation h.
AlgebraVerdict labelled_entails(unsigned n, std::span<const LabelledFormula> premises,
                                const LabelledFormula &conclusion, const EngineOptions &options = {});

SearchReport find_labelled_countermodel(std::span<const LabelledFormula> premises, const LabelledFormula &conclusion,
                                        unsigned max_n, const EngineOptions &options = {});

/// box(P_i i| ~P_i) for every i, ascending.
std::vector<Formula> pva_axioms(const std::set<var_index> &vars);

struct BoxInternalisation {
    bool axiomatised = false; ///< box Π, Δ entail ψ over 2^n
    bool restricted = false;  ///< every H validating all of Π locally entails Δ ⊨ ψ
    bool agree() const { return axiomatised == restricted; }
};

/// Throws lt::budget_exceeded if either side cannot be enumerated within budget.
BoxInternalisation verify_box_internalisation(unsigned n, std::span<const Formula> defining,
                                              std::span<const Formula> premises, const Formula &conclusion,
                                              const EngineOptions &options = {});

} // namespace lt
