#pragma once

// Valuational team semantics for the PT+ fragment over k variables.
//
// A valuation s over k variables is a k-bit vector (s(i) = bit i). A team is
// a set of valuations and is identified with an Element of the algebra
// 2^(2^k): bit s of the team is set iff s belongs to it. A PT+ denotation is
// then literally a Denotation over that algebra, which is what makes the
// comparison with H_V a bitset equality.

#include "lt/algebra.hpp"
#include "lt/semantics.hpp"
#include "lt/syntax.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lt {

inline constexpr unsigned max_pt_variables = 3;

struct Valuation {
    std::uint32_t bits = 0;
    bool operator()(var_index i) const noexcept { return (bits >> i) & 1u; }
    friend bool operator==(Valuation, Valuation) = default;
};

using Team = Element;
using PTDenotation = Denotation;

/// The algebra P(2^k) whose elements are the teams over k variables.
AlgebraSpec team_algebra(unsigned k);

std::string to_bitstring(unsigned k, Valuation s);
/// Members of a team as valuation bit-strings, ascending.
std::vector<std::string> team_to_strings(unsigned k, Team t);

/// P_i, ~P_i, ibot, nb, i|, &, |, and the o* sugar.
bool is_pt_formula(const Formula &f) noexcept;

/// Clause-by-clause team semantics. Throws lt::fragment_error outside PT+
/// and lt::limit_exceeded for k > max_pt_variables or variables >= k.
PTDenotation pt_eval(const Formula &f, unsigned k);

struct PtEntailment {
    bool holds = true;
    std::optional<Team> counter_team; ///< smallest team refuting the entailment
};

PtEntailment pt_entails(std::span<const Formula> premises, const Formula &conclusion, unsigned k);

/// H_V truncated to k variables: P_i ↦ principal ideal of {s | s(i) = 1}.
Homomorphism build_hv(unsigned k);

/// f_H : S -> 2^k for a homomorphism into P(P S) with principal variables,
/// where S is the set of atoms of 2^n.
class ValuationMap {
public:
    ValuationMap(unsigned n_atoms, unsigned k, std::vector<Valuation> image);

    unsigned source_atoms() const noexcept { return n_; }
    unsigned variables() const noexcept { return k_; }
    Valuation operator()(unsigned atom) const { return image_.at(atom); }
    const std::vector<Valuation> &image() const noexcept { return image_; }

    /// f*(X) = {f(x) | x ∈ X}, as a team over k variables.
    Team lift(Element x) const;

private:
    unsigned n_;
    unsigned k_;
    std::vector<Valuation> image_;
};

/// Throws lt::precondition_error unless every P_i (i < k) is bound to a principal ideal.
ValuationMap f_map(const Homomorphism &h, unsigned k);

/// Every PT+ formula (without o*) over P_0 .. P_{k-1} of depth at most `depth`;
/// P_i and ~P_i count as leaves.
std::vector<Formula> pt_formulas(unsigned k, std::size_t depth);

/// pt_formulas together with their H_V denotations, reusable across homomorphisms.
struct PtCatalogue {
    unsigned k = 0;
    std::size_t depth = 0;
    std::vector<Formula> formulas;
    std::vector<Formula> expanded;
    std::vector<Denotation> hv;

    static PtCatalogue build(unsigned k, std::size_t depth);
};

struct FRepresentationReport {
    bool holds = true;
    std::size_t formulas_checked = 0;
    std::optional<Formula> failing_formula;
    std::optional<Element> failing_set;
};

/// X ∈ H(φ) iff f*(X) ∈ H_V(φ) for every X ⊆ S and catalogue formula φ.
FRepresentationReport verify_f_representation(const Homomorphism &h, const PtCatalogue &catalogue);
FRepresentationReport verify_f_representation(const Homomorphism &h, unsigned k, std::size_t depth);

} // namespace lt
