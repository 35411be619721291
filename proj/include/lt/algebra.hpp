#pragma once

// Finite powerset Boolean algebras B = 2^n and denotations X ⊆ B.
//
// An element of B is an n-bit vector (bit i = atom i). Elements are indexed
// 0 .. 2^n - 1 by their bit pattern and a denotation is a bitset over those
// indices. The external operators act on denotations as sets; the internal
// ones apply B's operators pointwise.

#include <bitset>
#include <cstdint>
#include <string>
#include <vector>

namespace lt {

/// Largest n for which denotations fit the fixed-width bitset (|B| = 256).
inline constexpr unsigned max_algebra_atoms = 8;
inline constexpr std::size_t max_carrier = std::size_t{1} << max_algebra_atoms;

struct AlgebraSpec {
    unsigned n_atoms = 0;

    /// Throws lt::limit_exceeded for n_atoms > max_algebra_atoms.
    static AlgebraSpec of(unsigned n_atoms);

    std::size_t carrier_size() const noexcept { return std::size_t{1} << n_atoms; }
    std::uint32_t mask() const noexcept { return static_cast<std::uint32_t>(carrier_size() - 1); }

    friend bool operator==(AlgebraSpec, AlgebraSpec) = default;
};

struct Element {
    std::uint32_t bits = 0;

    friend bool operator==(Element, Element) = default;
    friend auto operator<=>(Element, Element) = default;
};

inline Element meet(Element a, Element b) noexcept { return {a.bits & b.bits}; }
inline Element join(Element a, Element b) noexcept { return {a.bits | b.bits}; }
inline Element complement(AlgebraSpec alg, Element a) noexcept { return {~a.bits & alg.mask()}; }
inline bool leq(Element a, Element b) noexcept { return (a.bits & b.bits) == a.bits; }
inline Element bottom(AlgebraSpec) noexcept { return {0}; }
inline Element top(AlgebraSpec alg) noexcept { return {alg.mask()}; }

/// Most-significant atom first; the empty string at n = 0.
std::string to_bitstring(AlgebraSpec alg, Element a);
/// Inverse of to_bitstring; throws std::invalid_argument on bad input.
Element parse_element(AlgebraSpec alg, const std::string &text);

class Denotation {
public:
    using bits_type = std::bitset<max_carrier>;

    explicit Denotation(AlgebraSpec alg) : alg_(alg) {}
    Denotation(AlgebraSpec alg, bits_type members);

    static Denotation empty(AlgebraSpec alg) { return Denotation(alg); }
    static Denotation full(AlgebraSpec alg);
    static Denotation of(AlgebraSpec alg, std::initializer_list<Element> elems);
    /// Bit e of `mask` marks element e. Requires carrier_size() <= 64.
    static Denotation from_mask(AlgebraSpec alg, std::uint64_t mask);

    AlgebraSpec algebra() const noexcept { return alg_; }
    const bits_type &members() const noexcept { return members_; }

    bool contains(Element a) const { return members_.test(a.bits); }
    void insert(Element a) { members_.set(a.bits); }
    void erase(Element a) { members_.reset(a.bits); }
    bool is_empty() const noexcept { return members_.none(); }
    bool is_full() const noexcept { return members_.count() == alg_.carrier_size(); }
    std::size_t size() const noexcept { return members_.count(); }

    /// Members in ascending index order.
    std::vector<Element> elements() const;
    /// The little-endian integer value; requires carrier_size() <= 64.
    std::uint64_t to_mask() const;

    bool subset_of(const Denotation &other) const;

    friend bool operator==(const Denotation &, const Denotation &) = default;

private:
    AlgebraSpec alg_;
    bits_type members_;
};

/// Total order: compares the denotations as little-endian integers.
bool canonical_less(const Denotation &a, const Denotation &b);

/// Bit-strings of the members, ascending.
std::vector<std::string> to_strings(const Denotation &d);
Denotation parse_denotation(AlgebraSpec alg, const std::vector<std::string> &members);

// External (set-theoretic) operators. Binary ones throw lt::algebra_mismatch.
Denotation ext_bot(AlgebraSpec alg);
Denotation ext_not(const Denotation &d);
Denotation ext_or(const Denotation &d, const Denotation &e);
Denotation ext_and(const Denotation &d, const Denotation &e);

// Internal (pointwise) operators.
Denotation int_bot(AlgebraSpec alg);
Denotation int_not(const Denotation &d);
Denotation int_or(const Denotation &d, const Denotation &e);
Denotation int_and(const Denotation &d, const Denotation &e);

Denotation down_closure(const Denotation &d);
Denotation up_closure(const Denotation &d);

/// Elements b with b ∧ a = ⊥ for every member a.
Denotation strict_neg(const Denotation &d);

Denotation principal_ideal(AlgebraSpec alg, Element a);
/// Join of all members; ⊥ for the empty denotation.
Element join_of(const Denotation &d);
/// Non-empty, downward closed and containing its own join.
bool is_principal_ideal(const Denotation &d);

} // namespace lt
