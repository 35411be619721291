#include "lt/algebra.hpp"

#include "lt/error.hpp"

#include <stdexcept>

namespace lt {

AlgebraSpec AlgebraSpec::of(unsigned n_atoms) {
    if (n_atoms > max_algebra_atoms)
        throw limit_exceeded("algebra with " + std::to_string(n_atoms) + " atoms exceeds the limit of " +
                             std::to_string(max_algebra_atoms));
    return AlgebraSpec{n_atoms};
}

std::string to_bitstring(AlgebraSpec alg, Element a) {
    std::string s(alg.n_atoms, '0');
    for (unsigned i = 0; i < alg.n_atoms; ++i)
        if (a.bits & (1u << i))
            s[alg.n_atoms - 1 - i] = '1';
    return s;
}

Element parse_element(AlgebraSpec alg, const std::string &text) {
    if (text.size() != alg.n_atoms)
        throw std::invalid_argument("element '" + text + "' does not have " + std::to_string(alg.n_atoms) + " bits");
    Element a;
    for (unsigned i = 0; i < alg.n_atoms; ++i) {
        char c = text[alg.n_atoms - 1 - i];
        if (c == '1')
            a.bits |= 1u << i;
        else if (c != '0')
            throw std::invalid_argument("element '" + text + "' is not a bit-string");
    }
    return a;
}

Denotation::Denotation(AlgebraSpec alg, bits_type members) : alg_(alg), members_(members) {
    for (std::size_t i = alg.carrier_size(); i < max_carrier; ++i)
        members_.reset(i);
}

Denotation Denotation::full(AlgebraSpec alg) {
    Denotation d(alg);
    for (std::size_t i = 0; i < alg.carrier_size(); ++i)
        d.members_.set(i);
    return d;
}

Denotation Denotation::of(AlgebraSpec alg, std::initializer_list<Element> elems) {
    Denotation d(alg);
    for (auto e : elems) {
        if (e.bits > alg.mask())
            throw std::invalid_argument("element outside the algebra");
        d.insert(e);
    }
    return d;
}

Denotation Denotation::from_mask(AlgebraSpec alg, std::uint64_t mask) {
    if (alg.carrier_size() > 64)
        throw limit_exceeded("from_mask needs a carrier of at most 64 elements");
    Denotation d(alg);
    for (std::size_t i = 0; i < alg.carrier_size(); ++i)
        if (mask & (std::uint64_t{1} << i))
            d.members_.set(i);
    return d;
}

std::vector<Element> Denotation::elements() const {
    std::vector<Element> out;
    for (std::size_t i = 0; i < alg_.carrier_size(); ++i)
        if (members_.test(i))
            out.push_back(Element{static_cast<std::uint32_t>(i)});
    return out;
}

std::uint64_t Denotation::to_mask() const {
    if (alg_.carrier_size() > 64)
        throw limit_exceeded("to_mask needs a carrier of at most 64 elements");
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < alg_.carrier_size(); ++i)
        if (members_.test(i))
            m |= std::uint64_t{1} << i;
    return m;
}

namespace {
void require_same(const Denotation &d, const Denotation &e) {
    if (!(d.algebra() == e.algebra()))
        throw algebra_mismatch("denotations over 2^" + std::to_string(d.algebra().n_atoms) + " and 2^" +
                               std::to_string(e.algebra().n_atoms));
}
} // namespace

bool Denotation::subset_of(const Denotation &other) const {
    require_same(*this, other);
    return (members_ & ~other.members_).none();
}

bool canonical_less(const Denotation &a, const Denotation &b) {
    require_same(a, b);
    for (std::size_t i = a.algebra().carrier_size(); i-- > 0;) {
        bool x = a.members().test(i), y = b.members().test(i);
        if (x != y)
            return y;
    }
    return false;
}

std::vector<std::string> to_strings(const Denotation &d) {
    std::vector<std::string> out;
    for (auto e : d.elements())
        out.push_back(to_bitstring(d.algebra(), e));
    return out;
}

Denotation parse_denotation(AlgebraSpec alg, const std::vector<std::string> &members) {
    Denotation d(alg);
    for (const auto &m : members)
        d.insert(parse_element(alg, m));
    return d;
}

Denotation ext_bot(AlgebraSpec alg) { return Denotation::empty(alg); }

Denotation ext_not(const Denotation &d) { return Denotation(d.algebra(), ~d.members()); }

Denotation ext_or(const Denotation &d, const Denotation &e) {
    require_same(d, e);
    return Denotation(d.algebra(), d.members() | e.members());
}

Denotation ext_and(const Denotation &d, const Denotation &e) {
    require_same(d, e);
    return Denotation(d.algebra(), d.members() & e.members());
}

Denotation int_bot(AlgebraSpec alg) { return Denotation::of(alg, {bottom(alg)}); }

Denotation int_not(const Denotation &d) {
    Denotation out(d.algebra());
    for (auto a : d.elements())
        out.insert(complement(d.algebra(), a));
    return out;
}

Denotation int_or(const Denotation &d, const Denotation &e) {
    require_same(d, e);
    Denotation out(d.algebra());
    auto xs = d.elements(), ys = e.elements();
    for (auto a : xs)
        for (auto b : ys)
            out.insert(join(a, b));
    return out;
}

Denotation int_and(const Denotation &d, const Denotation &e) {
    require_same(d, e);
    Denotation out(d.algebra());
    auto xs = d.elements(), ys = e.elements();
    for (auto a : xs)
        for (auto b : ys)
            out.insert(meet(a, b));
    return out;
}

Denotation down_closure(const Denotation &d) {
    const auto alg = d.algebra();
    Denotation out(alg);
    for (std::uint32_t b = 0; b < alg.carrier_size(); ++b)
        for (auto a : d.elements())
            if (leq(Element{b}, a)) {
                out.insert(Element{b});
                break;
            }
    return out;
}

Denotation up_closure(const Denotation &d) {
    const auto alg = d.algebra();
    Denotation out(alg);
    for (std::uint32_t b = 0; b < alg.carrier_size(); ++b)
        for (auto a : d.elements())
            if (leq(a, Element{b})) {
                out.insert(Element{b});
                break;
            }
    return out;
}

Denotation strict_neg(const Denotation &d) {
    const auto alg = d.algebra();
    const auto members = d.elements();
    Denotation out(alg);
    for (std::uint32_t b = 0; b < alg.carrier_size(); ++b) {
        bool separate = true;
        for (auto a : members)
            if (meet(Element{b}, a).bits != 0) {
                separate = false;
                break;
            }
        if (separate)
            out.insert(Element{b});
    }
    return out;
}

Denotation principal_ideal(AlgebraSpec alg, Element a) {
    if (a.bits > alg.mask())
        throw std::invalid_argument("element outside the algebra");
    Denotation out(alg);
    for (std::uint32_t b = 0; b < alg.carrier_size(); ++b)
        if (leq(Element{b}, a))
            out.insert(Element{b});
    return out;
}

Element join_of(const Denotation &d) {
    Element acc{0};
    for (auto a : d.elements())
        acc = join(acc, a);
    return acc;
}

bool is_principal_ideal(const Denotation &d) {
    if (d.is_empty())
        return false;
    return d == principal_ideal(d.algebra(), join_of(d));
}

} // namespace lt
