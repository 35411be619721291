#include "lt/ptplus.hpp"

#include "lt/error.hpp"

namespace lt {

AlgebraSpec team_algebra(unsigned k) {
    if (k > max_pt_variables)
        throw limit_exceeded("team semantics supports at most " + std::to_string(max_pt_variables) +
                             " variables, got " + std::to_string(k));
    return AlgebraSpec::of(1u << k);
}

std::string to_bitstring(unsigned k, Valuation s) { return to_bitstring(AlgebraSpec{k}, Element{s.bits}); }

std::vector<std::string> team_to_strings(unsigned k, Team t) {
    std::vector<std::string> out;
    for (std::uint32_t s = 0; s < (1u << k); ++s)
        if (t.bits & (1u << s))
            out.push_back(to_bitstring(k, Valuation{s}));
    return out;
}

bool is_pt_formula(const Formula &f) noexcept {
    switch (f.kind()) {
    case connective::var:
    case connective::int_bot:
        return true;
    case connective::int_or:
    case connective::ext_and:
    case connective::ext_or:
        return is_pt_formula(f.child(0)) && is_pt_formula(f.child(1));
    case connective::derived:
        switch (f.tag()) {
        case derived_tag::nb:
            return true;
        case derived_tag::strict_not:
            return f.child(0).kind() == connective::var;
        case derived_tag::circle_star:
            return is_pt_formula(f.child(0)) && is_pt_formula(f.child(1));
        default:
            return false;
        }
    default:
        return false;
    }
}

namespace {

using team_set = Denotation::bits_type;

struct team_space {
    unsigned k;
    std::uint32_t valuations; // 2^k
    std::uint32_t teams;      // 2^(2^k)
};

// Teams all of whose members give variable i the value `want`.
team_set uniform_on(const team_space &sp, var_index i, bool want) {
    team_set out;
    for (std::uint32_t x = 0; x < sp.teams; ++x) {
        bool ok = true;
        for (std::uint32_t s = 0; s < sp.valuations && ok; ++s)
            if ((x >> s) & 1u)
                ok = Valuation{s}(i) == want;
        if (ok)
            out.set(x);
    }
    return out;
}

team_set unions(const team_space &sp, const team_set &a, const team_set &b, bool nonempty_only) {
    team_set out;
    for (std::uint32_t x = 0; x < sp.teams; ++x) {
        if (!a.test(x) || (nonempty_only && x == 0))
            continue;
        for (std::uint32_t y = 0; y < sp.teams; ++y) {
            if (!b.test(y) || (nonempty_only && y == 0))
                continue;
            out.set(x | y);
        }
    }
    return out;
}

team_set pt_rec(const Formula &f, const team_space &sp) {
    switch (f.kind()) {
    case connective::var:
        if (f.index() >= sp.k)
            throw limit_exceeded("P" + std::to_string(f.index()) + " is outside k = " + std::to_string(sp.k));
        return uniform_on(sp, f.index(), true);
    case connective::int_bot: {
        team_set out;
        out.set(0);
        return out;
    }
    case connective::int_or:
        return unions(sp, pt_rec(f.child(0), sp), pt_rec(f.child(1), sp), false);
    case connective::ext_and:
        return pt_rec(f.child(0), sp) & pt_rec(f.child(1), sp);
    case connective::ext_or:
        return pt_rec(f.child(0), sp) | pt_rec(f.child(1), sp);
    case connective::derived:
        switch (f.tag()) {
        case derived_tag::nb: {
            team_set out;
            for (std::uint32_t x = 1; x < sp.teams; ++x)
                out.set(x);
            return out;
        }
        case derived_tag::strict_not: {
            const auto i = f.child(0).index();
            if (i >= sp.k)
                throw limit_exceeded("P" + std::to_string(i) + " is outside k = " + std::to_string(sp.k));
            return uniform_on(sp, i, false);
        }
        case derived_tag::circle_star:
            return unions(sp, pt_rec(f.child(0), sp), pt_rec(f.child(1), sp), true);
        default:
            break;
        }
        break;
    default:
        break;
    }
    throw fragment_error("not a PT+ formula: " + to_string(f));
}

} // namespace

PTDenotation pt_eval(const Formula &f, unsigned k) {
    const auto alg = team_algebra(k);
    if (!is_pt_formula(f))
        throw fragment_error("not a PT+ formula: " + to_string(f));
    const team_space sp{k, 1u << k, static_cast<std::uint32_t>(alg.carrier_size())};
    return Denotation(alg, pt_rec(f, sp));
}

PtEntailment pt_entails(std::span<const Formula> premises, const Formula &conclusion, unsigned k) {
    const auto alg = team_algebra(k);
    Denotation lhs = Denotation::full(alg);
    for (const auto &p : premises)
        lhs = ext_and(lhs, pt_eval(p, k));
    Denotation bad = ext_and(lhs, ext_not(pt_eval(conclusion, k)));
    if (bad.is_empty())
        return {true, std::nullopt};
    return {false, bad.elements().front()};
}

Homomorphism build_hv(unsigned k) {
    const auto alg = team_algebra(k);
    Homomorphism h(alg);
    for (var_index i = 0; i < k; ++i) {
        Team truth{0};
        for (std::uint32_t s = 0; s < (1u << k); ++s)
            if (Valuation{s}(i))
                truth.bits |= 1u << s;
        h.bind(i, principal_ideal(alg, truth));
    }
    return h;
}

ValuationMap::ValuationMap(unsigned n_atoms, unsigned k, std::vector<Valuation> image)
    : n_(n_atoms), k_(k), image_(std::move(image)) {
    if (image_.size() != n_)
        throw std::invalid_argument("valuation map needs one valuation per atom");
}

Team ValuationMap::lift(Element x) const {
    Team out{0};
    for (unsigned s = 0; s < n_; ++s)
        if ((x.bits >> s) & 1u)
            out.bits |= 1u << image_[s].bits;
    return out;
}

ValuationMap f_map(const Homomorphism &h, unsigned k) {
    team_algebra(k);
    const auto alg = h.algebra();
    for (var_index i = 0; i < k; ++i) {
        if (!h.binds(i))
            throw precondition_error("P" + std::to_string(i) + " is unbound");
        if (!is_principal_ideal(h.at(i)))
            throw precondition_error("H(P" + std::to_string(i) + ") is not a principal ideal");
    }
    std::vector<Valuation> image(alg.n_atoms);
    for (unsigned s = 0; s < alg.n_atoms; ++s) {
        const Element singleton{1u << s};
        for (var_index i = 0; i < k; ++i)
            if (h.at(i).contains(singleton))
                image[s].bits |= 1u << i;
    }
    return ValuationMap(alg.n_atoms, k, std::move(image));
}

std::vector<Formula> pt_formulas(unsigned k, std::size_t depth) {
    team_algebra(k);
    std::vector<Formula> leaves;
    for (var_index i = 0; i < k; ++i) {
        leaves.push_back(Formula::var(i));
        leaves.push_back(Formula::strict_not(Formula::var(i)));
    }
    leaves.push_back(Formula::int_bot());
    leaves.push_back(Formula::nb());
    if (depth == 0)
        return {};

    std::vector<Formula> layer = leaves;
    for (std::size_t d = 2; d <= depth; ++d) {
        std::vector<Formula> next = leaves;
        next.reserve(leaves.size() + 3 * layer.size() * layer.size());
        for (const auto &a : layer)
            for (const auto &b : layer) {
                next.push_back(Formula::int_or(a, b));
                next.push_back(Formula::ext_and(a, b));
                next.push_back(Formula::ext_or(a, b));
            }
        layer = std::move(next);
    }
    return layer;
}

PtCatalogue PtCatalogue::build(unsigned k, std::size_t depth) {
    PtCatalogue c;
    c.k = k;
    c.depth = depth;
    c.formulas = pt_formulas(k, depth);
    const auto hv_hom = build_hv(k);
    c.expanded.reserve(c.formulas.size());
    c.hv.reserve(c.formulas.size());
    for (const auto &f : c.formulas) {
        c.expanded.push_back(expand(f));
        c.hv.push_back(eval(hv_hom, c.expanded.back(), eval_mode::native));
    }
    return c;
}

FRepresentationReport verify_f_representation(const Homomorphism &h, const PtCatalogue &catalogue) {
    const ValuationMap f = f_map(h, catalogue.k);
    const auto alg = h.algebra();
    std::vector<Team> lifted(alg.carrier_size());
    for (std::uint32_t x = 0; x < alg.carrier_size(); ++x)
        lifted[x] = f.lift(Element{x});

    FRepresentationReport report;
    for (std::size_t idx = 0; idx < catalogue.formulas.size(); ++idx) {
        const Denotation here = eval(h, catalogue.expanded[idx], eval_mode::native);
        ++report.formulas_checked;
        for (std::uint32_t x = 0; x < alg.carrier_size(); ++x) {
            if (here.contains(Element{x}) != catalogue.hv[idx].contains(lifted[x])) {
                report.holds = false;
                report.failing_formula = catalogue.formulas[idx];
                report.failing_set = Element{x};
                return report;
            }
        }
    }
    return report;
}

FRepresentationReport verify_f_representation(const Homomorphism &h, unsigned k, std::size_t depth) {
    f_map(h, k);
    return verify_f_representation(h, PtCatalogue::build(k, depth));
}

} // namespace lt
