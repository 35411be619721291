#include "lt/entailment.hpp"

#include "lt/error.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <limits>

namespace lt {

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
        return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < exp; ++i)
        r = saturating_mul(r, base);
    return r;
}

AlgebraSpec search_algebra(unsigned n) {
    if (n > max_search_atoms)
        throw limit_exceeded("countermodel search supports at most " + std::to_string(max_search_atoms) +
                             " atoms, got " + std::to_string(n));
    return AlgebraSpec::of(n);
}

std::vector<Denotation> candidates(AlgebraSpec alg, class_restriction restriction) {
    std::vector<Denotation> out;
    if (restriction == class_restriction::all) {
        const std::uint64_t count = std::uint64_t{1} << alg.carrier_size();
        out.reserve(count);
        for (std::uint64_t m = 0; m < count; ++m)
            out.push_back(Denotation::from_mask(alg, m));
        return out;
    }
    for (std::uint32_t a = 0; a < alg.carrier_size(); ++a)
        out.push_back(principal_ideal(alg, Element{a}));
    std::ranges::sort(out, canonical_less);
    return out;
}

/// Mixed-radix decoding; the first variable is the most significant digit.
void assign(Homomorphism &h, const std::vector<var_index> &vars, const std::vector<Denotation> &cands,
            std::uint64_t index) {
    const std::uint64_t radix = cands.size();
    for (std::size_t k = vars.size(); k-- > 0;) {
        h.bind(vars[k], cands[index % radix]);
        index /= radix;
    }
}

void assign_labels(LabelValuation &h, const std::vector<atom_index> &atoms, std::uint64_t index) {
    const std::uint64_t radix = h.algebra().carrier_size();
    for (std::size_t k = atoms.size(); k-- > 0;) {
        h.bind(atoms[k], Element{static_cast<std::uint32_t>(index % radix)});
        index /= radix;
    }
}

std::vector<Formula> expand_all(std::span<const Formula> fs) {
    std::vector<Formula> out;
    out.reserve(fs.size());
    for (const auto &f : fs)
        out.push_back(expand(f));
    return out;
}

std::vector<var_index> vars_of(std::span<const Formula> fs) {
    std::set<var_index> vs;
    for (const auto &f : fs)
        vs.merge(free_vars(f));
    return {vs.begin(), vs.end()};
}

Denotation meet_all(AlgebraSpec alg, const Homomorphism &h, std::span<const Formula> premises) {
    Denotation acc = Denotation::full(alg);
    for (const auto &p : premises) {
        acc = ext_and(acc, eval(h, p, eval_mode::native));
        if (acc.is_empty())
            break;
    }
    return acc;
}

} // namespace

LocalResult local_entails(const Homomorphism &h, std::span<const Formula> premises, const Formula &conclusion) {
    const auto alg = h.algebra();
    Denotation lhs = Denotation::full(alg);
    for (const auto &p : premises)
        lhs = ext_and(lhs, eval(h, p));
    Denotation bad = ext_and(lhs, ext_not(eval(h, conclusion)));
    if (bad.is_empty())
        return {true, std::nullopt};
    return {false, bad.elements().front()};
}

AlgebraVerdict algebra_entails(unsigned n, std::span<const Formula> premises, const Formula &conclusion,
                               class_restriction restriction, const EngineOptions &options) {
    const AlgebraSpec alg = search_algebra(n);
    const auto prem = expand_all(premises);
    const Formula concl = expand(conclusion);

    std::vector<Formula> all = prem;
    all.push_back(concl);
    const auto vars = vars_of(all);
    const auto cands = candidates(alg, restriction);

    AlgebraVerdict verdict;
    verdict.space = saturating_pow(cands.size(), vars.size());
    const std::uint64_t limit = std::min(verdict.space, options.budget);

    auto hit = detail::first_hit(limit, options.jobs, [&] {
        return [&, h = Homomorphism(alg)](std::uint64_t i) mutable {
            assign(h, vars, cands, i);
            Denotation lhs = meet_all(alg, h, prem);
            if (lhs.is_empty())
                return false;
            return !lhs.subset_of(eval(h, concl, eval_mode::native));
        };
    });

    if (hit) {
        Homomorphism h(alg);
        assign(h, vars, cands, *hit);
        auto local = local_entails(h, prem, concl);
        verdict.status = search_status::countermodel;
        verdict.countermodel = Countermodel{std::move(h), *local.witness, std::nullopt};
        verdict.explored = *hit + 1;
    } else if (verdict.space > options.budget) {
        verdict.status = search_status::budget_exceeded;
        verdict.explored = limit;
    } else {
        verdict.status = search_status::entailed;
        verdict.explored = verdict.space;
    }
    return verdict;
}

SearchReport find_countermodel(std::span<const Formula> premises, const Formula &conclusion, unsigned max_n,
                               class_restriction restriction, const EngineOptions &options) {
    search_algebra(max_n);
    SearchReport report;
    for (unsigned n = 0; n <= max_n; ++n) {
        auto v = algebra_entails(n, premises, conclusion, restriction, options);
        report.explored += v.explored;
        report.n = n;
        if (v.status != search_status::entailed) {
            report.status = v.status;
            report.countermodel = std::move(v.countermodel);
            return report;
        }
    }
    report.status = search_status::entailed;
    return report;
}

AlgebraVerdict labelled_entails(unsigned n, std::span<const LabelledFormula> premises,
                                const LabelledFormula &conclusion, const EngineOptions &options) {
    const AlgebraSpec alg = search_algebra(n);

    std::vector<LabelledFormula> prem;
    for (const auto &lf : premises)
        prem.push_back({lf.label, expand(lf.formula)});
    const LabelledFormula concl{conclusion.label, expand(conclusion.formula)};

    std::vector<Formula> formulas;
    std::set<atom_index> atom_set;
    for (const auto &lf : prem) {
        formulas.push_back(lf.formula);
        atom_set.merge(label_atoms(lf.label));
    }
    formulas.push_back(concl.formula);
    atom_set.merge(label_atoms(concl.label));
    const auto vars = vars_of(formulas);
    const std::vector<atom_index> atoms(atom_set.begin(), atom_set.end());
    const auto cands = candidates(alg, class_restriction::all);

    const std::uint64_t hom_space = saturating_pow(cands.size(), vars.size());
    const std::uint64_t label_space = saturating_pow(alg.carrier_size(), atoms.size());

    AlgebraVerdict verdict;
    verdict.space = saturating_mul(hom_space, label_space);
    const std::uint64_t limit = std::min(verdict.space, options.budget);

    auto violated = [&](const std::vector<Denotation> &dens, const LabelValuation &lv) {
        for (std::size_t k = 0; k < prem.size(); ++k)
            if (!dens[k].contains(eval_label(lv, prem[k].label)))
                return false;
        return !dens.back().contains(eval_label(lv, concl.label));
    };

    auto hit = detail::first_hit(limit, options.jobs, [&] {
        struct probe_state {
            Homomorphism h;
            LabelValuation lv;
            std::vector<Denotation> dens;
            std::uint64_t cached = std::numeric_limits<std::uint64_t>::max();
        };
        return [&, st = probe_state{Homomorphism(alg), LabelValuation(alg), {}}](std::uint64_t i) mutable {
            const std::uint64_t hi = i / label_space, li = i % label_space;
            if (hi != st.cached) {
                assign(st.h, vars, cands, hi);
                st.dens.clear();
                for (const auto &lf : prem)
                    st.dens.push_back(eval(st.h, lf.formula, eval_mode::native));
                st.dens.push_back(eval(st.h, concl.formula, eval_mode::native));
                st.cached = hi;
            }
            assign_labels(st.lv, atoms, li);
            return violated(st.dens, st.lv);
        };
    });

    if (hit) {
        Homomorphism h(alg);
        LabelValuation lv(alg);
        assign(h, vars, cands, *hit / label_space);
        assign_labels(lv, atoms, *hit % label_space);
        Element w = eval_label(lv, concl.label);
        verdict.status = search_status::countermodel;
        verdict.countermodel = Countermodel{std::move(h), w, std::move(lv)};
        verdict.explored = *hit + 1;
    } else if (verdict.space > options.budget) {
        verdict.status = search_status::budget_exceeded;
        verdict.explored = limit;
    } else {
        verdict.status = search_status::entailed;
        verdict.explored = verdict.space;
    }
    return verdict;
}

SearchReport find_labelled_countermodel(std::span<const LabelledFormula> premises, const LabelledFormula &conclusion,
                                        unsigned max_n, const EngineOptions &options) {
    search_algebra(max_n);
    SearchReport report;
    for (unsigned n = 0; n <= max_n; ++n) {
        auto v = labelled_entails(n, premises, conclusion, options);
        report.explored += v.explored;
        report.n = n;
        if (v.status != search_status::entailed) {
            report.status = v.status;
            report.countermodel = std::move(v.countermodel);
            return report;
        }
    }
    report.status = search_status::entailed;
    return report;
}

std::vector<Formula> pva_axioms(const std::set<var_index> &vars) {
    std::vector<Formula> out;
    for (auto v : vars) {
        auto p = Formula::var(v);
        out.push_back(Formula::box(Formula::int_or(p, Formula::strict_not(p))));
    }
    return out;
}

BoxInternalisation verify_box_internalisation(unsigned n, std::span<const Formula> defining,
                                              std::span<const Formula> premises, const Formula &conclusion,
                                              const EngineOptions &options) {
    const AlgebraSpec alg = search_algebra(n);

    std::vector<Formula> boxed;
    for (const auto &pi : defining)
        boxed.push_back(Formula::box(pi));
    for (const auto &d : premises)
        boxed.push_back(d);
    auto lhs = algebra_entails(n, boxed, conclusion, class_restriction::all, options);
    if (lhs.status == search_status::budget_exceeded)
        throw budget_exceeded("box-internalised side exceeds the budget of " + std::to_string(options.budget));

    const auto pis = expand_all(defining);
    const auto prem = expand_all(premises);
    const Formula concl = expand(conclusion);
    std::vector<Formula> all = pis;
    all.insert(all.end(), prem.begin(), prem.end());
    all.push_back(concl);
    const auto vars = vars_of(all);
    const auto cands = candidates(alg, class_restriction::all);
    const std::uint64_t space = saturating_pow(cands.size(), vars.size());
    if (space > options.budget)
        throw budget_exceeded("class-restricted side exceeds the budget of " + std::to_string(options.budget));

    auto hit = detail::first_hit(space, options.jobs, [&] {
        return [&, h = Homomorphism(alg)](std::uint64_t i) mutable {
            assign(h, vars, cands, i);
            for (const auto &pi : pis)
                if (!eval(h, pi, eval_mode::native).is_full())
                    return false;
            Denotation lhs_den = meet_all(alg, h, prem);
            return !lhs_den.subset_of(eval(h, concl, eval_mode::native));
        };
    });

    return BoxInternalisation{lhs.status == search_status::entailed, !hit.has_value()};
}

} // namespace lt
