#include "lt/entailment.hpp"
#include "lt/error.hpp"
#include "support/generators.hpp"

#include <doctest.h>

using namespace lt;

namespace {

Formula F(const char *text) { return parse_formula(text); }

std::vector<Formula> Fs(std::initializer_list<const char *> texts) {
    std::vector<Formula> out;
    for (auto t : texts)
        out.push_back(F(t));
    return out;
}

Homomorphism hom(unsigned n, std::vector<std::string> p0) {
    const auto alg = AlgebraSpec::of(n);
    Homomorphism h(alg);
    h.bind(0, parse_denotation(alg, p0));
    return h;
}

} // namespace

TEST_CASE("local entailment") {
    CHECK(local_entails(hom(1, {"0", "1"}), Fs({"P0"}), F("top")).holds);
    for (unsigned n = 0; n <= 3; ++n)
        CHECK(local_entails(Homomorphism(AlgebraSpec::of(n)), {}, F("ibot")).holds == (n == 0));
    const auto r = local_entails(hom(1, {}), Fs({"~~P0"}), F("P0"));
    CHECK_FALSE(r.holds);
    REQUIRE(r.witness);
    CHECK(*r.witness == Element{0});
}

TEST_CASE("algebra_entails: internal bottom does not entail internal top") {
    const auto v = algebra_entails(1, Fs({"ibot"}), F("i!ibot"));
    REQUIRE(v.status == search_status::countermodel);
    CHECK(v.countermodel->witness == Element{0});
    CHECK(v.countermodel->hom.assignment().empty());
    CHECK(algebra_entails(0, Fs({"ibot"}), F("i!ibot")).status == search_status::entailed);
}

TEST_CASE("algebra_entails: canonicity facts") {
    for (unsigned n = 0; n <= 3; ++n) {
        CHECK((algebra_entails(n, {}, F("ibot")).status == search_status::entailed) == (n == 0));
        CHECK((algebra_entails(n, {}, F("ibot | itop")).status == search_status::entailed) == (n <= 1));
    }
}

TEST_CASE("algebra_entails: excluded middle for strict negation") {
    const auto all = algebra_entails(2, {}, F("P0 i| ~P0"));
    REQUIRE(all.status == search_status::countermodel);
    // canonical order visits the empty denotation first
    CHECK(all.countermodel->hom.at(0).is_empty());
    CHECK(all.explored == 1);
    // the non-downward-closed {11} is a countermodel too
    CHECK_FALSE(local_entails(hom(2, {"11"}), {}, F("P0 i| ~P0")).holds);

    CHECK(algebra_entails(2, {}, F("P0 i| ~P0"), class_restriction::principal_variables).status ==
          search_status::entailed);
}

TEST_CASE("find_countermodel: strict negation facts") {
    const auto r2 = find_countermodel({}, F("~~P0 -> P0"), 3);
    REQUIRE(r2.status == search_status::countermodel);
    CHECK(r2.n <= 1);
    CHECK(r2.countermodel->hom.at(0).is_empty());

    CHECK(find_countermodel({}, F("P0 -> ~~P0"), 3).status == search_status::entailed);
    CHECK(find_countermodel({}, F("~~~P0 -> ~P0"), 3).status == search_status::entailed);
    CHECK(find_countermodel({}, F("~P0 i| ~~P0"), 3).status == search_status::entailed);
    CHECK(find_countermodel({}, F("P0 i| ~P0"), 2).status == search_status::countermodel);
}

TEST_CASE("budget and limits") {
    const auto v = algebra_entails(3, {}, F("P0 & P1 -> P0"), class_restriction::all, {1000, 1});
    CHECK(v.status == search_status::budget_exceeded);
    CHECK(v.explored == 1000);
    const auto r = find_countermodel({}, F("P0 & P1 -> P0"), 3, class_restriction::all, {1000, 1});
    CHECK(r.status == search_status::budget_exceeded);
    CHECK(r.n == 3);
    CHECK_THROWS_AS(algebra_entails(5, {}, F("P0")), limit_exceeded);
}

TEST_CASE("labelled entailment") {
    const auto g = std::vector<LabelledFormula>{parse_labelled("p0 : P0")};
    CHECK(labelled_entails(2, g, parse_labelled("p0 : P0")).status == search_status::entailed);

    const auto pq = std::vector<LabelledFormula>{parse_labelled("p0 : P0 i& P1")};
    const auto v = labelled_entails(2, pq, parse_labelled("p0 : P0 & P1"));
    REQUIRE(v.status == search_status::countermodel);
    const auto &cm = *v.countermodel;
    REQUIRE(cm.labels);
    CHECK(satisfies(*cm.labels, cm.hom, pq[0]));
    CHECK_FALSE(satisfies(*cm.labels, cm.hom, parse_labelled("p0 : P0 & P1")));
    CHECK(cm.witness == eval_label(*cm.labels, Label::atom(0)));
}

TEST_CASE("property: plain and labelled entailment coincide on a single atom") {
    testing::rng_t rng(29);
    for (int i = 0; i < 60; ++i) {
        const auto delta = testing::random_formula(rng, {2, 3, true});
        const auto psi = testing::random_formula(rng, {2, 3, true});
        for (unsigned n = 0; n <= 2; ++n) {
            const auto plain = algebra_entails(n, std::vector{delta}, psi).status;
            const Label p = Label::atom(0);
            const auto labelled =
                labelled_entails(n, std::vector{LabelledFormula{p, delta}}, LabelledFormula{p, psi}).status;
            REQUIRE(plain == labelled);
        }
    }
}

TEST_CASE("property: search agrees with the brute-force oracle") {
    testing::rng_t rng(31);
    for (int i = 0; i < 150; ++i) {
        const auto n = static_cast<unsigned>(testing::pick(rng, 3));
        std::vector<Formula> prem;
        for (auto k = testing::pick(rng, 3); k > 0; --k)
            prem.push_back(testing::random_formula(rng, {2, 3, true}));
        const auto concl = testing::random_formula(rng, {2, 3, true});
        // the oracle binds both variables, the engine only the free ones
        const bool oracle = testing::oracle_valid_in(n, 2, prem, concl);
        const auto v = algebra_entails(n, prem, concl);
        REQUIRE((v.status == search_status::entailed) == oracle);
        if (v.countermodel) {
            const auto replay = local_entails(v.countermodel->hom, prem, concl);
            REQUIRE_FALSE(replay.holds);
            REQUIRE(*replay.witness == v.countermodel->witness);
        }
    }
}

TEST_CASE("property: parallel search returns the sequential answer") {
    testing::rng_t rng(37);
    for (int i = 0; i < 40; ++i) {
        std::vector<Formula> prem{testing::random_formula(rng, {3, 4, true})};
        const auto concl = testing::random_formula(rng, {3, 4, true});
        const auto a = algebra_entails(2, prem, concl, class_restriction::all, {default_budget, 1});
        const auto b = algebra_entails(2, prem, concl, class_restriction::all, {default_budget, 4});
        REQUIRE(a.status == b.status);
        REQUIRE(a.explored == b.explored);
        if (a.countermodel)
            REQUIRE(a.countermodel->hom == b.countermodel->hom);
    }
}

TEST_CASE("property: substitutionality, contrapositive form") {
    testing::rng_t rng(41);
    int refuted = 0;
    for (int i = 0; i < 200; ++i) {
        const auto delta = testing::random_formula(rng, {2, 3, true});
        const auto psi = testing::random_formula(rng, {2, 3, true});
        const Substitution sigma{{0, testing::random_formula(rng, {2, 2, true})},
                                 {1, testing::random_formula(rng, {2, 2, true})}};
        const std::vector<Formula> sd{substitute(delta, sigma)};
        const auto v = algebra_entails(2, sd, substitute(psi, sigma));
        if (!v.countermodel)
            continue;
        ++refuted;
        Homomorphism h = v.countermodel->hom;
        for (var_index x = 0; x < 2; ++x)
            if (!h.binds(x))
                h.bind(x, Denotation::empty(h.algebra()));
        const auto back = local_entails(compose(h, sigma), std::vector{delta}, psi);
        REQUIRE_FALSE(back.holds);
        REQUIRE(local_entails(h, sd, substitute(psi, sigma)).witness == back.witness);
    }
    CHECK(refuted > 20);
}

TEST_CASE("property: deduction theorem per algebra") {
    testing::rng_t rng(43);
    for (int i = 0; i < 100; ++i) {
        const auto d = testing::random_formula(rng, {2, 3, true});
        const auto phi = testing::random_formula(rng, {2, 3, true});
        const auto psi = testing::random_formula(rng, {2, 3, true});
        for (unsigned n = 0; n <= 2; ++n) {
            const bool lhs = algebra_entails(n, std::vector{d, phi}, psi).status == search_status::entailed;
            const bool rhs =
                algebra_entails(n, std::vector{d}, Formula::implies(phi, psi)).status == search_status::entailed;
            REQUIRE(lhs == rhs);
        }
    }
}

TEST_CASE("S5 axioms") {
    for (const char *ax : {"box (P0 -> P1) -> (box P0 -> box P1)", "box P0 -> P0", "box P0 -> box box P0",
                           "P0 -> box dia P0", "dia P0 -> box dia P0"})
        for (unsigned n = 0; n <= 2; ++n)
            CHECK(algebra_entails(n, {}, F(ax)).status == search_status::entailed);
    CHECK(find_countermodel({}, F("P0 -> box P0"), 2).status == search_status::countermodel);
}

TEST_CASE("property: box designated-value law") {
    testing::rng_t rng(47);
    for (int i = 0; i < 60; ++i) {
        const auto phi = testing::random_formula(rng, {2, 3, true});
        const auto psi = testing::random_formula(rng, {2, 3, true});
        for (unsigned n = 0; n <= 2; ++n) {
            const bool boxed = algebra_entails(n, std::vector{Formula::box(phi)}, psi).status == search_status::entailed;
            const auto alg = AlgebraSpec::of(n);
            bool designated = true;
            const std::uint64_t count = std::uint64_t{1} << alg.carrier_size();
            for (std::uint64_t a = 0; a < count && designated; ++a)
                for (std::uint64_t b = 0; b < count && designated; ++b) {
                    Homomorphism h(alg);
                    h.bind(0, Denotation::from_mask(alg, a));
                    h.bind(1, Denotation::from_mask(alg, b));
                    if (eval(h, phi).is_full() && !eval(h, psi).is_full())
                        designated = false;
                }
            REQUIRE(boxed == designated);
        }
    }
}

TEST_CASE("principal-variable axioms") {
    CHECK(pva_axioms({}).empty());
    CHECK(pva_axioms({0}) == Fs({"box (P0 i| ~P0)"}));
    CHECK(pva_axioms({1, 0}) == Fs({"box (P0 i| ~P0)", "box (P1 i| ~P1)"}));
}

TEST_CASE("box internalisation") {
    auto b = verify_box_internalisation(2, pva_axioms({0}), {}, F("P0 i| ~P0"));
    CHECK(b.axiomatised);
    CHECK(b.restricted);
    b = verify_box_internalisation(1, Fs({"ibot"}), {}, F("itop"));
    CHECK(b.agree());
    b = verify_box_internalisation(2, {}, Fs({"P0"}), F("P0 | P1"));
    CHECK(b.agree());
    CHECK(b.axiomatised);
    CHECK_THROWS_AS(verify_box_internalisation(2, {}, {}, F("P0 & P1 & P2 & P3 & P4 & P5"), {1000, 1}),
                    budget_exceeded);
}

TEST_CASE("Grz holds on small finite algebras") {
    // the order box: not down not
    const auto B = [](Formula f) { return Formula::ext_not(Formula::down(Formula::ext_not(std::move(f)))); };
    const auto P = Formula::var(0);
    const auto grz = Formula::implies(B(Formula::implies(B(Formula::implies(P, B(P))), P)), P);
    for (unsigned n = 1; n <= 3; ++n)
        CHECK(algebra_entails(n, {}, grz).status == search_status::entailed);
}
