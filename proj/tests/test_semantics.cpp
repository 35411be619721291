#include "lt/error.hpp"
#include "lt/semantics.hpp"
#include "support/generators.hpp"

#include <doctest.h>

using namespace lt;

namespace {

const AlgebraSpec A0 = AlgebraSpec::of(0);
const AlgebraSpec A1 = AlgebraSpec::of(1);
const AlgebraSpec A2 = AlgebraSpec::of(2);

Denotation den(AlgebraSpec alg, std::vector<std::string> bits) { return parse_denotation(alg, bits); }

Homomorphism hom(AlgebraSpec alg, std::vector<std::string> p0) {
    Homomorphism h(alg);
    h.bind(0, den(alg, std::move(p0)));
    return h;
}

Denotation ev(const Homomorphism &h, const char *text, eval_mode m = eval_mode::expand) {
    return eval(h, parse_formula(text), m);
}

} // namespace

TEST_CASE("eval: constants") {
    for (auto alg : {A0, A1, A2}) {
        Homomorphism h(alg);
        CHECK(ev(h, "ibot") == int_bot(alg));
        CHECK(ev(h, "top") == Denotation::full(alg));
        CHECK(ev(h, "itop") == Denotation::of(alg, {top(alg)}));
        CHECK(ev(h, "nb") == ext_not(int_bot(alg)));
        CHECK(ev(h, "bot").is_empty());
    }
    // the trivial algebra: bottom is top
    CHECK(ev(Homomorphism(A0), "ibot") == ev(Homomorphism(A0), "itop"));
}

TEST_CASE("eval: strict negation and modalities") {
    const auto empty1 = hom(A1, {});
    CHECK(ev(empty1, "~ ~ P0") == den(A1, {"0"}));
    CHECK(ev(empty1, "~ ~ P0", eval_mode::native) == den(A1, {"0"}));

    const auto top1 = hom(A1, {"1"});
    for (auto m : {eval_mode::expand, eval_mode::native}) {
        CHECK(ev(top1, "box P0", m).is_empty());
        CHECK(ev(top1, "dia P0", m) == Denotation::full(A1));
        CHECK(ev(top1, "~P0", m) == den(A1, {"0"}));
        CHECK(ev(empty1, "dia P0", m).is_empty());
        CHECK(ev(hom(A2, {"11"}), "down P0", m) == Denotation::full(A2));
    }
    CHECK(ev(hom(A2, {"11"}), "down P0") == ev(hom(A2, {"11"}), "P0 i& top"));
}

TEST_CASE("eval: unbound variables are errors") {
    Homomorphism h(A1);
    try {
        (void)ev(h, "P3 | P0");
        FAIL("expected unbound_symbol");
    } catch (const unbound_symbol &e) {
        CHECK((e.symbol() == "P3" || e.symbol() == "P0"));
    }
    CHECK_THROWS_AS(h.bind(0, Denotation::empty(A2)), algebra_mismatch);
}

TEST_CASE("labels") {
    LabelValuation h(A2);
    h.bind(0, Element{1});
    h.bind(1, Element{2});
    CHECK(eval_label(h, Label::bot()) == Element{0});
    CHECK(eval_label(h, parse_label("p0 | p1")) == Element{3});
    CHECK(eval_label(h, parse_label("!p0")) == Element{2});
    CHECK_THROWS_AS((void)eval_label(h, parse_label("p2")), unbound_symbol);

    LabelValuation t(A1);
    t.bind(0, Element{1});
    CHECK(eval_label(t, parse_label("!p0")) == Element{0});

    // a : itop holds exactly when h(a) is the top element
    Homomorphism any(A2);
    for (std::uint32_t v = 0; v < 4; ++v) {
        LabelValuation g(A2);
        g.bind(0, Element{v});
        CHECK(satisfies(g, any, parse_labelled("p0 : itop")) == (v == 3));
        CHECK(satisfies(g, any, parse_labelled("F : ibot")));
    }
    LabelValuation bot1(A1);
    bot1.bind(0, Element{0});
    CHECK_FALSE(satisfies(bot1, hom(A1, {"1"}), parse_labelled("p0 : P0")));
}

TEST_CASE("compose") {
    testing::rng_t rng(17);
    const auto h = testing::random_homomorphism(rng, A2, 2);
    CHECK(compose(h, {{0, Formula::int_bot()}}).at(0) == int_bot(A2));
    const auto same = compose(h, {});
    for (int i = 0; i < 50; ++i) {
        const auto f = testing::random_formula(rng, {2, 4, true});
        REQUIRE(eval(same, f) == eval(h, f));
    }
}

TEST_CASE("property: evaluation matches the naive oracle in both modes") {
    testing::rng_t rng(19);
    for (int i = 0; i < 600; ++i) {
        const auto alg = AlgebraSpec::of(static_cast<unsigned>(testing::pick(rng, 4)));
        const auto h = testing::random_homomorphism(rng, alg, 3);
        const auto f = testing::random_formula(rng, {3, 5, true});
        const auto expected = testing::oracle_of(h)(f);
        CAPTURE(dump(f));
        REQUIRE(testing::as_set(eval(h, f, eval_mode::expand)) == expected);
        REQUIRE(testing::as_set(eval(h, f, eval_mode::native)) == expected);
    }
}

TEST_CASE("property: every derived tag agrees natively and expanded, exhaustive at n <= 2") {
    const std::vector<derived_tag> unary{derived_tag::down, derived_tag::up, derived_tag::diamond, derived_tag::box,
                                         derived_tag::strict_not};
    const std::vector<derived_tag> binary{derived_tag::implies, derived_tag::circle_star};
    for (unsigned n = 0; n <= 2; ++n) {
        const auto alg = AlgebraSpec::of(n);
        const std::uint64_t count = std::uint64_t{1} << alg.carrier_size();
        for (std::uint64_t a = 0; a < count; ++a)
            for (std::uint64_t b = 0; b < count; ++b) {
                Homomorphism h(alg);
                h.bind(0, Denotation::from_mask(alg, a));
                h.bind(1, Denotation::from_mask(alg, b));
                for (auto t : unary) {
                    const auto f = Formula::derived(t, {Formula::var(0)});
                    REQUIRE(eval(h, f, eval_mode::native) == eval(h, f, eval_mode::expand));
                }
                for (auto t : binary) {
                    const auto f = Formula::derived(t, {Formula::var(0), Formula::var(1)});
                    REQUIRE(eval(h, f, eval_mode::native) == eval(h, f, eval_mode::expand));
                }
            }
    }
}

TEST_CASE("property: substitution law") {
    testing::rng_t rng(23);
    for (int i = 0; i < 300; ++i) {
        const auto alg = AlgebraSpec::of(static_cast<unsigned>(testing::pick(rng, 3)));
        const auto h = testing::random_homomorphism(rng, alg, 2);
        const auto f = testing::random_formula(rng, {2, 4, true});
        const Substitution sigma{{0, testing::random_formula(rng, {2, 3, true})},
                                 {1, testing::random_formula(rng, {2, 3, true})}};
        REQUIRE(eval(h, substitute(f, sigma)) == eval(compose(h, sigma), f));
    }
}
