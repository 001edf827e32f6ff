#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "freebell/composition.hpp"
#include "freebell/lincomb.hpp"
#include "freebell/qpoly.hpp"
#include "freebell/word.hpp"

using namespace freebell;

TEST_CASE("integer combinations: add, cancel, scale") {
    auto x = LinComb<Composition>::single(Composition({2, 1}));
    CHECK(x.term_count() == 1);
    CHECK(x.coeff(Composition({2, 1})) == 1);
    CHECK(x.coeff(Composition({1, 2})) == 0);

    auto y = x + x.scaled(-1);
    CHECK(y.is_zero());

    auto z = x.scaled(3) - x;
    CHECK(z.coeff(Composition({2, 1})) == 2);
    CHECK((-z).coeff(Composition({2, 1})) == -2);
    CHECK(x.scaled(0).is_zero());

    LinComb<Composition> w;
    w.add(Composition({3}), 2);
    w.add(Composition({3}), -2);
    CHECK(w.is_zero());  // exact cancellation removes the key
}

TEST_CASE("iteration follows the key order") {
    LinComb<Composition> x;
    x.add(Composition({1, 1, 1}), 1);
    x.add(Composition({3}), 1);
    x.add(Composition({1, 2}), 1);
    x.add(Composition({2, 1}), 1);
    std::vector<Composition> seen;
    for (const auto& [k, c] : x) seen.push_back(k);
    CHECK(seen == std::vector<Composition>{Composition({3}), Composition({2, 1}),
                                           Composition({1, 2}), Composition({1, 1, 1})});
}

TEST_CASE("map_keys merges collisions") {
    LinComb<Composition> x;
    x.add(Composition({2, 1}), 1);
    x.add(Composition({1, 2}), 1);
    auto folded = x.map_keys([](const Composition& c) { return c.mirror(); });
    CHECK(folded.coeff(Composition({1, 2})) == 1);
    CHECK(folded.coeff(Composition({2, 1})) == 1);
    auto squashed = x.map_keys([](const Composition&) { return Composition({3}); });
    CHECK(squashed.term_count() == 1);
    CHECK(squashed.coeff(Composition({3})) == 2);
}

TEST_CASE("polynomial coefficients") {
    using P = LinComb<Permutation, QPoly>;
    auto x = P::single(Permutation::parse("132")) + P::single(Permutation::parse("231"));
    auto scaled = x.scaled(QPoly::q() + 1);
    CHECK(scaled.term_count() == 2);
    CHECK(scaled.coeff(Permutation::parse("132")) == QPoly::q() + 1);
    CHECK(scaled.coeff(Permutation::parse("231")) == QPoly::q() + 1);
    auto gone = scaled - x.scaled(QPoly::q()) - x;
    CHECK(gone.is_zero());
}

TEST_CASE("tensors and bilinear extension") {
    Tensor2<Composition, Composition> t;
    t.add({Composition({1}), Composition({2})}, 1);
    t.add({Composition(), Composition({1, 2})}, -1);
    CHECK(t.term_count() == 2);
    CHECK(t.coeff({Composition({1}), Composition({2})}) == 1);

    auto concat_op = [](const Word& a, const Word& b) {
        return LinComb<Word>::single(a.concat(b));
    };
    auto u = LinComb<Word>::single(Word::parse("1")) +
             LinComb<Word>::single(Word::parse("2")).scaled(2);
    auto v = LinComb<Word>::single(Word::parse("3"));
    auto prod = bilinear_extend(concat_op, u, v);
    CHECK(prod.coeff(Word::parse("13")) == 1);
    CHECK(prod.coeff(Word::parse("23")) == 2);
    CHECK(prod.term_count() == 2);
}
