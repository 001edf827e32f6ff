#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "freebell/composition.hpp"
#include "freebell/fqsym.hpp"
#include "freebell/qsym.hpp"
#include "freebell/word.hpp"

using namespace freebell;
using fqsym::Basis;

static fqsym::Element f(const std::string& s) {
    return fqsym::f_basis(Permutation::parse(s));
}
static fqsym::Element g(const std::string& s) {
    return fqsym::g_basis(Permutation::parse(s));
}

TEST_CASE("basis conversion inverts every key") {
    CHECK(fqsym::convert(f("231"), Basis::G) == g("312"));
    CHECK(fqsym::convert(g("231"), Basis::F) == f("312"));
    for (const auto& p : symmetric_group(4)) {
        auto x = fqsym::f_basis(p) + fqsym::f_basis(Permutation::identity(4)).scaled(2);
        CHECK(fqsym::convert(fqsym::convert(x, Basis::G), Basis::F) == x);
    }
}

TEST_CASE("products in the two bases agree through conversion") {
    CHECK(fqsym::product(f("1"), f("1")) == f("12") + f("21"));
    CHECK(fqsym::product(g("1"), g("1")) == g("12") + g("21"));
    CHECK(fqsym::product(f("12"), f("1")) == f("123") + f("132") + f("312"));
    for (const auto& a : symmetric_group(2))
        for (const auto& b : symmetric_group(3)) {
            auto lhs = fqsym::product(fqsym::f_basis(a), fqsym::f_basis(b));
            auto rhs = fqsym::convert(
                fqsym::product(fqsym::convert(fqsym::f_basis(a), Basis::G),
                               fqsym::convert(fqsym::f_basis(b), Basis::G)),
                Basis::F);
            CHECK(lhs == rhs);
            int n = 0;
            CHECK(lhs.homogeneous(&n));
            CHECK(n == 5);
            CHECK(lhs.term_count() == 10);  // binom(5,2) shifted shuffles
        }
}

TEST_CASE("dendriform halves sum to the product") {
    std::vector<fqsym::Element> gens = {g("1"), g("12"), g("21"), g("132")};
    for (const auto& a : gens)
        for (const auto& b : gens) {
            CHECK(fqsym::prec(a, b) + fqsym::succ(a, b) == fqsym::product(a, b));
            auto af = fqsym::convert(a, Basis::F), bf = fqsym::convert(b, Basis::F);
            CHECK(fqsym::prec(af, bf) + fqsym::succ(af, bf) == fqsym::product(af, bf));
            CHECK(fqsym::prec_first(af, bf) + fqsym::succ_first(af, bf) ==
                  fqsym::product(af, bf));
        }
    CHECK(fqsym::prec(g("1"), g("1")) == g("21"));
    CHECK(fqsym::succ(g("1"), g("1")) == g("12"));
    // degree-0 terms are rejected on either side
    auto unit = fqsym::s_n(0);
    CHECK_THROWS(fqsym::prec(unit, g("1")));
    CHECK_THROWS(fqsym::succ(g("1"), unit));
    CHECK_THROWS(fqsym::prec_first(fqsym::convert(unit, Basis::F), f("1")));
}

TEST_CASE("first-letter splitting matches word-level half shuffles") {
    // u prec' v: interleavings of u and shifted v that start with u's first letter
    auto lhs = fqsym::prec_first(f("12"), f("12"));
    LinComb<Permutation> expect;
    for (const auto& w :
         shuffle_prec_first(Word::parse("12"), Word::parse("34")))
        expect.add(Permutation(w.letters()), 1);
    CHECK(lhs == fqsym::Element(Basis::F, expect));
    // 1234 prec' 567: every term keeps the initial 1
    for (const auto& w :
         shuffle_prec_first(Word::parse("1234"), Word::parse("567"))) {
        CHECK(w[0] == 1);
    }
    CHECK(shuffle_prec_first(Word::parse("1234"), Word::parse("567")).size() == 20);
}

TEST_CASE("descent images of half shuffles") {
    auto descent_sum = [](const std::vector<Word>& words) {
        LinComb<Composition> acc;
        for (const auto& w : words) acc.add(descent_composition(w), 1);
        return qsym::Element(qsym::Basis::F, acc);
    };
    auto e1 = descent_sum(shuffle_prec_first(Word::parse("14"), Word::parse("23")));
    auto e2 = descent_sum(shuffle_prec_first(Word::parse("12"), Word::parse("34")));
    auto expected12 = qsym::f_basis(Composition({4})) + qsym::f_basis(Composition({2, 2})) +
                      qsym::f_basis(Composition({3, 1}));
    CHECK(e1 == expected12);
    CHECK(e2 == expected12);
    auto e3 = descent_sum(shuffle_prec_first(Word::parse("24"), Word::parse("13")));
    auto e4 = descent_sum(shuffle_prec_first(Word::parse("34"), Word::parse("12")));
    auto expected34 = qsym::f_basis(Composition({2, 2})) +
                      qsym::f_basis(Composition({1, 3})) +
                      qsym::f_basis(Composition({1, 2, 1}));
    CHECK(e3 == expected34);
    CHECK(e4 == expected34);
}

TEST_CASE("the shifted-left variant is the flipped first-letter succ") {
    for (const auto& a : symmetric_group(2))
        for (const auto& b : symmetric_group(3)) {
            auto fa = fqsym::f_basis(a), fb = fqsym::f_basis(b);
            CHECK(fqsym::grinberg_prec(fa, fb) == fqsym::succ_first(fb, fa));
            CHECK(fqsym::grinberg_prec(fa, fb) + fqsym::prec_first(fb, fa) ==
                  fqsym::product(fb, fa));
        }
}

TEST_CASE("coproduct deconcatenates and standardizes") {
    auto d = fqsym::coproduct(f("21"));
    CHECK(d.term_count() == 3);
    CHECK(d.coeff({Permutation(), Permutation::parse("21")}) == 1);
    CHECK(d.coeff({Permutation::parse("1"), Permutation::parse("1")}) == 1);
    CHECK(d.coeff({Permutation::parse("21"), Permutation()}) == 1);
    auto d2 = fqsym::coproduct(f("312"));
    CHECK(d2.coeff({Permutation::parse("21"), Permutation::parse("1")}) == 1);
    CHECK(d2.coeff({Permutation::parse("1"), Permutation::parse("12")}) == 1);
}

TEST_CASE("involutive index maps") {
    for (const auto& p : symmetric_group(4)) {
        auto x = fqsym::f_basis(p);
        CHECK(fqsym::bar_antinvolution(fqsym::bar_antinvolution(x)) == x);
        auto y = fqsym::g_basis(p);
        CHECK(fqsym::schutzenberger_map(fqsym::schutzenberger_map(y)) == y);
    }
    // antiautomorphism on samples: bar(ab) = bar(b) bar(a)
    std::vector<fqsym::Element> gens = {f("1"), f("12"), f("21")};
    for (const auto& a : gens)
        for (const auto& b : gens)
            CHECK(fqsym::bar_antinvolution(fqsym::product(a, b)) ==
                  fqsym::product(fqsym::bar_antinvolution(b),
                                 fqsym::bar_antinvolution(a)));
}

TEST_CASE("projection to descent compositions") {
    CHECK(fqsym::project_to_qsym(f("3126457")) ==
          qsym::f_basis(Composition({1, 3, 3})));
    for (const auto& a : symmetric_group(2))
        for (const auto& b : symmetric_group(2)) {
            auto lhs = fqsym::project_to_qsym(
                fqsym::product(fqsym::f_basis(a), fqsym::f_basis(b)));
            auto rhs = qsym::product(fqsym::project_to_qsym(fqsym::f_basis(a)),
                                     fqsym::project_to_qsym(fqsym::f_basis(b)));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("principal specialization at the word-sum generators") {
    CHECK(fqsym::principal_specialization_times_pochhammer(f("21")) == QPoly::q());
    CHECK(fqsym::principal_specialization_times_pochhammer(f("12")) == QPoly(1));
    CHECK(fqsym::principal_specialization_times_pochhammer(fqsym::s_n(3)) == QPoly(1));
    // G keys are read through their inverse: 231^{-1} = 312, recoils at 1
    CHECK(fqsym::principal_specialization_times_pochhammer(g("231")) == QPoly::q(1));
}

TEST_CASE("iterated half products of word sums") {
    CHECK(fqsym::prec_comb(Composition({3})) == fqsym::s_n(3));
    CHECK(fqsym::prec_comb(Composition({1, 1})) == g("21"));
    CHECK(fqsym::prec_comb(Composition({1, 1, 1})) == g("321"));
    auto unit = fqsym::prec_comb(Composition());
    CHECK(unit.term_count() == 1);
    CHECK(unit.coeff(Permutation()) == 1);
}
