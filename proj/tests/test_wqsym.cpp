#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "freebell/qsym.hpp"
#include "freebell/wqsym.hpp"

using namespace freebell;
using wqsym::MElement;
using wqsym::PackedWord;

static MElement m(const std::string& s) {
    return MElement::single(PackedWord::parse(s));
}

TEST_CASE("packing") {
    CHECK(wqsym::pack(Word::parse("424")) == PackedWord::parse("212"));
    CHECK(wqsym::pack(Word::parse("3,7,3,9")) == PackedWord::parse("1213"));
    CHECK(wqsym::pack(Word()) == PackedWord());
    CHECK_THROWS(PackedWord::parse("13"));  // 2 missing: not packed
    CHECK(wqsym::evaluation(PackedWord::parse("21312")) == Composition({2, 2, 1}));
}

TEST_CASE("packed word counts are ordered Bell numbers") {
    const size_t fubini[] = {1, 1, 3, 13, 75};
    for (int n = 0; n <= 4; ++n)
        CHECK(wqsym::packed_words_of_length(n).size() == fubini[n]);
}

TEST_CASE("monomial convolution") {
    auto p = wqsym::m_convolution(PackedWord::parse("1"), PackedWord::parse("1"));
    CHECK(p == m("11") + m("12") + m("21"));
    // first |u| letters pack to u, the rest pack to v
    auto q = wqsym::m_convolution(PackedWord::parse("21"), PackedWord::parse("1"));
    CHECK(q.coeff(PackedWord::parse("211")) == 1);
    CHECK(q.coeff(PackedWord::parse("212")) == 1);
    CHECK(q.coeff(PackedWord::parse("213")) == 1);
    CHECK(q.coeff(PackedWord::parse("312")) == 1);
    CHECK(q.coeff(PackedWord::parse("321")) == 1);
    CHECK(q.coeff(PackedWord::parse("123")) == 0);  // prefix 12 does not pack to 21
    CHECK(q.coeff(PackedWord::parse("121")) == 0);
    CHECK(q.term_count() == 5);
}

TEST_CASE("splitting by the position of the minimum") {
    CHECK(wqsym::left_min(m("1"), m("1")) == m("12"));
    CHECK(wqsym::right_min(m("1"), m("1")) == m("11") + m("21"));
    for (const auto& u : wqsym::packed_words_of_length(2))
        for (const auto& v : wqsym::packed_words_of_length(2)) {
            auto a = MElement::single(u), b = MElement::single(v);
            CHECK(wqsym::left_min(a, b) + wqsym::right_min(a, b) ==
                  wqsym::m_product(a, b));
        }
    CHECK_THROWS(wqsym::tridendriform_left_min(PackedWord(), PackedWord::parse("1")));
}

TEST_CASE("product is associative") {
    auto a = m("1"), b = m("21"), c = m("11");
    CHECK(wqsym::m_product(wqsym::m_product(a, b), c) ==
          wqsym::m_product(a, wqsym::m_product(b, c)));
}

TEST_CASE("projection onto monomial quasisymmetric functions") {
    CHECK(wqsym::project_to_qsym(m("121")) == qsym::m_basis(Composition({2, 1})));
    CHECK(wqsym::project_to_qsym(m("212")) == qsym::m_basis(Composition({1, 2})));
    for (const auto& u : wqsym::packed_words_of_length(2))
        for (const auto& v : wqsym::packed_words_of_length(1)) {
            auto a = MElement::single(u), b = MElement::single(v);
            CHECK(wqsym::project_to_qsym(wqsym::m_product(a, b)) ==
                  qsym::product(wqsym::project_to_qsym(a), wqsym::project_to_qsym(b)));
        }
}
