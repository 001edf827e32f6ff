#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "freebell/binary_tree.hpp"
#include "freebell/composition.hpp"
#include "freebell/qpoly.hpp"
#include "freebell/set_partition.hpp"
#include "freebell/word.hpp"

using namespace freebell;

static const long long kBell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140};

TEST_CASE("word parsing and rendering") {
    CHECK(Word::parse("312").letters() == std::vector<int>{3, 1, 2});
    CHECK(Word::parse("3,12,4").letters() == std::vector<int>{3, 12, 4});
    CHECK(Word::parse("312").to_string() == "312");
    CHECK(Word::parse("3,12,4").to_string() == "3,12,4");
    CHECK(Word().empty());
    CHECK(Word().max_letter() == 0);
    CHECK(Word::parse("212").has_distinct_letters() == false);
    CHECK(Word::parse("312").has_distinct_letters());
    CHECK(Word::parse("12").concat(Word::parse("21")) == Word::parse("1221"));
    CHECK(Word::parse("3124").subword(1, 2) == Word::parse("12"));
    CHECK(Word::parse("12").shifted(2) == Word::parse("34"));
}

TEST_CASE("word order is length then lexicographic") {
    CHECK(Word::parse("99") < Word::parse("111"));
    CHECK(Word::parse("12") < Word::parse("21"));
    CHECK_FALSE(Word::parse("21") < Word::parse("12"));
}

TEST_CASE("permutation basics") {
    Permutation p = Permutation::parse("3126457");
    CHECK(p.size() == 7);
    CHECK(p.inverse() == Permutation::parse("2315647"));
    CHECK(p.descent_set() == std::vector<int>{1, 4});
    CHECK(p.recoil_set() == std::vector<int>{2, 5});
    CHECK(p.inversions() == 4);
    CHECK(p.maj() == 5);
    CHECK(Permutation::identity(4) == Permutation::parse("1234"));
    CHECK(Permutation::parse("231").inverse() == Permutation::parse("312"));
    // complement then reverse
    CHECK(Permutation::parse("231").schutzenberger() == Permutation::parse("312"));
    CHECK(Permutation::parse("12").schutzenberger() == Permutation::parse("12"));
    CHECK(Permutation::parse("132").schutzenberger() == Permutation::parse("213"));
    for (const auto& p : symmetric_group(5))
        CHECK(p.schutzenberger().schutzenberger() == p);
}

TEST_CASE("inversion masks order by containment along weak order") {
    CHECK(Permutation::identity(5).inversion_mask() == 0ULL);
    // 21 has the single inversion of S2; 321 contains every pair of S3.
    auto m321 = Permutation::parse("321").inversion_mask();
    auto m213 = Permutation::parse("213").inversion_mask();
    CHECK((m213 & m321) == m213);
    // popcount equals the inversion number
    CHECK(__builtin_popcountll(m321) == 3);
}

TEST_CASE("standardization") {
    CHECK(standardize(Word::parse("212")) == Permutation::parse("213"));
    CHECK(standardize(Word::parse("3313")) == Permutation::parse("2314"));
    CHECK(standardize(Word::parse("321")) == Permutation::parse("321"));
    CHECK(standardize(Word()) == Permutation());
}

TEST_CASE("symmetric group enumeration") {
    auto s4 = symmetric_group(4);
    CHECK(s4.size() == 24);
    std::set<Permutation> dedup(s4.begin(), s4.end());
    CHECK(dedup.size() == 24);
    CHECK(dedup.count(Permutation::identity(4)) == 1);
}

TEST_CASE("pattern avoider counts match Bell numbers") {
    for (int n = 1; n <= 7; ++n) {
        long long a = 0, b = 0;
        for (const auto& p : symmetric_group(n)) {
            if (avoids_21_3(p)) ++a;
            if (avoids_1_32(p)) ++b;
        }
        CHECK(a == kBell[n]);
        CHECK(b == kBell[n]);
    }
    CHECK_FALSE(avoids_21_3(Permutation::parse("213")));
    CHECK(avoids_21_3(Permutation::parse("321")));
    CHECK_FALSE(avoids_1_32(Permutation::parse("132")));
    CHECK(avoids_1_32(Permutation::parse("321")));
}

TEST_CASE("shuffles and half shuffles") {
    auto sh = shuffle(Word::parse("12"), Word::parse("34"));
    CHECK(sh.size() == 6);
    // multiplicities are kept
    auto rep = shuffle(Word::parse("11"), Word::parse("1"));
    CHECK(rep.size() == 3);
    for (const auto& w : rep) CHECK(w == Word::parse("111"));

    auto pl = shuffle_prec_last(Word::parse("12"), Word::parse("34"));
    auto sl = shuffle_succ_last(Word::parse("12"), Word::parse("34"));
    CHECK(pl.size() + sl.size() == 6);
    for (const auto& w : pl) CHECK(w[w.size() - 1] == 2);
    for (const auto& w : sl) CHECK(w[w.size() - 1] == 4);

    auto pf = shuffle_prec_first(Word::parse("14"), Word::parse("23"));
    CHECK(pf.size() == 3);
    for (const auto& w : pf) CHECK(w[0] == 1);

    CHECK_THROWS(shuffle_prec_last(Word(), Word::parse("1")));
    CHECK_THROWS(shuffle_succ_first(Word::parse("1"), Word()));
}

TEST_CASE("composition parsing, rendering, order") {
    CHECK(Composition::parse("(2,2,1)") == Composition({2, 2, 1}));
    CHECK(Composition::parse("2,2,1") == Composition({2, 2, 1}));
    CHECK(Composition::parse("221") == Composition({2, 2, 1}));
    CHECK(Composition::parse("()").empty());
    CHECK(Composition::parse("").empty());
    CHECK(Composition({2, 2, 1}).to_string() == "(2,2,1)");
    CHECK(Composition().to_string() == "()");
    CHECK(Composition({2, 2, 1}).weight() == 5);
    CHECK(Composition({2, 2, 1}).length() == 3);

    Composition c3({3}), c21({2, 1}), c12({1, 2}), c111({1, 1, 1});
    CHECK(c3 < c21);
    CHECK(c21 < c12);
    CHECK(c12 < c111);
    CHECK(Composition({2}) < c3);  // weight comes first
}

TEST_CASE("composition statistics and surgery") {
    Composition c({1, 3, 3});
    CHECK(c.descent_set() == std::vector<int>{1, 4});
    CHECK(c.maj() == 5);
    CHECK(Composition::from_descent_set({1, 4}, 7) == c);
    for (int n = 1; n <= 8; ++n)
        for (const auto& i : compositions_of(n))
            CHECK(Composition::from_descent_set(i.descent_set(), n) == i);

    CHECK(c.mirror() == Composition({3, 3, 1}));
    CHECK(Composition({2, 1}).concat(Composition({3})) == Composition({2, 1, 3}));
    CHECK(Composition({2, 1}).near_concat(Composition({3})) == Composition({2, 4}));
    CHECK_THROWS(Composition().near_concat(Composition({1})));

    CHECK(descent_composition(Permutation::parse("3126457")) == Composition({1, 3, 3}));
    CHECK(recoil_composition(Permutation::parse("3126457")) == Composition({2, 3, 2}));
    CHECK(descent_composition(Word::parse("1212")) == Composition({2, 2}));
}

TEST_CASE("composition families") {
    for (int n = 1; n <= 8; ++n) {
        auto all = compositions_of(n);
        CHECK(all.size() == (size_t{1} << (n - 1)));
        CHECK(std::is_sorted(all.begin(), all.end()));
    }
    CHECK(refines(Composition({1, 1, 1}), Composition({2, 1})));
    CHECK_FALSE(refines(Composition({2, 1}), Composition({1, 2})));
    auto refs = refinements_of(Composition({2, 1}));
    CHECK(refs.size() == 2);
    CHECK(std::count(refs.begin(), refs.end(), Composition({2, 1})) == 1);
    CHECK(std::count(refs.begin(), refs.end(), Composition({1, 1, 1})) == 1);
    // conjugation is an involution
    for (const auto& i : compositions_of(6)) CHECK(i.conjugate().conjugate() == i);
}

TEST_CASE("q-polynomial arithmetic and rendering") {
    QPoly z;
    CHECK(z.is_zero());
    CHECK(z.to_string() == "0");
    CHECK(z.degree() == -1);

    QPoly p = QPoly::q(3) + QPoly::monomial(1, 2) + 1;
    CHECK(p.to_string() == "q^3+2q+1");
    CHECK(QPoly::parse("q^3+2q+1") == p);
    CHECK(QPoly::parse("1 + 2q + q^3") == p);
    CHECK((QPoly::q() - QPoly::q(2)).to_string() == "-q^2+q");
    CHECK(QPoly::parse("-q^2+q") == QPoly::q() - QPoly::q(2));
    CHECK(p.coeff(1) == 2);
    CHECK(p.coeff(2) == 0);
    CHECK(p.degree() == 3);
    CHECK(p.low_degree() == 0);
    CHECK(p.eval_at_one() == 4);

    QPoly quotient;
    QPoly num = (QPoly::q() + 1) * (QPoly::q(2) + 3);
    CHECK(num.divide_exact(QPoly::q() + 1, quotient));
    CHECK(quotient == QPoly::q(2) + 3);
    CHECK_FALSE((QPoly::q() + 1).divide_exact(QPoly::q(2), quotient));
}

TEST_CASE("q-integers, factorials, binomials") {
    CHECK(q_int(4).to_string() == "q^3+q^2+q+1");
    CHECK(q_factorial(3).to_string() == "q^3+2q^2+2q+1");
    CHECK(q_binomial(5, 2).eval_at_one() == 10);
    for (int n = 0; n <= 8; ++n)
        for (int k = 0; k <= n; ++k) {
            CHECK(q_binomial(n, k) == q_binomial(n, n - k));
            if (n && k && k < n)
                CHECK(q_binomial(n, k) ==
                      q_binomial(n - 1, k - 1) + QPoly::q(k) * q_binomial(n - 1, k));
        }
    QPoly poch = (QPoly(1) - QPoly::q()) * (QPoly(1) - QPoly::q(2)) *
                 (QPoly(1) - QPoly::q(3));
    CHECK(q_pochhammer(3) == poch);
}

TEST_CASE("set partitions") {
    SetPartition p = SetPartition::parse("347|28|1|56");
    CHECK(p.to_string() == "1|28|347|56");
    CHECK(p.num_blocks() == 4);
    CHECK(p.num_elements() == 8);
    CHECK(p.ground_is_initial_segment());
    auto desc = p.blocks_by_max_desc();
    CHECK(desc[0] == std::vector<int>{2, 8});
    CHECK(desc[3] == std::vector<int>{1});
    CHECK(SetPartition::parse("3,6,7|1,2,4,5").to_string() == "1245|367");

    for (int n = 0; n <= 7; ++n) CHECK(set_partitions_of(n).size() == size_t(kBell[n]));

    auto st = partition_stats(p);
    CHECK(st.k_sharp == Composition({1, 2, 3, 2}));
    CHECK(st.k_flat == Composition({2, 3, 2, 1}));
    CHECK(st.flat_hat == Permutation::parse("28347561"));
    for (const auto& q : set_partitions_of(6))
        CHECK(avoids_21_3(partition_stats(q).flat_hat));
}

TEST_CASE("binary trees") {
    BinaryTree t = decreasing_tree(Word::parse("2431"));
    CHECK(t.to_string() == "(4 (2 . .) (3 . (1 . .)))");
    CHECK(t.subtree_sizes() == std::vector<int>{4, 1, 2, 1});
    CHECK(t.right_subtree_sizes() == std::vector<int>{2, 0, 1, 0});
    CHECK_THROWS(decreasing_tree(Word()));

    BinaryTree comb = right_comb(Composition({1, 1, 1}));
    CHECK(comb == decreasing_tree(Word::parse("321")).shape());
    CHECK(right_comb(Composition({2})).size() == 2);
    CHECK(right_comb(Composition({2, 2, 1})).size() == 5);
    CHECK(right_comb(Composition()).empty());
    CHECK(BinaryTree::make(5, BinaryTree::leaf(1), BinaryTree()).shape() ==
          right_comb(Composition({2})));
}
