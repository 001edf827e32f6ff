#include "freebell/checks.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "freebell/bell.hpp"
#include "freebell/bellhopf.hpp"
#include "freebell/binary_tree.hpp"
#include "freebell/composition.hpp"
#include "freebell/fqsym.hpp"
#include "freebell/lincomb.hpp"
#include "freebell/qpoly.hpp"
#include "freebell/qsym.hpp"
#include "freebell/set_partition.hpp"
#include "freebell/wqsym.hpp"
#include "freebell/word.hpp"

namespace freebell {
namespace checks {
namespace {

struct Mismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Mismatch(what);
}

Composition comp(const std::string& s) { return Composition::parse(s); }
Permutation perm(const std::string& s) { return Permutation::parse(s); }

bell::YPolyZ ypoly(const std::vector<std::pair<std::string, Int>>& terms) {
    bell::YPolyZ p;
    for (const auto& [k, c] : terms) p.add(comp(k), c);
    return p;
}

bell::YPolyQ ypoly_q(const std::vector<std::pair<std::string, std::string>>& terms) {
    bell::YPolyQ p;
    for (const auto& [k, c] : terms) p.add(comp(k), QPoly::parse(c));
    return p;
}

qsym::Element f_sum(const std::vector<std::pair<std::string, Int>>& terms) {
    LinComb<Composition> acc;
    for (const auto& [k, c] : terms) acc.add(comp(k), c);
    return qsym::Element(qsym::Basis::F, acc);
}

qsym::Element m_sum(const std::vector<std::pair<std::string, Int>>& terms) {
    LinComb<Composition> acc;
    for (const auto& [k, c] : terms) acc.add(comp(k), c);
    return qsym::Element(qsym::Basis::M, acc);
}

fqsym::Element f_perms(const std::vector<std::string>& ps) {
    LinComb<Permutation> acc;
    for (const auto& s : ps) acc.add(perm(s), 1);
    return fqsym::Element(fqsym::Basis::F, acc);
}

fqsym::Element g_perms(const std::vector<std::string>& ps) {
    LinComb<Permutation> acc;
    for (const auto& s : ps) acc.add(perm(s), 1);
    return fqsym::Element(fqsym::Basis::G, acc);
}

// Sum of F_w over the plain shuffle of two words on disjoint alphabets whose
// union is an initial segment (so every shuffle word is a permutation).
fqsym::Element f_shuffle(const std::string& u, const std::string& v) {
    LinComb<Permutation> acc;
    for (const Word& w : shuffle(Word::parse(u), Word::parse(v)))
        acc.add(Permutation(w.letters()), 1);
    return fqsym::Element(fqsym::Basis::F, acc);
}

wqsym::MElement m_words(const std::vector<std::string>& ws) {
    wqsym::MElement acc;
    for (const auto& s : ws) acc.add(wqsym::PackedWord::parse(s), 1);
    return acc;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

const long long kBellNumbers[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140};

CheckResult run(const std::string& name, const std::function<std::string()>& body) {
    CheckResult r;
    r.name = name;
    try {
        r.detail = body();
        r.pass = true;
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = e.what();
    }
    return r;
}

// ---- 1: integer Bell expansions -----------------------------------------

std::string body_bell_expansions() {
    const std::vector<std::vector<std::pair<std::string, Int>>> expected = {
        {{"(1)", 1}},
        {{"(2)", 1}, {"(1,1)", 1}},
        {{"(3)", 1}, {"(2,1)", 2}, {"(1,2)", 1}, {"(1,1,1)", 1}},
        {{"(4)", 1},
         {"(3,1)", 3},
         {"(2,2)", 3},
         {"(2,1,1)", 3},
         {"(1,3)", 1},
         {"(1,2,1)", 2},
         {"(1,1,2)", 1},
         {"(1,1,1,1)", 1}},
        {{"(5)", 1},
         {"(4,1)", 4},
         {"(3,2)", 6},
         {"(3,1,1)", 6},
         {"(2,3)", 4},
         {"(2,2,1)", 8},
         {"(2,1,2)", 4},
         {"(2,1,1,1)", 4},
         {"(1,4)", 1},
         {"(1,3,1)", 3},
         {"(1,2,2)", 3},
         {"(1,2,1,1)", 3},
         {"(1,1,3)", 1},
         {"(1,1,2,1)", 2},
         {"(1,1,1,2)", 1},
         {"(1,1,1,1,1)", 1}},
    };
    for (int n = 1; n <= 5; ++n) {
        require(bell::bell_prepend(n) == ypoly(expected[n - 1]),
                "B_" + std::to_string(n) + " differs from the tabulated expansion");
    }
    require(bell::bell_prepend(5).coeff(comp("(2,2,1)")) == 8,
            "B_5 coefficient of Y(2,2,1) is not 8");
    return "B_1..B_5 match the tabulated expansions term for term";
}

// ---- 2: q-Bell tables -----------------------------------------------------

std::string body_q_bell_tables() {
    using Tab = std::vector<std::pair<std::string, std::string>>;
    const std::map<int, Tab> append_tabs = {
        {1, {{"(1)", "1"}}},
        {2, {{"(2)", "1"}, {"(1,1)", "q"}}},
        {3, {{"(3)", "1"}, {"(2,1)", "q^2"}, {"(1,2)", "q^2+q"}, {"(1,1,1)", "q^3"}}},
        {4,
         {{"(4)", "1"},
          {"(3,1)", "q^3"},
          {"(2,2)", "q^4+q^3+q^2"},
          {"(2,1,1)", "q^5"},
          {"(1,3)", "q^3+q^2+q"},
          {"(1,2,1)", "q^5+q^4"},
          {"(1,1,2)", "q^5+q^4+q^3"},
          {"(1,1,1,1)", "q^6"}}},
    };
    const std::map<int, Tab> prepend_tabs = {
        {1, {{"(1)", "1"}}},
        {2, {{"(2)", "1"}, {"(1,1)", "q"}}},
        {3, {{"(3)", "1"}, {"(2,1)", "q^2+q"}, {"(1,2)", "q^2"}, {"(1,1,1)", "q^3"}}},
        {4,
         {{"(4)", "1"},
          {"(3,1)", "q^3+q^2+q"},
          {"(2,2)", "q^4+q^3+q^2"},
          {"(2,1,1)", "q^5+q^4+q^3"},
          {"(1,3)", "q^3"},
          {"(1,2,1)", "q^5+q^4"},
          {"(1,1,2)", "q^5"},
          {"(1,1,1,1)", "q^6"}}},
    };
    for (const auto& [n, tab] : append_tabs)
        require(bell::bell_append_q(n) == ypoly_q(tab),
                "append-oriented q-table differs at degree " + std::to_string(n));
    for (const auto& [n, tab] : prepend_tabs)
        require(bell::bell_prepend_q(n) == ypoly_q(tab),
                "prepend-oriented q-table differs at degree " + std::to_string(n));

    // The two orientations are monomial mirrors of each other.
    for (int n = 1; n <= 6; ++n) {
        auto mirrored =
            bell::bell_append_q(n).map_keys([](const Composition& c) { return c.mirror(); });
        require(mirrored == bell::bell_prepend_q(n),
                "mirror symmetry fails at degree " + std::to_string(n));
    }

    const std::vector<std::string> rows = {
        "1",
        "q+1",
        "q^3+2q^2+q+1",
        "q^6+3q^5+3q^4+4q^3+2q^2+q+1",
        "q^10+4q^9+6q^8+9q^7+9q^6+8q^5+7q^4+4q^3+2q^2+q+1",
    };
    for (int n = 1; n <= 5; ++n) {
        require(bell::bell_triangle(n) == QPoly::parse(rows[n - 1]),
                "triangle row differs at degree " + std::to_string(n));
        require(bell::bell_triangle(n).eval_at_one() == kBellNumbers[n],
                "triangle row does not specialize to the Bell number at q = 1");
    }
    return "q-tables up to degree 4, mirror symmetry up to 6, triangle rows up to 5";
}

// ---- 3: quasideterminant and closed coefficients --------------------------

std::string body_quasideterminant() {
    for (int n = 1; n <= 6; ++n)
        require(bell::quasideterminant_bell_q(n) == bell::bell_append_q(n),
                "path-sum differs from the recursion at degree " + std::to_string(n));
    int checked = 0;
    for (int n = 1; n <= 8; ++n) {
        auto pol = bell::bell_append_q(n);
        for (const Composition& shape : compositions_of(n)) {
            require(bell::coefficient_formula_q(shape) == pol.coeff(shape),
                    "closed coefficient formula differs at Y^" + shape.to_string());
            ++checked;
        }
        require(static_cast<int>(pol.term_count()) == (1 << (n - 1)),
                "q-Bell polynomial is missing monomials at degree " + std::to_string(n));
    }
    return "path sum = recursion up to degree 6; closed formula on all " +
           std::to_string(checked) + " shapes of weight <= 8";
}

// ---- 4: free Bell polynomials ---------------------------------------------

std::string body_free_bell() {
    using Disp = std::vector<std::pair<std::string, std::vector<std::string>>>;
    const std::vector<Disp> displays = {
        {{"(1)", {"1"}}},
        {{"(2)", {"12"}}, {"(1,1)", {"21"}}},
        {{"(3)", {"123"}}, {"(2,1)", {"132", "231"}}, {"(1,2)", {"312"}}, {"(1,1,1)", {"321"}}},
        {{"(4)", {"1234"}},
         {"(3,1)", {"1243", "1342", "2341"}},
         {"(2,2)", {"1423", "2413", "3412"}},
         {"(2,1,1)", {"1432", "2431", "3421"}},
         {"(1,3)", {"4123"}},
         {"(1,2,1)", {"4132", "4231"}},
         {"(1,1,2)", {"4312"}},
         {"(1,1,1,1)", {"4321"}}},
    };
    for (int n = 1; n <= 4; ++n) {
        bell::FreeBellElement expected;
        for (const auto& [y, perms] : displays[n - 1]) expected.add(comp(y), g_perms(perms));
        require(bell::free_bell(n) == expected,
                "free Bell polynomial differs from the display at degree " + std::to_string(n));
    }
    require(bell::free_bell(5).coeff(comp("(2,2,1)")) ==
                g_perms({"15243", "25143", "35142", "45132", "15342", "25341", "35241", "45231"}),
            "degree-5 coefficient of Y(2,2,1) differs from the eight listed terms");

    // The closed description: sum over set partitions, monomial from block
    // sizes in decreasing-maximum order, key reading those blocks ascending.
    for (int n = 1; n <= 7; ++n) {
        bell::FreeBellElement expected;
        for (const SetPartition& p : set_partitions_of(n)) {
            PartitionStats st = partition_stats(p);
            expected.add(st.k_flat, fqsym::g_basis(st.flat_hat));
        }
        require(bell::free_bell(n) == expected,
                "partition-sum identity fails at degree " + std::to_string(n));
    }
    return "displays up to degree 4, the eight Y(2,2,1) terms, partition sum up to degree 7";
}

// ---- 5: right combs --------------------------------------------------------

std::string body_right_combs() {
    int checked = 0;
    for (int n = 1; n <= 6; ++n) {
        auto group = symmetric_group(n);
        for (const Composition& shape : compositions_of(n)) {
            BinaryTree target = right_comb(shape);
            LinComb<Permutation> acc;
            for (const Permutation& p : group)
                if (decreasing_tree(p.as_word()).shape() == target) acc.add(p, 1);
            require(bell::c_coefficient_fqsym(shape) ==
                        fqsym::Element(fqsym::Basis::G, acc),
                    "C_" + shape.to_string() + " differs from its decreasing-tree fiber");
            ++checked;
        }
    }
    return "C_I = decreasing-tree fiber of the right comb for all " + std::to_string(checked) +
           " shapes of weight <= 6";
}

// ---- 6: dual immaculate -----------------------------------------------------

std::string body_dual_immaculate() {
    require(bell::c_coefficient_qsym(comp("(2,2,1)")) == f_sum({{"(1,1,2,1)", 1},
                                                                {"(1,2,1,1)", 1},
                                                                {"(1,2,2)", 1},
                                                                {"(1,3,1)", 1},
                                                                {"(2,1,2)", 1},
                                                                {"(2,2,1)", 2},
                                                                {"(3,1,1)", 1}}),
            "commutative image of C_(2,2,1) differs from the display");
    qsym::Element star221 = f_sum({{"(2,2,1)", 1},
                                   {"(2,1,2)", 1},
                                   {"(1,3,1)", 1},
                                   {"(1,2,2)", 2},
                                   {"(1,2,1,1)", 1},
                                   {"(1,1,3)", 1},
                                   {"(1,1,2,1)", 1}});
    require(qsym::dual_immaculate(comp("(2,2,1)"), qsym::DualImmaculateRoute::Tableaux) ==
                star221,
            "dual immaculate (2,2,1) differs from the display");
    // The iterated construction spelled out for (2,2,1).
    qsym::Element step =
        qsym::half_product(qsym::f_basis(comp("(1)")), qsym::f_basis(comp("(2)")),
                           qsym::Half::SuccFirst);
    require(step == f_sum({{"(1,2)", 1}, {"(2,1)", 1}}),
            "F_1 under the right half product with F_2 is not F_12 + F_21");
    require(qsym::half_product(step, qsym::f_basis(comp("(2)")), qsym::Half::SuccFirst) ==
                star221,
            "(F_1 > F_2) > F_2 does not reproduce the (2,2,1) display");

    int checked = 0;
    for (int n = 1; n <= 7; ++n) {
        for (const Composition& shape : compositions_of(n)) {
            auto a = qsym::dual_immaculate(shape, qsym::DualImmaculateRoute::BarComb);
            auto b = qsym::dual_immaculate(shape, qsym::DualImmaculateRoute::IteratedSucc);
            auto c = qsym::dual_immaculate(shape, qsym::DualImmaculateRoute::Tableaux);
            require(a == b, "bar-image and iterated routes disagree at " + shape.to_string());
            require(b == c, "iterated and tableau routes disagree at " + shape.to_string());
            ++checked;
        }
    }
    return "three routes agree on all " + std::to_string(checked) +
           " shapes of weight <= 7; worked (2,2,1) expansions match";
}

// ---- 7: hook formula --------------------------------------------------------

std::string body_hook_formula() {
    int checked = 0;
    for (int n = 1; n <= 7; ++n)
        for (const Composition& shape : compositions_of(n)) {
            require(bell::hook_length_c(shape) == bell::c_coefficient_qpoly(shape),
                    "hook product differs from the specialization at " + shape.to_string());
            ++checked;
        }
    QPoly c221 = QPoly::parse("q^8+2q^7+2q^6+2q^5+q^4");
    require(bell::hook_length_c(comp("(2,2,1)")) == c221,
            "c_(2,2,1) differs from the displayed polynomial");
    QPoly by_inv;
    const auto& cls = bell::free_bell(5).coeff(comp("(2,2,1)"));
    for (const auto& [p, c] : cls.terms()) by_inv += QPoly::monomial(p.inversions(), c);
    require(by_inv == c221,
            "inversion generating polynomial of the Y(2,2,1) terms differs from c_(2,2,1)");
    return "hook product = specialization on all " + std::to_string(checked) +
           " shapes of weight <= 7; c_(2,2,1) matches both displays";
}

// ---- 8: specialization bridge ----------------------------------------------

std::string body_specialization_bridge() {
    for (int n = 1; n <= 7; ++n) {
        bell::YPolyQ specialized;
        const bell::FreeBellElement fb = bell::free_bell(n);
        for (const auto& [y, coeff] : fb.terms())
            specialized.add(y, fqsym::principal_specialization_times_pochhammer(coeff));
        require(specialized == bell::bell_prepend_q(n),
                "specialized free Bell polynomial differs at degree " + std::to_string(n));
    }
    return "specialized free Bell polynomials equal the prepend q-polynomials up to degree 7";
}

// ---- 9: half-product displays ----------------------------------------------

std::string body_half_product_displays() {
    using qsym::Half;
    auto F = [](const std::string& s) { return qsym::f_basis(comp(s)); };
    auto prod = [](const qsym::Element& a, const qsym::Element& b) {
        return qsym::product(a, b);
    };

    // First-letter left product.
    require(qsym::half_product(F("(1,1)"), F("(2,1)"), Half::PrecFirst) ==
                f_sum({{"(1,3,1)", 1}, {"(2,2,1)", 1}, {"(3,2)", 1}, {"(3,1,1)", 1}}),
            "F_11 <' F_21 differs from the display");
    require(fqsym::prec_first(f_perms({"21"}), f_perms({"132"})) ==
                f_perms({"21354", "23154", "23514", "23541"}),
            "21 <' 132 differs from the display");
    require(fqsym::prec_first(f_perms({"21"}), f_perms({"231"})) ==
                f_perms({"21453", "24153", "24513", "24531"}),
            "21 <' 231 differs from the display");

    // Signed shuffle expansions of the first-letter product.
    require(fqsym::prec_first(f_perms({"2143"}), f_perms({"312"})) ==
                f_shuffle("2143", "756") - f_shuffle("72143", "56") +
                    f_shuffle("572143", "6") - f_perms({"6572143"}),
            "2143 <' 312 differs from its signed shuffle expansion");
    require(fqsym::prec_first(f_perms({"21"}), f_perms({"132"})) ==
                f_shuffle("21", "354") - f_shuffle("321", "54") + f_shuffle("5321", "4") -
                    f_perms({"45321"}),
            "21 <' 132 differs from its signed shuffle expansion");
    require(qsym::half_product(F("(1,1)"), F("(2,1)"), Half::PrecFirst) ==
                prod(F("(1,1)"), F("(2,1)")) - prod(F("(1,1,1)"), F("(1,1)")) +
                    prod(F("(1,1,1,1)"), F("(1)")) - F("(2,1,1,1)"),
            "projected signed expansion of F_11 <' F_21 differs");
    require(qsym::half_product(F("(1,2,1)"), F("(1,2)"), Half::PrecFirst) ==
                prod(F("(1,2,1)"), F("(1,2)")) - prod(F("(1,1,2,1)"), F("(2)")) +
                    prod(F("(2,1,2,1)"), F("(1)")) - F("(1,2,1,2,1)"),
            "F_121 <' F_12 differs from its signed product expansion");

    // Last-letter left product.
    require(fqsym::prec(f_perms({"21"}), f_perms({"132"})) ==
                f_perms({"35421", "35241", "32541", "23541"}),
            "21 < 132 differs from the display");
    require(qsym::half_product(F("(1,1)"), F("(2,1)"), Half::PrecLast) ==
                f_sum({{"(2,1,1,1)", 1}, {"(2,2,1)", 1}, {"(1,2,1,1)", 1}, {"(3,1,1)", 1}}),
            "F_11 < F_21 differs from the display");
    require(qsym::half_product(F("(1,1)"), F("(2,1)"), Half::PrecLast) ==
                prod(F("(1,1)"), F("(2,1)")) - prod(F("(1,2)"), F("(2)")) +
                    prod(F("(1,3)"), F("(1)")) - F("(1,3,1)"),
            "signed product expansion of F_11 < F_21 differs");

    // Last-letter right product.
    require(fqsym::succ(f_perms({"21"}), f_perms({"231"})) ==
                f_shuffle("21", "453") - f_shuffle("2", "4531") + f_perms({"45312"}),
            "21 > 231 differs from its signed shuffle expansion");
    require(qsym::half_product(F("(1,1)"), F("(2,1)"), Half::SuccLast) ==
                f_sum({{"(1,3,1)", 1},
                       {"(1,2,2)", 1},
                       {"(2,2,1)", 1},
                       {"(3,2)", 1},
                       {"(1,1,2,1)", 1},
                       {"(2,1,2)", 1}}),
            "F_11 > F_21 differs from the display");
    require(qsym::half_product(F("(1,1)"), F("(2,1)"), Half::SuccLast) ==
                prod(F("(1,1)"), F("(2,1)")) - prod(F("(1)"), F("(2,1,1)")) + F("(2,1,2)"),
            "signed product expansion of F_11 > F_21 differs");

    // First-letter right product.
    require(fqsym::succ_first(f_perms({"132"}), f_perms({"21"})) ==
                f_shuffle("132", "54") - f_shuffle("32", "154") + f_shuffle("2", "3154") -
                    f_perms({"23154"}),
            "132 >' 21 differs from its signed shuffle expansion");
    require(qsym::half_product(F("(2,1)"), F("(1,1)"), Half::SuccFirst) ==
                f_sum({{"(1,3,1)", 1}, {"(1,1,2,1)", 1}, {"(1,2,2)", 1}, {"(1,2,1,1)", 1}}),
            "F_21 >' F_11 differs from the display");
    require(qsym::half_product(F("(2,1)"), F("(1,1)"), Half::SuccFirst) ==
                prod(F("(2,1)"), F("(1,1)")) - prod(F("(1,1)"), F("(2,1)")) +
                    prod(F("(1)"), F("(1,2,1)")) - F("(2,2,1)"),
            "signed product expansion of F_21 >' F_11 differs");

    // Shifted-left-operand product, via the word-monomial algebra.
    require(wqsym::tridendriform_left_min(wqsym::PackedWord::parse("21"),
                                          wqsym::PackedWord::parse("132")) ==
                m_words({"21243", "21354", "31243", "41243", "51243", "41253", "31254"}),
            "word-monomial product 21 <' 132 differs from the display");
    require(wqsym::tridendriform_left_min(wqsym::PackedWord::parse("21"),
                                          wqsym::PackedWord::parse("121")) ==
                m_words({"21232", "31232", "21343", "31242", "41232"}),
            "word-monomial product 21 <' 121 differs from the display");
    wqsym::MElement lifted = wqsym::left_min(
        m_words({"21"}), m_words({"132"}) + m_words({"121"}));
    require(wqsym::project_to_qsym(lifted) == m_sum({{"(1,2,1,1)", 3},
                                                     {"(1,1,2,1)", 2},
                                                     {"(1,1,1,2)", 1},
                                                     {"(1,2,2)", 1},
                                                     {"(1,3,1)", 1},
                                                     {"(1,1,1,1,1)", 4}}),
            "monomial expansion of the shifted product differs from the display");
    require(qsym::half_product(F("(1,1)"), F("(2,1)"), Half::Grinberg) ==
                qsym::convert(wqsym::project_to_qsym(lifted), qsym::Basis::F),
            "shifted product disagrees with its word-monomial computation");
    require(qsym::half_product(F("(1,1)"), F("(2,1)"), Half::Grinberg) ==
                f_sum({{"(1,3,1)", 1}, {"(1,2,2)", 1}, {"(1,1,2,1)", 1}, {"(1,2,1,1)", 1}}),
            "shifted product F_11 <G F_21 differs from the display");
    require(qsym::half_product(F("(1,1)"), F("(2,1)"), Half::Grinberg) ==
                prod(F("(1,1)"), F("(2,1)")) - prod(F("(2,1)"), F("(1,1)")) +
                    prod(F("(1,2,1)"), F("(1)")) - F("(2,2,1)"),
            "signed product expansion of F_11 <G F_21 differs");
    require(fqsym::grinberg_prec(f_perms({"21"}), f_perms({"132"})) ==
                f_perms({"54132", "51432", "51342", "51324"}),
            "21 <G 132 differs from the display");
    require(fqsym::grinberg_prec(f_perms({"21"}), f_perms({"132"})) ==
                f_shuffle("54", "132") - f_shuffle("154", "32") + f_shuffle("3154", "2") -
                    f_perms({"23154"}),
            "21 <G 132 differs from its signed shuffle expansion");

    // Every closed formula against the lift-and-project reference route.
    struct Convention {
        Half kind;
        fqsym::Element (*lifted_op)(const fqsym::Element&, const fqsym::Element&);
        const char* label;
    };
    const Convention conventions[] = {
        {Half::PrecFirst, fqsym::prec_first, "first-letter left"},
        {Half::SuccFirst, fqsym::succ_first, "first-letter right"},
        {Half::PrecLast, fqsym::prec, "last-letter left"},
        {Half::SuccLast, fqsym::succ, "last-letter right"},
        {Half::Grinberg, fqsym::grinberg_prec, "shifted left"},
    };
    int pairs = 0;
    for (int a = 1; a <= 5; ++a)
        for (int b = 1; a + b <= 6; ++b)
            for (const Composition& I : compositions_of(a))
                for (const Composition& J : compositions_of(b)) {
                    auto fa = fqsym::f_basis(qsym::canonical_lift(I));
                    auto fb = fqsym::f_basis(qsym::canonical_lift(J));
                    for (const auto& cv : conventions) {
                        require(qsym::half_product(qsym::f_basis(I), qsym::f_basis(J),
                                                   cv.kind) ==
                                    fqsym::project_to_qsym(cv.lifted_op(fa, fb)),
                                std::string(cv.label) + " closed formula differs at (" +
                                    I.to_string() + ", " + J.to_string() + ")");
                    }
                    ++pairs;
                }
    return "nine worked displays plus closed formulas on " + std::to_string(pairs) +
           " basis pairs of weight <= 6";
}

// ---- 10: dendriform axioms -------------------------------------------------

std::string body_dendriform_axioms() {
    int triples = 0;
    for (int na = 1; na <= 4; ++na)
        for (int nb = 1; na + nb <= 5; ++nb)
            for (int nc = 1; na + nb + nc <= 6; ++nc)
                for (const Permutation& pa : symmetric_group(na))
                    for (const Permutation& pb : symmetric_group(nb))
                        for (const Permutation& pc : symmetric_group(nc)) {
                            auto a = fqsym::g_basis(pa);
                            auto b = fqsym::g_basis(pb);
                            auto c = fqsym::g_basis(pc);
                            require(fqsym::prec(fqsym::prec(a, b), c) ==
                                        fqsym::prec(a, fqsym::product(b, c)),
                                    "left-left axiom fails");
                            require(fqsym::prec(fqsym::succ(a, b), c) ==
                                        fqsym::succ(a, fqsym::prec(b, c)),
                                    "middle axiom fails");
                            require(fqsym::succ(a, fqsym::succ(b, c)) ==
                                        fqsym::succ(fqsym::product(a, b), c),
                                    "right-right axiom fails");
                            ++triples;
                        }
    int pairs = 0;
    for (int na = 1; na <= 6; ++na)
        for (int nb = 1; na + nb <= 7; ++nb)
            for (const Permutation& pa : symmetric_group(na))
                for (const Permutation& pb : symmetric_group(nb)) {
                    auto ga = fqsym::g_basis(pa), gb = fqsym::g_basis(pb);
                    require(fqsym::prec(ga, gb) + fqsym::succ(ga, gb) ==
                                fqsym::product(ga, gb),
                            "splitting fails in the maximum-letter convention");
                    auto fa = fqsym::f_basis(pa), fb = fqsym::f_basis(pb);
                    require(fqsym::prec(fa, fb) + fqsym::succ(fa, fb) ==
                                fqsym::product(fa, fb),
                            "splitting fails in the last-letter convention");
                    require(fqsym::prec_first(fa, fb) + fqsym::succ_first(fa, fb) ==
                                fqsym::product(fa, fb),
                            "splitting fails in the first-letter convention");
                    require(fqsym::grinberg_prec(fa, fb) + fqsym::prec_first(fb, fa) ==
                                fqsym::product(fb, fa),
                            "splitting fails in the shifted convention");
                    ++pairs;
                }
    return "axioms on " + std::to_string(triples) +
           " basis triples of weight <= 6; splitting on " + std::to_string(pairs) +
           " pairs of weight <= 7 in all four conventions";
}

// ---- 11: congruence classes -------------------------------------------------

std::string body_bell_classes() {
    using bellhopf::BellPoset;
    using bellhopf::ColumnPartition;

    // Worked insertion example and its poset.
    ColumnPartition cp = bellhopf::column_insert(perm("3126457"));
    require(cp == ColumnPartition::parse("367|1245"),
            "insertion of 3126457 differs from the worked example");
    struct Cover {
        int lower, upper;
        bool column;
    };
    auto require_covers = [](const BellPoset& poset, const std::vector<Cover>& expected,
                             const std::string& label) {
        auto edges = poset.hasse_edges();
        require(edges.size() == expected.size(), label + ": wrong number of covers");
        for (size_t i = 0; i < edges.size(); ++i) {
            require(edges[i].lower == expected[i].lower &&
                        edges[i].upper == expected[i].upper &&
                        edges[i].column == expected[i].column,
                    label + ": cover list differs");
        }
    };
    BellPoset poset7 = BellPoset::from_columns(cp);
    require_covers(poset7,
                   {{1, 2, true},
                    {2, 4, true},
                    {3, 1, false},
                    {3, 6, true},
                    {4, 5, true},
                    {6, 4, false},
                    {6, 7, true}},
                   "poset of 367|1245");
    {
        auto members = bellhopf::bell_class_of(perm("3126457"));
        auto exts = bellhopf::linear_extensions(poset7);
        require(members.size() == exts.size() && members.size() == 12,
                "class of 3126457 does not have 12 members");
        for (size_t i = 0; i < members.size(); ++i)
            require(members[i].as_word() == exts[i],
                    "class of 3126457 differs from the linear extensions");
    }
    BellPoset poset11 =
        BellPoset::from_columns(ColumnPartition::parse("6,10,11|2,4,8,9|3,7|5|1"));
    require_covers(poset11,
                   {{2, 4, true},
                    {3, 7, true},
                    {4, 3, false},
                    {4, 8, true},
                    {5, 1, false},
                    {6, 2, false},
                    {6, 10, true},
                    {7, 5, false},
                    {8, 7, false},
                    {8, 9, true},
                    {10, 8, false},
                    {10, 11, true}},
                   "eleven-element poset");

    for (int n = 1; n <= 7; ++n) {
        const auto& classes = bellhopf::bell_classes_cached(n);
        require(static_cast<long long>(classes.size()) == kBellNumbers[n],
                "wrong class count at degree " + std::to_string(n));

        auto group = symmetric_group(n);
        std::map<Permutation, int> class_of;
        size_t total = 0;
        for (size_t i = 0; i < classes.size(); ++i) {
            total += classes[i].members.size();
            for (const Permutation& p : classes[i].members) class_of[p] = static_cast<int>(i);
        }
        require(total == group.size(), "classes do not partition the symmetric group");

        // Each class is exactly an interval in right weak order.
        for (size_t i = 0; i < classes.size(); ++i) {
            unsigned long long lo = classes[i].weak_min.inversion_mask();
            unsigned long long hi = classes[i].weak_max.inversion_mask();
            for (const Permutation& p : group) {
                unsigned long long m = p.inversion_mask();
                bool inside = (lo & ~m) == 0 && (m & ~hi) == 0;
                bool member = class_of.at(p) == static_cast<int>(i);
                require(inside == member,
                        "class " + classes[i].partition.to_string() +
                            " is not the weak-order interval of its endpoints");
            }
        }

        // Maxima are exactly the permutations avoiding the dashed pattern 21-3.
        std::set<Permutation> maxima, avoiders;
        for (const auto& c : classes) maxima.insert(c.weak_max);
        for (const Permutation& p : group)
            if (avoids_21_3(p)) avoiders.insert(p);
        require(maxima == avoiders,
                "class maxima differ from the 21-3 avoiders at degree " + std::to_string(n));

        // Insertion is invariant under one-step rewrites.
        for (const Permutation& p : group) {
            ColumnPartition target = bellhopf::column_insert(p);
            for (const Permutation& q : bellhopf::bell_rewrite_neighbors(p))
                require(bellhopf::column_insert(q) == target,
                        "insertion changed across a rewrite of " + p.to_string());
        }
    }

    for (int n = 1; n <= 6; ++n) {
        for (const auto& c : bellhopf::bell_classes_cached(n)) {
            BellPoset poset = BellPoset::from_columns(c.columns);
            auto exts = bellhopf::linear_extensions(poset);
            require(exts.size() == c.members.size(),
                    "extension count differs for " + c.partition.to_string());
            for (size_t i = 0; i < exts.size(); ++i)
                require(exts[i] == c.members[i].as_word(),
                        "linear extensions differ from the class of " +
                            c.partition.to_string());
            require(bellhopf::regularity_check(poset),
                    "poset of " + c.partition.to_string() + " is not regular");
        }
    }
    return "counts, intervals, maxima, insertion invariance up to degree 7; "
           "linear extensions and regularity up to degree 6; worked posets match";
}

// ---- 12: Hopf closure --------------------------------------------------------

std::string body_hopf_closure() {
    int products = 0, coproducts = 0;
    for (int a = 1; a <= 5; ++a)
        for (int b = 1; a + b <= 6; ++b) {
            std::map<SetPartition, long long> sizes;
            for (const auto& c : bellhopf::bell_classes_cached(a + b))
                sizes[c.partition] = static_cast<long long>(c.members.size());
            for (const auto& ca : bellhopf::bell_classes_cached(a))
                for (const auto& cb : bellhopf::bell_classes_cached(b)) {
                    auto prod = bellhopf::p_basis_product(ca.partition, cb.partition);
                    long long total = 0;
                    for (const auto& [part, coeff] : prod.terms())
                        total += coeff * sizes.at(part);
                    require(total == binomial(a + b, a) *
                                         static_cast<long long>(ca.members.size()) *
                                         static_cast<long long>(cb.members.size()),
                            "product of " + ca.partition.to_string() + " and " +
                                cb.partition.to_string() + " loses terms");
                    ++products;
                }
        }
    for (int n = 1; n <= 5; ++n) {
        std::map<int, std::map<SetPartition, long long>> sizes;
        for (int k = 0; k <= n; ++k)
            for (const auto& c : bellhopf::bell_classes_cached(k))
                sizes[k][c.partition] = static_cast<long long>(c.members.size());
        for (const auto& c : bellhopf::bell_classes_cached(n)) {
            auto cop = bellhopf::p_basis_coproduct(c.partition);
            long long total = 0;
            for (const auto& [parts, coeff] : cop.terms()) {
                int left = parts.first.num_elements();
                total += coeff * sizes.at(left).at(parts.first) *
                         sizes.at(n - left).at(parts.second);
            }
            require(total == static_cast<long long>(c.members.size()) * (n + 1),
                    "coproduct of " + c.partition.to_string() + " loses terms");
            ++coproducts;
        }
    }
    return "class-sum basis closed under " + std::to_string(products) +
           " products (weight <= 6) and " + std::to_string(coproducts) +
           " coproducts (weight <= 5)";
}

// ---- 13: quasi-differential route ---------------------------------------------

std::string body_quasi_differential() {
    Tensor2<Composition, Composition> expected;
    expected.add({Composition(), comp("(1,2)")}, 1);
    expected.add({comp("(1)"), comp("(2)")}, -1);
    expected.add({comp("(2)"), comp("(1)")}, 1);
    expected.add({comp("(1,2)"), Composition()}, -1);
    require(qsym::alphabet_difference(qsym::f_basis(comp("(1,2)"))) == expected,
            "two-alphabet expansion of F_12 differs from the worked example");

    int pairs = 0;
    for (int a = 1; a <= 5; ++a)
        for (int b = 1; a + b <= 6; ++b)
            for (const Composition& I : compositions_of(a))
                for (const Composition& J : compositions_of(b)) {
                    auto f = qsym::f_basis(I);
                    auto g = qsym::f_basis(J);
                    require(qsym::prec_first_via_difference(f, g) ==
                                qsym::half_product(f, g, qsym::Half::PrecFirst),
                            "two-alphabet route differs at (" + I.to_string() + ", " +
                                J.to_string() + ")");
                    ++pairs;
                }
    return "two-alphabet route = closed formula on " + std::to_string(pairs) +
           " basis pairs of weight <= 6; worked F_12 expansion matches";
}

}  // namespace

CheckResult bell_expansions() { return run("bell_expansions", body_bell_expansions); }
CheckResult q_bell_tables() { return run("q_bell_tables", body_q_bell_tables); }
CheckResult quasideterminant() { return run("quasideterminant", body_quasideterminant); }
CheckResult free_bell() { return run("free_bell", body_free_bell); }
CheckResult right_combs() { return run("right_combs", body_right_combs); }
CheckResult dual_immaculate() { return run("dual_immaculate", body_dual_immaculate); }
CheckResult hook_formula() { return run("hook_formula", body_hook_formula); }
CheckResult specialization_bridge() {
    return run("specialization_bridge", body_specialization_bridge);
}
CheckResult half_product_displays() {
    return run("half_product_displays", body_half_product_displays);
}
CheckResult dendriform_axioms() { return run("dendriform_axioms", body_dendriform_axioms); }
CheckResult bell_classes() { return run("bell_classes", body_bell_classes); }
CheckResult hopf_closure() { return run("hopf_closure", body_hopf_closure); }
CheckResult quasi_differential() { return run("quasi_differential", body_quasi_differential); }

std::vector<std::string> suite_names() {
    return {"all", "bell", "dendriform", "dualimm", "hopf"};
}

std::vector<CheckResult> run_suite(const std::string& suite) {
    std::vector<CheckResult> out;
    if (suite == "all") {
        out.push_back(bell_expansions());
        out.push_back(q_bell_tables());
        out.push_back(quasideterminant());
        out.push_back(free_bell());
        out.push_back(right_combs());
        out.push_back(dual_immaculate());
        out.push_back(hook_formula());
        out.push_back(specialization_bridge());
        out.push_back(half_product_displays());
        out.push_back(dendriform_axioms());
        out.push_back(bell_classes());
        out.push_back(hopf_closure());
        out.push_back(quasi_differential());
    } else if (suite == "bell") {
        out.push_back(bell_expansions());
        out.push_back(q_bell_tables());
        out.push_back(quasideterminant());
        out.push_back(free_bell());
        out.push_back(right_combs());
        out.push_back(hook_formula());
        out.push_back(specialization_bridge());
    } else if (suite == "dendriform") {
        out.push_back(half_product_displays());
        out.push_back(dendriform_axioms());
        out.push_back(quasi_differential());
    } else if (suite == "dualimm") {
        out.push_back(dual_immaculate());
    } else if (suite == "hopf") {
        out.push_back(bell_classes());
        out.push_back(hopf_closure());
    } else {
        throw std::invalid_argument("unknown suite: " + suite);
    }
    return out;
}

}  // namespace checks
}  // namespace freebell
