#ifndef FREEBELL_QSYM_HPP
#define FREEBELL_QSYM_HPP

#include <string>
#include <vector>

#include "freebell/composition.hpp"
#include "freebell/lincomb.hpp"
#include "freebell/word.hpp"

namespace freebell {
namespace qsym {

enum class Basis { F, M };

// A quasisymmetric function, stored as an integer linear combination of
// compositions tagged with the basis (fundamental F or monomial M).
class Element {
public:
    Element() = default;  // zero
    Element(Basis b, LinComb<Composition> terms) : basis_(b), terms_(std::move(terms)) {}

    Basis basis() const { return basis_; }
    const LinComb<Composition>& terms() const { return terms_; }
    bool is_zero() const { return terms_.is_zero(); }
    size_t term_count() const { return terms_.term_count(); }
    Int coeff(const Composition& c) const { return terms_.coeff(c); }

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element scaled(Int s) const { return Element(basis_, terms_.scaled(s)); }

    std::string to_string() const;  // e.g. "F(1,2,2) + 2 F(2,2,1)"

    bool operator==(const Element& o) const;
    bool operator!=(const Element& o) const { return !(*this == o); }

private:
    Basis basis_ = Basis::F;
    LinComb<Composition> terms_;
};

Element f_basis(const Composition& c);
Element m_basis(const Composition& c);
Element one();  // F indexed by the empty composition

// Basis change: F_I = sum of M_J over refinements J of I;
// M_I = sum of (-1)^{l(J)-l(I)} F_J over refinements J of I.
Element convert(const Element& a, Basis target);

// Graded commutative product.  Computed on the F basis by lifting each
// composition to a canonical permutation, multiplying the lifts by shifted
// shuffle and reading off descent compositions; M-tagged operands are
// converted, multiplied and converted back.
Element product(const Element& a, const Element& b);

// All permutations sigma with descent composition I; the canonical one used
// by product and the half products.
Permutation canonical_lift(const Composition& c);

// Deconcatenation coproduct on the F basis: Delta F_J sums F_H (x) F_K over
// the |J|+1 ways of writing J = H K or J = H |> K.
Tensor2<Composition, Composition> coproduct(const Element& a);
Element antipode(const Element& a);       // S(F_H) = (-1)^{|H|} F_{conjugate(H)}
Element bar_involution(const Element& a); // index map I -> mirror(I), either tag

// The five half products on the F basis (positive degree on both sides):
//   PrecFirst / SuccFirst: first-letter splitting inherited from words,
//   PrecLast  / SuccLast:  last-letter splitting,
//   Grinberg:              the variant obtained by shifting the left operand.
enum class Half { PrecFirst, SuccFirst, PrecLast, SuccLast, Grinberg };
Element half_product(const Element& a, const Element& b, Half kind);

// F_I . F_J = F_{I concat J} and F_I |> F_J = F_{I near-concat J}, extended
// bilinearly; near_concat_product rejects empty compositions.
Element concat_product(const Element& a, const Element& b);
Element near_concat_product(const Element& a, const Element& b);

// The quasi-differential operator dual to left F_J-multiplication:
// R_J(f) collects the right legs of the coproduct terms whose left leg is J.
Element quasi_diff(const Composition& j, const Element& f);

// f evaluated on a difference of alphabets: pairs (J, K) with coefficient c
// meaning c * F_J(second alphabet) * F_K(first alphabet); the J legs already
// include the antipode sign and conjugation.
Tensor2<Composition, Composition> alphabet_difference(const Element& f);

// PrecFirst computed through the alphabet-difference expansion; an
// independent route used to cross-check the closed formula.
Element prec_first_via_difference(const Element& f, const Element& g);

// Dual immaculate functions by three independent constructions.
enum class DualImmaculateRoute { BarComb, IteratedSucc, Tableaux };
Element dual_immaculate(const Composition& shape, DualImmaculateRoute route);

// One composition per standard immaculate tableau of the given shape: the
// recoil composition of the reading word (rows bottom to top, each left to
// right).  Sorted; repetitions kept.
std::vector<Composition> immaculate_reading_compositions(const Composition& shape);

}  // namespace qsym
}  // namespace freebell

#endif
