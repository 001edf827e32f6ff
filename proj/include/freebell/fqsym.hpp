#ifndef FREEBELL_FQSYM_HPP
#define FREEBELL_FQSYM_HPP

#include <string>

#include "freebell/composition.hpp"
#include "freebell/lincomb.hpp"
#include "freebell/word.hpp"

namespace freebell {

namespace qsym {
class Element;
}

namespace fqsym {

enum class Basis { G, F };

// An element of the algebra of free quasisymmetric functions, stored as an
// integer linear combination of permutations tagged with the basis the keys
// refer to.  The two bases are exchanged by inverting every key.
class Element {
public:
    Element() = default;  // zero (basis tag F, irrelevant while zero)
    Element(Basis b, LinComb<Permutation> terms) : basis_(b), terms_(std::move(terms)) {}

    Basis basis() const { return basis_; }
    const LinComb<Permutation>& terms() const { return terms_; }
    bool is_zero() const { return terms_.is_zero(); }
    size_t term_count() const { return terms_.term_count(); }
    Int coeff(const Permutation& p) const { return terms_.coeff(p); }

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element scaled(Int s) const { return Element(basis_, terms_.scaled(s)); }

    // True when every term has the same degree n; the zero element is
    // homogeneous of any degree.
    bool homogeneous(int* degree_out = nullptr) const;

    std::string to_string() const;  // e.g. "G[1243] + 2 G[1324]"

    bool operator==(const Element& o) const;
    bool operator!=(const Element& o) const { return !(*this == o); }

private:
    Basis basis_ = Basis::F;
    LinComb<Permutation> terms_;
};

Element g_basis(const Permutation& p);
Element f_basis(const Permutation& p);
Element s_n(int n);  // the word-sum generator: G indexed by the identity of degree n
Element convert(const Element& a, Basis target);

// The graded product, computed natively in either basis (both operands must
// carry the same tag): convolution of standardization classes in G, shifted
// shuffle in F.
Element product(const Element& a, const Element& b);

// Dendriform splitting of the product.  In the G basis a term survives prec
// when the maximal letter falls in the first block, succ otherwise; in the F
// basis the same two operations read off the last letter.  Both operands
// must be free of degree-0 terms.
Element prec(const Element& a, const Element& b);
Element succ(const Element& a, const Element& b);

// First-letter (primed) splitting; F-tagged operands only.
Element prec_first(const Element& a, const Element& b);
Element succ_first(const Element& a, const Element& b);

// a prec_G b = the first-letter prec of the *shifted* left operand:
// F_sigma prec_G F_tau sums the words sigma[l] prec' tau.  Equals
// succ_first(b, a).  F-tagged operands only.
Element grinberg_prec(const Element& a, const Element& b);

// Deconcatenation-standardization coproduct; F-tagged input.
Tensor2<Permutation, Permutation> coproduct(const Element& a);

// The involutive antiautomorphism keyed by sigma -> omega sigma omega
// (complement then reverse).  The same index map implements both the bar
// involution on the F basis and the Schutzenberger involution on G.
Element bar_antinvolution(const Element& a);
Element schutzenberger_map(const Element& a);

// F_sigma -> F_{C(sigma)}; F-tagged input.
qsym::Element project_to_qsym(const Element& a);

// For homogeneous a of degree n: (q)_n times the principal specialization
// x_i = q^{i-1}/(1-q)-style evaluation; concretely sum of coeff * q^maj of
// the descent composition of the key (of its inverse when G-tagged).
QPoly principal_specialization_times_pochhammer(const Element& a);

// S_{i1} prec (S_{i2} prec (... prec S_{ir})); G-tagged result.  The empty
// composition yields the unit; single parts yield s_n(i1).
Element prec_comb(const Composition& shape);

}  // namespace fqsym
}  // namespace freebell

#endif
