#ifndef FREEBELL_BELL_HPP
#define FREEBELL_BELL_HPP

#include <map>
#include <string>

#include "freebell/composition.hpp"
#include "freebell/fqsym.hpp"
#include "freebell/lincomb.hpp"
#include "freebell/qpoly.hpp"
#include "freebell/set_partition.hpp"

namespace freebell {
namespace bell {

// Polynomials in the noncommuting letters Y_1, Y_2, ...: a monomial is the
// composition listing the subscripts in order.
using YPolyZ = LinComb<Composition, Int>;
using YPolyQ = LinComb<Composition, QPoly>;

YPolyQ to_q_coeffs(const YPolyZ& p);

// The two noncommutative Bell polynomials, mirror images of each other:
//   append:  B_{n+1} = sum_k binom(n,k) B_{n-k} Y_{k+1}  (new letter on the right)
//   prepend: B_{n+1} = sum_k binom(n,k) Y_{k+1} B_{n-k}  (new letter on the left)
// The prepend orientation is the partition generating function: its Y^I
// coefficient counts partitions of {1..n} whose block sizes, blocks ordered
// by increasing minimum, spell I.
YPolyZ bell_append(int n);
YPolyZ bell_prepend(int n);

// q-analogues (same orientations; the prepend one is the monomial mirror of
// the append one):
//   append:  B_n(q) = sum_{k<n} q^k qbin(n-1,k) B_k(q) Y_{n-k}
//   prepend: B_n(q) = sum_{k<n} q^k Y_{n-k} qbin(n-1,k) B_k(q)
YPolyQ bell_append_q(int n);
YPolyQ bell_prepend_q(int n);

// Row n of the q-Bell triangle: the sum of all coefficients of the q-Bell
// polynomial (either orientation); specializes to the Bell number at q = 1
// and refines it by the inversion statistic.
QPoly bell_triangle(int n);

// Closed product formula for the coefficient of Y^I in the append-oriented
// q-Bell polynomial:
//   prod_{k=2}^{l(I)} qbin(i_1+...+i_k - 1, i_k - 1) * q^{i_1+...+i_{k-1}}.
QPoly coefficient_formula_q(const Composition& shape);

// The append-oriented q-Bell polynomial computed as a lower-Hessenberg
// quasideterminant path sum with entries a_ij = q^{i-1} qbin(j-1,j-i) Y_{j-i+1}.
YPolyQ quasideterminant_bell_q(int n);

// An element of the free Bell algebra: Y-monomials with coefficients in the
// G basis of free quasisymmetric functions.
class FreeBellElement {
public:
    using Terms = std::map<Composition, fqsym::Element>;

    FreeBellElement() = default;
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    fqsym::Element coeff(const Composition& y) const;
    void add(const Composition& y, const fqsym::Element& v);

    std::string to_string() const;

    bool operator==(const FreeBellElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const FreeBellElement& o) const { return !(*this == o); }

private:
    Terms terms_;
};

// The free Bell polynomial: B_0 = 1 and
//   B_{n+1} = sum_{k=0}^{n} Y_{k+1} S_{k+1} prec B_{n-k},
// with the k = n term read as Y_{n+1} S_{n+1}.  Its Y^I coefficient is the
// iterated half product C_I.
FreeBellElement free_bell(int n);

// C_I = S_{i1} prec (S_{i2} prec (... S_{ir})), in three incarnations:
fqsym::Element c_coefficient_fqsym(const Composition& shape);
qsym::Element c_coefficient_qsym(const Composition& shape);   // its commutative image
QPoly c_coefficient_qpoly(const Composition& shape);          // (q)_n * principal specialization

// Hook-length style product formula for c_coefficient_qpoly over the right
// comb of the shape: [n]_q! * prod_v q^{delta_v} / [h_v]_q (exact division).
QPoly hook_length_c(const Composition& shape);

}  // namespace bell
}  // namespace freebell

#endif
