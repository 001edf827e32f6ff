#ifndef FREEBELL_QPOLY_HPP
#define FREEBELL_QPOLY_HPP

#include <cstdint>
#include <map>
#include <string>

namespace freebell {

using Int = long long;

// Sparse integer polynomial in one variable q.  All arithmetic is exact; the
// internal map never stores zero coefficients, so operator== is structural.
class QPoly {
public:
    QPoly() = default;                     // zero polynomial
    QPoly(Int constant);                   // implicit: embeds integers
    static QPoly q(int exponent = 1);      // the monomial q^exponent
    static QPoly monomial(int exponent, Int coeff);

    bool is_zero() const { return coeffs_.empty(); }
    Int coeff(int exponent) const;
    int degree() const;                    // degree of 0 is -1
    int low_degree() const;                // smallest exponent present, -1 for 0
    Int eval_at_one() const;
    const std::map<int, Int>& coeffs() const { return coeffs_; }

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator-() const;
    QPoly operator*(const QPoly& o) const;
    QPoly& operator*=(const QPoly& o);
    bool operator==(const QPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const QPoly& o) const { return !(*this == o); }
    bool operator<(const QPoly& o) const { return coeffs_ < o.coeffs_; }

    // Exact division: *this = divisor * quotient with no remainder.
    // Returns false (and leaves quotient empty) when the division is inexact.
    bool divide_exact(const QPoly& divisor, QPoly& quotient) const;

    // Canonical rendering, exponents descending: "q^3+2q+1", "-q^2+q", "0".
    std::string to_string() const;
    // Accepts anything to_string produces, plus liberal whitespace/ordering.
    static QPoly parse(const std::string& text);

private:
    void trim();
    std::map<int, Int> coeffs_;            // exponent -> coefficient, no zeros
};

QPoly q_int(int n);          // [n]_q = 1 + q + ... + q^{n-1}
QPoly q_factorial(int n);    // [n]_q!
QPoly q_binomial(int n, int k);
QPoly q_pochhammer(int n);   // (q)_n = (1-q)(1-q^2)...(1-q^n)

}  // namespace freebell

#endif
