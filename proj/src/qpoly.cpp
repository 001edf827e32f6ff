#include "freebell/qpoly.hpp"

#include <cctype>
#include <stdexcept>

namespace freebell {

QPoly::QPoly(Int constant) {
    if (constant != 0) coeffs_[0] = constant;
}

QPoly QPoly::q(int exponent) { return monomial(exponent, 1); }

QPoly QPoly::monomial(int exponent, Int coeff) {
    QPoly p;
    if (coeff != 0) p.coeffs_[exponent] = coeff;
    return p;
}

Int QPoly::coeff(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? 0 : it->second;
}

int QPoly::degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

int QPoly::low_degree() const { return coeffs_.empty() ? -1 : coeffs_.begin()->first; }

Int QPoly::eval_at_one() const {
    Int s = 0;
    for (const auto& [e, c] : coeffs_) s += c;
    return s;
}

void QPoly::trim() {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->second == 0)
            it = coeffs_.erase(it);
        else
            ++it;
    }
}

QPoly& QPoly::operator+=(const QPoly& o) {
    for (const auto& [e, c] : o.coeffs_) coeffs_[e] += c;
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    for (const auto& [e, c] : o.coeffs_) coeffs_[e] -= c;
    trim();
    return *this;
}

QPoly QPoly::operator+(const QPoly& o) const {
    QPoly r = *this;
    r += o;
    return r;
}

QPoly QPoly::operator-(const QPoly& o) const {
    QPoly r = *this;
    r -= o;
    return r;
}

QPoly QPoly::operator-() const {
    QPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
}

QPoly QPoly::operator*(const QPoly& o) const {
    QPoly r;
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : o.coeffs_) r.coeffs_[e1 + e2] += c1 * c2;
    r.trim();
    return r;
}

QPoly& QPoly::operator*=(const QPoly& o) { return *this = *this * o; }

bool QPoly::divide_exact(const QPoly& divisor, QPoly& quotient) const {
    quotient = QPoly();
    if (divisor.is_zero()) return false;
    QPoly rem = *this;
    const int dd = divisor.degree();
    const Int dl = divisor.coeffs_.rbegin()->second;
    while (!rem.is_zero()) {
        const int rd = rem.degree();
        if (rd < dd) return false;
        const Int rl = rem.coeffs_.rbegin()->second;
        if (rl % dl != 0) return false;
        QPoly m = monomial(rd - dd, rl / dl);
        quotient += m;
        rem -= divisor * m;
    }
    return true;
}

std::string QPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const int e = it->first;
        const Int c = it->second;
        if (!out.empty()) out += (c > 0 ? "+" : "-");
        else if (c < 0) out += "-";
        const Int a = c > 0 ? c : -c;
        if (e == 0) {
            out += std::to_string(a);
        } else {
            if (a != 1) out += std::to_string(a);
            out += "q";
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

QPoly QPoly::parse(const std::string& text) {
    QPoly result;
    size_t i = 0;
    const size_t n = text.size();
    auto skip_ws = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i == n) throw std::invalid_argument("QPoly::parse: empty input");
    bool first = true;
    while (true) {
        skip_ws();
        if (i == n) break;
        Int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            if (text[i] == '-') sign = -1;
            ++i;
            skip_ws();
        } else if (!first) {
            throw std::invalid_argument("QPoly::parse: expected '+' or '-' in \"" + text + "\"");
        }
        first = false;
        Int coeff = 1;
        bool saw_digits = false;
        if (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
            coeff = 0;
            while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
                coeff = coeff * 10 + (text[i] - '0');
                ++i;
            }
            saw_digits = true;
        }
        skip_ws();
        if (i < n && text[i] == '*') {
            ++i;
            skip_ws();
        }
        int expo = 0;
        if (i < n && text[i] == 'q') {
            ++i;
            expo = 1;
            if (i < n && text[i] == '^') {
                ++i;
                skip_ws();
                if (i == n || !std::isdigit(static_cast<unsigned char>(text[i])))
                    throw std::invalid_argument("QPoly::parse: bad exponent in \"" + text + "\"");
                expo = 0;
                while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
                    expo = expo * 10 + (text[i] - '0');
                    ++i;
                }
            }
        } else if (!saw_digits) {
            throw std::invalid_argument("QPoly::parse: expected term in \"" + text + "\"");
        }
        result += monomial(expo, sign * coeff);
    }
    return result;
}

QPoly q_int(int n) {
    if (n < 0) throw std::invalid_argument("q_int: negative argument");
    QPoly p;
    for (int e = 0; e < n; ++e) p += QPoly::q(e);
    return p;
}

QPoly q_factorial(int n) {
    if (n < 0) throw std::invalid_argument("q_factorial: negative argument");
    QPoly p(1);
    for (int k = 1; k <= n; ++k) p *= q_int(k);
    return p;
}

QPoly q_binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n)
        throw std::invalid_argument("q_binomial: require 0 <= k <= n");
    // Pascal recursion [n,k] = [n-1,k-1] + q^k [n-1,k]: stays in Z[q] throughout.
    std::map<int, QPoly> row;  // k -> [m, k] for the current m
    row[0] = QPoly(1);
    for (int m = 1; m <= n; ++m) {
        std::map<int, QPoly> next;
        next[0] = QPoly(1);
        for (int j = 1; j <= std::min(m, k); ++j) {
            QPoly v;
            if (row.count(j - 1)) v += row[j - 1];
            if (row.count(j)) v += QPoly::q(j) * row[j];
            next[j] = v;
        }
        row = std::move(next);
    }
    return row[k];
}

QPoly q_pochhammer(int n) {
    if (n < 0) throw std::invalid_argument("q_pochhammer: negative argument");
    QPoly p(1);
    for (int k = 1; k <= n; ++k) p *= (QPoly(1) - QPoly::q(k));
    return p;
}

}  // namespace freebell
