#include "freebell/bell.hpp"

#include <stdexcept>
#include <vector>

#include "freebell/binary_tree.hpp"
#include "freebell/qsym.hpp"

namespace freebell {
namespace bell {

namespace {

Int binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Composition prepend_part(int part, const Composition& c) {
    std::vector<int> p;
    p.reserve(c.parts().size() + 1);
    p.push_back(part);
    p.insert(p.end(), c.parts().begin(), c.parts().end());
    return Composition(std::move(p));
}

Composition append_part(const Composition& c, int part) {
    std::vector<int> p = c.parts();
    p.push_back(part);
    return Composition(std::move(p));
}

void require_small(int n, const char* op) {
    if (n < 0) throw std::invalid_argument(std::string(op) + ": negative degree");
    if (n > 20) throw std::invalid_argument(std::string(op) + ": degree too large");
}

}  // namespace

YPolyQ to_q_coeffs(const YPolyZ& p) {
    YPolyQ out;
    for (const auto& [k, c] : p.terms()) out.add(k, QPoly(c));
    return out;
}

YPolyZ bell_append(int n) {
    require_small(n, "bell_append");
    std::vector<YPolyZ> b(static_cast<size_t>(n) + 1);
    b[0] = YPolyZ::single(Composition());
    for (int m = 0; m < n; ++m) {
        // B_{m+1} = sum_k binom(m,k) B_{m-k} Y_{k+1}
        YPolyZ next;
        for (int k = 0; k <= m; ++k) {
            const Int c = binom(m, k);
            for (const auto& [mono, coeff] : b[static_cast<size_t>(m - k)].terms())
                next.add(append_part(mono, k + 1), c * coeff);
        }
        b[static_cast<size_t>(m) + 1] = std::move(next);
    }
    return b[static_cast<size_t>(n)];
}

YPolyZ bell_prepend(int n) {
    require_small(n, "bell_prepend");
    std::vector<YPolyZ> b(static_cast<size_t>(n) + 1);
    b[0] = YPolyZ::single(Composition());
    for (int m = 0; m < n; ++m) {
        YPolyZ next;
        for (int k = 0; k <= m; ++k) {
            const Int c = binom(m, k);
            for (const auto& [mono, coeff] : b[static_cast<size_t>(m - k)].terms())
                next.add(prepend_part(k + 1, mono), c * coeff);
        }
        b[static_cast<size_t>(m) + 1] = std::move(next);
    }
    return b[static_cast<size_t>(n)];
}

YPolyQ bell_append_q(int n) {
    require_small(n, "bell_append_q");
    std::vector<YPolyQ> b(static_cast<size_t>(n) + 1);
    b[0] = YPolyQ::single(Composition(), QPoly(1));
    for (int m = 1; m <= n; ++m) {
        // B_m(q) = sum_{k=0}^{m-1} q^k qbin(m-1,k) B_k(q) Y_{m-k}
        YPolyQ next;
        for (int k = 0; k < m; ++k) {
            const QPoly c = QPoly::q(k) * q_binomial(m - 1, k);
            for (const auto& [mono, coeff] : b[static_cast<size_t>(k)].terms())
                next.add(append_part(mono, m - k), c * coeff);
        }
        b[static_cast<size_t>(m)] = std::move(next);
    }
    return b[static_cast<size_t>(n)];
}

YPolyQ bell_prepend_q(int n) {
    require_small(n, "bell_prepend_q");
    std::vector<YPolyQ> b(static_cast<size_t>(n) + 1);
    b[0] = YPolyQ::single(Composition(), QPoly(1));
    for (int m = 1; m <= n; ++m) {
        YPolyQ next;
        for (int k = 0; k < m; ++k) {
            const QPoly c = QPoly::q(k) * q_binomial(m - 1, k);
            for (const auto& [mono, coeff] : b[static_cast<size_t>(k)].terms())
                next.add(prepend_part(m - k, mono), c * coeff);
        }
        b[static_cast<size_t>(m)] = std::move(next);
    }
    return b[static_cast<size_t>(n)];
}

QPoly bell_triangle(int n) {
    QPoly out;
    const YPolyQ rows = bell_prepend_q(n);
    for (const auto& [mono, coeff] : rows.terms()) out += coeff;
    return out;
}

QPoly coefficient_formula_q(const Composition& shape) {
    QPoly out(1);
    int partial = shape.length() ? shape[0] : 0;
    for (int k = 2; k <= shape.length(); ++k) {
        const int ik = shape[static_cast<size_t>(k) - 1];
        out *= q_binomial(partial + ik - 1, ik - 1) * QPoly::q(partial);
        partial += ik;
    }
    return out;
}

YPolyQ quasideterminant_bell_q(int n) {
    require_small(n, "quasideterminant_bell_q");
    YPolyQ out;
    if (n == 0) {
        out.add(Composition(), QPoly(1));
        return out;
    }
    // Path sum over 1 = i_1 < i_2 < ... < i_k <= n: the entry walked from
    // row i to column j contributes q^{i-1} qbin(j-1, j-i) Y_{j-i+1}.
    const unsigned top = n >= 1 ? (1u << (n - 1)) : 1u;  // subsets of {2..n}
    for (unsigned mask = 0; mask < top; ++mask) {
        std::vector<int> chain{1};
        for (int v = 2; v <= n; ++v)
            if (mask & (1u << (v - 2))) chain.push_back(v);
        chain.push_back(n + 1);  // sentinel: final step runs to column n
        QPoly coeff(1);
        std::vector<int> parts;
        for (size_t t = 0; t + 1 < chain.size(); ++t) {
            const int i = chain[t];
            const int j = chain[t + 1] - 1;  // column of this step
            coeff *= QPoly::q(i - 1) * q_binomial(j - 1, j - i);
            parts.push_back(j - i + 1);
        }
        out.add(Composition(std::move(parts)), coeff);
    }
    return out;
}

fqsym::Element FreeBellElement::coeff(const Composition& y) const {
    auto it = terms_.find(y);
    return it == terms_.end() ? fqsym::Element() : it->second;
}

void FreeBellElement::add(const Composition& y, const fqsym::Element& v) {
    if (v.is_zero()) return;
    auto [it, fresh] = terms_.emplace(y, v);
    if (!fresh) {
        it->second = it->second + v;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::string FreeBellElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [y, v] : terms_) {
        if (!out.empty()) out += " + ";
        std::string mono = "Y";
        bool digits = true;
        for (int p : y.parts())
            if (p > 9) digits = false;
        for (size_t i = 0; i < y.parts().size(); ++i) {
            if (!digits && i) mono += ",";
            mono += digits ? std::string(1, static_cast<char>('0' + y.parts()[i]))
                           : std::to_string(y.parts()[i]);
        }
        out += mono + " (" + v.to_string() + ")";
    }
    return out;
}

FreeBellElement free_bell(int n) {
    require_small(n, "free_bell");
    std::vector<FreeBellElement> b(static_cast<size_t>(n) + 1);
    b[0].add(Composition(), fqsym::g_basis(Permutation()));
    for (int m = 0; m < n; ++m) {
        FreeBellElement next;
        for (int k = 0; k <= m; ++k) {
            const fqsym::Element s = fqsym::s_n(k + 1);
            for (const auto& [y, v] : b[static_cast<size_t>(m - k)].terms()) {
                // k = m reads as Y_{m+1} S_{m+1}: prec against the unit is
                // the element itself.
                fqsym::Element c = (m - k == 0) ? s : fqsym::prec(s, v);
                next.add(prepend_part(k + 1, y), c);
            }
        }
        b[static_cast<size_t>(m) + 1] = std::move(next);
    }
    return b[static_cast<size_t>(n)];
}

fqsym::Element c_coefficient_fqsym(const Composition& shape) {
    return fqsym::prec_comb(shape);
}

qsym::Element c_coefficient_qsym(const Composition& shape) {
    return fqsym::project_to_qsym(fqsym::convert(c_coefficient_fqsym(shape), fqsym::Basis::F));
}

QPoly c_coefficient_qpoly(const Composition& shape) {
    return fqsym::principal_specialization_times_pochhammer(c_coefficient_fqsym(shape));
}

QPoly hook_length_c(const Composition& shape) {
    const int n = shape.weight();
    const BinaryTree comb = right_comb(shape);
    int delta_sum = 0;
    for (int d : comb.right_subtree_sizes()) delta_sum += d;
    QPoly numerator = q_factorial(n) * QPoly::q(delta_sum);
    QPoly denominator(1);
    for (int h : comb.subtree_sizes()) denominator *= q_int(h);
    QPoly quotient;
    if (!numerator.divide_exact(denominator, quotient))
        throw std::logic_error("hook_length_c: hook product does not divide exactly");
    return quotient;
}

}  // namespace bell
}  // namespace freebell
