#include "freebell/fqsym.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "freebell/qsym.hpp"

namespace freebell {
namespace fqsym {

namespace {

const char* basis_letter(Basis b) { return b == Basis::G ? "G" : "F"; }

void require_same_basis(const Element& a, const Element& b) {
    if (a.is_zero() || b.is_zero()) return;
    if (a.basis() != b.basis())
        throw std::invalid_argument("fqsym: operands carry different basis tags");
}

void require_basis(const Element& a, Basis b, const char* op) {
    if (!a.is_zero() && a.basis() != b)
        throw std::invalid_argument(std::string("fqsym: ") + op + " requires " +
                                    basis_letter(b) + "-tagged input");
}

void require_positive_degree(const Element& a) {
    for (const auto& [p, c] : a.terms())
        if (p.empty())
            throw std::invalid_argument("dendriform product with empty word undefined");
    if (a.is_zero()) return;
}

// Overlay the pattern alpha onto the value set encoded by mask (bit v-1 set
// means value v is used), appending the letters to out.
void overlay(const Permutation& alpha, unsigned mask, int top, std::vector<int>& out) {
    std::vector<int> values;
    for (int v = 1; v <= top; ++v)
        if (mask & (1u << (v - 1))) values.push_back(v);
    for (size_t i = 0; i < alpha.size(); ++i) out.push_back(values[alpha[i] - 1]);
}

enum class ConvolutionFilter { All, MaxInPrefix, MaxInSuffix };

// gamma = uv with Std(u) = alpha, Std(v) = beta; one term per choice of the
// value set supporting u.
LinComb<Permutation> convolution(const Permutation& alpha, const Permutation& beta,
                                 ConvolutionFilter filter) {
    const int k = static_cast<int>(alpha.size());
    const int n = k + static_cast<int>(beta.size());
    LinComb<Permutation> out;
    const unsigned full = n >= 32 ? 0u : ((1u << n) - 1u);
    if (n >= 32) throw std::invalid_argument("fqsym: degree too large");
    for (unsigned mask = 0; mask <= full; ++mask) {
        if (std::popcount(mask) != k) continue;
        if (filter == ConvolutionFilter::MaxInPrefix && !(mask & (1u << (n - 1)))) continue;
        if (filter == ConvolutionFilter::MaxInSuffix && (n > 0) && (mask & (1u << (n - 1))))
            continue;
        std::vector<int> letters;
        letters.reserve(n);
        overlay(alpha, mask, n, letters);
        overlay(beta, full & ~mask, n, letters);
        out.add(Permutation(std::move(letters)), 1);
        if (full == 0) break;  // n == 0: only the empty mask
    }
    return out;
}

Permutation word_to_perm(const Word& w) { return Permutation(w.letters()); }

// Sum of permutations from a word-level multiset.
LinComb<Permutation> from_words(const std::vector<Word>& words) {
    LinComb<Permutation> out;
    for (const Word& w : words) out.add(word_to_perm(w), 1);
    return out;
}

using WordOp = std::vector<Word> (*)(const Word&, const Word&);

// F-basis bilinear word operation on (alpha, beta[k]).
Element f_word_op(const Element& a, const Element& b, WordOp op) {
    LinComb<Permutation> out;
    for (const auto& [alpha, ca] : a.terms()) {
        for (const auto& [beta, cb] : b.terms()) {
            Word u = alpha.as_word();
            Word v = beta.as_word().shifted(static_cast<int>(alpha.size()));
            for (const Word& w : op(u, v)) out.add(word_to_perm(w), ca * cb);
        }
    }
    return Element(Basis::F, std::move(out));
}

}  // namespace

Element Element::operator+(const Element& o) const {
    require_same_basis(*this, o);
    Basis b = is_zero() ? o.basis_ : basis_;
    return Element(b, terms_ + o.terms_);
}

Element Element::operator-(const Element& o) const {
    require_same_basis(*this, o);
    Basis b = is_zero() ? o.basis_ : basis_;
    return Element(b, terms_ - o.terms_);
}

bool Element::homogeneous(int* degree_out) const {
    int deg = -1;
    for (const auto& [p, c] : terms_) {
        if (deg == -1) deg = static_cast<int>(p.size());
        else if (deg != static_cast<int>(p.size())) return false;
    }
    if (degree_out) *degree_out = deg;
    return true;
}

std::string Element::to_string() const {
    if (terms_.is_zero()) return "0";
    std::string out;
    for (const auto& [p, c] : terms_) {
        if (!out.empty()) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        const Int a = c < 0 ? -c : c;
        if (a != 1) out += std::to_string(a) + " ";
        out += std::string(basis_letter(basis_)) + "[" + p.to_string() + "]";
    }
    return out;
}

bool Element::operator==(const Element& o) const {
    if (terms_.is_zero() && o.terms_.is_zero()) return true;
    return basis_ == o.basis_ && terms_ == o.terms_;
}

Element g_basis(const Permutation& p) { return Element(Basis::G, LinComb<Permutation>::single(p)); }

Element f_basis(const Permutation& p) { return Element(Basis::F, LinComb<Permutation>::single(p)); }

Element s_n(int n) {
    if (n < 0) throw std::invalid_argument("s_n: negative degree");
    return g_basis(Permutation::identity(n));
}

Element convert(const Element& a, Basis target) {
    if (a.basis() == target || a.is_zero())
        return a.is_zero() ? Element(target, {}) : a;
    return Element(target, a.terms().map_keys([](const Permutation& p) { return p.inverse(); }));
}

Element product(const Element& a, const Element& b) {
    require_same_basis(a, b);
    if (a.is_zero() || b.is_zero()) return Element();
    if (a.basis() == Basis::G) {
        LinComb<Permutation> out;
        for (const auto& [alpha, ca] : a.terms())
            for (const auto& [beta, cb] : b.terms())
                out += convolution(alpha, beta, ConvolutionFilter::All).scaled(ca * cb);
        return Element(Basis::G, std::move(out));
    }
    // F basis: shifted shuffle.  Empty operand keys act as the unit.
    LinComb<Permutation> out;
    for (const auto& [alpha, ca] : a.terms()) {
        for (const auto& [beta, cb] : b.terms()) {
            if (alpha.empty() || beta.empty()) {
                out.add(alpha.empty() ? beta : alpha, ca * cb);
                continue;
            }
            Word u = alpha.as_word();
            Word v = beta.as_word().shifted(static_cast<int>(alpha.size()));
            for (const Word& w : shuffle(u, v)) out.add(word_to_perm(w), ca * cb);
        }
    }
    return Element(Basis::F, std::move(out));
}

Element prec(const Element& a, const Element& b) {
    require_same_basis(a, b);
    require_positive_degree(a);
    require_positive_degree(b);
    if (a.is_zero() || b.is_zero()) return Element();
    if (a.basis() == Basis::G) {
        LinComb<Permutation> out;
        for (const auto& [alpha, ca] : a.terms())
            for (const auto& [beta, cb] : b.terms())
                out += convolution(alpha, beta, ConvolutionFilter::MaxInPrefix).scaled(ca * cb);
        return Element(Basis::G, std::move(out));
    }
    return f_word_op(a, b, &shuffle_prec_last);
}

Element succ(const Element& a, const Element& b) {
    require_same_basis(a, b);
    require_positive_degree(a);
    require_positive_degree(b);
    if (a.is_zero() || b.is_zero()) return Element();
    if (a.basis() == Basis::G) {
        LinComb<Permutation> out;
        for (const auto& [alpha, ca] : a.terms())
            for (const auto& [beta, cb] : b.terms())
                out += convolution(alpha, beta, ConvolutionFilter::MaxInSuffix).scaled(ca * cb);
        return Element(Basis::G, std::move(out));
    }
    return f_word_op(a, b, &shuffle_succ_last);
}

Element prec_first(const Element& a, const Element& b) {
    require_basis(a, Basis::F, "prec_first");
    require_basis(b, Basis::F, "prec_first");
    require_positive_degree(a);
    require_positive_degree(b);
    if (a.is_zero() || b.is_zero()) return Element();
    return f_word_op(a, b, &shuffle_prec_first);
}

Element succ_first(const Element& a, const Element& b) {
    require_basis(a, Basis::F, "succ_first");
    require_basis(b, Basis::F, "succ_first");
    require_positive_degree(a);
    require_positive_degree(b);
    if (a.is_zero() || b.is_zero()) return Element();
    return f_word_op(a, b, &shuffle_succ_first);
}

Element grinberg_prec(const Element& a, const Element& b) {
    require_basis(a, Basis::F, "grinberg_prec");
    require_basis(b, Basis::F, "grinberg_prec");
    require_positive_degree(a);
    require_positive_degree(b);
    if (a.is_zero() || b.is_zero()) return Element();
    // sigma[l] prec' tau: shift the *left* operand by the right degree
    LinComb<Permutation> out;
    for (const auto& [alpha, ca] : a.terms()) {
        for (const auto& [beta, cb] : b.terms()) {
            Word u = alpha.as_word().shifted(static_cast<int>(beta.size()));
            Word v = beta.as_word();
            for (const Word& w : shuffle_prec_first(u, v)) out.add(word_to_perm(w), ca * cb);
        }
    }
    return Element(Basis::F, std::move(out));
}

Tensor2<Permutation, Permutation> coproduct(const Element& a) {
    require_basis(a, Basis::F, "coproduct");
    Tensor2<Permutation, Permutation> out;
    for (const auto& [p, c] : a.terms()) {
        const Word w = p.as_word();
        for (size_t cut = 0; cut <= p.size(); ++cut) {
            Permutation left = standardize(w.subword(0, cut));
            Permutation right = standardize(w.subword(cut, p.size() - cut));
            out.add({left, right}, c);
        }
    }
    return out;
}

Element bar_antinvolution(const Element& a) {
    return Element(a.basis(),
                   a.terms().map_keys([](const Permutation& p) { return p.schutzenberger(); }));
}

Element schutzenberger_map(const Element& a) { return bar_antinvolution(a); }

qsym::Element project_to_qsym(const Element& a) {
    require_basis(a, Basis::F, "project_to_qsym");
    LinComb<Composition> out;
    for (const auto& [p, c] : a.terms()) out.add(descent_composition(p), c);
    return qsym::Element(qsym::Basis::F, std::move(out));
}

QPoly principal_specialization_times_pochhammer(const Element& a) {
    int deg = -1;
    if (!a.homogeneous(&deg))
        throw std::invalid_argument("principal specialization requires homogeneous input");
    QPoly out;
    for (const auto& [p, c] : a.terms()) {
        const int m = a.basis() == Basis::G ? p.inverse().maj() : p.maj();
        out += QPoly::monomial(m, c);
    }
    return out;
}

Element prec_comb(const Composition& shape) {
    if (shape.empty()) return g_basis(Permutation());
    Element acc = s_n(shape[shape.parts().size() - 1]);
    for (int k = shape.length() - 2; k >= 0; --k)
        acc = prec(s_n(shape[static_cast<size_t>(k)]), acc);
    return acc;
}

}  // namespace fqsym
}  // namespace freebell
