#include "freebell/qsym.hpp"

#include <algorithm>
#include <stdexcept>

#include "freebell/fqsym.hpp"
#include "freebell/set_partition.hpp"

namespace freebell {
namespace qsym {

namespace {

const char* basis_letter(Basis b) { return b == Basis::F ? "F" : "M"; }

void require_same_basis(const Element& a, const Element& b) {
    if (a.is_zero() || b.is_zero()) return;
    if (a.basis() != b.basis())
        throw std::invalid_argument("qsym: operands carry different basis tags");
}

void require_f(const Element& a, const char* op) {
    if (!a.is_zero() && a.basis() != Basis::F)
        throw std::invalid_argument(std::string("qsym: ") + op + " requires F-tagged input");
}

void require_positive_degree(const Element& a) {
    for (const auto& [c, coeff] : a.terms())
        if (c.empty())
            throw std::invalid_argument("dendriform product with empty word undefined");
}

// Product of two F-basis keys via lift and project.
LinComb<Composition> f_key_product(const Composition& a, const Composition& b) {
    LinComb<Composition> out;
    if (a.empty() || b.empty()) {
        out.add(a.empty() ? b : a, 1);
        return out;
    }
    Word u = canonical_lift(a).as_word();
    Word v = canonical_lift(b).as_word().shifted(a.weight());
    for (const Word& w : shuffle(u, v)) out.add(descent_composition(w), 1);
    return out;
}

Element f_element(LinComb<Composition> terms) { return Element(Basis::F, std::move(terms)); }

// concat / near-concat with the empty composition acting as identity; this
// convention is what the coproduct-driven half-product formulas need (the
// public near_concat_product still rejects empty keys).
Composition concat_id(const Composition& a, const Composition& b) { return a.concat(b); }

Composition near_concat_id(const Composition& a, const Composition& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    return a.near_concat(b);
}

Int weight_sign(const Composition& c) { return c.weight() % 2 == 0 ? 1 : -1; }

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

std::string Element::to_string() const {
    if (terms_.is_zero()) return "0";
    std::string out;
    for (const auto& [key, c] : terms_) {
        if (!out.empty()) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        const Int a = c < 0 ? -c : c;
        if (a != 1) out += std::to_string(a) + " ";
        out += std::string(basis_letter(basis_)) + key.to_string();
    }
    return out;
}

bool Element::operator==(const Element& o) const {
    if (terms_.is_zero() && o.terms_.is_zero()) return true;
    return basis_ == o.basis_ && terms_ == o.terms_;
}

Element f_basis(const Composition& c) { return Element(Basis::F, LinComb<Composition>::single(c)); }

Element m_basis(const Composition& c) { return Element(Basis::M, LinComb<Composition>::single(c)); }

Element one() { return f_basis(Composition()); }

Element convert(const Element& a, Basis target) {
    if (a.basis() == target || a.is_zero())
        return a.is_zero() ? Element(target, {}) : a;
    LinComb<Composition> out;
    for (const auto& [key, c] : a.terms()) {
        for (const Composition& j : refinements_of(key)) {
            if (a.basis() == Basis::F) {
                out.add(j, c);  // F_I = sum over refinements of M_J
            } else {
                const Int sign = (j.length() - key.length()) % 2 == 0 ? 1 : -1;
                out.add(j, sign * c);
            }
        }
    }
    return Element(target, std::move(out));
}

Permutation canonical_lift(const Composition& c) {
    // Runs left to right take consecutive decreasing blocks of values, each
    // run increasing: (1,2,2) -> 5,34,12 -> 53412.  Run boundaries are then
    // exactly the descents, so the lift's descent composition is c.
    std::vector<int> values;
    int hi = c.weight();
    for (int k = 0; k < c.length(); ++k) {
        const int len = c[static_cast<size_t>(k)];
        for (int v = hi - len + 1; v <= hi; ++v) values.push_back(v);
        hi -= len;
    }
    return Permutation(std::move(values));
}

Element product(const Element& a, const Element& b) {
    require_same_basis(a, b);
    if (a.is_zero() || b.is_zero()) return Element();
    if (a.basis() == Basis::M) {
        Element r = product(convert(a, Basis::F), convert(b, Basis::F));
        return convert(r, Basis::M);
    }
    return f_element(bilinear_extend(&f_key_product, a.terms(), b.terms()));
}

Tensor2<Composition, Composition> coproduct(const Element& a) {
    require_f(a, "coproduct");
    Tensor2<Composition, Composition> out;
    for (const auto& [key, c] : a.terms()) {
        const auto& parts = key.parts();
        const int r = key.length();
        // J = H K: cut between parts
        for (int t = 0; t <= r; ++t) {
            Composition h(std::vector<int>(parts.begin(), parts.begin() + t));
            Composition k(std::vector<int>(parts.begin() + t, parts.end()));
            out.add({h, k}, c);
        }
        // J = H |> K: split inside part t as x + y with x, y >= 1
        for (int t = 0; t < r; ++t) {
            for (int x = 1; x < parts[static_cast<size_t>(t)]; ++x) {
                std::vector<int> hp(parts.begin(), parts.begin() + t);
                hp.push_back(x);
                std::vector<int> kp;
                kp.push_back(parts[static_cast<size_t>(t)] - x);
                kp.insert(kp.end(), parts.begin() + t + 1, parts.end());
                out.add({Composition(std::move(hp)), Composition(std::move(kp))}, c);
            }
        }
    }
    return out;
}

Element antipode(const Element& a) {
    require_f(a, "antipode");
    LinComb<Composition> out;
    for (const auto& [key, c] : a.terms()) out.add(key.conjugate(), weight_sign(key) * c);
    return f_element(std::move(out));
}

Element bar_involution(const Element& a) {
    return Element(a.basis(),
                   a.terms().map_keys([](const Composition& c) { return c.mirror(); }));
}

Element half_product(const Element& a, const Element& b, Half kind) {
    require_f(a, "half_product");
    require_f(b, "half_product");
    require_positive_degree(a);
    require_positive_degree(b);
    if (a.is_zero() || b.is_zero()) return Element();
    LinComb<Composition> out;
    // Each case is a closed formula through the coproduct of one operand,
    // the antipode, and the (near-)concatenation products.
    switch (kind) {
        case Half::PrecFirst:
            // f prec' g = sum (S(g_(1)) . f) g_(2)
            for (const auto& [hk, c] : coproduct(b)) {
                const auto& [h, k] = hk;
                for (const auto& [l, d] : a.terms()) {
                    LinComb<Composition> left =
                        LinComb<Composition>::single(concat_id(h.conjugate(), l), weight_sign(h));
                    out += bilinear_extend(&f_key_product, left,
                                           LinComb<Composition>::single(k))
                               .scaled(c * d);
                }
            }
            break;
        case Half::SuccFirst:
            // f succ' g = sum (S(f_(1)) |> g) f_(2)
            for (const auto& [hk, c] : coproduct(a)) {
                const auto& [h, k] = hk;
                for (const auto& [l, d] : b.terms()) {
                    LinComb<Composition> left = LinComb<Composition>::single(
                        near_concat_id(h.conjugate(), l), weight_sign(h));
                    out += bilinear_extend(&f_key_product, left,
                                           LinComb<Composition>::single(k))
                               .scaled(c * d);
                }
            }
            break;
        case Half::PrecLast:
            // f prec g = sum g_(1) (f |> S(g_(2)))
            for (const auto& [hk, c] : coproduct(b)) {
                const auto& [h, k] = hk;
                for (const auto& [l, d] : a.terms()) {
                    LinComb<Composition> right = LinComb<Composition>::single(
                        near_concat_id(l, k.conjugate()), weight_sign(k));
                    out += bilinear_extend(&f_key_product,
                                           LinComb<Composition>::single(h), right)
                               .scaled(c * d);
                }
            }
            break;
        case Half::SuccLast:
            // f succ g = sum f_(1) (g . S(f_(2)))
            for (const auto& [hk, c] : coproduct(a)) {
                const auto& [h, k] = hk;
                for (const auto& [l, d] : b.terms()) {
                    LinComb<Composition> right = LinComb<Composition>::single(
                        concat_id(l, k.conjugate()), weight_sign(k));
                    out += bilinear_extend(&f_key_product,
                                           LinComb<Composition>::single(h), right)
                               .scaled(c * d);
                }
            }
            break;
        case Half::Grinberg:
            // f prec_G g = sum g_(2) (S(g_(1)) |> f)
            for (const auto& [hk, c] : coproduct(b)) {
                const auto& [h, k] = hk;
                for (const auto& [l, d] : a.terms()) {
                    LinComb<Composition> right = LinComb<Composition>::single(
                        near_concat_id(h.conjugate(), l), weight_sign(h));
                    out += bilinear_extend(&f_key_product,
                                           LinComb<Composition>::single(k), right)
                               .scaled(c * d);
                }
            }
            break;
    }
    return f_element(std::move(out));
}

Element concat_product(const Element& a, const Element& b) {
    require_f(a, "concat_product");
    require_f(b, "concat_product");
    LinComb<Composition> out;
    for (const auto& [i, c] : a.terms())
        for (const auto& [j, d] : b.terms()) out.add(i.concat(j), c * d);
    return f_element(std::move(out));
}

Element near_concat_product(const Element& a, const Element& b) {
    require_f(a, "near_concat_product");
    require_f(b, "near_concat_product");
    LinComb<Composition> out;
    for (const auto& [i, c] : a.terms())
        for (const auto& [j, d] : b.terms()) out.add(i.near_concat(j), c * d);
    return f_element(std::move(out));
}

Element quasi_diff(const Composition& j, const Element& f) {
    require_f(f, "quasi_diff");
    LinComb<Composition> out;
    for (const auto& [hk, c] : coproduct(f))
        if (hk.first == j) out.add(hk.second, c);
    return f_element(std::move(out));
}

Tensor2<Composition, Composition> alphabet_difference(const Element& f) {
    require_f(f, "alphabet_difference");
    Tensor2<Composition, Composition> out;
    for (const auto& [hk, c] : coproduct(f))
        out.add({hk.first.conjugate(), hk.second}, weight_sign(hk.first) * c);
    return out;
}

Element prec_first_via_difference(const Element& f, const Element& g) {
    require_f(f, "prec_first_via_difference");
    require_f(g, "prec_first_via_difference");
    require_positive_degree(f);
    require_positive_degree(g);
    // Substitute the second alphabet legs of g(X-Y) with f placed to their
    // right (concatenation on the Y side), then collapse Y back onto X.
    LinComb<Composition> out;
    for (const auto& [jk, c] : alphabet_difference(g)) {
        const auto& [j, k] = jk;
        for (const auto& [l, d] : f.terms()) {
            out += bilinear_extend(&f_key_product,
                                   LinComb<Composition>::single(j.concat(l)),
                                   LinComb<Composition>::single(k))
                       .scaled(c * d);
        }
    }
    return f_element(std::move(out));
}

std::vector<Composition> immaculate_reading_compositions(const Composition& shape) {
    std::vector<Composition> out;
    const int n = shape.weight();
    if (n == 0) return out;
    for (const SetPartition& p : set_partitions_of(n)) {
        const auto rows = p.blocks_by_min();
        if (static_cast<int>(rows.size()) != shape.length()) continue;
        bool match = true;
        for (size_t i = 0; i < rows.size(); ++i)
            if (static_cast<int>(rows[i].size()) != shape[i]) match = false;
        if (!match) continue;
        // reading word: rows bottom to top, each left to right
        std::vector<int> reading;
        for (auto it = rows.rbegin(); it != rows.rend(); ++it)
            reading.insert(reading.end(), it->begin(), it->end());
        out.push_back(recoil_composition(Permutation(std::move(reading))));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Element dual_immaculate(const Composition& shape, DualImmaculateRoute route) {
    if (shape.empty()) return one();
    switch (route) {
        case DualImmaculateRoute::BarComb: {
            fqsym::Element comb = fqsym::prec_comb(shape);
            return bar_involution(
                fqsym::project_to_qsym(fqsym::convert(comb, fqsym::Basis::F)));
        }
        case DualImmaculateRoute::IteratedSucc: {
            const auto& parts = shape.parts();
            Element acc = f_basis(Composition({parts.back()}));
            for (int j = shape.length() - 2; j >= 0; --j)
                acc = half_product(acc, f_basis(Composition({parts[static_cast<size_t>(j)]})),
                                   Half::SuccFirst);
            return acc;
        }
        case DualImmaculateRoute::Tableaux: {
            LinComb<Composition> out;
            for (const Composition& d : immaculate_reading_compositions(shape)) out.add(d, 1);
            return f_element(std::move(out));
        }
    }
    throw std::logic_error("dual_immaculate: unknown route");
}

}  // namespace qsym
}  // namespace freebell
