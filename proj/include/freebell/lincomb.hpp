#ifndef FREEBELL_LINCOMB_HPP
#define FREEBELL_LINCOMB_HPP

#include <map>
#include <utility>

#include "freebell/qpoly.hpp"

namespace freebell {

inline bool coeff_is_zero(Int c) { return c == 0; }
inline bool coeff_is_zero(const QPoly& c) { return c.is_zero(); }

// A finitely supported linear combination of basis keys with exact
// coefficients (Int or QPoly).  Zero coefficients are never stored, so
// operator== is structural equality of supports.  Iteration order is the
// key type's operator<, which each key type defines canonically.
template <class Key, class Coeff = Int>
class LinComb {
public:
    using Terms = std::map<Key, Coeff>;

    LinComb() = default;
    static LinComb single(const Key& k, Coeff c = Coeff(1)) {
        LinComb x;
        x.add(k, c);
        return x;
    }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    Coeff coeff(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    void add(const Key& k, const Coeff& c) {
        if (coeff_is_zero(c)) return;
        auto [it, fresh] = terms_.emplace(k, c);
        if (!fresh) {
            it->second = it->second + c;
            if (coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [k, c] : o.terms_) add(k, Coeff(0) - c);
        return *this;
    }
    LinComb operator+(const LinComb& o) const {
        LinComb r = *this;
        r += o;
        return r;
    }
    LinComb operator-(const LinComb& o) const {
        LinComb r = *this;
        r -= o;
        return r;
    }
    LinComb operator-() const {
        LinComb r;
        for (const auto& [k, c] : terms_) r.terms_[k] = Coeff(0) - c;
        return r;
    }

    LinComb scaled(const Coeff& s) const {
        LinComb r;
        if (coeff_is_zero(s)) return r;
        for (const auto& [k, c] : terms_) {
            Coeff p = c * s;
            if (!coeff_is_zero(p)) r.terms_[k] = p;
        }
        return r;
    }

    // Apply a key map (which may merge keys); coefficients are combined.
    template <class F>
    LinComb map_keys(F&& f) const {
        LinComb r;
        for (const auto& [k, c] : terms_) r.add(f(k), c);
        return r;
    }

    bool operator==(const LinComb& o) const { return terms_ == o.terms_; }
    bool operator!=(const LinComb& o) const { return !(*this == o); }

private:
    Terms terms_;
};

// A rank-2 tensor is a linear combination of key pairs.
template <class KeyA, class KeyB, class Coeff = Int>
using Tensor2 = LinComb<std::pair<KeyA, KeyB>, Coeff>;

// Extend a basis-level operation (Key1, Key2) -> LinComb bilinearly.
template <class Op, class Key1, class Key2, class Coeff>
auto bilinear_extend(Op&& op, const LinComb<Key1, Coeff>& a, const LinComb<Key2, Coeff>& b)
    -> decltype(op(std::declval<Key1>(), std::declval<Key2>())) {
    decltype(op(std::declval<Key1>(), std::declval<Key2>())) result;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) result += op(ka, kb).scaled(ca * cb);
    return result;
}

}  // namespace freebell

#endif
