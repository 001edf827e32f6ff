#include "freebell/composition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace freebell {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 1) throw std::invalid_argument("Composition: parts must be positive");
}

Composition Composition::parse(const std::string& text) {
    std::string body = text;
    if (!body.empty() && body.front() == '(') {
        if (body.back() != ')')
            throw std::invalid_argument("Composition::parse: unbalanced parentheses in \"" + text + "\"");
        body = body.substr(1, body.size() - 2);
    }
    if (body.empty()) return Composition();
    return Composition(Word::parse(body).letters());
}

int Composition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Composition Composition::mirror() const {
    std::vector<int> r(parts_.rbegin(), parts_.rend());
    return Composition(std::move(r));
}

std::vector<int> Composition::descent_set() const {
    std::vector<int> d;
    int s = 0;
    for (size_t i = 0; i + 1 < parts_.size(); ++i) {
        s += parts_[i];
        d.push_back(s);
    }
    return d;
}

Composition Composition::from_descent_set(const std::vector<int>& descents, int n) {
    if (n < 0) throw std::invalid_argument("from_descent_set: negative weight");
    if (n == 0) {
        if (!descents.empty()) throw std::invalid_argument("from_descent_set: descents of empty word");
        return Composition();
    }
    std::vector<int> parts;
    int prev = 0;
    for (int d : descents) {
        if (d <= prev || d >= n)
            throw std::invalid_argument("from_descent_set: descents must be ascending in 1..n-1");
        parts.push_back(d - prev);
        prev = d;
    }
    parts.push_back(n - prev);
    return Composition(std::move(parts));
}

Composition Composition::conjugate() const {
    const int n = weight();
    std::vector<int> des = descent_set();
    std::vector<int> comp;
    for (int d = 1; d < n; ++d)
        if (!std::binary_search(des.begin(), des.end(), d)) comp.push_back(n - d);
    std::sort(comp.begin(), comp.end());
    return from_descent_set(comp, n);
}

int Composition::maj() const {
    int s = 0;
    for (int d : descent_set()) s += d;
    return s;
}

Composition Composition::concat(const Composition& o) const {
    std::vector<int> r = parts_;
    r.insert(r.end(), o.parts_.begin(), o.parts_.end());
    return Composition(std::move(r));
}

Composition Composition::near_concat(const Composition& o) const {
    if (parts_.empty() || o.parts_.empty())
        throw std::invalid_argument("near_concat: empty composition");
    std::vector<int> r = parts_;
    r.back() += o.parts_.front();
    r.insert(r.end(), o.parts_.begin() + 1, o.parts_.end());
    return Composition(std::move(r));
}

std::string Composition::to_string() const {
    std::string out = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    out += ")";
    return out;
}

bool Composition::operator<(const Composition& o) const {
    const int w1 = weight(), w2 = o.weight();
    if (w1 != w2) return w1 < w2;
    // lexicographically larger part lists come first within a weight
    return std::lexicographical_compare(o.parts_.begin(), o.parts_.end(),
                                        parts_.begin(), parts_.end());
}

Composition descent_composition(const Word& w) {
    std::vector<int> des;
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) des.push_back(static_cast<int>(i) + 1);
    return Composition::from_descent_set(des, static_cast<int>(w.size()));
}

Composition descent_composition(const Permutation& p) { return descent_composition(p.as_word()); }

Composition recoil_composition(const Permutation& p) { return descent_composition(p.inverse()); }

std::vector<Composition> compositions_of(int n) {
    if (n < 0) throw std::invalid_argument("compositions_of: negative weight");
    std::vector<Composition> out;
    if (n == 0) {
        out.push_back(Composition());
        return out;
    }
    // subsets of {1..n-1} as descent sets
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> des;
        for (int d = 1; d < n; ++d)
            if (mask & (1u << (d - 1))) des.push_back(d);
        out.push_back(Composition::from_descent_set(des, n));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool refines(const Composition& fine, const Composition& coarse) {
    if (fine.weight() != coarse.weight()) return false;
    std::vector<int> df = fine.descent_set();
    for (int d : coarse.descent_set())
        if (!std::binary_search(df.begin(), df.end(), d)) return false;
    return true;
}

std::vector<Composition> refinements_of(const Composition& coarse) {
    std::vector<Composition> out;
    for (const Composition& j : compositions_of(coarse.weight()))
        if (refines(j, coarse)) out.push_back(j);
    return out;
}

}  // namespace freebell
