#include "freebell/wqsym.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "freebell/qsym.hpp"

namespace freebell {
namespace wqsym {

PackedWord::PackedWord(Word w) : word_(std::move(w)) {
    const int m = word_.max_letter();
    std::vector<bool> seen(static_cast<size_t>(m) + 1, false);
    for (int x : word_) seen[static_cast<size_t>(x)] = true;
    for (int v = 1; v <= m; ++v)
        if (!seen[static_cast<size_t>(v)])
            throw std::invalid_argument("PackedWord: letter set must be {1..m}");
}

PackedWord PackedWord::parse(const std::string& text) { return PackedWord(Word::parse(text)); }

PackedWord pack(const Word& w) {
    std::vector<int> sorted;
    for (int x : w) sorted.push_back(x);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> out;
    out.reserve(w.size());
    for (int x : w) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
        out.push_back(static_cast<int>(it - sorted.begin()) + 1);
    }
    return PackedWord(Word(std::move(out)));
}

Composition evaluation(const PackedWord& u) {
    const int m = u.max_letter();
    std::vector<int> counts(static_cast<size_t>(m), 0);
    for (int x : u.word()) ++counts[static_cast<size_t>(x) - 1];
    return Composition(std::move(counts));
}

namespace {

// Letters of u mapped through the sorted elements of the value set `mask`.
void overlay(const Word& u, unsigned mask, int top, std::vector<int>& out, size_t at) {
    std::vector<int> values;
    for (int v = 1; v <= top; ++v)
        if (mask & (1u << (v - 1))) values.push_back(v);
    for (size_t i = 0; i < u.size(); ++i) out[at + i] = values[static_cast<size_t>(u[i]) - 1];
}

void require_nonempty(const PackedWord& u, const PackedWord& v) {
    if (u.size() == 0 || v.size() == 0)
        throw std::invalid_argument("dendriform product with empty word undefined");
}

enum class MinFilter { All, OnlyPrefix, TouchesSuffix };

MElement convolution_filtered(const PackedWord& u, const PackedWord& v, MinFilter filter) {
    const int a = u.max_letter();
    const int b = v.max_letter();
    const size_t k = u.size();
    MElement out;
    if (k == 0 && v.size() == 0) {
        if (filter == MinFilter::All) out.add(PackedWord(), 1);
        return out;
    }
    // Choose the value alphabets: S1 for the u-part (|S1| = a), S2 for the
    // v-part (|S2| = b), S1 union S2 = {1..m}.
    for (int m = std::max(a, b); m <= a + b; ++m) {
        if (m > 31) throw std::invalid_argument("wqsym: alphabet too large");
        const unsigned full = (1u << m) - 1u;
        for (unsigned s1 = 0; s1 <= full; ++s1) {
            if (std::popcount(s1) != a) continue;
            // S2 must contain the complement of S1; the rest comes from S1.
            const unsigned forced = full & ~s1;
            const int need = b - std::popcount(forced);
            if (need < 0) continue;
            // enumerate subsets t of s1 with popcount == need
            unsigned t = s1;
            // iterate over all submasks of s1 (including 0), standard trick
            for (unsigned sub = s1;; sub = (sub - 1) & s1) {
                if (std::popcount(sub) == need) {
                    const unsigned s2 = forced | sub;
                    std::vector<int> letters(k + v.size());
                    overlay(u.word(), s1, m, letters, 0);
                    overlay(v.word(), s2, m, letters, k);
                    PackedWord w{Word(letters)};
                    bool keep = true;
                    if (filter != MinFilter::All) {
                        bool min_in_suffix = false;
                        for (size_t i = k; i < letters.size(); ++i)
                            if (letters[i] == 1) min_in_suffix = true;
                        keep = (filter == MinFilter::TouchesSuffix) == min_in_suffix;
                    }
                    if (keep) out.add(w, 1);
                }
                if (sub == 0) break;
            }
        }
    }
    return out;
}

}  // namespace

MElement m_convolution(const PackedWord& u, const PackedWord& v) {
    return convolution_filtered(u, v, MinFilter::All);
}

MElement tridendriform_left_min(const PackedWord& u, const PackedWord& v) {
    require_nonempty(u, v);
    return convolution_filtered(u, v, MinFilter::OnlyPrefix);
}

MElement tridendriform_right_min(const PackedWord& u, const PackedWord& v) {
    require_nonempty(u, v);
    return convolution_filtered(u, v, MinFilter::TouchesSuffix);
}

MElement m_product(const MElement& a, const MElement& b) {
    return bilinear_extend(
        [](const PackedWord& u, const PackedWord& v) { return m_convolution(u, v); }, a, b);
}

MElement left_min(const MElement& a, const MElement& b) {
    return bilinear_extend(
        [](const PackedWord& u, const PackedWord& v) { return tridendriform_left_min(u, v); }, a,
        b);
}

MElement right_min(const MElement& a, const MElement& b) {
    return bilinear_extend(
        [](const PackedWord& u, const PackedWord& v) { return tridendriform_right_min(u, v); }, a,
        b);
}

qsym::Element project_to_qsym(const MElement& a) {
    LinComb<Composition> out;
    for (const auto& [u, c] : a.terms()) out.add(evaluation(u), c);
    return qsym::Element(qsym::Basis::M, std::move(out));
}

std::vector<PackedWord> packed_words_of_length(int n) {
    if (n < 0) throw std::invalid_argument("packed_words_of_length: negative length");
    if (n > 7) throw std::invalid_argument("packed_words_of_length: length too large");
    std::vector<PackedWord> out;
    std::vector<int> letters;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(letters.size()) == n) {
            int mx = 0;
            std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
            for (int x : letters) {
                seen[static_cast<size_t>(x)] = true;
                mx = std::max(mx, x);
            }
            for (int k = 1; k <= mx; ++k)
                if (!seen[static_cast<size_t>(k)]) return;
            out.push_back(PackedWord(Word(letters)));
            return;
        }
        for (int x = 1; x <= n; ++x) {
            letters.push_back(x);
            self(self);
            letters.pop_back();
        }
    };
    rec(rec);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace wqsym
}  // namespace freebell
