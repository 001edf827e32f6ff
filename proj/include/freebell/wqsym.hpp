#ifndef FREEBELL_WQSYM_HPP
#define FREEBELL_WQSYM_HPP

#include <string>

#include "freebell/composition.hpp"
#include "freebell/lincomb.hpp"
#include "freebell/word.hpp"

namespace freebell {

namespace qsym {
class Element;
}

namespace wqsym {

// A packed word: a word whose letter set is exactly {1..m} for some m >= 0.
class PackedWord {
public:
    PackedWord() = default;  // the empty word
    explicit PackedWord(Word w);
    static PackedWord parse(const std::string& text);

    const Word& word() const { return word_; }
    size_t size() const { return word_.size(); }
    int max_letter() const { return word_.max_letter(); }
    std::string to_string() const { return word_.to_string(); }

    bool operator==(const PackedWord& o) const { return word_ == o.word_; }
    bool operator!=(const PackedWord& o) const { return !(*this == o); }
    bool operator<(const PackedWord& o) const { return word_ < o.word_; }

private:
    Word word_;
};

// Replace the letters of w by 1..m preserving relative order (ties keep
// equal letters equal).
PackedWord pack(const Word& w);

// Multiplicities of 1..m; a composition of |u| since u is surjective.
Composition evaluation(const PackedWord& u);

using MElement = LinComb<PackedWord>;

// Basis-level product in the monomial basis: all packed words w whose first
// |u| letters pack to u and remaining letters pack to v.
MElement m_convolution(const PackedWord& u, const PackedWord& v);

// Tridendriform-style splitting by the position of the minimal letter:
// left keeps the words whose minimal letter avoids the suffix entirely,
// right keeps those whose minimal letter appears in the suffix.  Nonempty
// operands required.
MElement tridendriform_left_min(const PackedWord& u, const PackedWord& v);
MElement tridendriform_right_min(const PackedWord& u, const PackedWord& v);

MElement m_product(const MElement& a, const MElement& b);
MElement left_min(const MElement& a, const MElement& b);
MElement right_min(const MElement& a, const MElement& b);

// M`_u -> M_{ev(u)}: commutative-image projection onto the monomial basis.
qsym::Element project_to_qsym(const MElement& a);

std::vector<PackedWord> packed_words_of_length(int n);

}  // namespace wqsym
}  // namespace freebell

#endif
