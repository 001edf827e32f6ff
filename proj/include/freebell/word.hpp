#ifndef FREEBELL_WORD_HPP
#define FREEBELL_WORD_HPP

#include <string>
#include <vector>

#include "freebell/qpoly.hpp"

namespace freebell {

class Composition;

// A word over the positive integers.  Letters may repeat.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<int> letters);
    // "312" (single digits) or "3,12,4" (comma separated).
    static Word parse(const std::string& text);

    size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    int operator[](size_t i) const { return letters_[i]; }
    const std::vector<int>& letters() const { return letters_; }
    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    int max_letter() const;               // 0 for the empty word
    bool has_distinct_letters() const;
    Word concat(const Word& o) const;
    Word subword(size_t from, size_t len) const;
    Word shifted(int offset) const;       // add offset to every letter

    // Digits when every letter fits in one, otherwise comma separated.
    std::string to_string() const;

    bool operator==(const Word& o) const { return letters_ == o.letters_; }
    bool operator!=(const Word& o) const { return !(*this == o); }
    bool operator<(const Word& o) const;  // by length, then lexicographic

private:
    std::vector<int> letters_;
};

// A permutation of {1..n} in one-line notation.
class Permutation {
public:
    Permutation() = default;              // the empty permutation
    explicit Permutation(std::vector<int> values);
    static Permutation identity(int n);
    static Permutation parse(const std::string& text);

    size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }
    int operator[](size_t i) const { return values_[i]; }
    const std::vector<int>& values() const { return values_; }

    Word as_word() const { return Word(values_); }
    Permutation inverse() const;
    // nu(p) = omega p omega: complement every value, then reverse.
    Permutation schutzenberger() const;

    std::vector<int> descent_set() const;     // positions i with p_i > p_{i+1}, 1-based
    std::vector<int> recoil_set() const;      // descent set of the inverse
    int inversions() const;
    int maj() const;                          // sum of descent positions
    // Bit i*(n)+j ... packed set of inverted value pairs (a,b), a<b, for
    // weak-order comparisons; requires n <= 11 (55 pairs).
    unsigned long long inversion_mask() const;

    std::string to_string() const { return as_word().to_string(); }

    bool operator==(const Permutation& o) const { return values_ == o.values_; }
    bool operator!=(const Permutation& o) const { return !(*this == o); }
    bool operator<(const Permutation& o) const;

private:
    std::vector<int> values_;
};

// The unique permutation with the same inversion set as w (ties broken left
// to right among equal letters).
Permutation standardize(const Word& w);

std::vector<Permutation> symmetric_group(int n);

// Dashed patterns with one dash: the underlined pair must be adjacent.
// 21-3: positions i, i+1 < j with p_{i+1} < p_i < p_j.
// 1-32: positions i < j with p_i < p_{j+1} < p_j.
bool avoids_21_3(const Permutation& p);
bool avoids_1_32(const Permutation& p);

// All interleavings of u and v, counted with multiplicity (always
// binom(|u|+|v|, |u|) results).
std::vector<Word> shuffle(const Word& u, const Word& v);

// Half shuffles.  Last-letter convention:
//   u prec v keeps interleavings ending with the last letter of u,
//   u succ v those ending with the last letter of v.
// First-letter convention (primed):
//   u prec' v keeps interleavings starting with the first letter of u,
//   u succ' v those starting with the first letter of v.
// All four reject empty operands.
std::vector<Word> shuffle_prec_last(const Word& u, const Word& v);
std::vector<Word> shuffle_succ_last(const Word& u, const Word& v);
std::vector<Word> shuffle_prec_first(const Word& u, const Word& v);
std::vector<Word> shuffle_succ_first(const Word& u, const Word& v);

}  // namespace freebell

#endif
