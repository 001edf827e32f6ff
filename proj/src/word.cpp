#include "freebell/word.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace freebell {

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
    for (int x : letters_)
        if (x < 1) throw std::invalid_argument("Word: letters must be positive");
}

Word Word::parse(const std::string& text) {
    std::vector<int> letters;
    if (text.find(',') != std::string::npos) {
        size_t pos = 0;
        while (pos <= text.size()) {
            size_t comma = text.find(',', pos);
            std::string piece = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
            if (piece.empty() ||
                piece.find_first_not_of("0123456789") != std::string::npos)
                throw std::invalid_argument("Word::parse: bad entry in \"" + text + "\"");
            letters.push_back(std::stoi(piece));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    } else {
        for (char ch : text) {
            if (ch < '1' || ch > '9')
                throw std::invalid_argument("Word::parse: expected digits 1-9 in \"" + text + "\"");
            letters.push_back(ch - '0');
        }
    }
    return Word(std::move(letters));
}

int Word::max_letter() const {
    int m = 0;
    for (int x : letters_) m = std::max(m, x);
    return m;
}

bool Word::has_distinct_letters() const {
    std::vector<int> s = letters_;
    std::sort(s.begin(), s.end());
    return std::adjacent_find(s.begin(), s.end()) == s.end();
}

Word Word::concat(const Word& o) const {
    std::vector<int> r = letters_;
    r.insert(r.end(), o.letters_.begin(), o.letters_.end());
    return Word(std::move(r));
}

Word Word::subword(size_t from, size_t len) const {
    if (from + len > letters_.size()) throw std::invalid_argument("Word::subword: out of range");
    return Word(std::vector<int>(letters_.begin() + from, letters_.begin() + from + len));
}

Word Word::shifted(int offset) const {
    std::vector<int> r = letters_;
    for (int& x : r) x += offset;
    return Word(std::move(r));
}

std::string Word::to_string() const {
    if (letters_.empty()) return "";
    bool digits = max_letter() <= 9;
    std::string out;
    for (size_t i = 0; i < letters_.size(); ++i) {
        if (digits) {
            out += static_cast<char>('0' + letters_[i]);
        } else {
            if (i) out += ',';
            out += std::to_string(letters_[i]);
        }
    }
    return out;
}

bool Word::operator<(const Word& o) const {
    if (letters_.size() != o.letters_.size()) return letters_.size() < o.letters_.size();
    return letters_ < o.letters_;
}

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
    const int n = static_cast<int>(values_.size());
    std::vector<bool> seen(n + 1, false);
    for (int v : values_) {
        if (v < 1 || v > n || seen[v])
            throw std::invalid_argument("Permutation: not a bijection on {1..n}");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::parse(const std::string& text) {
    return Permutation(Word::parse(text).letters());
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(values_.size());
    for (size_t i = 0; i < values_.size(); ++i) inv[values_[i] - 1] = static_cast<int>(i) + 1;
    return Permutation(std::move(inv));
}

Permutation Permutation::schutzenberger() const {
    const int n = static_cast<int>(values_.size());
    std::vector<int> r(n);
    for (int i = 0; i < n; ++i) r[i] = n + 1 - values_[n - 1 - i];
    return Permutation(std::move(r));
}

std::vector<int> Permutation::descent_set() const {
    std::vector<int> d;
    for (size_t i = 0; i + 1 < values_.size(); ++i)
        if (values_[i] > values_[i + 1]) d.push_back(static_cast<int>(i) + 1);
    return d;
}

std::vector<int> Permutation::recoil_set() const { return inverse().descent_set(); }

int Permutation::inversions() const {
    int count = 0;
    for (size_t i = 0; i < values_.size(); ++i)
        for (size_t j = i + 1; j < values_.size(); ++j)
            if (values_[i] > values_[j]) ++count;
    return count;
}

int Permutation::maj() const {
    int s = 0;
    for (int d : descent_set()) s += d;
    return s;
}

unsigned long long Permutation::inversion_mask() const {
    const int n = static_cast<int>(values_.size());
    if (n > 11) throw std::invalid_argument("inversion_mask: supported for n <= 11");
    std::vector<int> pos(n + 1);
    for (int i = 0; i < n; ++i) pos[values_[i]] = i;
    unsigned long long mask = 0;
    int bit = 0;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b, ++bit)
            if (pos[a] > pos[b]) mask |= (1ULL << bit);
    return mask;
}

bool Permutation::operator<(const Permutation& o) const {
    if (values_.size() != o.values_.size()) return values_.size() < o.values_.size();
    return values_ < o.values_;
}

Permutation standardize(const Word& w) {
    const size_t n = w.size();
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return w[a] < w[b]; });
    std::vector<int> std_word(n);
    for (size_t rank = 0; rank < n; ++rank) std_word[order[rank]] = static_cast<int>(rank) + 1;
    return Permutation(std::move(std_word));
}

std::vector<Permutation> symmetric_group(int n) {
    if (n < 0) throw std::invalid_argument("symmetric_group: negative degree");
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> all;
    do {
        all.push_back(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return all;
}

bool avoids_21_3(const Permutation& p) {
    const int n = static_cast<int>(p.size());
    // suffix_max[j] = max of p_{j+1..n} (1-based j)
    std::vector<int> suffix_max(n + 2, 0);
    for (int j = n - 1; j >= 1; --j)
        suffix_max[j] = std::max(suffix_max[j + 1], p[static_cast<size_t>(j)]);
    for (int i = 1; i < n; ++i)
        if (p[i - 1] > p[i] && suffix_max[i + 1] > p[i - 1]) return false;
    return true;
}

bool avoids_1_32(const Permutation& p) {
    const int n = static_cast<int>(p.size());
    int prefix_min = n + 1;  // min of p_1..p_{j-1}, i.e. the candidates for the "1"
    for (int j = 1; j < n; ++j) {
        if (j >= 2) prefix_min = std::min(prefix_min, p[static_cast<size_t>(j) - 2]);
        if (p[j - 1] > p[j] && prefix_min < p[j]) return false;
    }
    return true;
}

namespace {

void shuffle_rec(const std::vector<int>& u, size_t iu, const std::vector<int>& v, size_t iv,
                 std::vector<int>& acc, std::vector<Word>& out) {
    if (iu == u.size() && iv == v.size()) {
        out.push_back(Word(acc));
        return;
    }
    if (iu < u.size()) {
        acc.push_back(u[iu]);
        shuffle_rec(u, iu + 1, v, iv, acc, out);
        acc.pop_back();
    }
    if (iv < v.size()) {
        acc.push_back(v[iv]);
        shuffle_rec(u, iu, v, iv + 1, acc, out);
        acc.pop_back();
    }
}

void require_nonempty(const Word& u, const Word& v) {
    if (u.empty() || v.empty())
        throw std::invalid_argument("dendriform product with empty word undefined");
}

}  // namespace

std::vector<Word> shuffle(const Word& u, const Word& v) {
    std::vector<Word> out;
    std::vector<int> acc;
    acc.reserve(u.size() + v.size());
    shuffle_rec(u.letters(), 0, v.letters(), 0, acc, out);
    return out;
}

std::vector<Word> shuffle_prec_last(const Word& u, const Word& v) {
    require_nonempty(u, v);
    // u a prec v = (u sh v) a  where a is the last letter of the left operand
    Word head = u.subword(0, u.size() - 1);
    const int a = u[u.size() - 1];
    std::vector<Word> out;
    for (const Word& w : shuffle(head, v)) out.push_back(w.concat(Word({a})));
    return out;
}

std::vector<Word> shuffle_succ_last(const Word& u, const Word& v) {
    require_nonempty(u, v);
    Word head = v.subword(0, v.size() - 1);
    const int b = v[v.size() - 1];
    std::vector<Word> out;
    for (const Word& w : shuffle(u, head)) out.push_back(w.concat(Word({b})));
    return out;
}

std::vector<Word> shuffle_prec_first(const Word& u, const Word& v) {
    require_nonempty(u, v);
    // a u prec' v = a (u sh v)
    const int a = u[0];
    Word tail = u.subword(1, u.size() - 1);
    std::vector<Word> out;
    for (const Word& w : shuffle(tail, v)) out.push_back(Word({a}).concat(w));
    return out;
}

std::vector<Word> shuffle_succ_first(const Word& u, const Word& v) {
    require_nonempty(u, v);
    const int b = v[0];
    Word tail = v.subword(1, v.size() - 1);
    std::vector<Word> out;
    for (const Word& w : shuffle(u, tail)) out.push_back(Word({b}).concat(w));
    return out;
}

}  // namespace freebell
