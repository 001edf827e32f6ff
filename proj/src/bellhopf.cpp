#include "freebell/bellhopf.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

namespace freebell {
namespace bellhopf {

ColumnPartition::ColumnPartition(std::vector<std::vector<int>> columns)
    : columns_(std::move(columns)) {
    std::set<int> seen;
    int prev_max = 0;
    for (size_t c = 0; c < columns_.size(); ++c) {
        const auto& col = columns_[c];
        if (col.empty()) throw std::invalid_argument("ColumnPartition: empty column");
        for (size_t i = 0; i < col.size(); ++i) {
            if (col[i] < 1) throw std::invalid_argument("ColumnPartition: values must be positive");
            if (i && col[i] <= col[i - 1])
                throw std::invalid_argument("ColumnPartition: columns must increase downward");
            if (!seen.insert(col[i]).second)
                throw std::invalid_argument("ColumnPartition: repeated value");
        }
        if (c && col.back() >= prev_max)
            throw std::invalid_argument("ColumnPartition: column maxima must decrease");
        prev_max = col.back();
    }
}

ColumnPartition ColumnPartition::parse(const std::string& text) {
    std::vector<std::vector<int>> cols;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t bar = text.find('|', pos);
        std::string piece = text.substr(pos, bar == std::string::npos ? bar : bar - pos);
        if (piece.empty())
            throw std::invalid_argument("ColumnPartition::parse: empty column in \"" + text + "\"");
        cols.push_back(Word::parse(piece).letters());
        if (bar == std::string::npos) break;
        pos = bar + 1;
    }
    return ColumnPartition(std::move(cols));
}

SetPartition ColumnPartition::as_set_partition() const { return SetPartition(columns_); }

std::string ColumnPartition::to_string() const {
    bool digits = true;
    for (const auto& col : columns_)
        for (int x : col)
            if (x > 9) digits = false;
    std::string out;
    for (size_t c = 0; c < columns_.size(); ++c) {
        if (c) out += "|";
        for (size_t i = 0; i < columns_[c].size(); ++i) {
            if (!digits && i) out += ",";
            out += digits ? std::string(1, static_cast<char>('0' + columns_[c][i]))
                          : std::to_string(columns_[c][i]);
        }
    }
    return out;
}

ColumnPartition column_insert(const Word& w) {
    if (!w.has_distinct_letters())
        throw std::invalid_argument("column_insert: letters must be distinct");
    std::vector<std::vector<int>> cols;  // maxima strictly decrease left to right
    for (int x : w) {
        // the column with the largest maximum not exceeding x, if any
        int best = -1;
        for (size_t c = 0; c < cols.size(); ++c) {
            if (cols[c].back() <= x && (best == -1 || cols[c].back() > cols[best].back()))
                best = static_cast<int>(c);
        }
        if (best == -1)
            cols.push_back({x});
        else
            cols[static_cast<size_t>(best)].push_back(x);
    }
    return ColumnPartition(std::move(cols));
}

ColumnPartition column_insert(const Permutation& p) { return column_insert(p.as_word()); }

std::vector<Permutation> bell_rewrite_neighbors(const Permutation& p) {
    // Adjacent positions (t, t+1) may swap iff some witness b = p_s to the
    // left satisfies lo < b < hi with every letter strictly between s and t
    // smaller than b (lo, hi the values at the swapped positions).
    const int n = static_cast<int>(p.size());
    std::vector<Permutation> out;
    for (int t = 1; t < n; ++t) {
        const int lo = std::min(p[t - 1], p[t]);
        const int hi = std::max(p[t - 1], p[t]);
        int skipped_max = 0;
        bool allowed = false;
        for (int s = t - 1; s >= 1 && !allowed; --s) {
            const int b = p[s - 1];
            if (b > skipped_max && lo < b && b < hi) allowed = true;
            skipped_max = std::max(skipped_max, b);
        }
        if (allowed) {
            std::vector<int> v = p.values();
            std::swap(v[static_cast<size_t>(t) - 1], v[static_cast<size_t>(t)]);
            out.push_back(Permutation(std::move(v)));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Permutation> bell_rewrite_neighbors_alt(const Permutation& p) {
    // b c u <-> b u c with b < c and every letter of u below b: the letter c
    // hops rightward over any nonempty prefix of the small run after it, or
    // leftward over the whole small run back to b.
    const int n = static_cast<int>(p.size());
    std::set<Permutation> out;
    for (int s = 1; s <= n; ++s) {
        const int b = p[s - 1];
        if (s + 1 <= n && p[s] > b) {
            const int c = p[s];
            for (int e = s + 2; e <= n && p[e - 1] < b; ++e) {
                std::vector<int> v = p.values();
                v.erase(v.begin() + s);          // remove c
                v.insert(v.begin() + e - 1, c);  // reinsert after u
                out.insert(Permutation(std::move(v)));
            }
        }
        int e = s + 1;
        while (e <= n && p[e - 1] < b) ++e;
        if (e > s + 1 && e <= n && p[e - 1] > b) {
            std::vector<int> v = p.values();
            const int c = v[static_cast<size_t>(e) - 1];
            v.erase(v.begin() + e - 1);
            v.insert(v.begin() + s, c);
            out.insert(Permutation(std::move(v)));
        }
    }
    return std::vector<Permutation>(out.begin(), out.end());
}

std::vector<Permutation> bell_class_of(const Permutation& p) {
    std::set<Permutation> seen{p};
    std::vector<Permutation> queue{p};
    while (!queue.empty()) {
        Permutation cur = queue.back();
        queue.pop_back();
        for (const Permutation& nb : bell_rewrite_neighbors(cur))
            if (seen.insert(nb).second) queue.push_back(nb);
    }
    return std::vector<Permutation>(seen.begin(), seen.end());
}

int BellPoset::index_of(int value) const {
    auto it = std::lower_bound(ground_.begin(), ground_.end(), value);
    if (it == ground_.end() || *it != value)
        throw std::invalid_argument("BellPoset: value not in ground set");
    return static_cast<int>(it - ground_.begin());
}

void BellPoset::close() {
    const size_t n = ground_.size();
    for (size_t k = 0; k < n; ++k)
        for (size_t i = 0; i < n; ++i)
            if (below_[i][k])
                for (size_t j = 0; j < n; ++j)
                    if (below_[k][j]) below_[i][j] = true;
    for (size_t i = 0; i < n; ++i)
        if (below_[i][i]) throw std::invalid_argument("BellPoset: relation is cyclic");
}

BellPoset BellPoset::from_columns(const ColumnPartition& cp) {
    BellPoset p;
    for (const auto& col : cp.columns())
        p.ground_.insert(p.ground_.end(), col.begin(), col.end());
    std::sort(p.ground_.begin(), p.ground_.end());
    const size_t n = p.ground_.size();
    p.below_.assign(n, std::vector<bool>(n, false));
    const auto& cols = cp.columns();
    for (size_t c = 0; c < cols.size(); ++c) {
        for (size_t i = 0; i + 1 < cols[c].size(); ++i)  // column edges
            p.below_[static_cast<size_t>(p.index_of(cols[c][i]))]
                    [static_cast<size_t>(p.index_of(cols[c][i + 1]))] = true;
        if (c == 0) continue;
        for (int x : cols[c]) {  // cross edges into the column on the left
            int target = -1;
            for (int y : cols[c - 1])
                if (y > x && (target == -1 || y < target)) target = y;
            if (target != -1)
                p.below_[static_cast<size_t>(p.index_of(target))]
                        [static_cast<size_t>(p.index_of(x))] = true;
        }
    }
    p.close();
    return p;
}

BellPoset BellPoset::from_relations(std::vector<int> ground,
                                    const std::vector<std::pair<int, int>>& below) {
    BellPoset p;
    p.ground_ = std::move(ground);
    std::sort(p.ground_.begin(), p.ground_.end());
    if (std::adjacent_find(p.ground_.begin(), p.ground_.end()) != p.ground_.end())
        throw std::invalid_argument("BellPoset: repeated ground value");
    p.below_.assign(p.ground_.size(), std::vector<bool>(p.ground_.size(), false));
    for (const auto& [lo, hi] : below)
        p.below_[static_cast<size_t>(p.index_of(lo))][static_cast<size_t>(p.index_of(hi))] = true;
    p.close();
    return p;
}

bool BellPoset::less(int a, int b) const {
    return below_[static_cast<size_t>(index_of(a))][static_cast<size_t>(index_of(b))];
}

std::vector<BellPoset::Edge> BellPoset::hasse_edges() const {
    const size_t n = ground_.size();
    std::vector<Edge> out;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            if (!below_[i][j]) continue;
            bool cover = true;
            for (size_t k = 0; k < n && cover; ++k)
                if (below_[i][k] && below_[k][j]) cover = false;
            if (cover)
                out.push_back({ground_[i], ground_[j], ground_[j] > ground_[i]});
        }
    }
    std::sort(out.begin(), out.end(), [](const Edge& a, const Edge& b) {
        return a.lower != b.lower ? a.lower < b.lower : a.upper < b.upper;
    });
    return out;
}

std::vector<Word> linear_extensions(const BellPoset& p) {
    const std::vector<int>& ground = p.ground();
    const size_t n = ground.size();
    std::vector<bool> used(n, false);
    std::vector<int> acc;
    std::vector<Word> out;
    auto rec = [&](auto&& self) -> void {
        if (acc.size() == n) {
            out.push_back(Word(acc));
            return;
        }
        for (size_t i = 0; i < n; ++i) {
            if (used[i]) continue;
            bool minimal = true;
            for (size_t j = 0; j < n && minimal; ++j)
                if (!used[j] && j != i && p.less(ground[j], ground[i])) minimal = false;
            if (!minimal) continue;
            used[i] = true;
            acc.push_back(ground[i]);
            self(self);
            acc.pop_back();
            used[i] = false;
        }
    };
    rec(rec);
    return out;  // ascending-value choice order = lexicographic output order
}

bool regularity_check(const BellPoset& p) {
    const std::vector<int>& g = p.ground();
    for (int x : g) {
        for (int z : g) {
            if (x == z || !p.less(x, z)) continue;
            const int lo = std::min(x, z), hi = std::max(x, z);
            for (int y : g) {
                if (y <= lo || y >= hi) continue;
                if (!p.less(x, y) && !p.less(y, z)) return false;
            }
        }
    }
    return true;
}

std::string to_dot(const BellPoset& p) {
    std::string out = "digraph bellposet {\n  rankdir=TB;\n  node [shape=circle];\n";
    for (int v : p.ground()) out += "  \"" + std::to_string(v) + "\";\n";
    for (const auto& e : p.hasse_edges()) {
        out += "  \"" + std::to_string(e.lower) + "\" -> \"" + std::to_string(e.upper) +
               "\" [style=" + (e.column ? "solid" : "dashed") + "];\n";
    }
    out += "}\n";
    return out;
}

namespace {

int thread_count_from_env() {
    const char* env = std::getenv("FREEBELL_THREADS");
    if (!env) return 1;
    int t = std::atoi(env);
    if (t < 1) return 1;
    return std::min(t, 16);
}

using ClassMap = std::map<ColumnPartition, std::vector<Permutation>>;

void classify_range(const std::vector<Permutation>& all, size_t from, size_t to, ClassMap& out) {
    for (size_t i = from; i < to; ++i) out[column_insert(all[i])].push_back(all[i]);
}

}  // namespace

std::vector<BellClass> bell_classes(int n) {
    if (n < 0) throw std::invalid_argument("bell_classes: negative degree");
    if (n > 10) throw std::invalid_argument("bell_classes: degree too large");
    const std::vector<Permutation> all = symmetric_group(n);
    const int threads = thread_count_from_env();
    ClassMap groups;
    if (threads == 1 || all.size() < 64) {
        classify_range(all, 0, all.size(), groups);
    } else {
        // chunked lexicographic ranges with a deterministic ordered merge
        std::vector<ClassMap> partial(static_cast<size_t>(threads));
        std::vector<std::thread> pool;
        const size_t chunk = (all.size() + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const size_t from = std::min(all.size(), static_cast<size_t>(t) * chunk);
            const size_t to = std::min(all.size(), from + chunk);
            pool.emplace_back(classify_range, std::cref(all), from, to,
                              std::ref(partial[static_cast<size_t>(t)]));
        }
        for (auto& th : pool) th.join();
        for (const ClassMap& m : partial)
            for (const auto& [cp, members] : m) {
                auto& dst = groups[cp];
                dst.insert(dst.end(), members.begin(), members.end());
            }
    }
    std::vector<BellClass> out;
    for (auto& [cp, members] : groups) {
        BellClass cls;
        cls.columns = cp;
        cls.partition = cp.as_set_partition();
        std::sort(members.begin(), members.end());
        cls.members = members;
        cls.weak_min = members.front();
        cls.weak_max = members.front();
        for (const Permutation& m : members) {
            if (m.inversions() < cls.weak_min.inversions()) cls.weak_min = m;
            if (m.inversions() > cls.weak_max.inversions()) cls.weak_max = m;
        }
        out.push_back(std::move(cls));
    }
    std::sort(out.begin(), out.end(), [](const BellClass& a, const BellClass& b) {
        return a.partition < b.partition;
    });
    return out;
}

const std::vector<BellClass>& bell_classes_cached(int n) {
    static std::map<int, std::vector<BellClass>> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, bell_classes(n)).first;
    return it->second;
}

namespace {

const BellClass& class_of_partition(const SetPartition& p) {
    if (!p.ground_is_initial_segment())
        throw std::invalid_argument("p_basis: partition ground set must be {1..n}");
    for (const BellClass& c : bell_classes_cached(p.num_elements()))
        if (c.partition == p) return c;
    throw std::invalid_argument("p_basis: no class with partition " + p.to_string());
}

const BellClass& class_of_member(const Permutation& p) {
    const ColumnPartition cp = column_insert(p);
    for (const BellClass& c : bell_classes_cached(static_cast<int>(p.size())))
        if (c.columns == cp) return c;
    throw std::logic_error("p_basis: class lookup failed");
}

}  // namespace

LinComb<SetPartition> p_basis_product(const SetPartition& a, const SetPartition& b) {
    const BellClass& ca = class_of_partition(a);
    const BellClass& cb = class_of_partition(b);
    const int k = a.num_elements();
    LinComb<Permutation> expanded;
    for (const Permutation& u : ca.members) {
        for (const Permutation& v : cb.members) {
            const Word uw = u.as_word();
            const Word vw = v.as_word().shifted(k);
            if (uw.empty() || vw.empty()) {
                expanded.add(Permutation((uw.empty() ? vw : uw).letters()), 1);
                continue;
            }
            for (const Word& w : shuffle(uw, vw)) expanded.add(Permutation(w.letters()), 1);
        }
    }
    // regrouping: the support must be a union of whole classes with a
    // constant coefficient on each
    LinComb<SetPartition> out;
    std::set<SetPartition> done;
    for (const auto& [perm, coeff] : expanded.terms()) {
        const BellClass& cls = class_of_member(perm);
        if (done.count(cls.partition)) continue;
        done.insert(cls.partition);
        const Int c0 = coeff;
        for (const Permutation& m : cls.members)
            if (expanded.coeff(m) != c0)
                throw std::runtime_error("closure violated");
        out.add(cls.partition, c0);
    }
    return out;
}

Tensor2<SetPartition, SetPartition> p_basis_coproduct(const SetPartition& a) {
    const BellClass& ca = class_of_partition(a);
    Tensor2<Permutation, Permutation> tensor;
    for (const Permutation& m : ca.members) {
        const Word w = m.as_word();
        for (size_t cut = 0; cut <= m.size(); ++cut) {
            tensor.add({standardize(w.subword(0, cut)), standardize(w.subword(cut, m.size() - cut))},
                       1);
        }
    }
    Tensor2<SetPartition, SetPartition> out;
    std::set<std::pair<SetPartition, SetPartition>> done;
    for (const auto& [pair, coeff] : tensor.terms()) {
        const BellClass& c1 = class_of_member(pair.first);
        const BellClass& c2 = class_of_member(pair.second);
        auto key = std::make_pair(c1.partition, c2.partition);
        if (done.count(key)) continue;
        done.insert(key);
        const Int c0 = coeff;
        for (const Permutation& u : c1.members)
            for (const Permutation& v : c2.members)
                if (tensor.coeff({u, v}) != c0)
                    throw std::runtime_error("closure violated");
        out.add(key, c0);
    }
    return out;
}

}  // namespace bellhopf
}  // namespace freebell
