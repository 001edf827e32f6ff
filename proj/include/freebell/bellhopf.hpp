#ifndef FREEBELL_BELLHOPF_HPP
#define FREEBELL_BELLHOPF_HPP

#include <string>
#include <vector>

#include "freebell/lincomb.hpp"
#include "freebell/set_partition.hpp"
#include "freebell/word.hpp"

namespace freebell {
namespace bellhopf {

// An ordered set partition with ascending blocks and strictly decreasing
// block maxima left to right - the output shape of the insertion algorithm.
class ColumnPartition {
public:
    ColumnPartition() = default;
    explicit ColumnPartition(std::vector<std::vector<int>> columns);
    static ColumnPartition parse(const std::string& text);  // "3,6,7|1,2,4,5"

    int num_columns() const { return static_cast<int>(columns_.size()); }
    const std::vector<std::vector<int>>& columns() const { return columns_; }
    SetPartition as_set_partition() const;
    std::string to_string() const;

    bool operator==(const ColumnPartition& o) const { return columns_ == o.columns_; }
    bool operator!=(const ColumnPartition& o) const { return !(*this == o); }
    bool operator<(const ColumnPartition& o) const { return columns_ < o.columns_; }

private:
    std::vector<std::vector<int>> columns_;
};

// Sequential insertion: each letter lands at the bottom of the column whose
// maximum is the largest one not exceeding it, or opens a new rightmost
// column.  Distinct letters required.
ColumnPartition column_insert(const Word& w);
ColumnPartition column_insert(const Permutation& p);

// One-step rewrites of the congruence generated by b u c a == b u a c
// (a < b < c, every letter of u smaller than b), both directions; and the
// alternative one-generator presentation b c u == b u c (b < c, letters of
// u smaller than b), used as a cross-check.
std::vector<Permutation> bell_rewrite_neighbors(const Permutation& p);
std::vector<Permutation> bell_rewrite_neighbors_alt(const Permutation& p);

// The full congruence class of p (closure of bell_rewrite_neighbors).
std::vector<Permutation> bell_class_of(const Permutation& p);

// The order generated on the ground set of a column partition by
//   - column edges: each element above its predecessor in its own column,
//   - cross edges: each element above the smallest larger element of the
//     column immediately to its left.
// Linear extensions, read minimal elements first, enumerate the congruence
// class whose insertion output is the column partition.
class BellPoset {
public:
    struct Edge {
        int lower, upper;  // lower <_P upper
        bool column;       // provenance: column edge or cross edge
    };

    static BellPoset from_columns(const ColumnPartition& cp);
    // Arbitrary finite poset on distinct values from covering pairs
    // (lower, upper); used by tests for antichains/chains.
    static BellPoset from_relations(std::vector<int> ground,
                                    const std::vector<std::pair<int, int>>& below);

    const std::vector<int>& ground() const { return ground_; }  // ascending values
    bool less(int a, int b) const;                              // a <_P b
    std::vector<Edge> hasse_edges() const;                      // sorted by (lower, upper)

private:
    int index_of(int value) const;
    void close();  // transitive closure + acyclicity check
    std::vector<int> ground_;
    std::vector<std::vector<bool>> below_;  // below_[i][j]: value_i <_P value_j
};

// All linear orders extending the poset, each read as the word of ground
// values from minimal to maximal; deterministic (lexicographically sorted).
std::vector<Word> linear_extensions(const BellPoset& p);

// For every related pair x <_P z and every value y strictly between x and z,
// y must be comparable the right way: x <_P y or y <_P z.
bool regularity_check(const BellPoset& p);

// DOT rendering: minimal elements on top, column edges solid, cross edges
// dashed.  Byte-deterministic.
std::string to_dot(const BellPoset& p);

struct BellClass {
    SetPartition partition;       // columns with the order forgotten
    ColumnPartition columns;      // the shared insertion output
    std::vector<Permutation> members;  // sorted
    Permutation weak_min, weak_max;    // endpoints in right weak order
};

// All congruence classes of the symmetric group of degree n, grouped by
// insertion output; honors the FREEBELL_THREADS environment variable.
std::vector<BellClass> bell_classes(int n);
// Same, cached per degree (the Hopf operations below share the cache).
const std::vector<BellClass>& bell_classes_cached(int n);

// Structure constants of the class-sum basis P_pi = sum of F_sigma over the
// class of pi.  Throws "closure violated" if a product or coproduct fails
// to regroup into whole classes.
LinComb<SetPartition> p_basis_product(const SetPartition& a, const SetPartition& b);
Tensor2<SetPartition, SetPartition> p_basis_coproduct(const SetPartition& a);

}  // namespace bellhopf
}  // namespace freebell

#endif
