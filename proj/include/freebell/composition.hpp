#ifndef FREEBELL_COMPOSITION_HPP
#define FREEBELL_COMPOSITION_HPP

#include <string>
#include <vector>

#include "freebell/word.hpp"

namespace freebell {

// A composition: finite sequence of positive integers.  The empty
// composition (weight 0) is allowed.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);
    // Accepts "(2,2,1)", "2,2,1", "221" (single digits) and "()" / "" (empty).
    static Composition parse(const std::string& text);

    int weight() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }
    int operator[](size_t i) const { return parts_[i]; }

    Composition mirror() const;              // reverse the parts
    Composition conjugate() const;           // descent composition of the reversed word
    std::vector<int> descent_set() const;    // proper partial sums, ascending
    static Composition from_descent_set(const std::vector<int>& descents, int n);
    int maj() const;                         // sum of the descent set

    Composition concat(const Composition& o) const;       // (i1..ir, j1..js)
    // (i1..i_{r-1}, i_r + j1, j2..js); rejects empty operands.
    Composition near_concat(const Composition& o) const;

    std::string to_string() const;           // "(2,2,1)", "()" for empty

    bool operator==(const Composition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Composition& o) const { return !(*this == o); }
    // Canonical order: by weight, then lexicographically descending, so that
    // (3) < (2,1) < (1,2) < (1,1,1).  Map iteration = display order.
    bool operator<(const Composition& o) const;

private:
    std::vector<int> parts_;
};

Composition descent_composition(const Word& w);
Composition descent_composition(const Permutation& p);
// recoil composition = descent composition of the inverse
Composition recoil_composition(const Permutation& p);

std::vector<Composition> compositions_of(int n);
// Does fine refine coarse (i.e. can coarse be obtained by summing adjacent
// runs of fine)?
bool refines(const Composition& fine, const Composition& coarse);
std::vector<Composition> refinements_of(const Composition& coarse);

}  // namespace freebell

#endif
