#ifndef FREEBELL_SET_PARTITION_HPP
#define FREEBELL_SET_PARTITION_HPP

#include <string>
#include <vector>

#include "freebell/composition.hpp"
#include "freebell/word.hpp"

namespace freebell {

// A partition of a finite set of positive integers into disjoint nonempty
// blocks.  Canonical form: each block ascending, blocks ordered by minimum.
class SetPartition {
public:
    SetPartition() = default;  // partition of the empty set
    explicit SetPartition(std::vector<std::vector<int>> blocks);
    // "347|28|1|56": blocks separated by '|'; single-digit concatenation or
    // comma-separated elements inside a block.
    static SetPartition parse(const std::string& text);

    int num_blocks() const { return static_cast<int>(blocks_.size()); }
    int num_elements() const;
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    // True when the ground set is exactly {1..num_elements()}.
    bool ground_is_initial_segment() const;

    // Blocks ordered by increasing minimum (the stored canonical order).
    std::vector<std::vector<int>> blocks_by_min() const { return blocks_; }
    // Blocks ordered by decreasing maximum.
    std::vector<std::vector<int>> blocks_by_max_desc() const;

    std::string to_string() const;  // canonical: "1|28|347|56"

    bool operator==(const SetPartition& o) const { return blocks_ == o.blocks_; }
    bool operator!=(const SetPartition& o) const { return !(*this == o); }
    bool operator<(const SetPartition& o) const;

private:
    std::vector<std::vector<int>> blocks_;
};

std::vector<SetPartition> set_partitions_of(int n);

// The four statistics attached to a partition of {1..n}:
//   k_sharp: block sizes in increasing-minimum order,
//   k_flat:  block sizes in decreasing-maximum order,
//   flat_hat: the permutation reading the decreasing-maximum blocks, each
//             block ascending (always avoids 21-3).
struct PartitionStats {
    Composition k_sharp;
    Composition k_flat;
    Permutation flat_hat;
};

PartitionStats partition_stats(const SetPartition& p);

}  // namespace freebell

#endif
