#include "freebell/set_partition.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace freebell {

SetPartition::SetPartition(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
    std::set<int> seen;
    for (auto& b : blocks_) {
        if (b.empty()) throw std::invalid_argument("SetPartition: empty block");
        std::sort(b.begin(), b.end());
        for (int x : b) {
            if (x < 1) throw std::invalid_argument("SetPartition: elements must be positive");
            if (!seen.insert(x).second)
                throw std::invalid_argument("SetPartition: repeated element " + std::to_string(x));
        }
    }
    std::sort(blocks_.begin(), blocks_.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
}

SetPartition SetPartition::parse(const std::string& text) {
    std::vector<std::vector<int>> blocks;
    size_t pos = 0;
    if (text.empty()) return SetPartition();
    while (pos <= text.size()) {
        size_t bar = text.find('|', pos);
        std::string piece = text.substr(pos, bar == std::string::npos ? bar : bar - pos);
        if (piece.empty()) throw std::invalid_argument("SetPartition::parse: empty block in \"" + text + "\"");
        blocks.push_back(Word::parse(piece).letters());
        if (bar == std::string::npos) break;
        pos = bar + 1;
    }
    return SetPartition(std::move(blocks));
}

int SetPartition::num_elements() const {
    int n = 0;
    for (const auto& b : blocks_) n += static_cast<int>(b.size());
    return n;
}

bool SetPartition::ground_is_initial_segment() const {
    std::set<int> all;
    for (const auto& b : blocks_) all.insert(b.begin(), b.end());
    int expect = 1;
    for (int x : all)
        if (x != expect++) return false;
    return true;
}

std::vector<std::vector<int>> SetPartition::blocks_by_max_desc() const {
    std::vector<std::vector<int>> bs = blocks_;
    std::sort(bs.begin(), bs.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a.back() > b.back(); });
    return bs;
}

std::string SetPartition::to_string() const {
    bool digits = true;
    for (const auto& b : blocks_)
        for (int x : b)
            if (x > 9) digits = false;
    std::string out;
    for (size_t i = 0; i < blocks_.size(); ++i) {
        if (i) out += "|";
        for (size_t j = 0; j < blocks_[i].size(); ++j) {
            if (!digits && j) out += ",";
            out += digits ? std::string(1, static_cast<char>('0' + blocks_[i][j]))
                          : std::to_string(blocks_[i][j]);
        }
    }
    return out;
}

bool SetPartition::operator<(const SetPartition& o) const {
    if (num_elements() != o.num_elements()) return num_elements() < o.num_elements();
    return blocks_ < o.blocks_;
}

std::vector<SetPartition> set_partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("set_partitions_of: negative n");
    std::vector<SetPartition> out;
    std::vector<std::vector<int>> blocks;
    // place elements 1..n left to right; each goes into an existing block or a new one
    auto rec = [&](auto&& self, int next) -> void {
        if (next > n) {
            out.push_back(SetPartition(blocks));
            return;
        }
        for (size_t i = 0; i < blocks.size(); ++i) {
            blocks[i].push_back(next);
            self(self, next + 1);
            blocks[i].pop_back();
        }
        blocks.push_back({next});
        self(self, next + 1);
        blocks.pop_back();
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end());
    return out;
}

PartitionStats partition_stats(const SetPartition& p) {
    if (!p.ground_is_initial_segment())
        throw std::invalid_argument("partition_stats: ground set is not {1..n}");
    PartitionStats st;
    std::vector<int> sharp_sizes, flat_sizes, flat_word;
    for (const auto& b : p.blocks_by_min()) sharp_sizes.push_back(static_cast<int>(b.size()));
    for (const auto& b : p.blocks_by_max_desc()) {
        flat_sizes.push_back(static_cast<int>(b.size()));
        flat_word.insert(flat_word.end(), b.begin(), b.end());
    }
    st.k_sharp = Composition(std::move(sharp_sizes));
    st.k_flat = Composition(std::move(flat_sizes));
    st.flat_hat = p.num_elements() ? Permutation(std::move(flat_word)) : Permutation();
    return st;
}

}  // namespace freebell
