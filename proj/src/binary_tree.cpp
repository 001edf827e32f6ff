#include "freebell/binary_tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace freebell {

BinaryTree BinaryTree::leaf(int label) {
    BinaryTree t;
    t.nodes_.push_back({label, -1, -1});
    return t;
}

int BinaryTree::append(const std::vector<Node>& src, int idx) {
    // copy the subtree rooted at src[idx] into nodes_, preorder; returns new index
    const int here = static_cast<int>(nodes_.size());
    nodes_.push_back(src[idx]);
    if (src[idx].left != -1) nodes_[here].left = append(src, src[idx].left);
    if (src[idx].right != -1) nodes_[here].right = append(src, src[idx].right);
    return here;
}

BinaryTree BinaryTree::make(int label, const BinaryTree& left, const BinaryTree& right) {
    BinaryTree t;
    t.nodes_.push_back({label, -1, -1});
    if (!left.empty()) t.nodes_[0].left = t.append(left.nodes_, 0);
    if (!right.empty()) t.nodes_[0].right = t.append(right.nodes_, 0);
    return t;
}

BinaryTree BinaryTree::shape() const {
    BinaryTree t = *this;
    for (Node& n : t.nodes_) n.label = 0;
    return t;
}

std::vector<int> BinaryTree::subtree_sizes() const {
    std::vector<int> sz(nodes_.size(), 0);
    // children have larger preorder indices, so a reverse pass suffices
    for (int i = static_cast<int>(nodes_.size()) - 1; i >= 0; --i) {
        sz[i] = 1;
        if (nodes_[i].left != -1) sz[i] += sz[nodes_[i].left];
        if (nodes_[i].right != -1) sz[i] += sz[nodes_[i].right];
    }
    return sz;
}

std::vector<int> BinaryTree::right_subtree_sizes() const {
    std::vector<int> sz = subtree_sizes();
    std::vector<int> out(nodes_.size(), 0);
    for (size_t i = 0; i < nodes_.size(); ++i)
        out[i] = nodes_[i].right == -1 ? 0 : sz[nodes_[i].right];
    return out;
}

std::string BinaryTree::to_string() const {
    if (empty()) return ".";
    auto rec = [&](auto&& self, int idx) -> std::string {
        if (idx == -1) return ".";
        const Node& n = nodes_[idx];
        if (n.left == -1 && n.right == -1) return "(" + std::to_string(n.label) + " . .)";
        return "(" + std::to_string(n.label) + " " + self(self, n.left) + " " +
               self(self, n.right) + ")";
    };
    return rec(rec, 0);
}

bool BinaryTree::operator<(const BinaryTree& o) const {
    if (nodes_.size() != o.nodes_.size()) return nodes_.size() < o.nodes_.size();
    for (size_t i = 0; i < nodes_.size(); ++i) {
        const Node &a = nodes_[i], &b = o.nodes_[i];
        if (a.label != b.label) return a.label < b.label;
        if (a.left != b.left) return a.left < b.left;
        if (a.right != b.right) return a.right < b.right;
    }
    return false;
}

namespace {

BinaryTree decreasing_tree_range(const Word& w, size_t lo, size_t hi) {
    if (lo >= hi) return BinaryTree();
    size_t argmax = lo;
    for (size_t i = lo + 1; i < hi; ++i)
        if (w[i] > w[argmax]) argmax = i;
    return BinaryTree::make(w[argmax], decreasing_tree_range(w, lo, argmax),
                            decreasing_tree_range(w, argmax + 1, hi));
}

}  // namespace

BinaryTree decreasing_tree(const Word& w) {
    if (w.empty()) throw std::invalid_argument("decreasing_tree: empty word");
    if (!w.has_distinct_letters())
        throw std::invalid_argument("decreasing_tree: letters must be distinct");
    return decreasing_tree_range(w, 0, w.size());
}

BinaryTree right_comb(const Composition& shape) {
    BinaryTree t;  // build from the last spine node upward
    for (int k = shape.length() - 1; k >= 0; --k) {
        BinaryTree chain;  // left chain of i_k - 1 nodes
        for (int j = 1; j < shape[static_cast<size_t>(k)]; ++j)
            chain = BinaryTree::make(0, chain, BinaryTree());
        t = BinaryTree::make(0, chain, t);
    }
    return t;
}

}  // namespace freebell
