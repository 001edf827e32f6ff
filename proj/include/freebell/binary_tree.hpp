#ifndef FREEBELL_BINARY_TREE_HPP
#define FREEBELL_BINARY_TREE_HPP

#include <string>
#include <vector>

#include "freebell/composition.hpp"
#include "freebell/word.hpp"

namespace freebell {

// A labeled binary tree with value semantics.  Nodes live in a vector in
// preorder, so structural equality is plain vector comparison.
class BinaryTree {
public:
    struct Node {
        int label = 0;
        int left = -1;   // index into nodes(), -1 = absent child
        int right = -1;
        bool operator==(const Node& o) const {
            return label == o.label && left == o.left && right == o.right;
        }
    };

    BinaryTree() = default;  // empty tree
    static BinaryTree leaf(int label);
    static BinaryTree make(int label, const BinaryTree& left, const BinaryTree& right);

    bool empty() const { return nodes_.empty(); }
    int size() const { return static_cast<int>(nodes_.size()); }
    const std::vector<Node>& nodes() const { return nodes_; }
    int root() const { return nodes_.empty() ? -1 : 0; }

    BinaryTree shape() const;  // same structure, all labels zeroed

    // Per-node statistics in preorder node order:
    std::vector<int> subtree_sizes() const;        // hook lengths
    std::vector<int> right_subtree_sizes() const;  // the delta statistic

    // Parenthesized rendering, e.g. "(2 (1 . .) (3 . .))"; "." for absent.
    std::string to_string() const;

    bool operator==(const BinaryTree& o) const { return nodes_ == o.nodes_; }
    bool operator!=(const BinaryTree& o) const { return !(*this == o); }
    bool operator<(const BinaryTree& o) const;

private:
    int append(const std::vector<Node>& src, int idx);
    std::vector<Node> nodes_;  // preorder, root at index 0
};

// The decreasing tree of a word with distinct letters: root = maximum
// letter, subtrees built recursively from the factors to its left/right.
// Rejects the empty word.
BinaryTree decreasing_tree(const Word& w);

// The right comb of a composition (i1..ir): a right spine of r nodes where
// the k-th spine node carries a left chain of i_k - 1 nodes.  Labels are 0.
BinaryTree right_comb(const Composition& shape);

}  // namespace freebell

#endif
