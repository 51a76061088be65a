#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cosep/graph.hpp"

namespace cosep {

// Canonical cotree: a rooted non-plane tree whose leaves carry labels and whose
// internal nodes carry decorations 0/1 alternating along every branch, every
// internal node with at least two children. Children are stored sorted by
// (size, canonical text code), so multiset equality of subtrees is plain
// structural equality. Immutable after construction.
class Cotree {
public:
    static Cotree leaf(int label);
    static Cotree internal(int decoration, std::vector<Cotree> children);

    bool is_leaf() const { return decoration_ < 0; }
    int label() const;                       // leaf only
    int decoration() const;                  // internal only
    const std::vector<Cotree>& children() const { return children_; }
    int size() const { return size_; }       // number of leaves

    bool operator==(const Cotree& other) const;

    // Canonical text form, e.g. `1(0(L1,L2),L3)`. Parsing ignores whitespace.
    std::string to_text() const;
    static Cotree from_text(const std::string& text);

    // Leaf labels in ascending order.
    std::vector<int> labels() const;

private:
    Cotree() = default;
    int decoration_ = -1;   // -1 marks a leaf
    int label_ = 0;
    int size_ = 1;
    std::vector<Cotree> children_;
};

// The labeled cograph encoded by a cotree whose labels are exactly {1..n}:
// vertices i and j are adjacent iff the lowest common ancestor of leaves i and
// j has decoration 1.
Graph cograph_of_cotree(const Cotree& t);

// Inverse of cograph_of_cotree. Throws NotACograph (with a witness vertex set)
// when some induced subgraph of size >= 2 is connected with a connected
// complement.
Cotree cotree_of_cograph(const Graph& g);

bool is_cograph(const Graph& g);

// Flips every decoration; an involution. Complements the encoded cograph.
Cotree swap_decorations(const Cotree& t);

}  // namespace cosep
