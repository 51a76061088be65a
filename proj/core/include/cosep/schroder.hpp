#pragma once

#include <string>
#include <vector>

#include "cosep/permutation.hpp"

namespace cosep {

enum class TreeSign : int { plus = 0, minus = 1 };

inline TreeSign opposite(TreeSign s) {
    return s == TreeSign::plus ? TreeSign::minus : TreeSign::plus;
}

// Signed Schroeder tree with alternating signs: plane rooted tree, internal
// nodes signed + or - alternating along every branch, arity >= 2. The
// canonical encoding of a separable permutation. Immutable after construction.
class SchroderTree {
public:
    static SchroderTree leaf();
    static SchroderTree internal(TreeSign sign, std::vector<SchroderTree> children);

    bool is_leaf() const { return !internal_; }
    TreeSign sign() const;
    const std::vector<SchroderTree>& children() const { return children_; }
    int size() const { return size_; }  // number of leaves

    bool operator==(const SchroderTree& other) const;

    // Canonical text form, e.g. `+(-(L,L),L)`. Parsing ignores whitespace.
    std::string to_text() const;
    static SchroderTree from_text(const std::string& text);

private:
    SchroderTree() = default;
    bool internal_ = false;
    TreeSign sign_ = TreeSign::plus;
    int size_ = 1;
    std::vector<SchroderTree> children_;
};

// perm(t): a + node concatenates its children's permutations as a direct sum,
// a - node as a skew sum. Leaves i < j satisfy sigma(i) > sigma(j) iff their
// lowest common ancestor is signed -.
Permutation perm_of_tree(const SchroderTree& t);

// Inverse of perm_of_tree on separable permutations. Throws NotSeparable (with
// the offending positions) when the substitution decomposition meets a simple
// permutation of size >= 4.
SchroderTree tree_of_perm(const Permutation& sigma);

bool is_separable(const Permutation& sigma);

}  // namespace cosep
