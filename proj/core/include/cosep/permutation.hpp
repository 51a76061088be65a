#pragma once

#include <string>
#include <vector>

#include "cosep/graph.hpp"

namespace cosep {

// A permutation of {1..n} in one-line notation. Immutable after construction.
class Permutation {
public:
    explicit Permutation(std::vector<int> values);

    int size() const { return static_cast<int>(values_.size()); }
    int operator()(int i) const { return values_[i - 1]; }  // 1-based
    const std::vector<int>& values() const { return values_; }

    bool operator==(const Permutation& other) const { return values_ == other.values_; }
    bool operator<(const Permutation& other) const { return values_ < other.values_; }

    // Comma-separated one-line notation, e.g. "2,1,3".
    std::string to_text() const;
    static Permutation from_text(const std::string& text);

private:
    std::vector<int> values_;
};

// Graph on positions with an edge {i,j} iff (i-j)(sigma(i)-sigma(j)) < 0.
Graph inversion_graph(const Permutation& sigma);

}  // namespace cosep
