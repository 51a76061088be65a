#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cosep {

// Simple undirected graph on vertices 1..n. Immutable after construction.
//
// Neighbor lists are kept sorted; for n <= 2^14 an adjacency bitset is built
// as well, so edge queries are O(1) in the dense regime and O(log deg) above.
class Graph {
public:
    static constexpr int kBitsetMaxN = 1 << 14;

    explicit Graph(int n) : Graph(n, {}) {}
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int size() const { return n_; }
    long long edge_count() const { return edge_count_; }
    bool edge(int i, int j) const;                 // 1-based endpoints
    const std::vector<int>& neighbors(int i) const { return adj_[i - 1]; }

    // Sorted edge list (i < j), 1-based.
    std::vector<std::pair<int, int>> edges() const;

    Graph complement() const;
    Graph induced(const std::vector<int>& vertices) const;

    // Connected components as sorted vertex lists, each sorted by smallest entry.
    std::vector<std::vector<int>> components() const;

    // Components of the complement (co-components), computed without
    // materializing the complement.
    std::vector<std::vector<int>> co_components() const;

    bool operator==(const Graph& other) const;

    // Text form: first line `n`, then one `i j` line per edge, i < j, sorted.
    std::string to_text() const;
    static Graph from_text(const std::string& text);

private:
    int n_ = 0;
    long long edge_count_ = 0;
    std::vector<std::vector<int>> adj_;   // 0-based rows of sorted 1-based neighbors
    std::vector<std::uint64_t> bits_;     // row-major adjacency bits when n <= kBitsetMaxN
    std::size_t row_words_ = 0;

    bool has_bits() const { return !bits_.empty(); }
    bool bit(int i0, int j0) const {
        return (bits_[static_cast<std::size_t>(i0) * row_words_ + j0 / 64] >> (j0 % 64)) & 1u;
    }
};

}  // namespace cosep
