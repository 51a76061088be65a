#include "cosep/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cosep/errors.hpp"

namespace cosep {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n), adj_(n) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    for (auto& [a, b] : edges) {
        if (a < 1 || a > n || b < 1 || b > n)
            throw std::invalid_argument("Graph: vertex out of range");
        if (a == b) throw std::invalid_argument("Graph: loops are not allowed");
        if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edge_count_ = static_cast<long long>(edges.size());
    for (auto [a, b] : edges) {
        adj_[a - 1].push_back(b);
        adj_[b - 1].push_back(a);
    }
    for (auto& row : adj_) std::sort(row.begin(), row.end());
    if (n_ > 0 && n_ <= kBitsetMaxN) {
        row_words_ = static_cast<std::size_t>((n_ + 63) / 64);
        bits_.assign(static_cast<std::size_t>(n_) * row_words_, 0);
        for (auto [a, b] : edges) {
            int i0 = a - 1, j0 = b - 1;
            bits_[static_cast<std::size_t>(i0) * row_words_ + j0 / 64] |= 1ULL << (j0 % 64);
            bits_[static_cast<std::size_t>(j0) * row_words_ + i0 / 64] |= 1ULL << (i0 % 64);
        }
    }
}

bool Graph::edge(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) throw std::invalid_argument("Graph::edge: vertex out of range");
    if (i == j) return false;
    if (has_bits()) return bit(i - 1, j - 1);
    const auto& row = adj_[i - 1];
    return std::binary_search(row.begin(), row.end(), j);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int i = 1; i <= n_; ++i)
        for (int j : adj_[i - 1])
            if (j > i) out.emplace_back(i, j);
    return out;
}

Graph Graph::complement() const {
    std::vector<std::pair<int, int>> comp_edges;
    for (int i = 1; i <= n_; ++i) {
        const auto& row = adj_[i - 1];
        std::size_t p = 0;
        for (int j = i + 1; j <= n_; ++j) {
            while (p < row.size() && row[p] < j) ++p;
            if (p == row.size() || row[p] != j) comp_edges.emplace_back(i, j);
        }
    }
    return Graph(n_, std::move(comp_edges));
}

Graph Graph::induced(const std::vector<int>& vertices) const {
    std::vector<int> index(n_ + 1, 0);
    for (std::size_t k = 0; k < vertices.size(); ++k) {
        int v = vertices[k];
        if (v < 1 || v > n_) throw std::invalid_argument("Graph::induced: vertex out of range");
        index[v] = static_cast<int>(k) + 1;
    }
    std::vector<std::pair<int, int>> sub_edges;
    for (std::size_t k = 0; k < vertices.size(); ++k)
        for (int w : adj_[vertices[k] - 1])
            if (index[w] > static_cast<int>(k) + 1)
                sub_edges.emplace_back(static_cast<int>(k) + 1, index[w]);
    return Graph(static_cast<int>(vertices.size()), std::move(sub_edges));
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(n_ + 1, 0);
    std::vector<int> stack;
    for (int s = 1; s <= n_; ++s) {
        if (seen[s]) continue;
        seen[s] = 1;
        stack.assign(1, s);
        std::vector<int> comp;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : adj_[v - 1])
                if (!seen[w]) { seen[w] = 1; stack.push_back(w); }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::vector<std::vector<int>> Graph::co_components() const {
    // BFS in the complement using two-pointer sweeps of sorted candidate lists
    // against sorted adjacency, so the complement is never materialized.
    std::vector<std::vector<int>> comps;
    std::vector<int> candidates(n_);
    for (int v = 1; v <= n_; ++v) candidates[v - 1] = v;
    std::vector<int> queue, kept, next_candidates;
    while (!candidates.empty()) {
        int s = candidates.front();
        candidates.erase(candidates.begin());
        std::vector<int> comp{s};
        queue.assign(1, s);
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            const auto& row = adj_[v - 1];
            kept.clear();
            next_candidates.clear();
            std::size_t p = 0;
            for (int c : candidates) {
                while (p < row.size() && row[p] < c) ++p;
                if (p < row.size() && row[p] == c) kept.push_back(c);   // adjacent: stays
                else next_candidates.push_back(c);                      // non-adjacent: joins
            }
            for (int c : next_candidates) { comp.push_back(c); queue.push_back(c); }
            candidates.swap(kept);
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return comps;
}

bool Graph::operator==(const Graph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
}

std::string Graph::to_text() const {
    std::ostringstream os;
    os << n_ << "\n";
    for (auto [a, b] : edges()) os << a << " " << b << "\n";
    return os.str();
}

Graph Graph::from_text(const std::string& text) {
    std::istringstream is(text);
    int n;
    if (!(is >> n)) throw ParseError("Graph::from_text: missing vertex count");
    std::vector<std::pair<int, int>> edges;
    int a, b;
    while (is >> a) {
        if (!(is >> b)) throw ParseError("Graph::from_text: dangling endpoint");
        edges.emplace_back(a, b);
    }
    return Graph(n, std::move(edges));
}

}  // namespace cosep
