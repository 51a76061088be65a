#include "cosep/permutation.hpp"

#include <sstream>
#include <stdexcept>

#include "cosep/errors.hpp"

namespace cosep {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
    int n = static_cast<int>(values_.size());
    std::vector<char> seen(n + 1, 0);
    for (int v : values_) {
        if (v < 1 || v > n || seen[v])
            throw std::invalid_argument("Permutation: values must be a bijection on 1..n");
        seen[v] = 1;
    }
}

std::string Permutation::to_text() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) os << ",";
        os << values_[i];
    }
    return os.str();
}

Permutation Permutation::from_text(const std::string& text) {
    std::vector<int> vals;
    std::string token;
    std::istringstream is(text);
    while (std::getline(is, token, ',')) {
        std::istringstream ts(token);
        int v;
        if (!(ts >> v)) throw ParseError("Permutation::from_text: bad entry '" + token + "'");
        std::string rest;
        if (ts >> rest) throw ParseError("Permutation::from_text: trailing junk '" + rest + "'");
        vals.push_back(v);
    }
    if (vals.empty()) throw ParseError("Permutation::from_text: empty input");
    return Permutation(std::move(vals));
}

Graph inversion_graph(const Permutation& sigma) {
    int n = sigma.size();
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (sigma(i) > sigma(j)) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

}  // namespace cosep
