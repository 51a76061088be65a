#include "cosep/cotree.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "cosep/errors.hpp"

namespace cosep {

Cotree Cotree::leaf(int label) {
    if (label < 1) throw std::invalid_argument("Cotree::leaf: label must be positive");
    Cotree t;
    t.label_ = label;
    return t;
}

Cotree Cotree::internal(int decoration, std::vector<Cotree> children) {
    if (decoration != 0 && decoration != 1)
        throw std::invalid_argument("Cotree::internal: decoration must be 0 or 1");
    if (children.size() < 2)
        throw std::invalid_argument("Cotree::internal: at least two children required");
    for (const Cotree& c : children)
        if (!c.is_leaf() && c.decoration() == decoration)
            throw std::invalid_argument("Cotree::internal: decorations must alternate");
    std::vector<std::pair<std::pair<int, std::string>, std::size_t>> keys;
    keys.reserve(children.size());
    for (std::size_t i = 0; i < children.size(); ++i)
        keys.push_back({{children[i].size(), children[i].to_text()}, i});
    std::sort(keys.begin(), keys.end());
    Cotree t;
    t.decoration_ = decoration;
    t.size_ = 0;
    t.children_.reserve(children.size());
    for (auto& [key, idx] : keys) {
        t.size_ += children[idx].size();
        t.children_.push_back(std::move(children[idx]));
    }
    return t;
}

int Cotree::label() const {
    if (!is_leaf()) throw std::logic_error("Cotree::label: not a leaf");
    return label_;
}

int Cotree::decoration() const {
    if (is_leaf()) throw std::logic_error("Cotree::decoration: leaf has no decoration");
    return decoration_;
}

bool Cotree::operator==(const Cotree& other) const {
    if (decoration_ != other.decoration_ || label_ != other.label_ || size_ != other.size_)
        return false;
    return children_ == other.children_;
}

std::string Cotree::to_text() const {
    std::string out;
    // explicit stack; sampled trees are shallow, parsed ones need not be
    struct Frame { const Cotree* node; std::size_t next_child; };
    std::vector<Frame> stack{{this, 0}};
    while (!stack.empty()) {
        auto& [node, next] = stack.back();
        if (node->is_leaf()) {
            out += "L" + std::to_string(node->label_);
            stack.pop_back();
            continue;
        }
        if (next == 0) out += std::to_string(node->decoration_) + "(";
        if (next < node->children_.size()) {
            if (next > 0) out += ",";
            const Cotree* child = &node->children_[next];
            ++next;
            stack.push_back({child, 0});
        } else {
            out += ")";
            stack.pop_back();
        }
    }
    return out;
}

namespace {

struct CotreeParser {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() { while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos; }

    char peek() {
        skip_ws();
        if (pos >= s.size()) throw ParseError("cotree parse: unexpected end of input");
        return s[pos];
    }

    void expect(char c) {
        if (peek() != c)
            throw ParseError(std::string("cotree parse: expected '") + c + "' at position " +
                             std::to_string(pos));
        ++pos;
    }

    int number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("cotree parse: expected a number at position " +
                                           std::to_string(start));
        return std::stoi(s.substr(start, pos - start));
    }

    Cotree node() {
        char c = peek();
        if (c == 'L') {
            ++pos;
            return Cotree::leaf(number());
        }
        if (c == '0' || c == '1') {
            int dec = c - '0';
            ++pos;
            expect('(');
            std::vector<Cotree> children;
            children.push_back(node());
            while (peek() == ',') { ++pos; children.push_back(node()); }
            expect(')');
            return Cotree::internal(dec, std::move(children));
        }
        throw ParseError(std::string("cotree parse: unexpected character '") + c + "'");
    }
};

}  // namespace

Cotree Cotree::from_text(const std::string& text) {
    CotreeParser p{text};
    Cotree t = p.node();
    p.skip_ws();
    if (p.pos != text.size()) throw ParseError("cotree parse: trailing input");
    std::vector<int> lbl = t.labels();
    for (int i = 0; i < t.size(); ++i)
        if (lbl[i] != i + 1)
            throw ParseError("cotree parse: leaf labels must be exactly 1..n");
    return t;
}

std::vector<int> Cotree::labels() const {
    std::vector<int> out;
    out.reserve(size_);
    std::vector<const Cotree*> stack{this};
    while (!stack.empty()) {
        const Cotree* node = stack.back();
        stack.pop_back();
        if (node->is_leaf()) out.push_back(node->label_);
        else
            for (const Cotree& c : node->children_) stack.push_back(&c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Graph cograph_of_cotree(const Cotree& t) {
    int n = t.size();
    {
        std::vector<int> lbl = t.labels();
        for (int i = 0; i < n; ++i)
            if (lbl[i] != i + 1)
                throw std::invalid_argument("cograph_of_cotree: leaf labels must be exactly 1..n");
    }
    std::vector<std::pair<int, int>> edges;
    // post-order collection of leaf sets; joins add all cross pairs
    std::function<std::vector<int>(const Cotree&)> collect = [&](const Cotree& node) {
        if (node.is_leaf()) return std::vector<int>{node.label()};
        std::vector<std::vector<int>> parts;
        parts.reserve(node.children().size());
        for (const Cotree& c : node.children()) parts.push_back(collect(c));
        if (node.decoration() == 1)
            for (std::size_t a = 0; a + 1 < parts.size(); ++a)
                for (std::size_t b = a + 1; b < parts.size(); ++b)
                    for (int u : parts[a])
                        for (int v : parts[b]) edges.emplace_back(u, v);
        std::vector<int> all;
        for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
        return all;
    };
    collect(t);
    return Graph(n, std::move(edges));
}

namespace {

std::vector<std::vector<int>> subset_components(const Graph& g, const std::vector<int>& verts,
                                                std::vector<int>& mark, int stamp) {
    for (int v : verts) mark[v] = stamp;
    std::vector<std::vector<int>> comps;
    std::vector<int> stack;
    for (int s : verts) {
        if (mark[s] != stamp) continue;
        mark[s] = stamp - 1;
        stack.assign(1, s);
        std::vector<int> comp;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.neighbors(v))
                if (mark[w] == stamp) { mark[w] = stamp - 1; stack.push_back(w); }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

// Components of the complement restricted to `verts` (sorted), without
// materializing the complement: two-pointer sweep of candidates vs adjacency.
std::vector<std::vector<int>> subset_co_components(const Graph& g, std::vector<int> candidates) {
    std::vector<std::vector<int>> comps;
    std::vector<int> queue, kept, moved;
    while (!candidates.empty()) {
        int s = candidates.front();
        candidates.erase(candidates.begin());
        std::vector<int> comp{s};
        queue.assign(1, s);
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            const auto& row = g.neighbors(v);
            kept.clear();
            moved.clear();
            std::size_t p = 0;
            for (int c : candidates) {
                while (p < row.size() && row[p] < c) ++p;
                if (p < row.size() && row[p] == c) kept.push_back(c);
                else moved.push_back(c);
            }
            for (int c : moved) { comp.push_back(c); queue.push_back(c); }
            candidates.swap(kept);
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

Cotree build_cotree(const Graph& g, const std::vector<int>& verts, std::vector<int>& mark,
                    int& stamp) {
    if (verts.size() == 1) return Cotree::leaf(verts[0]);
    stamp += 2;
    auto comps = subset_components(g, verts, mark, stamp);
    if (comps.size() >= 2) {
        std::vector<Cotree> children;
        children.reserve(comps.size());
        for (auto& c : comps) children.push_back(build_cotree(g, c, mark, stamp));
        return Cotree::internal(0, std::move(children));
    }
    auto cocomps = subset_co_components(g, verts);
    if (cocomps.size() >= 2) {
        std::vector<Cotree> children;
        children.reserve(cocomps.size());
        for (auto& c : cocomps) children.push_back(build_cotree(g, c, mark, stamp));
        return Cotree::internal(1, std::move(children));
    }
    throw NotACograph(verts);
}

}  // namespace

Cotree cotree_of_cograph(const Graph& g) {
    if (g.size() == 0) throw std::invalid_argument("cotree_of_cograph: empty graph");
    std::vector<int> verts(g.size());
    for (int v = 1; v <= g.size(); ++v) verts[v - 1] = v;
    std::vector<int> mark(g.size() + 1, 0);
    int stamp = 0;
    return build_cotree(g, verts, mark, stamp);
}

bool is_cograph(const Graph& g) {
    try {
        cotree_of_cograph(g);
        return true;
    } catch (const NotACograph&) {
        return false;
    }
}

Cotree swap_decorations(const Cotree& t) {
    if (t.is_leaf()) return t;
    std::vector<Cotree> children;
    children.reserve(t.children().size());
    for (const Cotree& c : t.children()) children.push_back(swap_decorations(c));
    return Cotree::internal(1 - t.decoration(), std::move(children));
}

}  // namespace cosep
