#include "cosep/schroder.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

#include "cosep/errors.hpp"

namespace cosep {

SchroderTree SchroderTree::leaf() { return SchroderTree(); }

SchroderTree SchroderTree::internal(TreeSign sign, std::vector<SchroderTree> children) {
    if (children.size() < 2)
        throw std::invalid_argument("SchroderTree::internal: at least two children required");
    for (const SchroderTree& c : children)
        if (!c.is_leaf() && c.sign() == sign)
            throw std::invalid_argument("SchroderTree::internal: signs must alternate");
    SchroderTree t;
    t.internal_ = true;
    t.sign_ = sign;
    t.size_ = 0;
    for (const SchroderTree& c : children) t.size_ += c.size();
    t.children_ = std::move(children);
    return t;
}

TreeSign SchroderTree::sign() const {
    if (!internal_) throw std::logic_error("SchroderTree::sign: leaf has no sign");
    return sign_;
}

bool SchroderTree::operator==(const SchroderTree& other) const {
    return internal_ == other.internal_ && sign_ == other.sign_ && size_ == other.size_ &&
           children_ == other.children_;
}

std::string SchroderTree::to_text() const {
    std::string out;
    struct Frame { const SchroderTree* node; std::size_t next_child; };
    std::vector<Frame> stack{{this, 0}};
    while (!stack.empty()) {
        auto& [node, next] = stack.back();
        if (node->is_leaf()) {
            out += "L";
            stack.pop_back();
            continue;
        }
        if (next == 0) out += (node->sign_ == TreeSign::plus ? "+(" : "-(");
        if (next < node->children_.size()) {
            if (next > 0) out += ",";
            const SchroderTree* child = &node->children_[next];
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

struct SchroderParser {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() { while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos; }

    char peek() {
        skip_ws();
        if (pos >= s.size()) throw ParseError("schroder parse: unexpected end of input");
        return s[pos];
    }

    void expect(char c) {
        if (peek() != c)
            throw ParseError(std::string("schroder parse: expected '") + c + "' at position " +
                             std::to_string(pos));
        ++pos;
    }

    SchroderTree node() {
        char c = peek();
        if (c == 'L') { ++pos; return SchroderTree::leaf(); }
        if (c == '+' || c == '-') {
            TreeSign sign = (c == '+') ? TreeSign::plus : TreeSign::minus;
            ++pos;
            expect('(');
            std::vector<SchroderTree> children;
            children.push_back(node());
            while (peek() == ',') { ++pos; children.push_back(node()); }
            expect(')');
            return SchroderTree::internal(sign, std::move(children));
        }
        throw ParseError(std::string("schroder parse: unexpected character '") + c + "'");
    }
};

}  // namespace

SchroderTree SchroderTree::from_text(const std::string& text) {
    SchroderParser p{text};
    SchroderTree t = p.node();
    p.skip_ws();
    if (p.pos != text.size()) throw ParseError("schroder parse: trailing input");
    return t;
}

Permutation perm_of_tree(const SchroderTree& t) {
    std::vector<int> values(t.size());
    // assign(node, pos, base): node's leaves occupy positions pos..pos+size-1
    // and values base+1..base+size
    std::function<void(const SchroderTree&, int, int)> assign = [&](const SchroderTree& node,
                                                                    int pos, int base) {
        if (node.is_leaf()) {
            values[pos] = base + 1;
            return;
        }
        if (node.sign() == TreeSign::plus) {
            int p = pos, b = base;
            for (const SchroderTree& c : node.children()) {
                assign(c, p, b);
                p += c.size();
                b += c.size();
            }
        } else {
            int p = pos, b = base + node.size();
            for (const SchroderTree& c : node.children()) {
                b -= c.size();
                assign(c, p, b);
                p += c.size();
            }
        }
    };
    assign(t, 0, 0);
    return Permutation(std::move(values));
}

namespace {

// Finest direct-sum split points of values[lo..hi] (inclusive, 0-based): after
// position i the prefix is a sum block iff its value set is exactly the lowest
// i-lo+1 values. Skew sums are the mirror with the highest values first.
SchroderTree decompose(const std::vector<int>& values, int lo, int hi) {
    if (lo == hi) return SchroderTree::leaf();
    int lo_val = *std::min_element(values.begin() + lo, values.begin() + hi + 1);
    int hi_val = *std::max_element(values.begin() + lo, values.begin() + hi + 1);

    auto cuts = [&](bool plus) {
        std::vector<int> ends;  // inclusive block ends
        int run_max = 0, run_min = values.size() + 1;
        for (int i = lo; i <= hi; ++i) {
            run_max = std::max(run_max, values[i]);
            run_min = std::min(run_min, values[i]);
            bool cut = plus ? (run_max - lo_val == i - lo) : (hi_val - run_min == i - lo);
            if (cut) ends.push_back(i);
        }
        return ends;
    };

    for (bool plus : {true, false}) {
        std::vector<int> ends = cuts(plus);
        if (ends.size() < 2) continue;  // a single block means no split this way
        std::vector<SchroderTree> children;
        int start = lo;
        for (int e : ends) {
            children.push_back(decompose(values, start, e));
            start = e + 1;
        }
        return SchroderTree::internal(plus ? TreeSign::plus : TreeSign::minus,
                                      std::move(children));
    }
    std::vector<int> witness(hi - lo + 1);
    for (int i = lo; i <= hi; ++i) witness[i - lo] = i + 1;
    throw NotSeparable(std::move(witness));
}

}  // namespace

SchroderTree tree_of_perm(const Permutation& sigma) {
    return decompose(sigma.values(), 0, sigma.size() - 1);
}

bool is_separable(const Permutation& sigma) {
    try {
        tree_of_perm(sigma);
        return true;
    } catch (const NotSeparable&) {
        return false;
    }
}

}  // namespace cosep
