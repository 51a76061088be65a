#include "cosep/statistics.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "cosep/errors.hpp"

namespace cosep {

SizePolynomial::SizePolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
    while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.empty() || coeffs_[0] != 1)
        throw std::invalid_argument("SizePolynomial: constant coefficient must be 1");
    for (const mpz_class& c : coeffs_)
        if (c < 0) throw std::invalid_argument("SizePolynomial: coefficients must be nonnegative");
}

const mpz_class& SizePolynomial::coeff(int k) const {
    static const mpz_class zero = 0;
    if (k < 0) throw std::invalid_argument("SizePolynomial::coeff: negative index");
    return k <= degree() ? coeffs_[k] : zero;
}

mpz_class SizePolynomial::total() const {
    mpz_class s = 0;
    for (const mpz_class& c : coeffs_) s += c;
    return s;
}

std::string SizePolynomial::to_text() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ",";
        os << coeffs_[i].get_str();
    }
    return os.str();
}

SizePolynomial SizePolynomial::from_text(const std::string& text) {
    std::vector<mpz_class> coeffs;
    std::istringstream is(text);
    std::string token;
    while (std::getline(is, token, ',')) {
        token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
        if (token.empty()) throw ParseError("SizePolynomial::from_text: empty coefficient");
        coeffs.emplace_back(token);
    }
    return SizePolynomial(std::move(coeffs));
}

namespace {

// Iterative post-order fold over a cotree. Combine(dec, child_values) runs on
// internal nodes; trees can be deep, so no call recursion.
template <class T, class Leaf, class Combine>
T fold_cotree(const Cotree& t, Leaf leaf, Combine combine) {
    struct Frame { const Cotree* node; std::size_t next; };
    std::vector<Frame> stack{{&t, 0}};
    std::vector<T> values;
    while (!stack.empty()) {
        auto& [node, next] = stack.back();
        if (node->is_leaf()) {
            values.push_back(leaf(*node));
            stack.pop_back();
            continue;
        }
        if (next < node->children().size()) {
            const Cotree* child = &node->children()[next];
            ++next;
            stack.push_back({child, 0});
        } else {
            std::size_t d = node->children().size();
            std::vector<T> args(values.end() - d, values.end());
            values.resize(values.size() - d);
            values.push_back(combine(node->decoration(), std::move(args)));
            stack.pop_back();
        }
    }
    return values.back();
}

template <class T, class Leaf, class Combine>
T fold_schroder(const SchroderTree& t, Leaf leaf, Combine combine) {
    struct Frame { const SchroderTree* node; std::size_t next; };
    std::vector<Frame> stack{{&t, 0}};
    std::vector<T> values;
    while (!stack.empty()) {
        auto& [node, next] = stack.back();
        if (node->is_leaf()) {
            values.push_back(leaf());
            stack.pop_back();
            continue;
        }
        if (next < node->children().size()) {
            const SchroderTree* child = &node->children()[next];
            ++next;
            stack.push_back({child, 0});
        } else {
            std::size_t d = node->children().size();
            std::vector<T> args(values.end() - d, values.end());
            values.resize(values.size() - d);
            values.push_back(combine(node->sign(), std::move(args)));
            stack.pop_back();
        }
    }
    return values.back();
}

long long sum_or_max(int take_max, const std::vector<long long>& xs) {
    long long r = take_max ? 0 : 0;
    if (take_max) {
        for (long long x : xs) r = std::max(r, x);
    } else {
        for (long long x : xs) r += x;
    }
    return r;
}

// product of children polynomials, smallest pair first
std::vector<mpz_class> balanced_product(std::vector<std::vector<mpz_class>> polys) {
    auto cmp = [](const std::vector<mpz_class>* a, const std::vector<mpz_class>* b) {
        return a->size() > b->size();
    };
    std::priority_queue<std::vector<mpz_class>*, std::vector<std::vector<mpz_class>*>,
                        decltype(cmp)> heap(cmp);
    std::deque<std::vector<mpz_class>> pool(polys.begin(), polys.end());
    for (auto& p : pool) heap.push(&p);
    while (heap.size() > 1) {
        auto* a = heap.top(); heap.pop();
        auto* b = heap.top(); heap.pop();
        std::vector<mpz_class> prod(a->size() + b->size() - 1);
        for (std::size_t i = 0; i < a->size(); ++i)
            for (std::size_t j = 0; j < b->size(); ++j)
                mpz_addmul(prod[i + j].get_mpz_t(), (*a)[i].get_mpz_t(), (*b)[j].get_mpz_t());
        pool.push_back(std::move(prod));
        heap.push(&pool.back());
    }
    return *heap.top();
}

std::vector<mpz_class> one_plus_sums(std::vector<std::vector<mpz_class>> polys) {
    std::size_t deg = 0;
    for (auto& p : polys) deg = std::max(deg, p.size());
    std::vector<mpz_class> out(deg);
    out[0] = 1;
    for (auto& p : polys)
        for (std::size_t k = 1; k < p.size(); ++k) out[k] += p[k];
    return out;
}

}  // namespace

int alpha(const Cotree& t) {
    return static_cast<int>(fold_cotree<long long>(
        t, [](const Cotree&) { return 1LL; },
        [](int dec, std::vector<long long> xs) { return sum_or_max(dec == 1, xs); }));
}

int omega(const Cotree& t) {
    return static_cast<int>(fold_cotree<long long>(
        t, [](const Cotree&) { return 1LL; },
        [](int dec, std::vector<long long> xs) { return sum_or_max(dec == 0, xs); }));
}

int lis(const SchroderTree& t) {
    return static_cast<int>(fold_schroder<long long>(
        t, []() { return 1LL; },
        [](TreeSign s, std::vector<long long> xs) { return sum_or_max(s == TreeSign::minus, xs); }));
}

int lds(const SchroderTree& t) {
    return static_cast<int>(fold_schroder<long long>(
        t, []() { return 1LL; },
        [](TreeSign s, std::vector<long long> xs) { return sum_or_max(s == TreeSign::plus, xs); }));
}

SizePolynomial independent_set_polynomial(const Cotree& t) {
    auto result = fold_cotree<std::vector<mpz_class>>(
        t, [](const Cotree&) { return std::vector<mpz_class>{1, 1}; },
        [](int dec, std::vector<std::vector<mpz_class>> xs) {
            return dec == 0 ? balanced_product(std::move(xs)) : one_plus_sums(std::move(xs));
        });
    return SizePolynomial(std::move(result));
}

SizePolynomial increasing_subsequence_polynomial(const SchroderTree& t) {
    auto result = fold_schroder<std::vector<mpz_class>>(
        t, []() { return std::vector<mpz_class>{1, 1}; },
        [](TreeSign s, std::vector<std::vector<mpz_class>> xs) {
            return s == TreeSign::plus ? balanced_product(std::move(xs))
                                       : one_plus_sums(std::move(xs));
        });
    return SizePolynomial(std::move(result));
}

int alpha_graph_bruteforce(const Graph& g) {
    int n = g.size();
    if (n > 25) throw SizeLimitExceeded("alpha_graph_bruteforce: n must be at most 25");
    std::vector<std::uint32_t> closed(n);
    for (int v = 1; v <= n; ++v) {
        std::uint32_t m = 1u << (v - 1);
        for (int w : g.neighbors(v)) m |= 1u << (w - 1);
        closed[v - 1] = m;
    }
    // branch on a max-degree vertex: either exclude it or take it
    std::function<int(std::uint32_t)> mis = [&](std::uint32_t live) -> int {
        if (live == 0) return 0;
        int best_v = -1, best_deg = -1;
        for (std::uint32_t s = live; s; s &= s - 1) {
            int v = __builtin_ctz(s);
            int deg = __builtin_popcount(closed[v] & live) - 1;
            if (deg > best_deg) { best_deg = deg; best_v = v; }
        }
        if (best_deg == 0) return __builtin_popcount(live);  // all isolated
        int without = mis(live & ~(1u << best_v));
        int with = 1 + mis(live & ~closed[best_v]);
        return std::max(without, with);
    };
    return mis(n == 32 ? ~0u : ((1u << n) - 1));
}

}  // namespace cosep
