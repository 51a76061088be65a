#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "cosep/cotree.hpp"
#include "cosep/graph.hpp"
#include "cosep/schroder.hpp"

namespace cosep {

// Integer coefficient vector; coeffs[k] counts the marked subsets of size k
// (independent sets of a cograph, or increasing subsequences of a separable
// permutation). coeffs[0] is always 1 and the degree equals the maximum
// subset size.
class SizePolynomial {
public:
    SizePolynomial() : coeffs_{1} {}
    explicit SizePolynomial(std::vector<mpz_class> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const mpz_class& coeff(int k) const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    mpz_class total() const;  // value at 1: total number of marked subsets

    bool operator==(const SizePolynomial& other) const { return coeffs_ == other.coeffs_; }

    // Comma-separated decimal coefficients, lowest degree first.
    std::string to_text() const;
    static SizePolynomial from_text(const std::string& text);

private:
    std::vector<mpz_class> coeffs_;
};

// Independence number of the encoded cograph: 0-nodes add, 1-nodes take max.
int alpha(const Cotree& t);

// Clique number; equals alpha of the decoration-swapped tree.
int omega(const Cotree& t);

// Longest increasing subsequence of perm(t): + adds, - takes max.
int lis(const SchroderTree& t);

// Longest decreasing subsequence of perm(t).
int lds(const SchroderTree& t);

// coeffs[k] = number of independent sets of size k in cograph(t).
SizePolynomial independent_set_polynomial(const Cotree& t);

// coeffs[k] = number of increasing subsequences of length k in perm(t).
SizePolynomial increasing_subsequence_polynomial(const SchroderTree& t);

// Exact independence number by branch and bound; requires n <= 25.
int alpha_graph_bruteforce(const Graph& g);

}  // namespace cosep
