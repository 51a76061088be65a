#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cosep {

// A graph that is not a cograph: some induced subgraph of size >= 2 is
// connected and has a connected complement. `witness` holds that vertex set.
class NotACograph : public std::runtime_error {
public:
    explicit NotACograph(std::vector<int> witness)
        : std::runtime_error("graph is not a cograph (witness size " +
                             std::to_string(witness.size()) + ")"),
          witness_(std::move(witness)) {}
    const std::vector<int>& witness() const { return witness_; }

private:
    std::vector<int> witness_;
};

// A permutation whose substitution decomposition hits a simple permutation of
// size >= 4. `witness` holds the offending positions (1-based).
class NotSeparable : public std::runtime_error {
public:
    explicit NotSeparable(std::vector<int> witness)
        : std::runtime_error("permutation is not separable (witness size " +
                             std::to_string(witness.size()) + ")"),
          witness_(std::move(witness)) {}
    const std::vector<int>& witness() const { return witness_; }

private:
    std::vector<int> witness_;
};

class SizeLimitExceeded : public std::runtime_error {
public:
    explicit SizeLimitExceeded(const std::string& what) : std::runtime_error(what) {}
};

class NonConvergence : public std::runtime_error {
public:
    explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

class NonMonotonic : public std::runtime_error {
public:
    explicit NonMonotonic(const std::string& what) : std::runtime_error(what) {}
};

class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

class OverflowSignal : public std::runtime_error {
public:
    explicit OverflowSignal(const std::string& what) : std::runtime_error(what) {}
};

class TruncationExceeded : public std::runtime_error {
public:
    explicit TruncationExceeded(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cosep
