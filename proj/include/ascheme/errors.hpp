#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ascheme {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by eigenvalue clustering when two raw values sit in (tol, 2*tol].
class ToleranceAmbiguity : public Error {
public:
    ToleranceAmbiguity(const std::string& what, double gap)
        : Error(what), gap_(gap) {}
    double gap() const noexcept { return gap_; }

private:
    double gap_;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

/// Parameter outside the supported domain of a family or operation.
class DomainError : public Error {
public:
    using Error::Error;
};

class GraphError : public Error {
public:
    enum class Kind { NotRegular, NotConnected, Invalid, TooLarge };

    GraphError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/// Violation of one of the four association scheme axioms. Witnesses are
/// the vertex pairs that exhibit the violation.
class SchemeAxiomError : public Error {
public:
    SchemeAxiomError(int axiom, const std::string& what,
                     std::vector<std::pair<int, int>> witnesses = {})
        : Error(what), axiom_(axiom), witnesses_(std::move(witnesses)) {}

    int axiom() const noexcept { return axiom_; }
    const std::vector<std::pair<int, int>>& witnesses() const noexcept { return witnesses_; }

private:
    int axiom_;
    std::vector<std::pair<int, int>> witnesses_;
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

} // namespace ascheme
