#ifndef FARHI_ERRORS_HPP
#define FARHI_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace farhi {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Syntax error in polynomial text; position is a 0-based byte offset.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// f(x) and f(x+i) share a nonconstant factor over Q for some 1 <= i <= k.
class HypothesisViolation : public Error {
public:
    HypothesisViolation(const std::string& msg, unsigned shift)
        : Error(msg), shift_(shift) {}
    unsigned shift() const { return shift_; }

private:
    unsigned shift_;
};

class ZeroPolynomial : public Error {
public:
    explicit ZeroPolynomial(const std::string& msg) : Error(msg) {}
};

// g requested at a point of the zero set; use the extended evaluator.
class ZeroWindow : public Error {
public:
    explicit ZeroWindow(const std::string& msg) : Error(msg) {}
};

class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(const std::string& msg) : Error(msg) {}
};

}  // namespace farhi

#endif
