#pragma once

#include <stdexcept>
#include <string>

namespace sumsetlab {

enum class ErrorKind {
    input,     // malformed or out-of-contract arguments
    budget,    // a configured resource cap (bits, nodes, range) would be exceeded
    mismatch,  // two independent evaluators disagreed; always a bug
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string & what) : std::runtime_error(what), kind_(kind) {}

    auto kind() const noexcept -> ErrorKind { return kind_; }

private:
    ErrorKind kind_;
};

class InputError : public Error {
public:
    explicit InputError(const std::string & what) : Error(ErrorKind::input, what) {}
};

class BudgetError : public Error {
public:
    explicit BudgetError(const std::string & what) : Error(ErrorKind::budget, what) {}
};

class MismatchError : public Error {
public:
    explicit MismatchError(const std::string & what) : Error(ErrorKind::mismatch, what) {}
};

}
