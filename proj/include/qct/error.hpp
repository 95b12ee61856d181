#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qct {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operations mixing relation sets or tables from different calculi.
class SchemaMismatch : public Error {
public:
    using Error::Error;
};

// Bad domain parameters, or a domain too small for the request.
class DomainError : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace qct
