#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rcd {

// Base for all domain errors; the CLI maps subclasses onto exit codes.
class DesignError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotPrimeError : public DesignError {
public:
    using DesignError::DesignError;
};

class BadShapeError : public DesignError {
public:
    using DesignError::DesignError;
};

class RankDeficientError : public DesignError {
public:
    RankDeficientError(std::size_t rank, std::size_t expected)
        : DesignError("rank deficient: rank " + std::to_string(rank) + " < " +
                      std::to_string(expected) + " rows"),
          rank_(rank),
          expected_(expected) {}

    std::size_t rank() const noexcept { return rank_; }
    std::size_t expected() const noexcept { return expected_; }

private:
    std::size_t rank_;
    std::size_t expected_;
};

class InvalidPointError : public DesignError {
public:
    explicit InvalidPointError(const std::string& what)
        : DesignError(what), column_(npos) {}
    InvalidPointError(const std::string& what, std::size_t column)
        : DesignError(what + " (column " + std::to_string(column) + ")"), column_(column) {}

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    bool has_column() const noexcept { return column_ != npos; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t column_;
};

class CellCapExceededError : public DesignError {
public:
    using DesignError::DesignError;
};

class InadmissibleError : public DesignError {
public:
    using DesignError::DesignError;
};

// Raised for p > q requests; callers must transpose explicitly.
class UnsupportedParametersError : public DesignError {
public:
    using DesignError::DesignError;
};

class SearchSpaceTooLargeError : public DesignError {
public:
    using DesignError::DesignError;
};

class MainEffectConfoundedError : public DesignError {
public:
    using DesignError::DesignError;
};

class WrongPropositionError : public DesignError {
public:
    using DesignError::DesignError;
};

class BalanceInfeasibleError : public DesignError {
public:
    using DesignError::DesignError;
};

class ParseError : public DesignError {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : DesignError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                      ": " + what),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class IoError : public DesignError {
public:
    using DesignError::DesignError;
};

}  // namespace rcd
