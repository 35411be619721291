#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lt {

/// Base class for every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed formula, label or labelled-formula text.
class syntax_error : public error {
public:
    syntax_error(std::size_t offset, std::vector<std::string> expected, const std::string &found);

    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string> &expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

/// Operands built over different algebras.
class algebra_mismatch : public error {
public:
    using error::error;
};

/// A variable or label atom without a value in the homomorphism / valuation.
class unbound_symbol : public error {
public:
    explicit unbound_symbol(std::string symbol);
    const std::string &symbol() const noexcept { return symbol_; }

private:
    std::string symbol_;
};

/// Size limits (n_atoms, k, atom counts) exceeded.
class limit_exceeded : public error {
public:
    using error::error;
};

/// An enumeration would exceed its configured homomorphism budget.
class budget_exceeded : public error {
public:
    using error::error;
};

/// A formula outside the fragment an operation accepts.
class fragment_error : public error {
public:
    using error::error;
};

/// An operation's documented precondition does not hold.
class precondition_error : public error {
public:
    using error::error;
};

} // namespace lt
