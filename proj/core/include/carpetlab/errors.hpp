#pragma once

#include <stdexcept>
#include <string>

namespace carpetlab {

/// Invalid carpet description, weight vector or flag value.
/// The CLI maps this to exit status 1.
class SpecError : public std::runtime_error {
public:
    explicit SpecError(const std::string& what) : std::runtime_error(what) {}
};

/// Enumeration budget or subdivision depth exceeded.
/// The CLI maps this to exit status 2.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace carpetlab
