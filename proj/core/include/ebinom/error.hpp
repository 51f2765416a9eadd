#pragma once

#include <stdexcept>
#include <string>

namespace ebinom {

// Raised when an argument lies outside the domain an operation is defined on
// (n = 0, q = 0, nu = 0, n*q odd for a central coefficient, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

namespace detail {

inline void require_positive(long long value, const char* name) {
    if (value < 1) {
        throw DomainError(std::string(name) + " must be a positive integer, got " +
                          std::to_string(value));
    }
}

}  // namespace detail

}  // namespace ebinom
