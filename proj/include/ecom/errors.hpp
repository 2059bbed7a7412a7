#pragma once

#include <stdexcept>
#include <string>

namespace ecom {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input: bad group spec, invalid table, unknown family, ...
/// Maps to CLI exit code 2.
class SpecError : public Error {
public:
    explicit SpecError(const std::string& msg) : Error(msg) {}
};

/// An enumeration or computation exceeded a configured budget.
/// Maps to CLI exit code 3.  `attempted` records how far we got before
/// giving up (e.g. number of subgroups or simplices already enumerated).
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& resource, long long attempted)
        : Error("budget exceeded for " + resource + " (attempted " +
                std::to_string(attempted) + ")"),
          resource_(resource),
          attempted_(attempted) {}

    const std::string& resource() const { return resource_; }
    long long attempted() const { return attempted_; }

private:
    std::string resource_;
    long long attempted_;
};

}  // namespace ecom
