#pragma once

#include <stdexcept>
#include <string>

namespace kcob {

// Precondition failures use the standard exceptions (std::invalid_argument,
// std::domain_error, std::out_of_range). InvariantViolation is reserved for
// two independent computations disagreeing, i.e. a bug in this library.
class InvariantViolation : public std::logic_error {
public:
    explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace kcob
