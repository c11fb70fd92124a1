#pragma once

#include <stdexcept>
#include <string>

namespace lightclock {

/// Raised when an argument falls outside the physical or mathematical domain
/// of an operation (superluminal speeds, singular surfaces, inconsistent
/// count records, ...). The message names the violated condition.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace lightclock
