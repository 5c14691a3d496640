#pragma once

#include <stdexcept>
#include <string>

namespace plcsec {

/// Argument outside the mathematical domain of an operation (x <= 0 for a
/// density, t < 0 for the Q approximation, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Invalid model or run configuration. `field` names the offending setting
/// when one is known (dotted path for config files).
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what, std::string field = {})
      : std::invalid_argument(field.empty() ? what : field + ": " + what),
        field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// A numerical evaluation produced a non-finite value.
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace plcsec
