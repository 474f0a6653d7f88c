#pragma once

#include <stdexcept>
#include <string>

namespace fas {

/// Argument outside the mathematical domain of a function (e.g. Q^-1 of 1.5).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Non-conforming vector/matrix shapes.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Violated precondition on an otherwise well-typed argument.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Invalid or inconsistent scenario / experiment configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A feasible set that should be nonempty turned out empty.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// h = 0: no beamformer direction exists.
class DegenerateChannelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fas

namespace fas {

/// File-system failure; the message carries the offending path.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fas
