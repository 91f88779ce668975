#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sltaylor {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid construction parameters: too few nodes for a stencil, bad interval, etc.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of definition (x outside [a,b], x < x0 ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A node-located failure: non-finite sample, vanishing seed.
class NodeError : public Error {
 public:
  NodeError(const std::string& what, std::size_t node, double x)
      : Error(what + " at node " + std::to_string(node) + " (x = " + std::to_string(x) + ")"),
        node_(node),
        x_(x) {}

  std::size_t node() const noexcept { return node_; }
  double x() const noexcept { return x_; }

 private:
  std::size_t node_;
  double x_;
};

class SamplingError : public NodeError {
 public:
  using NodeError::NodeError;
};

/// The seed f vanishes (|f| below threshold) somewhere on the grid.
class SeedError : public NodeError {
 public:
  using NodeError::NodeError;
};

/// Requested order/truncation exceeds what was built.
class OrderError : public Error {
 public:
  using Error::Error;
};

/// Jets anchored at different points were combined.
class AnchorError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Numerical breakdown: rank collapse, zero jet division, broken internal invariant.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace sltaylor
