#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace dsw {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A WellSpec violates one of its ordering or positivity constraints.
/// `constraint()` names the violated relation, e.g. "v_0 > v_2".
class InvalidSpec : public Error {
 public:
  InvalidSpec(std::string constraint, const std::string& detail)
      : Error("invalid spec: " + constraint + (detail.empty() ? "" : " (" + detail + ")")),
        constraint_(std::move(constraint)) {}
  const std::string& constraint() const noexcept { return constraint_; }

 private:
  std::string constraint_;
};

/// Spec file could not be read or tokenized.
class SpecParseError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of an arcsine or square root.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An iteration ran out of steps. Carries the last iterate and its residual.
class NoConvergence : public Error {
 public:
  NoConvergence(const std::string& what, double last_iterate, double residual)
      : Error(what), last_iterate_(last_iterate), residual_(residual) {}
  double last_iterate() const noexcept { return last_iterate_; }
  double residual() const noexcept { return residual_; }

 private:
  double last_iterate_;
  double residual_;
};

/// The excited-state fixed point drove the barrier exponent to zero or below.
class ExcitedBelowZero : public Error {
 public:
  using Error::Error;
};

/// The first-order tunneling expansion is not trustworthy for this spec.
class AssumptionViolated : public Error {
 public:
  using Error::Error;
};

class NotSymmetric : public Error {
 public:
  using Error::Error;
};

class PerturbationTooLarge : public Error {
 public:
  using Error::Error;
};

class EnergyOutOfBand : public Error {
 public:
  using Error::Error;
};

class MatchingResidualTooLarge : public Error {
 public:
  using Error::Error;
};

class GridTooCoarse : public Error {
 public:
  using Error::Error;
};

class BadRange : public Error {
 public:
  using Error::Error;
};

class LevelNotFound : public Error {
 public:
  using Error::Error;
};

class DegeneracyUnresolved : public Error {
 public:
  using Error::Error;
};

}  // namespace dsw
