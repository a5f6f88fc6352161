#pragma once

#include <stdexcept>
#include <string>

namespace toric {

/// Broad failure category; the CLI maps each one to a process exit code.
enum class ErrorKind {
  InvalidArgument,
  NotSeparable,
  NoBoundedComponent,
  NoCriticalValues,
  UnsupportedShape,
  Numeric,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what)
      : Error(ErrorKind::InvalidArgument, what) {}
};

/// A mixed monomial z1^e1 z2^e2 (e1, e2 > 0) survived the pullback.
class NotSeparable : public Error {
 public:
  NotSeparable(unsigned e1, unsigned e2, const std::string& coefficient)
      : Error(ErrorKind::NotSeparable,
              "not separable: mixed monomial z1^" + std::to_string(e1) +
                  "*z2^" + std::to_string(e2) + " has coefficient " +
                  coefficient),
        e1_(e1),
        e2_(e2),
        coefficient_(coefficient) {}

  unsigned e1() const noexcept { return e1_; }
  unsigned e2() const noexcept { return e2_; }
  const std::string& coefficient() const noexcept { return coefficient_; }

 private:
  unsigned e1_;
  unsigned e2_;
  std::string coefficient_;
};

class NoBoundedComponent : public Error {
 public:
  explicit NoBoundedComponent(const std::string& what)
      : Error(ErrorKind::NoBoundedComponent, what) {}
};

class NoCriticalValues : public Error {
 public:
  explicit NoCriticalValues(const std::string& what)
      : Error(ErrorKind::NoCriticalValues, what) {}
};

/// Potential falls outside the single-barrier shape the analysis handles.
class UnsupportedShape : public Error {
 public:
  explicit UnsupportedShape(const std::string& what)
      : Error(ErrorKind::UnsupportedShape, what) {}
};

class MultipleCriticalPoints : public UnsupportedShape {
 public:
  explicit MultipleCriticalPoints(int count)
      : UnsupportedShape("V' has " + std::to_string(count) +
                         " distinct positive roots; expected at most one"),
        count_(count) {}

  int count() const noexcept { return count_; }

 private:
  int count_;
};

class NumericError : public Error {
 public:
  explicit NumericError(const std::string& what)
      : Error(ErrorKind::Numeric, what) {}
};

class RootNotBracketed : public NumericError {
 public:
  using NumericError::NumericError;
};

class DegenerateDenominator : public NumericError {
 public:
  using NumericError::NumericError;
};

class QuadratureNotConverged : public NumericError {
 public:
  QuadratureNotConverged(const std::string& what, double achieved)
      : NumericError(what), achieved_(achieved) {}

  double achieved() const noexcept { return achieved_; }

 private:
  double achieved_;
};

}  // namespace toric

namespace toric {

/// No finite bounding box for a Monte Carlo estimate.
class UnboundedRegion : public NoBoundedComponent {
 public:
  using NoBoundedComponent::NoBoundedComponent;
};

}  // namespace toric
