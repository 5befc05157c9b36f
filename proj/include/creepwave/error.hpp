// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace creepwave {

enum class ErrorKind {
  Domain,       // argument outside the region where the formula is defined
  Range,        // result cannot be represented / expansion no longer valid
  Precision,    // evaluation lost too many digits or did not converge
  Convergence,  // iterative solver did not reach tolerance
  Pole,         // argument sits on (or too close to) a pole
  Singularity,  // amplitude blows up (conjugate point, caustic)
  Validity,     // asymptotic representation used outside its region
  Consistency,  // internal numeric drift beyond the allowed bound
  Degenerate,   // vanishing Jacobian or gradient
};

const char* to_string(ErrorKind kind) noexcept;

/// Base of every numeric failure raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorKind::Domain, what) {}
};

class RangeError : public Error {
 public:
  explicit RangeError(const std::string& what) : Error(ErrorKind::Range, what) {}
};

/// Carries the partial result reached before the evaluation gave up.
class PrecisionError : public Error {
 public:
  PrecisionError(const std::string& what, std::complex<double> partial = {})
      : Error(ErrorKind::Precision, what), partial_(partial) {}

  std::complex<double> partial() const noexcept { return partial_; }

 private:
  std::complex<double> partial_;
};

/// Carries the last iterate of the failed solve.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, std::complex<double> last_iterate, int iterations)
      : Error(ErrorKind::Convergence, what), last_(last_iterate), iterations_(iterations) {}

  std::complex<double> last_iterate() const noexcept { return last_; }
  int iterations() const noexcept { return iterations_; }

 private:
  std::complex<double> last_;
  int iterations_;
};

class PoleError : public Error {
 public:
  explicit PoleError(const std::string& what) : Error(ErrorKind::Pole, what) {}
};

class SingularityError : public Error {
 public:
  explicit SingularityError(const std::string& what) : Error(ErrorKind::Singularity, what) {}
};

class ValidityError : public Error {
 public:
  explicit ValidityError(const std::string& what) : Error(ErrorKind::Validity, what) {}
};

class ConsistencyError : public Error {
 public:
  explicit ConsistencyError(const std::string& what) : Error(ErrorKind::Consistency, what) {}
};

class DegenerateError : public Error {
 public:
  explicit DegenerateError(const std::string& what) : Error(ErrorKind::Degenerate, what) {}
};

}  // namespace creepwave
