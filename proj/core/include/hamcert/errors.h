#pragma once

#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace hamcert {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller supplied data that violates a documented precondition (shape,
// finiteness, parameter range).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class NumericalFailure : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  SingularMatrix(double sigma_min, double sigma_max);
  double sigma_min() const { return sigma_min_; }
  double sigma_max() const { return sigma_max_; }

 private:
  double sigma_min_;
  double sigma_max_;
};

// A 2n x 2n matrix that does not have the block layout [[A, B], [C, -A^H]]
// with Hermitian B and C. `relation()` names the violated block relation.
class NotHamiltonian : public Error {
 public:
  NotHamiltonian(std::string relation, double defect);
  const std::string& relation() const { return relation_; }
  double defect() const { return defect_; }

 private:
  std::string relation_;
  double defect_;
};

class LambdaNotInResolvent : public Error {
 public:
  using Error::Error;
};

// Two criteria that must agree did not. Carries a JSON dump of every
// certificate involved.
class ConsistencyFailure : public Error {
 public:
  ConsistencyFailure(const std::string& what, std::string dump);
  const std::string& dump() const { return dump_; }

 private:
  std::string dump_;
};

class SymmetryViolation : public Error {
 public:
  using Error::Error;
};

class BoundViolation : public Error {
 public:
  BoundViolation(const std::string& what, Eigen::VectorXcd witness);
  const Eigen::VectorXcd& witness() const { return witness_; }

 private:
  Eigen::VectorXcd witness_;
};

class ClearanceViolation : public Error {
 public:
  using Error::Error;
};

class TrendViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace hamcert
