#include "hamcert/errors.h"

#include <sstream>

namespace hamcert {

SingularMatrix::SingularMatrix(double sigma_min, double sigma_max)
    : Error([&] {
        std::ostringstream os;
        os << "matrix is numerically singular: sigma_min/sigma_max = "
           << sigma_min << "/" << sigma_max;
        return os.str();
      }()),
      sigma_min_(sigma_min),
      sigma_max_(sigma_max) {}

NotHamiltonian::NotHamiltonian(std::string relation, double defect)
    : Error("not a Hamiltonian block matrix: " + relation + " violated (defect " +
            std::to_string(defect) + ")"),
      relation_(std::move(relation)),
      defect_(defect) {}

ConsistencyFailure::ConsistencyFailure(const std::string& what, std::string dump)
    : Error(what), dump_(std::move(dump)) {}

BoundViolation::BoundViolation(const std::string& what, Eigen::VectorXcd witness)
    : Error(what), witness_(std::move(witness)) {}

}  // namespace hamcert
