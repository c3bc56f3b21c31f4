#include "hetnet/quadrature.hpp"

namespace hetnet {

QuadratureError::QuadratureError(const std::string& where, double estimate,
                                 double error_bound)
    : std::runtime_error(where + ": quadrature did not converge (estimate " +
                         std::to_string(estimate) + ", error bound " +
                         std::to_string(error_bound) + ")"),
      estimate_(estimate),
      error_bound_(error_bound) {}

}  // namespace hetnet
