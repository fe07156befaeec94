#pragma once

#include <complex>

#include <Eigen/Dense>

namespace pistonwork {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

} // namespace pistonwork
