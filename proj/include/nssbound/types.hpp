#pragma once

#include <complex>

#include <Eigen/Dense>

namespace nssbound {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;

/// Beamsplitter oracle photon cap used when the caller does not pass one.
inline constexpr int kDefaultPhotonCap = 24;

}  // namespace nssbound
