#pragma once

#include "tiltkit/matrix.hpp"

// Reference and OpenMP versions of the two hot kernels. Matrix dispatches
// between them according to kernel_mode(); tests compare them directly.
namespace tiltkit::kernels {

Matrix multiply_serial(const Matrix& a, const Matrix& b);
Matrix multiply_parallel(const Matrix& a, const Matrix& b);

Matrix::Rref rref_serial(const Matrix& a);
Matrix::Rref rref_parallel(const Matrix& a);

// Work size below which automatic mode stays serial.
inline constexpr std::size_t kParallelThreshold = 64 * 64;

}  // namespace tiltkit::kernels
