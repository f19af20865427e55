// Dense complex matrices and a Hermitian eigensolver.
//
// The solver runs cyclic Jacobi on the real symmetric embedding
//   [ Re S  -Im S ]
//   [ Im S   Re S ]
// whose spectrum is that of S with every eigenvalue doubled.

#pragma once

#include "subtile/group.hpp"

#include <cstddef>
#include <vector>

namespace subtile {

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  ComplexMatrix adjoint() const;
  double frobenius_norm() const;
  /// Largest |S(i,j) - conj(S(j,i))|; infinite for non-square input.
  double hermitian_defect() const;

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

struct JacobiOptions {
  double relative_tolerance = 1e-12;  // stop when off-diagonal Frobenius < tol * ||A||_F
  int max_sweeps = 100;
};

/// Cyclic Jacobi on a real symmetric matrix stored row-major (n x n).
/// Returns eigenvalues in diagonal order; fills `vectors` (columns) when non-null.
struct SymmetricEigenResult {
  std::vector<double> values;
  std::vector<double> vectors;  // n x n row-major, column k is the k-th eigenvector
  int sweeps = 0;
  bool converged = false;
};

SymmetricEigenResult jacobi_symmetric(std::vector<double> matrix, std::size_t n,
                                      bool want_vectors, const JacobiOptions& options = {});

struct HermitianEigen {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // unitary; column k belongs to values[k]
  int sweeps = 0;
};

/// Throws StructuralError when S is not Hermitian within 1e-10 (relative to its scale).
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& s, const JacobiOptions& options = {});
HermitianEigen hermitian_eigen(const ComplexMatrix& s, const JacobiOptions& options = {});

}  // namespace subtile
