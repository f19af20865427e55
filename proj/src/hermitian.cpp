#include "subtile/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace subtile {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  }
  return out;
}

double ComplexMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (const auto& v : data_) sum += std::norm(v);
  return std::sqrt(sum);
}

double ComplexMatrix::hermitian_defect() const {
  if (rows_ != cols_) return std::numeric_limits<double>::infinity();
  double defect = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i; j < cols_; ++j) {
      defect = std::max(defect, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    }
  }
  return defect;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols_ != b.rows_) throw StructuralError("matrix dimensions do not agree");
  ComplexMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0)) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw StructuralError("matrix dimensions do not agree");
  ComplexMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

SymmetricEigenResult jacobi_symmetric(std::vector<double> a, std::size_t n, bool want_vectors,
                                      const JacobiOptions& options) {
  if (a.size() != n * n) throw StructuralError("symmetric matrix storage has wrong size");
  SymmetricEigenResult result;
  if (want_vectors) {
    result.vectors.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) result.vectors[i * n + i] = 1.0;
  }
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

  const double norm = std::sqrt(std::inner_product(a.begin(), a.end(), a.begin(), 0.0));
  const double threshold = options.relative_tolerance * norm;

  for (int sweep = 0; sweep <= options.max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) off += at(i, j) * at(i, j);
      }
    }
    if (std::sqrt(off) <= threshold) {
      result.converged = true;
      result.sweeps = sweep;
      break;
    }
    if (sweep == options.max_sweeps) {
      result.sweeps = sweep;
      break;
    }

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
        at(p, q) = 0.0;
        at(q, p) = 0.0;

        if (want_vectors) {
          auto& v = result.vectors;
          for (std::size_t k = 0; k < n; ++k) {
            const double vkp = v[k * n + p];
            const double vkq = v[k * n + q];
            v[k * n + p] = c * vkp - s * vkq;
            v[k * n + q] = s * vkp + c * vkq;
          }
        }
      }
    }
  }

  result.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) result.values[i] = at(i, i);
  return result;
}

namespace {

std::vector<double> real_embedding(const ComplexMatrix& s) {
  const std::size_t n = s.rows();
  const std::size_t m = 2 * n;
  std::vector<double> e(m * m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Complex v = s(i, j);
      e[i * m + j] = v.real();
      e[i * m + (j + n)] = -v.imag();
      e[(i + n) * m + j] = v.imag();
      e[(i + n) * m + (j + n)] = v.real();
    }
  }
  return e;
}

void require_hermitian(const ComplexMatrix& s) {
  if (s.rows() != s.cols()) throw StructuralError("frame operator must be square");
  double scale = 1.0;
  for (std::size_t i = 0; i < s.rows(); ++i) {
    for (std::size_t j = 0; j < s.cols(); ++j) scale = std::max(scale, std::abs(s(i, j)));
  }
  if (s.hermitian_defect() > 1e-10 * scale) throw StructuralError("matrix is not Hermitian");
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& s, const JacobiOptions& options) {
  require_hermitian(s);
  const std::size_t n = s.rows();
  auto result = jacobi_symmetric(real_embedding(s), 2 * n, false, options);
  std::sort(result.values.begin(), result.values.end());
  std::vector<double> values(n);
  for (std::size_t k = 0; k < n; ++k) values[k] = 0.5 * (result.values[2 * k] + result.values[2 * k + 1]);
  return values;
}

HermitianEigen hermitian_eigen(const ComplexMatrix& s, const JacobiOptions& options) {
  require_hermitian(s);
  const std::size_t n = s.rows();
  const std::size_t m = 2 * n;
  auto result = jacobi_symmetric(real_embedding(s), m, true, options);

  // Each real eigenvector (x; y) of the embedding yields the complex
  // eigenvector x + iy of S. Pick n of them that are complex-orthonormal,
  // always taking the candidate with the largest remaining residual.
  std::vector<std::vector<Complex>> residual(m, std::vector<Complex>(n));
  for (std::size_t c = 0; c < m; ++c) {
    for (std::size_t i = 0; i < n; ++i) {
      residual[c][i] = {result.vectors[i * m + c], result.vectors[(i + n) * m + c]};
    }
  }
  std::vector<unsigned char> taken(m, 0);
  std::vector<std::vector<Complex>> basis;
  basis.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t best = m;
    double best_norm = -1.0;
    for (std::size_t c = 0; c < m; ++c) {
      if (taken[c]) continue;
      double norm = 0.0;
      for (const auto& v : residual[c]) norm += std::norm(v);
      if (norm > best_norm) {
        best_norm = norm;
        best = c;
      }
    }
    taken[best] = 1;
    auto u = residual[best];
    const double scale = 1.0 / std::sqrt(best_norm);
    for (auto& v : u) v *= scale;
    for (std::size_t c = 0; c < m; ++c) {
      if (taken[c]) continue;
      Complex proj = 0.0;
      for (std::size_t i = 0; i < n; ++i) proj += std::conj(u[i]) * residual[c][i];
      for (std::size_t i = 0; i < n; ++i) residual[c][i] -= proj * u[i];
    }
    basis.push_back(std::move(u));
  }

  std::vector<double> rayleigh(n);
  for (std::size_t k = 0; k < n; ++k) {
    Complex q = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      Complex row = 0.0;
      for (std::size_t j = 0; j < n; ++j) row += s(i, j) * basis[k][j];
      q += std::conj(basis[k][i]) * row;
    }
    rayleigh[k] = q.real();
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return rayleigh[a] < rayleigh[b]; });

  HermitianEigen out;
  out.sweeps = result.sweeps;
  out.vectors = ComplexMatrix(n, n);
  out.values.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values.push_back(rayleigh[order[k]]);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = basis[order[k]][i];
  }
  return out;
}

}  // namespace subtile
