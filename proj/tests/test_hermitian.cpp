#include "oracles.hpp"
#include "subtile/hermitian.hpp"

#include <doctest.h>

#include <random>

using namespace subtile;

TEST_CASE("matrix basics") {
  auto i3 = ComplexMatrix::identity(3);
  CHECK(i3(1, 1) == Complex(1.0));
  CHECK(i3(0, 2) == Complex(0.0));
  ComplexMatrix a(2, 2);
  a(0, 1) = {1, 2};
  a(1, 0) = {3, 4};
  const auto adj = a.adjoint();
  CHECK(adj(0, 1) == Complex(3, -4));
  CHECK(adj(1, 0) == Complex(1, -2));
  CHECK(a.hermitian_defect() == doctest::Approx(std::abs(Complex(1, 2) - Complex(3, -4))));
  CHECK((a * ComplexMatrix::identity(2)) == a);
  CHECK((a - a).frobenius_norm() == 0.0);
  CHECK(ComplexMatrix(2, 3).hermitian_defect() == std::numeric_limits<double>::infinity());
}

TEST_CASE("real symmetric Jacobi on a known matrix") {
  // [[2,1],[1,2]] has eigenvalues 1 and 3
  const auto r = jacobi_symmetric({2, 1, 1, 2}, 2, true);
  CHECK(r.converged);
  auto v = r.values;
  std::sort(v.begin(), v.end());
  CHECK(v[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(v[1] == doctest::Approx(3.0).epsilon(1e-14));

  const auto zero = jacobi_symmetric(std::vector<double>(9, 0.0), 3, false);
  CHECK(zero.converged);
  for (auto x : zero.values) CHECK(x == 0.0);
}

TEST_CASE("Hermitian eigenvalues of small fixtures") {
  auto two = ComplexMatrix::identity(2);
  two(0, 0) = two(1, 1) = 2.0;
  auto vals = hermitian_eigenvalues(two);
  CHECK(vals[0] == doctest::Approx(2.0));
  CHECK(vals[1] == doctest::Approx(2.0));

  ComplexMatrix rank1(2, 2);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) rank1(i, j) = 2.0;
  }
  vals = hermitian_eigenvalues(rank1);
  CHECK(std::abs(vals[0]) < 1e-14);
  CHECK(vals[1] == doctest::Approx(4.0).epsilon(1e-14));

  // Pauli Y: eigenvalues -1, 1
  ComplexMatrix y(2, 2);
  y(0, 1) = {0, -1};
  y(1, 0) = {0, 1};
  vals = hermitian_eigenvalues(y);
  CHECK(vals[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(vals[1] == doctest::Approx(1.0).epsilon(1e-14));

  ComplexMatrix bad(2, 2);
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(hermitian_eigenvalues(bad), StructuralError);
  CHECK_THROWS_AS(hermitian_eigenvalues(ComplexMatrix(2, 3)), StructuralError);
}

TEST_CASE("bisection oracle sanity") {
  ComplexMatrix d(3, 3);
  d(0, 0) = 5.0;
  d(1, 1) = -1.0;
  d(2, 2) = 2.0;
  const auto vals = oracle::bisection_eigenvalues(d);
  CHECK(vals[0] == doctest::Approx(-1.0));
  CHECK(vals[1] == doctest::Approx(2.0));
  CHECK(vals[2] == doctest::Approx(5.0));
  CHECK(oracle::count_below(d, 0.0) == 1);
}

TEST_CASE("Jacobi matches the bisection oracle on random 8x8 Hermitian matrices") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 20; ++t) {
    const auto m = oracle::random_hermitian(8, rng);
    const auto jac = hermitian_eigenvalues(m);
    const auto ref = oracle::bisection_eigenvalues(m);
    REQUIRE(jac.size() == ref.size());
    for (std::size_t k = 0; k < jac.size(); ++k) CHECK(std::abs(jac[k] - ref[k]) < 1e-8);
  }
}

TEST_CASE("eigenvectors reconstruct the matrix and are unitary") {
  std::mt19937_64 rng(42);
  for (std::size_t n : {1U, 2U, 3U, 5U, 8U, 12U}) {
    for (int t = 0; t < 5; ++t) {
      auto m = oracle::random_hermitian(n, rng);
      if (t == 4) {
        // repeated eigenvalues: a projector scaled by 3
        m = ComplexMatrix(n, n);
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) m(i, j) = 3.0 / static_cast<double>(n);
        }
      }
      const auto eig = hermitian_eigen(m);
      ComplexMatrix d(n, n);
      for (std::size_t k = 0; k < n; ++k) d(k, k) = eig.values[k];
      const auto rebuilt = eig.vectors * d * eig.vectors.adjoint();
      CHECK((rebuilt - m).frobenius_norm() < 1e-9);
      CHECK((eig.vectors.adjoint() * eig.vectors - ComplexMatrix::identity(n)).frobenius_norm() < 1e-9);
      CHECK(std::is_sorted(eig.values.begin(), eig.values.end()));
    }
  }
}
