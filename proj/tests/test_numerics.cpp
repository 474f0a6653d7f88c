#include <doctest.h>

#include <cmath>

#include "fas/errors.hpp"
#include "fas/numerics.hpp"
#include "fas/rng.hpp"
#include "oracles.hpp"

using namespace fas;

TEST_CASE("q_function: symmetry point and tails") {
  CHECK(q_function(0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(q_function(8.0) < 1e-15);
  CHECK(q_function(-8.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(q_function(NAN), DomainError);
  CHECK_THROWS_AS(q_function(INFINITY), DomainError);
}

TEST_CASE("q_function matches adaptive quadrature of the normal density") {
  // Quadrature oracle gives Q(1.2816) = 0.0999915000977 (also 0.09999150009768 to 13 digits
  // in 30-digit arithmetic).
  const double oracle_value = oracle::q_by_quadrature(1.2816);
  CHECK(oracle_value == doctest::Approx(0.0999915000976752).epsilon(1e-11));
  CHECK(std::abs(q_function(1.2816) - 0.0999915000976752) < 1e-12);

  for (double z = -8.0; z <= 8.0; z += 0.37) {
    CHECK(std::abs(q_function(z) - oracle::q_by_quadrature(z)) < 1e-12);
  }
}

TEST_CASE("q_function is strictly decreasing") {
  oracle::Gen gen(11);
  for (int i = 0; i < 2000; ++i) {
    double a = gen.uniform(-8.0, 8.0);
    double b = gen.uniform(-8.0, 8.0);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    CHECK(q_function(a) > q_function(b));
  }
}

TEST_CASE("q_inverse") {
  CHECK(std::abs(q_inverse(0.5)) < 1e-12);
  // Bisection on the quadrature oracle: 1.28155156554460.
  CHECK(oracle::q_inverse_by_bisection(0.1) == doctest::Approx(1.2815515655446).epsilon(1e-11));
  CHECK(q_inverse(0.1) == doctest::Approx(1.2815515655446).epsilon(1e-12));

  for (double p : {0.01, 0.1, 0.5, 0.9}) {
    CHECK(std::abs(q_function(q_inverse(p)) - p) < 1e-10);
  }
  // Round trip on [-6, 6]. For z < 0, Q(z) sits near 1 and its rounding error
  // (half an ulp of 1) maps to a z error of about 1.1e-16 / pdf(z), which exceeds
  // 1e-10 below z = -5.3; that conditioning term is added to the bound.
  for (double z = -6.0; z <= 6.0; z += 0.25) {
    const double conditioning = z < 0.0 ? 2.0 * 1.1e-16 / normal_pdf(z) : 0.0;
    CHECK(std::abs(q_inverse(q_function(z)) - z) < 1e-10 + conditioning);
  }
  for (double z = -5.0; z <= 6.0; z += 0.125) {
    CHECK(std::abs(q_inverse(q_function(z)) - z) < 1e-10);
  }

  CHECK_THROWS_AS(q_inverse(0.0), DomainError);
  CHECK_THROWS_AS(q_inverse(1.0), DomainError);
  CHECK_THROWS_AS(q_inverse(-0.2), DomainError);
  CHECK_THROWS_AS(q_inverse(NAN), DomainError);
}

TEST_CASE("hermitian_quadratic_form") {
  CHECK(hermitian_quadratic_form(ComplexVector::unit(4, 0), ComplexMatrix::identity(4)) == 1.0);
  CHECK(hermitian_quadratic_form(ComplexVector(4), ComplexMatrix::identity(4)) == 0.0);

  oracle::Gen gen(5);
  for (int rep = 0; rep < 50; ++rep) {
    ComplexMatrix m(4, 4);
    for (std::size_t r = 0; r < 4; ++r) {
      m(r, r) = gen.uniform(-2.0, 2.0);
      for (std::size_t c = r + 1; c < 4; ++c) {
        m(r, c) = gen.complex();
        m(c, r) = std::conj(m(r, c));
      }
    }
    ComplexVector v(4);
    for (auto& x : v) x = gen.complex();

    cplx expansion{0.0, 0.0};
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) expansion += std::conj(v[i]) * m(i, j) * v[j];
    CHECK(std::abs(hermitian_quadratic_form(v, m) - expansion.real()) < 1e-12);
  }

  CHECK_THROWS_AS(hermitian_quadratic_form(ComplexVector(3), ComplexMatrix::identity(4)),
                  DimensionError);
  ComplexMatrix skew(2, 2);
  skew(0, 1) = cplx(0.0, 1.0);
  skew(1, 0) = cplx(0.0, 1.0);
  CHECK_THROWS_AS(hermitian_quadratic_form(ComplexVector{1.0, cplx(0.3, 0.0)}, skew),
                  ContractError);
}

TEST_CASE("complex arithmetic conformance and conjugate symmetry") {
  CHECK_THROWS_AS(ComplexVector(3) + ComplexVector(4), DimensionError);
  CHECK_THROWS_AS(inner(ComplexVector(3), ComplexVector(2)), DimensionError);
  CHECK_THROWS_AS(ComplexMatrix(2, 3) * ComplexVector(2), DimensionError);
  CHECK_THROWS_AS(ComplexMatrix(2, 3) * ComplexMatrix(2, 3), DimensionError);

  oracle::Gen gen(9);
  for (int rep = 0; rep < 200; ++rep) {
    ComplexVector u(5), v(5);
    for (std::size_t i = 0; i < 5; ++i) {
      u[i] = gen.complex();
      v[i] = gen.complex();
    }
    CHECK(std::abs(inner(u, v) - std::conj(inner(v, u))) < 1e-14);
  }

  const ComplexVector a{cplx(1, 2), cplx(3, -1)};
  const ComplexMatrix outer = ComplexMatrix::outer(a, a);
  CHECK(outer.hermitian_defect() == 0.0);
  CHECK(outer(0, 1) == a[0] * std::conj(a[1]));
}

TEST_CASE("SeededRng reproducibility and distribution") {
  SeededRng a(42, 7);
  SeededRng b(42, 7);
  SeededRng c(42, 8);
  bool all_equal = true;
  bool differs_from_other_stream = false;
  for (int i = 0; i < 10000; ++i) {
    const auto x = a.next_u64();
    all_equal = all_equal && (x == b.next_u64());
    differs_from_other_stream = differs_from_other_stream || (x != c.next_u64());
  }
  CHECK(all_equal);
  CHECK(differs_from_other_stream);

  SeededRng d(1, 2);
  SeededRng e(1, 2);
  for (int i = 0; i < 10000; ++i) {
    const cplx z1 = d.complex_normal();
    const cplx z2 = e.complex_normal();
    REQUIRE(z1 == z2);
  }

  SeededRng g(3, 0);
  const int n = 200000;
  double re2 = 0.0, im2 = 0.0, cross = 0.0, mean_u = 0.0;
  for (int i = 0; i < n; ++i) {
    const cplx z = g.complex_normal();
    re2 += z.real() * z.real();
    im2 += z.imag() * z.imag();
    cross += z.real() * z.imag();
    const double u = g.uniform();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    mean_u += u;
  }
  CHECK(re2 / n == doctest::Approx(0.5).epsilon(0.01));
  CHECK(im2 / n == doctest::Approx(0.5).epsilon(0.01));
  CHECK(std::abs(cross / n) < 0.01);
  CHECK(mean_u / n == doctest::Approx(0.5).epsilon(0.01));
}
