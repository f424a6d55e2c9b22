#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "entwig/fock.hpp"

using namespace entwig;

TEST_CASE("space dimensions and index map") {
  CHECK(make_space(1).dim == 4);
  CHECK(make_space(5).dim == 36);
  CHECK_THROWS_AS(make_space(0), std::invalid_argument);
  const FockSpace s = make_space(7);
  for (int n1 = 0; n1 <= 7; ++n1)
    for (int n2 = 0; n2 <= 7; ++n2) {
      const int idx = s.index(n1, n2);
      CHECK(s.n1_of(idx) == n1);
      CHECK(s.n2_of(idx) == n2);
    }
}

TEST_CASE("ladder matrix elements") {
  const FockSpace s = make_space(6);
  const Operator low1 = ladder(s, Mode::one, LadderKind::lower);
  const Operator rai1 = ladder(s, Mode::one, LadderKind::raise);
  CHECK(low1.entries(s.index(0, 0), s.index(1, 0)).real() == doctest::Approx(1.0));
  CHECK(rai1.entries(s.index(2, 0), s.index(1, 0)).real() ==
        doctest::Approx(std::sqrt(2.0)));
  // different modes commute exactly
  const Operator c =
      commutator(low1, ladder(s, Mode::two, LadderKind::raise));
  CHECK(max_abs(c) == 0.0);
  // raising out of the top level truncates to zero
  double top_row = 0.0;
  for (int j = 0; j < s.dim; ++j) top_row = std::max(top_row, std::abs(rai1.entries(j, s.index(6, 0))));
  CHECK(top_row == 0.0);
}

TEST_CASE("quadratures and canonical commutators") {
  const FockSpace s = make_space(8);
  const Operator q1 = quadrature(s, Mode::one, QuadratureKind::position);
  const Operator p1 = quadrature(s, Mode::one, QuadratureKind::momentum);
  CHECK(q1.entries(s.index(0, 0), s.index(1, 0)).real() ==
        doctest::Approx(1.0 / std::sqrt(2.0)));
  // [Q1,P1] = i on the block below the truncation edge
  Operator c = commutator(q1, p1);
  c.entries -= cdouble(0.0, 1.0) * Matrix::Identity(s.dim, s.dim);
  CHECK(low_block_max_abs(c, s.cutoff - 1) < 1e-12);
  // [a1 - a2raise combination: [a1d - a2, a1 + a2d] = -2 on the safe block
  const Operator x = ladder(s, Mode::one, LadderKind::raise) - ladder(s, Mode::two, LadderKind::lower);
  const Operator y = ladder(s, Mode::one, LadderKind::lower) + ladder(s, Mode::two, LadderKind::raise);
  Operator c9 = commutator(x, y) + 2.0 * identity(s);
  CHECK(low_block_max_abs(c9, s.cutoff - 1) < 1e-12);
  // canonical pairs per mode
  for (Mode i : {Mode::one, Mode::two})
    for (Mode j : {Mode::one, Mode::two}) {
      Operator cc = commutator(ladder(s, i, LadderKind::lower), ladder(s, j, LadderKind::raise));
      if (i == j) cc = cc - identity(s);
      CHECK(low_block_max_abs(cc, s.cutoff - 1) < 1e-12);
    }
}

TEST_CASE("compose, adjoint, trace, apply") {
  const FockSpace s = make_space(5);
  const Operator a = ladder(s, Mode::one, LadderKind::lower);
  CHECK(max_abs(compose(identity(s), a) - a) == 0.0);
  CHECK(std::abs(op_trace(ladder(s, Mode::one, LadderKind::raise))) == 0.0);
  CHECK(max_abs(adjoint(a) - ladder(s, Mode::one, LadderKind::raise)) == 0.0);
  const Operator b = quadrature(s, Mode::two, QuadratureKind::momentum);
  CHECK(max_abs(adjoint(compose(a, b)) - compose(adjoint(b), adjoint(a))) < 1e-14);
  CHECK(std::abs(op_trace(compose(a, b)) - op_trace(compose(b, a))) < 1e-12);
  const StateVector v = vacuum(s);
  const StateVector w = apply(ladder(s, Mode::one, LadderKind::raise), v);
  CHECK(std::abs(w.coeffs(s.index(1, 0)) - 1.0) == 0.0);
  const FockSpace other = make_space(4);
  CHECK_THROWS_AS(compose(a, identity(other)), std::invalid_argument);
  CHECK_THROWS_AS(apply(a, vacuum(other)), std::invalid_argument);
}

TEST_CASE("coherent states") {
  const FockSpace s = make_space(20);
  CHECK(max_abs(StateVector{s, coherent_state(s, 0.0, 0.0).coeffs - vacuum(s).coeffs}) ==
        0.0);
  const StateVector c = coherent_state(s, 1.0, 0.0);
  double norm2 = 0.0;
  for (int i = 0; i < s.dim; ++i) norm2 += std::norm(c.coeffs(i));
  CHECK(std::abs(norm2 - 1.0) < 1e-8);
  CHECK(std::abs(c.coeffs(s.index(1, 0)) - std::exp(-0.5)) < 1e-15);
}

TEST_CASE("project_low") {
  const FockSpace s = make_space(4);
  CHECK(max_abs(project_low(identity(s), s.cutoff) - identity(s)) == 0.0);
  const Operator pv = project_low(identity(s), 0);
  CHECK(std::abs(pv.entries(s.index(0, 0), s.index(0, 0)) - 1.0) == 0.0);
  CHECK(std::abs(op_trace(pv) - 1.0) == 0.0);
  // dropping the top level removes the transition into it
  const Operator r = project_low(ladder(s, Mode::one, LadderKind::raise), s.cutoff - 1);
  for (int j = 0; j < s.dim; ++j)
    CHECK(std::abs(r.entries(s.index(4, 0), j)) == 0.0);
  CHECK_THROWS_AS(project_low(identity(s), 7), std::invalid_argument);
}

TEST_CASE("factorials") {
  CHECK(factorial(0) == 1.0);
  CHECK(factorial(12) == 479001600.0);
  CHECK(sqrt_factorial(4) == doctest::Approx(std::sqrt(24.0)));
  CHECK_THROWS_AS(factorial(-1), std::invalid_argument);
}
