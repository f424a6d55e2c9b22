#include "entwig/fock.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace entwig {

namespace {

std::array<double, 171> build_factorials() {
  std::array<double, 171> t{};
  t[0] = 1.0;
  for (int n = 1; n <= 170; ++n) t[n] = t[n - 1] * n;
  return t;
}

const std::array<double, 171>& factorial_table() {
  static const std::array<double, 171> table = build_factorials();
  return table;
}

void require_same_space(const FockSpace& a, const FockSpace& b) {
  if (!(a == b)) throw std::invalid_argument("operands live on different Fock spaces");
}

}  // namespace

double factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative integer");
  if (n <= 170) return factorial_table()[n];
  return std::exp(std::lgamma(n + 1.0));
}

double sqrt_factorial(int n) { return std::sqrt(factorial(n)); }

FockSpace make_space(int cutoff) {
  if (cutoff < 1) throw std::invalid_argument("cutoff must be >= 1");
  FockSpace s;
  s.cutoff = cutoff;
  s.levels = cutoff + 1;
  s.dim = s.levels * s.levels;
  return s;
}

Operator identity(const FockSpace& space) {
  return Operator{space, Matrix::Identity(space.dim, space.dim)};
}

Operator zero_operator(const FockSpace& space) {
  return Operator{space, Matrix::Zero(space.dim, space.dim)};
}

Operator ladder(const FockSpace& space, Mode mode, LadderKind kind) {
  Matrix m = Matrix::Zero(space.dim, space.dim);
  for (int n1 = 0; n1 <= space.cutoff; ++n1) {
    for (int n2 = 0; n2 <= space.cutoff; ++n2) {
      int n = (mode == Mode::one) ? n1 : n2;
      if (n == 0) continue;
      // lower: |n1,n2> -> sqrt(n) |.., n-1, ..>
      int row = (mode == Mode::one) ? space.index(n1 - 1, n2) : space.index(n1, n2 - 1);
      int col = space.index(n1, n2);
      m(row, col) = std::sqrt(double(n));
    }
  }
  if (kind == LadderKind::raise) return Operator{space, m.adjoint()};
  return Operator{space, std::move(m)};
}

Operator quadrature(const FockSpace& space, Mode mode, QuadratureKind kind) {
  Operator a = ladder(space, mode, LadderKind::lower);
  Operator ad = ladder(space, mode, LadderKind::raise);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  if (kind == QuadratureKind::position)
    return Operator{space, (a.entries + ad.entries) * inv_sqrt2};
  return Operator{space, (a.entries - ad.entries) * (cdouble(0.0, -1.0) * inv_sqrt2)};
}

Operator compose(const Operator& a, const Operator& b) {
  require_same_space(a.space, b.space);
  Operator r{a.space, Matrix(a.space.dim, a.space.dim)};
  r.entries.noalias() = a.entries * b.entries;
  return r;
}

Operator adjoint(const Operator& a) { return Operator{a.space, a.entries.adjoint()}; }

Operator commutator(const Operator& a, const Operator& b) {
  require_same_space(a.space, b.space);
  Operator r{a.space, Matrix(a.space.dim, a.space.dim)};
  r.entries.noalias() = a.entries * b.entries;
  r.entries.noalias() -= b.entries * a.entries;
  return r;
}

cdouble op_trace(const Operator& a) {
  // fixed flat-index order keeps the reduction bit-reproducible
  cdouble t = 0.0;
  for (int i = 0; i < a.space.dim; ++i) t += a.entries(i, i);
  return t;
}

StateVector apply(const Operator& a, const StateVector& v) {
  require_same_space(a.space, v.space);
  StateVector r{a.space, Vector(a.space.dim)};
  r.coeffs.noalias() = a.entries * v.coeffs;
  return r;
}

StateVector vacuum(const FockSpace& space) {
  StateVector v{space, Vector::Zero(space.dim)};
  v.coeffs(space.index(0, 0)) = 1.0;
  return v;
}

StateVector coherent_state(const FockSpace& space, cdouble beta1, cdouble beta2) {
  StateVector v{space, Vector(space.dim)};
  const double pref = std::exp(-0.5 * (std::norm(beta1) + std::norm(beta2)));
  std::vector<cdouble> p1(space.levels), p2(space.levels);
  p1[0] = 1.0;
  p2[0] = 1.0;
  for (int n = 1; n < space.levels; ++n) {
    p1[n] = p1[n - 1] * beta1;
    p2[n] = p2[n - 1] * beta2;
  }
  for (int n1 = 0; n1 < space.levels; ++n1)
    for (int n2 = 0; n2 < space.levels; ++n2)
      v.coeffs(space.index(n1, n2)) =
          pref * p1[n1] * p2[n2] / (sqrt_factorial(n1) * sqrt_factorial(n2));
  return v;
}

Operator project_low(const Operator& a, int level) {
  if (level < 0 || level > a.space.cutoff)
    throw std::invalid_argument("project_low level out of range");
  Operator r{a.space, Matrix::Zero(a.space.dim, a.space.dim)};
  for (int i = 0; i < a.space.dim; ++i) {
    if (a.space.n1_of(i) > level || a.space.n2_of(i) > level) continue;
    for (int j = 0; j < a.space.dim; ++j) {
      if (a.space.n1_of(j) > level || a.space.n2_of(j) > level) continue;
      r.entries(i, j) = a.entries(i, j);
    }
  }
  return r;
}

StateVector project_low(const StateVector& v, int level) {
  if (level < 0 || level > v.space.cutoff)
    throw std::invalid_argument("project_low level out of range");
  StateVector r{v.space, Vector::Zero(v.space.dim)};
  for (int i = 0; i < v.space.dim; ++i) {
    if (v.space.n1_of(i) > level || v.space.n2_of(i) > level) continue;
    r.coeffs(i) = v.coeffs(i);
  }
  return r;
}

double max_abs(const Operator& a) {
  double m = 0.0;
  for (int j = 0; j < a.entries.cols(); ++j)
    for (int i = 0; i < a.entries.rows(); ++i) m = std::max(m, std::abs(a.entries(i, j)));
  return m;
}

double max_abs(const StateVector& v) {
  double m = 0.0;
  for (int i = 0; i < v.coeffs.size(); ++i) m = std::max(m, std::abs(v.coeffs(i)));
  return m;
}

double low_block_max_abs(const Operator& a, int level) {
  return max_abs(project_low(a, level));
}

double low_block_norm(const StateVector& v, int level) {
  double s = 0.0;
  for (int i = 0; i < v.space.dim; ++i) {
    if (v.space.n1_of(i) > level || v.space.n2_of(i) > level) continue;
    s += std::norm(v.coeffs(i));
  }
  return std::sqrt(s);
}

Operator operator+(const Operator& a, const Operator& b) {
  require_same_space(a.space, b.space);
  return Operator{a.space, a.entries + b.entries};
}

Operator operator-(const Operator& a, const Operator& b) {
  require_same_space(a.space, b.space);
  return Operator{a.space, a.entries - b.entries};
}

Operator operator*(cdouble c, const Operator& a) { return Operator{a.space, c * a.entries}; }

Operator operator*(const Operator& a, const Operator& b) { return compose(a, b); }

}  // namespace entwig
