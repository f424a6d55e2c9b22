#include "entwig/states.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "entwig/resummation.hpp"

namespace entwig {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Shared series for both flavors:
//   coeff(n1,n2) = pref * sqrt(n1! n2!) *
//     sum_r u^{n1-r} v^{n2-r} w^r / ((n1-r)! (n2-r)! r!)
// with (u,v,w) = (eta, -eta*, +1) for |eta> and (xi, +xi*, -1) for |xi>.
StateVector exponential_pair_state(const FockSpace& space, cdouble u, cdouble v, double w,
                                   double pref) {
  StateVector st{space, Vector(space.dim)};
  std::vector<cdouble> pu(space.levels), pv(space.levels);
  pu[0] = 1.0;
  pv[0] = 1.0;
  for (int n = 1; n < space.levels; ++n) {
    pu[n] = pu[n - 1] * u;
    pv[n] = pv[n - 1] * v;
  }
  for (int n1 = 0; n1 < space.levels; ++n1) {
    for (int n2 = 0; n2 < space.levels; ++n2) {
      cdouble acc = 0.0;
      double wr = 1.0;  // w^r / r!
      const int rmax = std::min(n1, n2);
      for (int r = 0; r <= rmax; ++r) {
        acc += pu[n1 - r] * pv[n2 - r] * wr /
               (factorial(n1 - r) * factorial(n2 - r));
        wr *= w / (r + 1);
      }
      st.coeffs(space.index(n1, n2)) =
          pref * acc * sqrt_factorial(n1) * sqrt_factorial(n2);
    }
  }
  return st;
}

double vec_norm(const Vector& v) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) s += std::norm(v(i));
  return std::sqrt(s);
}

}  // namespace

StateVector eta_state(const FockSpace& space, cdouble eta) {
  return exponential_pair_state(space, eta, -std::conj(eta), 1.0,
                                std::exp(-0.5 * std::norm(eta)));
}

StateVector xi_state(const FockSpace& space, cdouble xi) {
  return exponential_pair_state(space, xi, std::conj(xi), -1.0,
                                std::exp(-0.5 * std::norm(xi)));
}

void eta_coeffs_scaled(const FockSpace& space, cdouble z, cdouble scale, cdouble* dst) {
  const int levels = space.levels;
  // a[k] = z^k/k!, b[k] = (-z*)^k/k!, coeff = pref sqrt(n1! n2!) sum_r a[n1-r] b[n2-r]/r!
  static thread_local std::vector<cdouble> a, b;
  a.resize(levels);
  b.resize(levels);
  const cdouble v = -std::conj(z);
  a[0] = 1.0;
  b[0] = 1.0;
  for (int k = 1; k < levels; ++k) {
    a[k] = a[k - 1] * (z / double(k));
    b[k] = b[k - 1] * (v / double(k));
  }
  const cdouble pref = scale * std::exp(-0.5 * std::norm(z));
  for (int n1 = 0; n1 < levels; ++n1) {
    const double sf1 = sqrt_factorial(n1);
    for (int n2 = 0; n2 < levels; ++n2) {
      cdouble acc = 0.0;
      double invr = 1.0;
      const int rmax = n1 < n2 ? n1 : n2;
      for (int r = 0; r <= rmax; ++r) {
        acc += a[n1 - r] * b[n2 - r] * invr;
        invr /= (r + 1);
      }
      dst[n1 * levels + n2] = pref * sf1 * sqrt_factorial(n2) * acc;
    }
  }
}

double eigen_residual(const FockSpace& space, const StateVector& state,
                      const EntangledLabel& label, int level) {
  if (level > space.cutoff - 2)
    throw std::invalid_argument("eigen_residual level must leave two truncation levels");
  const double base = low_block_norm(state, level);
  if (base == 0.0) throw std::invalid_argument("state vanishes on the requested low block");

  const Operator a1 = ladder(space, Mode::one, LadderKind::lower);
  const Operator a2 = ladder(space, Mode::two, LadderKind::lower);
  const Operator a1d = ladder(space, Mode::one, LadderKind::raise);
  const Operator a2d = ladder(space, Mode::two, LadderKind::raise);
  const Operator q1 = quadrature(space, Mode::one, QuadratureKind::position);
  const Operator q2 = quadrature(space, Mode::two, QuadratureKind::position);
  const Operator p1 = quadrature(space, Mode::one, QuadratureKind::momentum);
  const Operator p2 = quadrature(space, Mode::two, QuadratureKind::momentum);

  const cdouble z = label.value;
  const double sqrt2 = std::sqrt(2.0);
  std::vector<std::pair<Operator, cdouble>> relations;
  if (label.flavor == Flavor::eta) {
    relations.emplace_back(a1 - a2d, z);                            // (b2)
    relations.emplace_back(a2 - a1d, -std::conj(z));                // (b2)
    relations.emplace_back(q1 - q2, sqrt2 * z.real());              // (b4)
    relations.emplace_back(p1 + p2, sqrt2 * z.imag());              // (b4)
  } else {
    relations.emplace_back(a1 + a2d, z);                            // (b8)
    relations.emplace_back(a1d + a2, std::conj(z));                 // (b8)
    relations.emplace_back(q1 + q2, sqrt2 * z.real());              // (b9)
    relations.emplace_back(p1 - p2, sqrt2 * z.imag());              // (b9)
  }

  double worst = 0.0;
  for (const auto& [op, lambda] : relations) {
    StateVector image = apply(op, state);
    image.coeffs -= lambda * state.coeffs;
    worst = std::max(worst, low_block_norm(image, level) / base);
  }
  return worst;
}

cdouble overlap(const StateVector& u, const StateVector& v) {
  if (!(u.space == v.space))
    throw std::invalid_argument("overlap operands live on different Fock spaces");
  cdouble acc = 0.0;
  for (int i = 0; i < u.space.dim; ++i) acc += std::conj(u.coeffs(i)) * v.coeffs(i);
  return acc;
}

cdouble overlap_ratio_b11(int cutoff, cdouble eta, cdouble xi) {
  const FockSpace space = make_space(cutoff);
  const StateVector e = eta_state(space, eta);
  const StateVector x = xi_state(space, xi);
  // Group the series over total-occupation shells; the exp(+-a1†a2†) parts of
  // the two flavors make it oscillate with the shell index (generating
  // function has poles at lambda = +-i), so sample the partial sums every two
  // shells and let the epsilon algorithm take the limit. Shells above
  // 2*cutoff - 18 are visibly clipped by the square cutoff and are dropped.
  const int max_shell = std::max(4, 2 * cutoff - 18);
  std::vector<cdouble> shell(size_t(max_shell) + 2, 0.0);
  for (int n1 = 0; n1 < space.levels; ++n1)
    for (int n2 = 0; n2 < space.levels; ++n2) {
      const int s = n1 + n2;
      if (s > max_shell + 1) continue;
      shell[size_t(s)] +=
          std::conj(e.coeffs(space.index(n1, n2))) * x.coeffs(space.index(n1, n2));
    }
  std::vector<cdouble> sums;
  cdouble acc = 0.0;
  for (int s = 0; s <= max_shell; ++s) {
    acc += shell[size_t(s)];
    if (s % 2 == 0) sums.push_back(acc + 0.5 * shell[size_t(s) + 1]);
  }
  const cdouble value = wynn_epsilon_limit(sums);
  const cdouble closed = 0.5 * std::exp(0.5 * (std::conj(eta) * xi - std::conj(xi) * eta));
  return value / closed;
}

namespace {

// E[a, k] = <a|state(z_k)> for every node z_k of the 2-axis grid
Matrix state_table(const FockSpace& space, const ComplexGrid& grid, Flavor flavor) {
  const int G = grid.points;
  Matrix table(space.dim, long(G) * G);
  for (int i = 0; i < G; ++i)
    for (int j = 0; j < G; ++j) {
      const cdouble z(grid.node(i), grid.node(j));
      const StateVector st = flavor == Flavor::eta ? eta_state(space, z) : xi_state(space, z);
      table.col(long(i) * G + j) = st.coeffs;
    }
  return table;
}

// boundary decay of the integrand that the level-limited check reads:
// only coefficients inside the compared block matter
double table_boundary_max(const Matrix& table, int G, const FockSpace& space, int level) {
  double m = 0.0;
  for (int i = 0; i < G; ++i)
    for (int j = 0; j < G; ++j) {
      if (i != 0 && j != 0 && i != G - 1 && j != G - 1) continue;
      const auto col = table.col(long(i) * G + j);
      for (int k = 0; k < space.dim; ++k) {
        if (space.n1_of(k) > level || space.n2_of(k) > level) continue;
        m = std::max(m, std::abs(col(k)));
      }
    }
  return m;
}

}  // namespace

CheckValue resolution_check(const FockSpace& space, const ComplexGrid& grid,
                            ResolutionKind which, int level) {
  if (grid.axes != 2) throw std::invalid_argument("resolution_check expects a 2-axis grid");
  if (level < 0 || level > space.cutoff)
    throw std::invalid_argument("resolution_check level out of range");
  const int G = grid.points;
  const double h2 = grid.spacing() * grid.spacing();
  Matrix result = Matrix::Zero(space.dim, space.dim);
  double boundary = 0.0;

  if (which == ResolutionKind::eta || which == ResolutionKind::xi) {
    const Flavor fl = which == ResolutionKind::eta ? Flavor::eta : Flavor::xi;
    const Matrix table = state_table(space, grid, fl);
    boundary = table_boundary_max(table, G, space, level);
    result.noalias() = table * table.adjoint();
    result *= h2 / kPi;
  } else {
    // g1: (1/2) sum |eta><xi| e^{i(eta1 xi2 - eta2 xi1)} (h^2/pi)^2 and g2 its
    // flavor-swapped mirror. In (ket label k, bra label x) coordinates both
    // phases read e^{i(k1 x2 - k2 x1)}.
    const Matrix eta_tab = state_table(space, grid, Flavor::eta);
    const Matrix xi_tab = state_table(space, grid, Flavor::xi);
    boundary = std::max(table_boundary_max(eta_tab, G, space, level),
                        table_boundary_max(xi_tab, G, space, level));
    const Matrix& ket = which == ResolutionKind::mixed_g1 ? eta_tab : xi_tab;
    const Matrix& bra = which == ResolutionKind::mixed_g1 ? xi_tab : eta_tab;

    // U[(k1,k2), b] = sum_x e^{i(k1 x2 - k2 x1)} conj(bra[b, x]), contracted
    // one axis at a time.
    Matrix v(long(G) * G, space.dim);  // V[(k2, x2), b] = sum_x1 e^{-i k2 x1} ...
    for (int k2 = 0; k2 < G; ++k2) {
      const double kn2 = grid.node(k2);
      for (int x2 = 0; x2 < G; ++x2) {
        Vector acc = Vector::Zero(space.dim);
        for (int x1 = 0; x1 < G; ++x1) {
          const cdouble ph = std::polar(1.0, -kn2 * grid.node(x1));
          acc += ph * bra.col(long(x1) * G + x2).conjugate();
        }
        v.row(long(k2) * G + x2) = acc.transpose();
      }
    }
    Matrix u(long(G) * G, space.dim);  // U[(k1,k2), b] = sum_x2 e^{+i k1 x2} V
    for (int k1 = 0; k1 < G; ++k1) {
      const double kn1 = grid.node(k1);
      for (int k2 = 0; k2 < G; ++k2) {
        Vector acc = Vector::Zero(space.dim);
        for (int x2 = 0; x2 < G; ++x2) {
          const cdouble ph = std::polar(1.0, kn1 * grid.node(x2));
          acc += ph * v.row(long(k2) * G + x2).transpose();
        }
        u.row(long(k1) * G + k2) = acc.transpose();
      }
    }
    result.noalias() = ket * u;
    const double s = h2 / kPi;
    result *= 0.5 * s * s;
  }

  for (int i = 0; i < space.dim; ++i) result(i, i) -= 1.0;
  const Operator diff{space, std::move(result)};
  CheckValue out;
  out.value = low_block_max_abs(diff, level);
  out.boundary_max = boundary;
  out.accuracy_warning = boundary > 1e-6;
  return out;
}

CheckValue orthogonality_smeared(const FockSpace& space, const ComplexGrid& grid,
                                 double test_width, Flavor flavor, cdouble label) {
  if (grid.axes != 2) throw std::invalid_argument("orthogonality_smeared expects a 2-axis grid");
  if (test_width < 2.0 * grid.spacing())
    throw std::invalid_argument("test width must be at least twice the grid spacing");
  const StateVector target =
      flavor == Flavor::eta ? eta_state(space, label) : xi_state(space, label);
  const int G = grid.points;
  cdouble acc = 0.0;
  double boundary = 0.0;
  for (int i = 0; i < G; ++i)
    for (int j = 0; j < G; ++j) {
      const cdouble z(grid.node(i), grid.node(j));
      const StateVector probe =
          flavor == Flavor::eta ? eta_state(space, z) : xi_state(space, z);
      const double g = std::exp(-std::norm(z - label) / (test_width * test_width));
      const cdouble term = overlap(probe, target) * g;
      acc += term;
      if (i == 0 || j == 0 || i == G - 1 || j == G - 1)
        boundary = std::max(boundary, std::abs(term));
    }
  acc *= grid.spacing() * grid.spacing() / kPi;
  CheckValue out;
  out.value = std::abs(acc - 1.0);  // g at the label is 1
  out.boundary_max = boundary;
  out.accuracy_warning = boundary > 1e-6;
  return out;
}

}  // namespace entwig
