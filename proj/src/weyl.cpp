#include "entwig/weyl.hpp"

#include <cmath>
#include <stdexcept>

#include "entwig/resummation.hpp"
#include "entwig/xform.hpp"

namespace entwig {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<double> grid_nodes(const ComplexGrid& g) {
  std::vector<double> n(g.points);
  for (int i = 0; i < g.points; ++i) n[i] = g.node(i);
  return n;
}

// result += sum_{i,j} coeff(i,j) |nu_j - eta_i><nu_j + eta_i| with the kets
// and bras built as |eta>-flavored states. The rank-one updates are batched
// into wide GEMMs; chunk width is fixed so results do not depend on the
// host's core count.
Operator assemble_pair_field(const FockSpace& space, const std::vector<cdouble>& nus,
                             const std::vector<cdouble>& etas, const Matrix& coeff) {
  const int dim = space.dim;
  const long n_nu = long(nus.size());
  const long n_eta = long(etas.size());
  if (coeff.rows() != n_eta || coeff.cols() != n_nu)
    throw std::invalid_argument("assemble_pair_field: coefficient shape mismatch");

  const long target_cols = 2048;
  const long chunk = std::max<long>(1, target_cols / std::max<long>(1, n_nu));
  Matrix km(dim, chunk * n_nu), bm(dim, chunk * n_nu);
  Operator result = zero_operator(space);

  long i = 0;
  while (i < n_eta) {
    const long take = std::min(chunk, n_eta - i);
    long col = 0;
    for (long ii = 0; ii < take; ++ii) {
      const cdouble eta = etas[size_t(i + ii)];
      for (long j = 0; j < n_nu; ++j, ++col) {
        const cdouble nu = nus[size_t(j)];
        eta_coeffs_scaled(space, nu - eta, coeff(i + ii, j), km.col(col).data());
        eta_coeffs_scaled(space, nu + eta, 1.0, bm.col(col).data());
      }
    }
    result.entries.noalias() += km.leftCols(col) * bm.leftCols(col).adjoint();
    i += take;
  }
  return result;
}

std::shared_ptr<const Operator> build_wigner(const WeylMaps& maps, const PhasePoint& pt) {
  const ComplexGrid& g = maps.inner;
  const auto nodes = grid_nodes(g);
  const int G = g.points;
  std::vector<cdouble> etas(size_t(G) * G);
  Matrix coeff(long(G) * G, 1);
  const double scale = g.weight() / (kPi * kPi * kPi);
  const double m1 = pt.mu.real(), m2 = pt.mu.imag();
  long k = 0;
  for (int i1 = 0; i1 < G; ++i1)
    for (int i2 = 0; i2 < G; ++i2, ++k) {
      etas[size_t(k)] = cdouble(nodes[i1], nodes[i2]);
      // e^{eta mu* - eta* mu} = e^{2i(e2 m1 - e1 m2)}
      coeff(k, 0) = std::polar(scale, 2.0 * (nodes[i2] * m1 - nodes[i1] * m2));
    }
  std::vector<cdouble> nus = {pt.nu};
  return std::make_shared<Operator>(assemble_pair_field(maps.space, nus, etas, coeff));
}

}  // namespace

std::shared_ptr<const Operator> DeltaCache::find(const std::array<long long, 4>& key) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : it->second;
}

std::shared_ptr<const Operator> DeltaCache::insert(const std::array<long long, 4>& key,
                                                   std::shared_ptr<const Operator> value) {
  std::lock_guard<std::mutex> lock(mutex_);
  auto [it, fresh] = entries_.emplace(key, std::move(value));
  return it->second;  // loser of a race keeps the first-inserted value
}

std::array<long long, 4> DeltaCache::snap(const PhasePoint& pt) const {
  const double q = 1e12;
  return {llround(pt.mu.real() * q), llround(pt.mu.imag() * q), llround(pt.nu.real() * q),
          llround(pt.nu.imag() * q)};
}

std::size_t DeltaCache::size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return entries_.size();
}

std::vector<PhasePoint> calibration_points() {
  return {
      {{0.0, 0.0}, {0.0, 0.0}},  {{0.5, 0.0}, {0.0, -0.5}},   {{-0.3, 0.4}, {0.0, 0.0}},
      {{0.0, 0.0}, {0.4, -0.2}}, {{0.5, 0.0}, {0.4, -0.2}},   {{-0.3, 0.4}, {0.0, -0.5}},
      {{0.2, -0.6}, {0.3, 0.3}}, {{-0.4, -0.2}, {-0.5, 0.1}}, {{0.6, 0.3}, {-0.2, 0.4}},
  };
}

std::shared_ptr<const Operator> wigner_operator(const WeylMaps& maps, const PhasePoint& pt) {
  const auto key = maps.cache->snap(pt);
  if (auto hit = maps.cache->find(key)) return hit;
  auto fresh = build_wigner(maps, pt);
  return maps.cache->insert(key, std::move(fresh));
}

// Tr Delta is a delta-normalized quantity: its plain truncated partial traces
// oscillate with the occupation shell (at the origin the diagonal is exactly
// (-1)^{n1+n2}/pi^2), so the trace is taken as the resummed shell series.
cdouble wigner_trace(const WeylMaps& maps, const PhasePoint& pt) {
  const auto delta = wigner_operator(maps, pt);
  const Matrix id = Matrix::Identity(maps.space.dim, maps.space.dim);
  return resummed_product_trace(maps.space, id, delta->entries);
}

WeylMaps make_weyl_maps(const FockSpace& space, const ComplexGrid& inner) {
  if (inner.axes != 2) throw std::invalid_argument("weyl inner grid must be 2-axis");
  WeylMaps maps{space, inner, 0.0, 0.0, std::make_shared<DeltaCache>()};
  const auto pts = calibration_points();
  std::vector<cdouble> traces;
  traces.reserve(pts.size());
  cdouble mean = 0.0;
  for (const auto& pt : pts) {
    const cdouble t = wigner_trace(maps, pt);
    traces.push_back(t);
    mean += t;
  }
  mean /= double(pts.size());
  double spread = 0.0;
  for (const cdouble& t : traces)
    spread = std::max(spread, std::abs(t - mean) / std::abs(mean));
  maps.trace_norm = mean;
  maps.trace_spread = spread;
  if (spread > 0.05)
    throw std::runtime_error(
        "wigner trace calibration variance above 5%: enlarge the inner grid");
  return maps;
}

Operator delta_product(const FockSpace& space, cdouble eta, cdouble xi, DeltaOrder order) {
  const StateVector e = eta_state(space, eta);
  const StateVector x = xi_state(space, xi);
  const cdouble phase = std::conj(eta) * xi - eta * std::conj(xi);
  Operator r = zero_operator(space);
  if (order == DeltaOrder::nu_first) {
    r.entries.noalias() = (0.5 * std::exp(0.5 * phase)) * (e.coeffs * x.coeffs.adjoint());
  } else {
    r.entries.noalias() = (0.5 * std::exp(-0.5 * phase)) * (x.coeffs * e.coeffs.adjoint());
  }
  return r;
}

Operator quantize(const WeylMaps& maps, const GridFunction& symbol) {
  if (symbol.grid.axes != 4) throw std::invalid_argument("quantize expects a 4-axis symbol");
  const ComplexGrid& og = symbol.grid;  // (nu1, nu2, mu1, mu2)
  const ComplexGrid& ig = maps.inner;
  const int Go = og.points, Gi = ig.points;
  const auto onodes = grid_nodes(og);
  const auto inodes = grid_nodes(ig);

  // What(eta', nu) = sum_mu W(nu, mu) e^{2i(e2 m1 - e1 m2)} h_o^2, one mu
  // axis at a time.
  std::vector<cdouble> ph1(size_t(Gi) * Go), ph2(size_t(Gi) * Go);
  for (int e = 0; e < Gi; ++e)
    for (int m = 0; m < Go; ++m) {
      ph1[size_t(e) * Go + m] = std::polar(1.0, 2.0 * inodes[e] * onodes[m]);
      ph2[size_t(e) * Go + m] = std::polar(1.0, -2.0 * inodes[e] * onodes[m]);
    }

  const long n_nu = long(Go) * Go;
  // stage 1: U[nu][e2][m2] = sum_m1 e^{2i e2 m1} W[nu, m1, m2]
  std::vector<cdouble> U(size_t(n_nu) * Gi * Go);
  for (long nu = 0; nu < n_nu; ++nu) {
    const cdouble* w = &symbol.samples[size_t(nu) * Go * Go];
    for (int e2 = 0; e2 < Gi; ++e2) {
      const cdouble* p = &ph1[size_t(e2) * Go];
      for (int m2 = 0; m2 < Go; ++m2) {
        cdouble acc = 0.0;
        for (int m1 = 0; m1 < Go; ++m1) acc += p[m1] * w[size_t(m1) * Go + m2];
        U[(size_t(nu) * Gi + e2) * Go + m2] = acc;
      }
    }
  }
  // stage 2: What[(e1,e2)][nu] = sum_m2 e^{-2i e1 m2} U[nu][e2][m2]
  const long n_eta = long(Gi) * Gi;
  Matrix coeff(n_eta, n_nu);
  const double h_o2 = og.spacing() * og.spacing();
  const double scale = h_o2 * h_o2 * ig.weight() / (kPi * kPi * kPi);
  for (long nu = 0; nu < n_nu; ++nu)
    for (int e1 = 0; e1 < Gi; ++e1) {
      const cdouble* p = &ph2[size_t(e1) * Go];
      for (int e2 = 0; e2 < Gi; ++e2) {
        const cdouble* u = &U[(size_t(nu) * Gi + e2) * Go];
        cdouble acc = 0.0;
        for (int m2 = 0; m2 < Go; ++m2) acc += p[m2] * u[m2];
        coeff(long(e1) * Gi + e2, nu) = acc * scale;
      }
    }

  std::vector<cdouble> nus(static_cast<size_t>(n_nu));
  std::vector<cdouble> etas(static_cast<size_t>(n_eta));
  for (int i1 = 0; i1 < Go; ++i1)
    for (int i2 = 0; i2 < Go; ++i2)
      nus[size_t(i1) * Go + i2] = cdouble(onodes[i1], onodes[i2]);
  for (int i1 = 0; i1 < Gi; ++i1)
    for (int i2 = 0; i2 < Gi; ++i2)
      etas[size_t(i1) * Gi + i2] = cdouble(inodes[i1], inodes[i2]);
  return assemble_pair_field(maps.space, nus, etas, coeff);
}

cdouble dequantize_trace(const WeylMaps& maps, const Operator& O, const PhasePoint& pt,
                         int shell_drop) {
  if (!(O.space == maps.space))
    throw std::invalid_argument("dequantize_trace operand on a different space");
  const auto delta = wigner_operator(maps, pt);
  return resummed_product_trace(maps.space, O.entries, delta->entries, shell_drop) /
         maps.trace_norm;
}

CoherentDequantizer::CoherentDequantizer(const FockSpace& space, const Operator& O,
                                         const ComplexGrid& grid2)
    : grid_(grid2) {
  if (grid2.axes != 2)
    throw std::invalid_argument("dequantize_coherent expects a 2-axis grid");
  const int L = space.levels, G = grid2.points;
  const long nb = long(G) * G;
  const auto nodes = grid_nodes(grid2);

  // P[beta, (n,m)] = conj(d^{-beta}_n) d^{beta}_m for one mode. Each beta
  // plane is masked to the inscribed disk: at the square's corners |beta|^2
  // approaches 2 extent^2, where the truncated coherent expansion of
  // <-beta|beta> breaks down long before the true e^{-2|beta|^2} tail
  // matters.
  Matrix P(nb, long(L) * L);
  std::vector<cdouble> up(L), um(L);
  for (int i = 0; i < G; ++i)
    for (int j = 0; j < G; ++j) {
      const cdouble beta(nodes[i], nodes[j]);
      if (std::abs(beta) > grid2.extent + 1e-12) {
        P.row(long(i) * G + j).setZero();
        continue;
      }
      const double pref = std::exp(-std::norm(beta));
      up[0] = um[0] = 1.0;
      for (int n = 1; n < L; ++n) {
        up[n] = up[n - 1] * (-std::conj(beta));
        um[n] = um[n - 1] * beta;
      }
      for (int n = 0; n < L; ++n)
        for (int m = 0; m < L; ++m)
          P(long(i) * G + j, long(n) * L + m) =
              pref * up[n] * um[m] / (sqrt_factorial(n) * sqrt_factorial(m));
    }

  // Otil[(n1,m1),(n2,m2)] = O[(n1,n2),(m1,m2)]
  Matrix Otil(long(L) * L, long(L) * L);
  for (int n1 = 0; n1 < L; ++n1)
    for (int n2 = 0; n2 < L; ++n2)
      for (int m1 = 0; m1 < L; ++m1)
        for (int m2 = 0; m2 < L; ++m2)
          Otil(long(n1) * L + m1, long(n2) * L + m2) =
              O.entries(space.index(n1, n2), space.index(m1, m2));

  Matrix V(nb, long(L) * L);
  V.noalias() = P * Otil;  // V[beta1, (n2,m2)]
  table_.resize(nb, nb);
  table_.noalias() = V * P.transpose();  // table[beta1, beta2] = <-b1,-b2|O|b1,b2>
}

cdouble CoherentDequantizer::eval(cdouble alpha1, cdouble alpha2) const {
  const int G = grid_.points;
  const long nb = long(G) * G;
  Vector u1(nb), u2(nb);
  // e^{2(b* a - a* b)} = e^{4i(b1 a2 - b2 a1)}
  for (int i = 0; i < G; ++i)
    for (int j = 0; j < G; ++j) {
      const double b1 = grid_.node(i), b2 = grid_.node(j);
      u1(long(i) * G + j) = std::polar(1.0, 4.0 * (b1 * alpha1.imag() - b2 * alpha1.real()));
      u2(long(i) * G + j) = std::polar(1.0, 4.0 * (b1 * alpha2.imag() - b2 * alpha2.real()));
    }
  const cdouble quad = u1.transpose() * (table_ * u2);
  const double h2pi = grid_.spacing() * grid_.spacing() / kPi;
  return 4.0 * std::exp(2.0 * (std::norm(alpha1) + std::norm(alpha2))) * quad * h2pi * h2pi;
}

cdouble dequantize_coherent(const FockSpace& space, const Operator& O, cdouble alpha1,
                            cdouble alpha2, const ComplexGrid& grid2) {
  return CoherentDequantizer(space, O, grid2).eval(alpha1, alpha2);
}

PhasePoint mode_to_entangled_coords(cdouble alpha1, cdouble alpha2) {
  return PhasePoint{alpha1 + std::conj(alpha2), alpha1 - std::conj(alpha2)};
}

std::pair<cdouble, cdouble> entangled_to_mode_coords(const PhasePoint& pt) {
  return {0.5 * (pt.mu + pt.nu), std::conj(0.5 * (pt.mu - pt.nu))};
}

Operator wigner_to_delta(const WeylMaps& maps, cdouble eta, cdouble xi,
                         const ComplexGrid& outer) {
  if (outer.axes != 2)
    throw std::invalid_argument("wigner_to_delta expects a 2-axis outer grid");
  const ComplexGrid& ig = maps.inner;
  const int Go = outer.points, Gi = ig.points;
  const auto onodes = grid_nodes(outer);
  const auto inodes = grid_nodes(ig);
  const double h_o = outer.spacing();

  // The mu sum against Delta's (e1) phase collapses to Dirichlet factors
  // DK(s) = h_o sum_m e^{2i m s}, real on the symmetric grid.
  auto dirichlet = [&](double s) {
    cdouble acc = 0.0;
    for (int m = 0; m < Go; ++m) acc += std::polar(1.0, 2.0 * onodes[m] * s);
    return (acc * h_o).real();
  };
  // tables over z = eta - nu + eta', one per real axis
  std::vector<double> dk1(size_t(Go) * Gi), dk2(size_t(Go) * Gi);
  for (int j = 0; j < Go; ++j)
    for (int i = 0; i < Gi; ++i) {
      dk1[size_t(j) * Gi + i] = dirichlet(eta.real() - onodes[j] + inodes[i]);
      dk2[size_t(j) * Gi + i] = dirichlet(eta.imag() - onodes[j] + inodes[i]);
    }

  const long n_nu = long(Go) * Go, n_eta = long(Gi) * Gi;
  std::vector<cdouble> nus(static_cast<size_t>(n_nu));
  std::vector<cdouble> etas(static_cast<size_t>(n_eta));
  std::vector<cdouble> pref(static_cast<size_t>(n_nu));
  const double scale = h_o * h_o * ig.weight() / (kPi * kPi * kPi);
  for (int j1 = 0; j1 < Go; ++j1)
    for (int j2 = 0; j2 < Go; ++j2) {
      const cdouble nu(onodes[j1], onodes[j2]);
      nus[size_t(j1) * Go + j2] = nu;
      pref[size_t(j1) * Go + j2] = scale * std::exp(xi * (std::conj(eta) - std::conj(nu)) -
                                                    (eta - nu) * std::conj(xi));
    }
  for (int i1 = 0; i1 < Gi; ++i1)
    for (int i2 = 0; i2 < Gi; ++i2)
      etas[size_t(i1) * Gi + i2] = cdouble(inodes[i1], inodes[i2]);

  Matrix coeff(n_eta, n_nu);
  for (long i = 0; i < n_eta; ++i) {
    const int i1 = int(i / Gi), i2 = int(i % Gi);
    for (long j = 0; j < n_nu; ++j) {
      const int j1 = int(j / Go), j2 = int(j % Go);
      coeff(i, j) = pref[size_t(j)] * dk1[size_t(j1) * Gi + i1] * dk2[size_t(j2) * Gi + i2];
    }
  }
  return assemble_pair_field(maps.space, nus, etas, coeff);
}

Operator delta_to_wigner(const WeylMaps& maps, const PhasePoint& pt,
                         const ComplexGrid& outer) {
  if (outer.axes != 2)
    throw std::invalid_argument("delta_to_wigner expects a 2-axis outer grid");
  const FockSpace& space = maps.space;
  const int G = outer.points;
  const auto nodes = grid_nodes(outer);
  const long n = long(G) * G;

  Matrix eta_tab(space.dim, n), xi_tab(space.dim, n);
  std::vector<cdouble> labels(static_cast<size_t>(n));
  for (int i = 0; i < G; ++i)
    for (int j = 0; j < G; ++j) {
      const cdouble z(nodes[i], nodes[j]);
      labels[size_t(i) * G + j] = z;
      eta_tab.col(long(i) * G + j) = eta_state(space, z).coeffs;
      xi_tab.col(long(i) * G + j) = xi_state(space, z).coeffs;
    }

  const double w = outer.weight() * outer.weight();  // d2eta d2xi
  Matrix C(n, n);
  for (long a = 0; a < n; ++a) {
    const cdouble eta = labels[size_t(a)];
    for (long b = 0; b < n; ++b) {
      const cdouble xi = labels[size_t(b)];
      const cdouble inner_phase = 0.5 * (std::conj(eta) * xi - eta * std::conj(xi));
      const cdouble kernel = -(xi - pt.mu) * (std::conj(eta) - std::conj(pt.nu)) +
                             (eta - pt.nu) * (std::conj(xi) - std::conj(pt.mu));
      C(a, b) = 0.5 * std::exp(inner_phase + kernel) * (w / (kPi * kPi * kPi * kPi));
    }
  }
  Operator r = zero_operator(space);
  Matrix tmp(space.dim, n);
  tmp.noalias() = eta_tab * C;
  r.entries.noalias() = tmp * xi_tab.adjoint();
  return r;
}

CheckValue function_correspondence_check(const WeylMaps& maps, const GridFunction& D,
                                         int level) {
  if (D.grid.axes != 4)
    throw std::invalid_argument("function_correspondence_check expects a 4-axis D");
  const FockSpace& space = maps.space;

  // LHS: sum D(nu,mu) Delta(mu,nu) w/pi^2 -- quantize with the (e7) measure
  GridFunction scaled = D;
  for (auto& s : scaled.samples) s /= kPi * kPi;
  const Operator lhs = quantize(maps, scaled);

  // RHS: F = complex_forward(D), then sum F(eta,xi) delta_product w/pi^2
  const GridFunction F = complex_forward(D);
  const ComplexGrid& g = D.grid;
  const int G = g.points;
  const long n = long(G) * G;
  Matrix eta_tab(space.dim, n), xi_tab(space.dim, n);
  std::vector<cdouble> labels(static_cast<size_t>(n));
  for (int i = 0; i < G; ++i)
    for (int j = 0; j < G; ++j) {
      const cdouble z(g.node(i), g.node(j));
      labels[size_t(i) * G + j] = z;
      eta_tab.col(long(i) * G + j) = eta_state(space, z).coeffs;
      xi_tab.col(long(i) * G + j) = xi_state(space, z).coeffs;
    }
  const double h2 = g.spacing() * g.spacing();
  const double w = h2 * h2 / (kPi * kPi * kPi * kPi);
  Matrix C(n, n);
  for (long a = 0; a < n; ++a) {
    const cdouble eta = labels[size_t(a)];
    const int a1 = int(a / G), a2 = int(a % G);
    for (long b = 0; b < n; ++b) {
      const cdouble xi = labels[size_t(b)];
      const int b1 = int(b / G), b2 = int(b % G);
      const cdouble phase = 0.5 * (std::conj(eta) * xi - eta * std::conj(xi));
      C(a, b) = 0.5 * std::exp(phase) * F.at4(a1, a2, b1, b2) * w;
    }
  }
  Matrix tmp(space.dim, n);
  tmp.noalias() = eta_tab * C;
  Operator rhs = zero_operator(space);
  rhs.entries.noalias() = tmp * xi_tab.adjoint();

  CheckValue out;
  out.value = low_block_max_abs(lhs - rhs, level);
  out.boundary_max = D.boundary_max;
  out.accuracy_warning = D.boundary_max > 1e-6;
  return out;
}

}  // namespace entwig
