#include "entwig/xform.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace entwig {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Phase table E[d][k] = exp(sign * 2i * s_d * node_k) with s_d = (d-(G-1))*h
// the difference lattice of two grid nodes.
std::vector<cdouble> phase_table(const ComplexGrid& grid, int sign) {
  const int G = grid.points;
  const double h = grid.spacing();
  std::vector<cdouble> E(size_t(2 * G - 1) * G);
  for (int d = 0; d < 2 * G - 1; ++d) {
    const double s = (d - (G - 1)) * h;
    for (int k = 0; k < G; ++k)
      E[size_t(d) * G + k] = std::polar(1.0, sign * 2.0 * s * grid.node(k));
  }
  return E;
}

// out(x,y) = sum_{p,q} e^{sign*2i(p-x)(q-y)} in(p,q), no measure factor.
// Split e^{2is(q-y)} with s = p-x into the q-sum and the y-phase: two O(G^3)
// stages that reproduce the direct double sum exactly.
void pass2d(const std::vector<cdouble>& E, int G, const cdouble* in, cdouble* out,
            std::vector<cdouble>& work) {
  work.assign(size_t(G) * G, cdouble(0.0));
  // stage 1: A[ip][ix] = sum_iq E[ip-ix][iq] * in[ip][iq]
  for (int ip = 0; ip < G; ++ip)
    for (int ix = 0; ix < G; ++ix) {
      const cdouble* Erow = &E[size_t(ip - ix + G - 1) * G];
      const cdouble* inrow = &in[size_t(ip) * G];
      cdouble acc = 0.0;
      for (int iq = 0; iq < G; ++iq) acc += Erow[iq] * inrow[iq];
      work[size_t(ip) * G + ix] = acc;
    }
  // stage 2: out[ix][iy] = sum_ip conj(E[ip-ix][iy]) * A[ip][ix]
  for (int ix = 0; ix < G; ++ix)
    for (int iy = 0; iy < G; ++iy) {
      cdouble acc = 0.0;
      for (int ip = 0; ip < G; ++ip)
        acc += std::conj(E[size_t(ip - ix + G - 1) * G + iy]) * work[size_t(ip) * G + ix];
      out[size_t(ix) * G + iy] = acc;
    }
}

GridFunction real_pass(const GridFunction& in, int sign) {
  if (in.grid.axes != 2) throw std::invalid_argument("real transform needs a 2-axis grid");
  const int G = in.grid.points;
  GridFunction out{in.grid, std::vector<cdouble>(in.grid.total()), 0.0};
  const auto E = phase_table(in.grid, sign);
  std::vector<cdouble> work;
  pass2d(E, G, in.samples.data(), out.samples.data(), work);
  const double scale = in.grid.weight() / kPi;
  for (auto& s : out.samples) s *= scale;
  record_boundary(out);
  return out;
}

// Two sequential 2-D passes over the axis pairs (axis2, axis1) then
// (axis3, axis0); signA/signB pick the kernel orientation.
GridFunction complex_pass(const GridFunction& in, int signA, int signB) {
  if (in.grid.axes != 4) throw std::invalid_argument("complex transform needs a 4-axis grid");
  const int G = in.grid.points;
  const auto EA = phase_table(in.grid, signA);
  const auto EB = phase_table(in.grid, signB);

  GridFunction mid{in.grid, std::vector<cdouble>(in.grid.total()), 0.0};
  std::vector<cdouble> slice(size_t(G) * G), outsl(size_t(G) * G), work;

  // pass A: p = axis2, q = axis1 -> x at axis2, y at axis1
  for (int i0 = 0; i0 < G; ++i0)
    for (int i3 = 0; i3 < G; ++i3) {
      for (int ip = 0; ip < G; ++ip)
        for (int iq = 0; iq < G; ++iq) slice[size_t(ip) * G + iq] = in.at4(i0, iq, ip, i3);
      pass2d(EA, G, slice.data(), outsl.data(), work);
      for (int ix = 0; ix < G; ++ix)
        for (int iy = 0; iy < G; ++iy) mid.at4(i0, iy, ix, i3) = outsl[size_t(ix) * G + iy];
    }

  GridFunction out{in.grid, std::vector<cdouble>(in.grid.total()), 0.0};
  // pass B: p = axis3, q = axis0 -> x at axis3, y at axis0
  for (int i1 = 0; i1 < G; ++i1)
    for (int i2 = 0; i2 < G; ++i2) {
      for (int ip = 0; ip < G; ++ip)
        for (int iq = 0; iq < G; ++iq) slice[size_t(ip) * G + iq] = mid.at4(iq, i1, i2, ip);
      pass2d(EB, G, slice.data(), outsl.data(), work);
      for (int ix = 0; ix < G; ++ix)
        for (int iy = 0; iy < G; ++iy) out.at4(iy, i1, i2, ix) = outsl[size_t(ix) * G + iy];
    }

  const double scale = in.grid.weight() / (kPi * kPi);
  for (auto& s : out.samples) s *= scale;
  record_boundary(out);
  return out;
}

}  // namespace

GridFunction real_forward(const GridFunction& h) { return real_pass(h, +1); }
GridFunction real_inverse(const GridFunction& f) { return real_pass(f, -1); }

// (e8) exponent = +2i(xi1-mu1)(eta2-nu2) - 2i(xi2-mu2)(eta1-nu1)
GridFunction complex_forward(const GridFunction& D) { return complex_pass(D, +1, -1); }
// (e9) exponent is the conjugate
GridFunction complex_inverse(const GridFunction& F) { return complex_pass(F, -1, +1); }

GridFunction complex_forward_direct(const GridFunction& D) {
  if (D.grid.axes != 4) throw std::invalid_argument("complex transform needs a 4-axis grid");
  const int G = D.grid.points;
  if (G > 15) throw std::invalid_argument("direct path is O(G^8); use G <= 15");
  GridFunction out{D.grid, std::vector<cdouble>(D.grid.total()), 0.0};
  const double scale = D.grid.weight() / (kPi * kPi);
  for (int e1 = 0; e1 < G; ++e1)
    for (int e2 = 0; e2 < G; ++e2)
      for (int x1 = 0; x1 < G; ++x1)
        for (int x2 = 0; x2 < G; ++x2) {
          const double eta1 = D.grid.node(e1), eta2 = D.grid.node(e2);
          const double xi1 = D.grid.node(x1), xi2 = D.grid.node(x2);
          cdouble acc = 0.0;
          for (int n1 = 0; n1 < G; ++n1)
            for (int n2 = 0; n2 < G; ++n2)
              for (int m1 = 0; m1 < G; ++m1)
                for (int m2 = 0; m2 < G; ++m2) {
                  const double nu1 = D.grid.node(n1), nu2 = D.grid.node(n2);
                  const double mu1 = D.grid.node(m1), mu2 = D.grid.node(m2);
                  const double phase = 2.0 * (xi1 - mu1) * (eta2 - nu2) -
                                       2.0 * (xi2 - mu2) * (eta1 - nu1);
                  acc += D.at4(n1, n2, m1, m2) * std::polar(1.0, phase);
                }
          out.at4(e1, e2, x1, x2) = acc * scale;
        }
  record_boundary(out);
  return out;
}

double parseval_gap(const GridFunction& D) {
  const GridFunction F = D.grid.axes == 2 ? real_forward(D) : complex_forward(D);
  const double pi_pow = D.grid.axes == 2 ? kPi : kPi * kPi;
  const double w = D.grid.weight() / pi_pow;
  double in_sum = 0.0, out_sum = 0.0;
  for (const cdouble& s : D.samples) in_sum += std::norm(s);
  for (const cdouble& s : F.samples) out_sum += std::norm(s);
  in_sum *= w;
  out_sum *= w;
  if (in_sum == 0.0) throw std::invalid_argument("parseval_gap of identically zero input");
  return std::abs(out_sum - in_sum) / in_sum;
}

cdouble kernel_normalization(const ComplexGrid& grid4, cdouble mu, cdouble nu) {
  if (grid4.axes != 4) throw std::invalid_argument("kernel_normalization needs a 4-axis grid");
  // (e4) kernel factors over (xi1,eta2) and (xi2,eta1)
  const int G = grid4.points;
  cdouble sumA = 0.0, sumB = 0.0;
  for (int a = 0; a < G; ++a)
    for (int b = 0; b < G; ++b) {
      const double xi1 = grid4.node(a), eta2 = grid4.node(b);
      sumA += std::polar(1.0, -2.0 * (xi1 - mu.real()) * (eta2 - nu.imag()));
      const double xi2 = grid4.node(a), eta1 = grid4.node(b);
      sumB += std::polar(1.0, +2.0 * (xi2 - mu.imag()) * (eta1 - nu.real()));
    }
  const double h2 = grid4.spacing() * grid4.spacing();
  return sumA * sumB * (h2 * h2 / (kPi * kPi));
}

cdouble gaussian_integral_quadrature(const ComplexGrid& grid2, cdouble zeta, cdouble xi,
                                     cdouble eta) {
  if (grid2.axes != 2) throw std::invalid_argument("gaussian integral needs a 2-axis grid");
  const int G = grid2.points;
  cdouble acc = 0.0;
  for (int i = 0; i < G; ++i)
    for (int j = 0; j < G; ++j) {
      const cdouble z(grid2.node(i), grid2.node(j));
      acc += std::exp(zeta * std::norm(z) + xi * z + eta * std::conj(z));
    }
  return acc * (grid2.weight() / kPi);
}

}  // namespace entwig
