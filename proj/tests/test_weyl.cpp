#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "entwig/weyl.hpp"
#include "entwig/xform.hpp"

using namespace entwig;

namespace {

constexpr double kPi = 3.14159265358979323846;

// one small calibrated setup shared by the slow cases
const WeylMaps& small_maps() {
  static const WeylMaps maps = make_weyl_maps(make_space(6), make_grid(2, 31, 4.0));
  return maps;
}

}  // namespace

TEST_CASE("wigner operator: hermiticity, vacuum element, trace") {
  const WeylMaps& maps = small_maps();
  for (const PhasePoint pt : {PhasePoint{{0.0, 0.0}, {0.0, 0.0}},
                              PhasePoint{{0.5, 0.0}, {-0.3, 0.2}}}) {
    const auto d = wigner_operator(maps, pt);
    CHECK(max_abs(*d - adjoint(*d)) < 1e-12);
    // vacuum element of (e1): e^{-|mu|^2-|nu|^2}/pi^2
    const double want =
        std::exp(-std::norm(pt.mu) - std::norm(pt.nu)) / (kPi * kPi);
    CHECK(std::abs(d->entries(0, 0) - want) < 1e-8);
  }
  // resummed trace sits at 1/(4 pi^2), constant across points
  CHECK(std::abs(maps.trace_norm - 1.0 / (4.0 * kPi * kPi)) < 2e-4);
  CHECK(maps.trace_spread < 5e-3);
}

TEST_CASE("undersized inner grid fails calibration") {
  CHECK_THROWS_AS(make_weyl_maps(make_space(6), make_grid(2, 5, 0.8)),
                  std::runtime_error);
}

TEST_CASE("delta products") {
  const FockSpace s = make_space(8);
  const cdouble eta(0.4, -0.3), xi(-0.2, 0.6);
  const Operator nu = delta_product(s, eta, xi, DeltaOrder::nu_first);
  const Operator mu = delta_product(s, eta, xi, DeltaOrder::mu_first);
  CHECK(max_abs(adjoint(nu) - mu) < 1e-15);
  // vacuum element: (1/2) <0|eta><xi|0> e^{phase}
  const cdouble phase = 0.5 * (std::conj(eta) * xi - eta * std::conj(xi));
  const cdouble want = 0.5 * std::exp(phase) *
                       std::exp(-0.5 * std::norm(eta)) * std::exp(-0.5 * std::norm(xi));
  CHECK(std::abs(nu.entries(0, 0) - want) < 1e-15);
  // the two order phases cancel exactly
  CHECK(std::abs(std::exp(phase) * std::exp(-phase) - 1.0) < 1e-15);
}

TEST_CASE("mode coordinates") {
  const PhasePoint p = mode_to_entangled_coords(cdouble(1.0, 0.0), cdouble(0.0, 1.0));
  CHECK(p.mu == cdouble(1.0, -1.0));
  CHECK(p.nu == cdouble(1.0, 1.0));
  CHECK(mode_to_entangled_coords(0.0, 0.0).mu == cdouble(0.0, 0.0));
  for (int k = 0; k < 10; ++k) {
    const cdouble a1 = std::polar(0.8 * (k + 1) / 10.0, 0.9 * k);
    const cdouble a2 = std::polar(0.5 * (k + 1) / 10.0, -0.6 * k);
    const auto [b1, b2] = entangled_to_mode_coords(mode_to_entangled_coords(a1, a2));
    CHECK(std::abs(a1 - b1) < 1e-15);
    CHECK(std::abs(a2 - b2) < 1e-15);
  }
}

TEST_CASE("coherent-state dequantizer on known symbols") {
  const FockSpace s = make_space(16);
  const ComplexGrid g = make_grid(2, 21, 2.2);
  const cdouble a1(0.6, 0.3), a2(0.0, -0.2);
  CHECK(std::abs(dequantize_coherent(s, identity(s), a1, a2, g) - 1.0) < 1e-3);
  const Operator low = ladder(s, Mode::one, LadderKind::lower);
  CHECK(std::abs(dequantize_coherent(s, low, a1, a2, g) - a1) < 1e-3);
  const Operator n1 = compose(ladder(s, Mode::one, LadderKind::raise), low);
  CHECK(std::abs(dequantize_coherent(s, n1, a1, a2, g) - (std::norm(a1) - 0.5)) < 1e-3);
  CHECK_THROWS_AS(dequantize_coherent(s, low, a1, a2, make_grid(4, 9, 2.0)),
                  std::invalid_argument);
}

TEST_CASE("trace dequantizer reads off linear symbols") {
  const WeylMaps& maps = small_maps();
  const Operator mu_op = ladder(maps.space, Mode::one, LadderKind::lower) +
                         ladder(maps.space, Mode::two, LadderKind::raise);
  const PhasePoint pt{{0.5, -0.2}, {0.1, 0.3}};
  // seven usable shells at this cutoff; accuracy follows the table depth
  CHECK(std::abs(dequantize_trace(maps, mu_op, pt) - pt.mu) < 2e-2);
  CHECK_THROWS_AS(dequantize_trace(maps, identity(make_space(4)), pt),
                  std::invalid_argument);
}

TEST_CASE("quantize of a windowed constant approximates the identity") {
  const WeylMaps& maps = small_maps();
  const GridFunction one = constant_grid(make_grid(4, 17, 4.0), 1.0);
  const Operator q = quantize(maps, one);
  CHECK(low_block_max_abs(q - identity(maps.space), 2) < 5e-3);
  // a real symbol quantizes to a hermitian operator
  const GridFunction gauss = sample_grid(make_grid(4, 17, 4.0), [](const double* c) {
    return cdouble(std::exp(-(c[0]*c[0] + c[1]*c[1] + c[2]*c[2] + c[3]*c[3])), 0.0);
  });
  const Operator qg = quantize(maps, gauss);
  CHECK(max_abs(qg - adjoint(qg)) < 1e-10);
}

TEST_CASE("mutual transforms at a reduced setup") {
  const WeylMaps& maps = small_maps();
  const ComplexGrid outer = make_grid(2, 15, 4.0);
  const cdouble eta(0.2, 0.0), xi(0.0, -0.1);
  const Operator via_e4 = wigner_to_delta(maps, eta, xi, outer);
  const Operator direct = delta_product(maps.space, eta, xi, DeltaOrder::nu_first);
  CHECK(low_block_max_abs(via_e4 - direct, 2) < 1e-3);

  const PhasePoint pt{{0.0, 0.0}, {0.0, 0.0}};
  const Operator via_e5 = delta_to_wigner(maps, pt, outer);
  const auto dd = wigner_operator(maps, pt);
  CHECK(low_block_max_abs(via_e5 - *dd, 2) < 1e-3);
  // hermiticity emerges on the trusted block as the quadrature converges
  CHECK(low_block_max_abs(via_e5 - adjoint(via_e5), 2) < 1e-3);
}

TEST_CASE("function correspondence at a reduced setup") {
  const WeylMaps& maps = small_maps();
  const GridFunction d = sample_grid(make_grid(4, 15, 4.0), [](const double* c) {
    return cdouble(std::exp(-(c[0]*c[0] + c[1]*c[1] + c[2]*c[2] + c[3]*c[3])), 0.0);
  });
  CHECK(function_correspondence_check(maps, d, 2).value < 1e-3);
}

TEST_CASE("delta cache reuses phase points") {
  const WeylMaps& maps = small_maps();
  const std::size_t before = maps.cache->size();
  const PhasePoint pt{{0.123456, -0.4}, {0.2, 0.77}};
  const auto d1 = wigner_operator(maps, pt);
  const std::size_t mid = maps.cache->size();
  const auto d2 = wigner_operator(maps, pt);
  CHECK(mid == before + 1);
  CHECK(maps.cache->size() == mid);
  CHECK(d1.get() == d2.get());
}
