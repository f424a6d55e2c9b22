#ifndef ENTWIG_WEYL_HPP
#define ENTWIG_WEYL_HPP

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "entwig/fock.hpp"
#include "entwig/grid.hpp"
#include "entwig/states.hpp"

namespace entwig {

struct PhasePoint {
  cdouble mu;
  cdouble nu;
};

// Cache of Wigner operators keyed by quantized phase-point coordinates so
// repeated evaluations inside the 4-D quadratures and the symbol fits reuse
// the expensive (e1) assembly. Values are deterministic, so losing a race
// and recomputing is harmless.
class DeltaCache {
 public:
  std::shared_ptr<const Operator> find(const std::array<long long, 4>& key) const;
  std::shared_ptr<const Operator> insert(const std::array<long long, 4>& key,
                                         std::shared_ptr<const Operator> value);
  std::array<long long, 4> snap(const PhasePoint& pt) const;
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::map<std::array<long long, 4>, std::shared_ptr<const Operator>> entries_;
};

// Calibrated quantize/dequantize machinery around the entangled-form Wigner
// operator. trace_norm is the measured Tr Delta, constant across interior
// phase points within trace_spread; construction fails if the spread
// exceeds 5%.
struct WeylMaps {
  FockSpace space;
  ComplexGrid inner;  // 2-axis eta grid used inside the (e1) quadrature
  cdouble trace_norm = 0.0;
  double trace_spread = 0.0;
  std::shared_ptr<DeltaCache> cache;
};

WeylMaps make_weyl_maps(const FockSpace& space, const ComplexGrid& inner);

// Fixed interior set used for trace calibration and constancy checks.
std::vector<PhasePoint> calibration_points();

// Delta(mu,nu) = sum_eta' |nu-eta'><nu+eta'| e^{eta' mu* - eta'* mu} w/pi^3
// over the inner grid; Hermitian up to roundoff, cached per phase point.
std::shared_ptr<const Operator> wigner_operator(const WeylMaps& maps, const PhasePoint& pt);

// Resummed Tr Delta(pt); approximately 1/(4 pi^2) and constant across
// interior points.
cdouble wigner_trace(const WeylMaps& maps, const PhasePoint& pt);

enum class DeltaOrder { nu_first, mu_first };

// (1/2)|eta><xi| e^{(eta* xi - eta xi*)/2} for nu_first (c1);
// (1/2)|xi><eta| e^{(eta xi* - eta* xi)/2} for mu_first (c10).
Operator delta_product(const FockSpace& space, cdouble eta, cdouble xi, DeltaOrder order);

// O = sum W(mu,nu) Delta(mu,nu) d2mu d2nu (plain measure, from the inside-
// ordering identity integral of (e3)). symbol samples over (nu-plane,
// mu-plane).
Operator quantize(const WeylMaps& maps, const GridFunction& symbol);

// Tr[O Delta(pt)] / trace_norm, with the trace taken as the resummed shell
// series. shell_drop discards the top shells of the product diagonal before
// the extrapolation; useful when O itself carries truncation debris there
// (quantize outputs), while exact operators do best with the full table.
cdouble dequantize_trace(const WeylMaps& maps, const Operator& O, const PhasePoint& pt,
                         int shell_drop = 0);

// Weyl symbol via the coherent-state expansion (c2):
// 4 e^{2(|a1|^2+|a2|^2)} sum <-b1,-b2|O|b1,b2> e^{2 sum(bk* ak - ak* bk)} d2b1 d2b2/pi^2
// with each beta plane discretized by grid2 and masked to the inscribed
// disk. Independent of the Delta route; the integrand is absolutely
// convergent, so no resummation is involved.
class CoherentDequantizer {
 public:
  CoherentDequantizer(const FockSpace& space, const Operator& O, const ComplexGrid& grid2);
  cdouble eval(cdouble alpha1, cdouble alpha2) const;

 private:
  ComplexGrid grid_;
  Matrix table_;  // <-b1,-b2|O|b1,b2> over the two beta planes
};

cdouble dequantize_coherent(const FockSpace& space, const Operator& O, cdouble alpha1,
                            cdouble alpha2, const ComplexGrid& grid2);

// (mu, nu) = (a1 + a2*, a1 - a2*), the delta arguments of (e3).
PhasePoint mode_to_entangled_coords(cdouble alpha1, cdouble alpha2);
std::pair<cdouble, cdouble> entangled_to_mode_coords(const PhasePoint& pt);

// (e4): sum over the (mu,nu) outer grid of
// e^{(xi-mu)(eta*-nu*) - (eta-nu)(xi*-mu*)} Delta(mu,nu) d2mu d2nu, evaluated
// by folding the mu integral into the (e1) representation so the kernel
// collapses to two 1-D Dirichlet factors per axis. The measure is plain:
// substituting c-numbers for the delta arguments leaves no 1/pi^2 once
// Delta is normalized per (e1).
Operator wigner_to_delta(const WeylMaps& maps, cdouble eta, cdouble xi,
                         const ComplexGrid& outer);

// (e5) reciprocal: Delta(mu,nu) = sum over the (eta,xi) outer grid of
// delta_product(eta,xi,nu_first) times the reciprocal kernel,
// d2xi d2eta/pi^4 (the pi^4 pairs with the plain-measure (e4) through the
// pi^2 delta^4 of the kernel family).
Operator delta_to_wigner(const WeylMaps& maps, const PhasePoint& pt,
                         const ComplexGrid& outer);

// (e7): || project_low(sum D(nu,mu) Delta w/pi^2
//          - sum F(eta,xi) delta_product w/pi^4, level) ||_max
// with F = complex_forward(D); both sides run on D's 4-axis grid.
CheckValue function_correspondence_check(const WeylMaps& maps, const GridFunction& D,
                                         int level);

}  // namespace entwig

#endif
