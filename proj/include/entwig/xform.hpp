#ifndef ENTWIG_XFORM_HPP
#define ENTWIG_XFORM_HPP

#include "entwig/grid.hpp"

namespace entwig {

// Real two-fold transform pair on one (p,q) plane:
//   forward: f(x,y) = sum e^{+2i(p-x)(q-y)} h(p,q) dp dq / pi
//   inverse: h(p,q) = sum e^{-2i(p-x)(q-y)} f(x,y) dx dy / pi
// Both run as two O(G^3) passes and match the direct double sum exactly.
GridFunction real_forward(const GridFunction& h);
GridFunction real_inverse(const GridFunction& f);

// Complex two-fold pair on two planes, samples over (nu-plane, mu-plane) in,
// (eta-plane, xi-plane) out:
//   forward: F(eta,xi) = sum D(nu,mu) e^{(xi*-mu*)(eta-nu)-(eta*-nu*)(xi-mu)} d2mu d2nu / pi^2
//   inverse: D(nu,mu) = sum F(eta,xi) e^{(xi-mu)(eta*-nu*)-(eta-nu)(xi*-mu*)} d2xi d2eta / pi^2
// The exponent splits over the axis pairs (mu1,nu2)->(xi1,eta2) and
// (mu2,nu1)->(xi2,eta1), so the 4-D transform runs as two 2-D passes.
GridFunction complex_forward(const GridFunction& D);
GridFunction complex_inverse(const GridFunction& F);

// Reference O(G^8) evaluation of the forward kernel on the same nodes. Kept
// as the second route of the separability check; only usable on small grids.
GridFunction complex_forward_direct(const GridFunction& D);

// | sum|F|^2 w/pi^a - sum|D|^2 w/pi^a | / sum|D|^2 w/pi^a with F the forward
// transform; a = 1 for 2-axis input, a = 2 for 4-axis.
double parseval_gap(const GridFunction& D);

// sum over (eta,xi) nodes of e^{(xi-mu)(eta*-nu*)-(eta-nu)(xi*-mu*)} w^4/pi^2;
// approximates 1 for interior (mu,nu).
cdouble kernel_normalization(const ComplexGrid& grid4, cdouble mu, cdouble nu);

// sum over grid2 of e^{zeta|z|^2 + xi z + eta z*} d2z/pi; converges to
// -exp(-xi eta/zeta)/zeta for Re(zeta) < 0.
cdouble gaussian_integral_quadrature(const ComplexGrid& grid2, cdouble zeta, cdouble xi,
                                     cdouble eta);

}  // namespace entwig

#endif
