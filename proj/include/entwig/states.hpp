#ifndef ENTWIG_STATES_HPP
#define ENTWIG_STATES_HPP

#include "entwig/fock.hpp"
#include "entwig/grid.hpp"

namespace entwig {

enum class Flavor { eta, xi };

struct EntangledLabel {
  cdouble value;
  Flavor flavor = Flavor::eta;
};

// |eta> = exp(-|eta|^2/2 + eta a1† - eta* a2† + a1†a2†)|00>, built from the
// exact triple series over the commuting creation operators; coefficients
// are exact up to the cutoff. delta-normalized: the truncated norm grows
// with the cutoff by construction.
StateVector eta_state(const FockSpace& space, cdouble eta);

// |xi> = exp(-|xi|^2/2 + xi a1† + xi* a2† - a1†a2†)|00>
StateVector xi_state(const FockSpace& space, cdouble xi);

// Writes the |eta>-flavored coefficients at label z, scaled by `scale`, into
// dst[space.dim]. Hot path of the operator-valued quadratures.
void eta_coeffs_scaled(const FockSpace& space, cdouble z, cdouble scale, cdouble* dst);

// Max over the flavor's eigenrelations (ladder pairs and quadrature pairs) of
// ||project_low((O - lambda)|state>, level)|| / ||project_low(|state>, level)||.
double eigen_residual(const FockSpace& space, const StateVector& state,
                      const EntangledLabel& label, int level);

// Conjugate-linear-in-first inner product in fixed flat-index order.
cdouble overlap(const StateVector& u, const StateVector& v);

// Ratio of the truncated <eta|xi> to the closed form (1/2)e^{(eta* xi - xi* eta)/2}.
// The plain partial sums oscillate with the cutoff (the series is Abel-summed
// in the exact theory), so the value is taken as the mean of the partial sums
// at cutoffs N and N-1.
cdouble overlap_ratio_b11(int cutoff, cdouble eta, cdouble xi);

enum class ResolutionKind { eta, xi, mixed_g1, mixed_g2 };

struct CheckValue {
  double value = 0.0;
  double boundary_max = 0.0;  // largest boundary integrand magnitude seen
  bool accuracy_warning = false;
};

// Assembles the selected resolution of identity over the grid (one plane for
// eta/xi, two coupled planes for the mixed g1/g2 forms) and returns
// ||project_low(result - I, level)||_max.
CheckValue resolution_check(const FockSpace& space, const ComplexGrid& grid,
                            ResolutionKind which, int level);

// Smeared delta-normalization: sum_eta' <eta'|label> g(eta') w/pi vs g(label)
// for a Gaussian g of the given width centered on the label; returns the
// relative deviation.
CheckValue orthogonality_smeared(const FockSpace& space, const ComplexGrid& grid,
                                 double test_width, Flavor flavor, cdouble label);

}  // namespace entwig

#endif
