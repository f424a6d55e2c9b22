#ifndef ENTWIG_RESUMMATION_HPP
#define ENTWIG_RESUMMATION_HPP

#include <vector>

#include "entwig/fock.hpp"

namespace entwig {

// Limit of an oscillatory partial-sum sequence by Wynn's epsilon algorithm
// (Pade evaluation of the underlying series at 1). Entangled-state traces and
// cross-flavor overlaps are delta-normalized, so their plain truncated sums
// oscillate with the cutoff; their distributional (Abel) value is what the
// identities refer to, and the epsilon table recovers it from the truncated
// data alone. Returns the candidate from the even column whose successive
// difference is smallest; a sequence that is already flat is returned as-is.
cdouble wynn_epsilon_limit(const std::vector<cdouble>& sums);

// Partial sums over total-occupation shells n1+n2 <= s of diag(A*B),
// s = 0..2*cutoff - shell_drop. Feeding these to wynn_epsilon_limit gives
// the resummed trace of A*B.
std::vector<cdouble> product_trace_shell_sums(const FockSpace& space, const Matrix& a,
                                              const Matrix& b, int shell_drop);

cdouble resummed_product_trace(const FockSpace& space, const Matrix& a, const Matrix& b,
                               int shell_drop = 0);

}  // namespace entwig

#endif
