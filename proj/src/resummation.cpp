#include "entwig/resummation.hpp"

#include <cmath>
#include <stdexcept>

namespace entwig {

cdouble wynn_epsilon_limit(const std::vector<cdouble>& sums) {
  if (sums.empty()) return 0.0;
  if (sums.size() < 4) return sums.back();
  double scale = 0.0;
  for (const cdouble& v : sums) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return 0.0;

  bool flat = true;
  for (size_t i = 1; i < sums.size(); ++i)
    if (std::abs(sums[i] - sums[i - 1]) > 1e-12 * scale) {
      flat = false;
      break;
    }
  if (flat) return sums.back();

  std::vector<cdouble> prev = sums, prevprev(sums.size() + 1, 0.0);
  cdouble best = sums.back(), last_cand = sums.back();
  double best_gap = 1e300;
  bool have_last = false;
  for (int k = 1; k < (int)sums.size(); ++k) {
    std::vector<cdouble> cur(prev.size() - 1);
    for (size_t i = 0; i + 1 < prev.size(); ++i) {
      cdouble d = prev[i + 1] - prev[i];
      if (std::abs(d) < 1e-300) d = 1e-300;
      cur[i] = prevprev[i + 1] + 1.0 / d;
    }
    prevprev = std::move(prev);
    prev = std::move(cur);
    if (k % 2 == 0 && !prev.empty()) {
      const cdouble cand = prev.back();
      if (have_last && std::abs(cand) < 1e4 * scale) {
        const double gap = std::abs(cand - last_cand);
        if (gap <= best_gap) {
          best_gap = gap;
          best = cand;
        }
      }
      last_cand = cand;
      have_last = true;
    }
  }
  return best;
}

std::vector<cdouble> product_trace_shell_sums(const FockSpace& space, const Matrix& a,
                                              const Matrix& b, int shell_drop) {
  if (a.rows() != space.dim || b.rows() != space.dim)
    throw std::invalid_argument("trace operands do not match the space");
  // shells with n1+n2 > cutoff are clipped by the square truncation and do
  // not continue the infinite-space series; only complete shells feed the
  // extrapolation
  const int max_shell = space.cutoff - shell_drop;
  if (max_shell < 0) throw std::invalid_argument("shell_drop exceeds the shell range");
  std::vector<cdouble> shell(size_t(max_shell) + 1, 0.0);
  for (int i = 0; i < space.dim; ++i) {
    const int s = space.n1_of(i) + space.n2_of(i);
    if (s > max_shell) continue;
    cdouble diag = 0.0;
    for (int j = 0; j < space.dim; ++j) diag += a(i, j) * b(j, i);
    shell[size_t(s)] += diag;
  }
  std::vector<cdouble> sums(shell.size());
  cdouble acc = 0.0;
  for (size_t s = 0; s < shell.size(); ++s) {
    acc += shell[s];
    sums[s] = acc;
  }
  return sums;
}

cdouble resummed_product_trace(const FockSpace& space, const Matrix& a, const Matrix& b,
                               int shell_drop) {
  return wynn_epsilon_limit(product_trace_shell_sums(space, a, b, shell_drop));
}

}  // namespace entwig
