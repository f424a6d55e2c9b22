#ifndef ENTWIG_ORDERING_HPP
#define ENTWIG_ORDERING_HPP

#include <array>
#include <map>
#include <vector>

#include "entwig/weyl.hpp"

namespace entwig {

// Exact-coefficient polynomial in the phase-space variables
// (eta1, eta2, xi1, xi2); the Weyl-symbol carrier for the ordering layer.
struct SymbolPolynomial {
  std::map<std::array<int, 4>, cdouble> terms;

  void add_term(const std::array<int, 4>& exponents, cdouble coeff);
  SymbolPolynomial operator+(const SymbolPolynomial& o) const;
  SymbolPolynomial operator-(const SymbolPolynomial& o) const;
  SymbolPolynomial operator*(const SymbolPolynomial& o) const;
  SymbolPolynomial scaled(cdouble c) const;
  cdouble evaluate(double eta1, double eta2, double xi1, double xi2) const;
  int total_degree() const;
  SymbolPolynomial pruned(double eps) const;
};

// H_{m,r}(t,s) by the explicit double-index sum; m,r <= 12 at the exact
// factorial-table range.
cdouble hermite2(int m, int r, cdouble t, cdouble s);

// (g4) check: the x^m y^r moment of e^{2i(y-s)(x-t)} against
// (1/sqrt2)^{m+r} (-i)^r H_{m,r}(sqrt2 t, i sqrt2 s). The non-decaying
// integrand is regulated by e^{-eps(x^2+y^2)}, eps in {0.2,0.1,0.05,0.025},
// and extrapolated to eps = 0 through the cubic Richardson stencil. The grid
// must cover the widest regulator (extent ~25 at eps = 0.025). Returns
// |quadrature - closed| / max(1, |closed|).
double hermite_integral_check(int m, int r, double s, double t, const ComplexGrid& grid2);

enum class PowerOrder { dagger_first, plain_first };

// dagger_first: (a1†-a2)^n (a1+a2†)^m; plain_first: the reversed product.
Operator ordered_power(const FockSpace& space, int n, int m, PowerOrder order);

// The printed Weyl-ordered expansions (g3) for dagger_first and (g6) for
// plain_first, with operator arguments replaced by the c-number dictionary
// Q1-Q2 -> sqrt2 eta1, P1+P2 -> sqrt2 eta2, Q1+Q2 -> sqrt2 xi1,
// P1-P2 -> sqrt2 xi2. Transcribed exactly as printed, mismatches included;
// the report compares them against the fitted oracle.
SymbolPolynomial paper_symbol(int n, int m, PowerOrder order);

struct OracleFit {
  SymbolPolynomial poly;
  double residual = 0.0;  // max |fit - sample| over the fit grid
};

// Ground truth: the dequantized symbol of ordered_power sampled on the
// interior 5^4 grid over [-1,1]^4 and fitted by least squares in the
// monomial basis of total degree <= n+m. The sampler is the coherent-state
// dequantizer: its integrand is absolutely convergent, while the resummed
// trace pairing degrades for ladder powers of degree 3 at desk cutoffs.
// coherent_space should hold a few extra levels beyond beta_grid.extent^2.
// Throws if the fit residual exceeds 1e-2.
OracleFit oracle_symbol(const FockSpace& coherent_space, const ComplexGrid& beta_grid,
                        int n, int m, PowerOrder order);

struct CoefficientComparison {
  std::array<int, 4> exponents;
  cdouble paper;
  cdouble oracle;
  double abs_diff = 0.0;
  bool match = false;
};

struct OrderingSide {
  PowerOrder order;
  SymbolPolynomial paper;
  SymbolPolynomial oracle;
  double fit_residual = 0.0;
  double operator_check = 0.0;  // ||project_low(quantize(oracle) - power, level)||_max
  std::vector<CoefficientComparison> coefficients;
  int mismatch_count = 0;
};

struct OrderingReport {
  int n = 0;
  int m = 0;
  int level = 3;
  OrderingSide dagger_first;
  OrderingSide plain_first;
};

// Tolerance separating PAPER-MATCH from PAPER-MISMATCH per coefficient.
inline constexpr double kCoefficientMatchTol = 0.05;

// symbol_grid: 4-axis grid used to quantize the fitted symbols for the
// operator-level check (run on maps.space); the oracle fits run through
// (coherent_space, beta_grid).
OrderingReport ordering_report(const WeylMaps& maps, const FockSpace& coherent_space,
                               const ComplexGrid& beta_grid, int n, int m,
                               const ComplexGrid& symbol_grid, int level);

}  // namespace entwig

#endif
