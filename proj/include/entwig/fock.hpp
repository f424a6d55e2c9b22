#ifndef ENTWIG_FOCK_HPP
#define ENTWIG_FOCK_HPP

#include <complex>
#include <Eigen/Dense>

namespace entwig {

using cdouble = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Truncated two-mode Fock space. Basis kets |n1,n2> with 0 <= n_i <= cutoff,
// flattened row-major: index = n1*(cutoff+1) + n2.
struct FockSpace {
  int cutoff = 0;
  int levels = 0;  // cutoff + 1
  int dim = 0;     // levels^2

  int index(int n1, int n2) const { return n1 * levels + n2; }
  int n1_of(int idx) const { return idx / levels; }
  int n2_of(int idx) const { return idx % levels; }
  bool operator==(const FockSpace& o) const { return cutoff == o.cutoff; }
};

// cutoff >= 1, else std::invalid_argument.
FockSpace make_space(int cutoff);

// Dense operator on a FockSpace. Raising out of the top level truncates to
// zero; identity checks are therefore stated on project_low blocks.
struct Operator {
  FockSpace space;
  Matrix entries;
};

struct StateVector {
  FockSpace space;
  Vector coeffs;
};

enum class Mode { one = 1, two = 2 };
enum class LadderKind { lower, raise };
enum class QuadratureKind { position, momentum };

Operator identity(const FockSpace& space);
Operator zero_operator(const FockSpace& space);

// <n-1|a|n> = sqrt(n) on the given mode; raise is the adjoint.
Operator ladder(const FockSpace& space, Mode mode, LadderKind kind);

// position = (a + a†)/sqrt(2), momentum = (a - a†)/(i sqrt(2)), hbar = 1.
Operator quadrature(const FockSpace& space, Mode mode, QuadratureKind kind);

Operator compose(const Operator& a, const Operator& b);
Operator adjoint(const Operator& a);
Operator commutator(const Operator& a, const Operator& b);
cdouble op_trace(const Operator& a);
StateVector apply(const Operator& a, const StateVector& v);

StateVector vacuum(const FockSpace& space);

// coeffs e^{-(|b1|^2+|b2|^2)/2} b1^n1 b2^n2 / sqrt(n1! n2!); caller inspects
// the norm deficit for truncation quality.
StateVector coherent_state(const FockSpace& space, cdouble beta1, cdouble beta2);

// Zeroes every row/column with n1 > level or n2 > level.
Operator project_low(const Operator& a, int level);
StateVector project_low(const StateVector& v, int level);

double max_abs(const Operator& a);
double max_abs(const StateVector& v);
double low_block_max_abs(const Operator& a, int level);
double low_block_norm(const StateVector& v, int level);

// exact in double up to 170!
double factorial(int n);
double sqrt_factorial(int n);

Operator operator+(const Operator& a, const Operator& b);
Operator operator-(const Operator& a, const Operator& b);
Operator operator*(cdouble c, const Operator& a);
Operator operator*(const Operator& a, const Operator& b);

}  // namespace entwig

#endif
