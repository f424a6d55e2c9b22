#ifndef ENTWIG_GRID_HPP
#define ENTWIG_GRID_HPP

#include <functional>
#include <string>
#include <vector>

#include "entwig/fock.hpp"

namespace entwig {

// Uniform symmetric box [-L, L] per axis, G odd so 0 is a node, endpoint
// nodes included, quadrature weight spacing^axes per node. axes = 2 covers
// one complex plane, axes = 4 two planes.
//
// Axis order convention used throughout: for 2 axes (x1, x2) = (Re z, Im z);
// for 4 axes (x1, x2, y1, y2) where the first plane is the nu/eta-flavored
// label and the second the mu/xi-flavored one. Samples are row-major in that
// axis order.
struct ComplexGrid {
  int axes = 2;
  int points = 5;     // G per axis
  double extent = 1;  // L

  double spacing() const { return 2.0 * extent / (points - 1); }
  double node(int i) const { return -extent + spacing() * i; }
  double weight() const;  // spacing^axes
  long total() const;     // G^axes

  bool operator==(const ComplexGrid& o) const {
    return axes == o.axes && points == o.points && extent == o.extent;
  }
};

// Validates G odd, G >= 5, extent > 0, axes in {2,4}.
ComplexGrid make_grid(int axes, int points, double extent);

struct GridFunction {
  ComplexGrid grid;
  std::vector<cdouble> samples;  // row-major, grid.total() entries
  double boundary_max = 0.0;     // max |sample| on the boundary shell

  cdouble& at2(int i1, int i2);
  cdouble at2(int i1, int i2) const;
  cdouble& at4(int i1, int i2, int i3, int i4);
  cdouble at4(int i1, int i2, int i3, int i4) const;
};

// Fills samples from f(coords) and records the boundary decay metric.
GridFunction sample_grid(const ComplexGrid& grid,
                         const std::function<cdouble(const double*)>& f);
GridFunction constant_grid(const ComplexGrid& grid, cdouble value);
void record_boundary(GridFunction& gf);

// Interior test region: the middle two-thirds of each axis.
bool interior_index(const ComplexGrid& grid, int i);

// Text table: header line "axes G L", then one "re im" pair per node in
// row-major order. Binary: same header line, then raw little-endian doubles,
// bit-exact round trip.
void write_grid_function(const std::string& path, const GridFunction& gf, bool binary);
GridFunction read_grid_function(const std::string& path);

}  // namespace entwig

#endif
