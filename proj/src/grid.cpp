#include "entwig/grid.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace entwig {

double ComplexGrid::weight() const {
  double w = 1.0;
  for (int a = 0; a < axes; ++a) w *= spacing();
  return w;
}

long ComplexGrid::total() const {
  long t = 1;
  for (int a = 0; a < axes; ++a) t *= points;
  return t;
}

ComplexGrid make_grid(int axes, int points, double extent) {
  if (axes != 2 && axes != 4) throw std::invalid_argument("grid axes must be 2 or 4");
  if (points < 5) throw std::invalid_argument("grid points must be >= 5");
  if (points % 2 == 0) throw std::invalid_argument("grid points must be odd so 0 is a node");
  if (!(extent > 0.0)) throw std::invalid_argument("grid extent must be positive");
  return ComplexGrid{axes, points, extent};
}

cdouble& GridFunction::at2(int i1, int i2) { return samples[size_t(i1) * grid.points + i2]; }
cdouble GridFunction::at2(int i1, int i2) const { return samples[size_t(i1) * grid.points + i2]; }

cdouble& GridFunction::at4(int i1, int i2, int i3, int i4) {
  const long G = grid.points;
  return samples[((size_t(i1) * G + i2) * G + i3) * G + i4];
}
cdouble GridFunction::at4(int i1, int i2, int i3, int i4) const {
  const long G = grid.points;
  return samples[((size_t(i1) * G + i2) * G + i3) * G + i4];
}

void record_boundary(GridFunction& gf) {
  const int G = gf.grid.points;
  double m = 0.0;
  if (gf.grid.axes == 2) {
    for (int i = 0; i < G; ++i)
      for (int j = 0; j < G; ++j)
        if (i == 0 || j == 0 || i == G - 1 || j == G - 1)
          m = std::max(m, std::abs(gf.at2(i, j)));
  } else {
    for (int i1 = 0; i1 < G; ++i1)
      for (int i2 = 0; i2 < G; ++i2)
        for (int i3 = 0; i3 < G; ++i3)
          for (int i4 = 0; i4 < G; ++i4) {
            bool edge = i1 == 0 || i2 == 0 || i3 == 0 || i4 == 0 || i1 == G - 1 ||
                        i2 == G - 1 || i3 == G - 1 || i4 == G - 1;
            if (edge) m = std::max(m, std::abs(gf.at4(i1, i2, i3, i4)));
          }
  }
  gf.boundary_max = m;
}

GridFunction sample_grid(const ComplexGrid& grid,
                         const std::function<cdouble(const double*)>& f) {
  GridFunction gf{grid, std::vector<cdouble>(grid.total()), 0.0};
  const int G = grid.points;
  double c[4] = {0, 0, 0, 0};
  if (grid.axes == 2) {
    size_t k = 0;
    for (int i1 = 0; i1 < G; ++i1) {
      c[0] = grid.node(i1);
      for (int i2 = 0; i2 < G; ++i2) {
        c[1] = grid.node(i2);
        gf.samples[k++] = f(c);
      }
    }
  } else {
    size_t k = 0;
    for (int i1 = 0; i1 < G; ++i1) {
      c[0] = grid.node(i1);
      for (int i2 = 0; i2 < G; ++i2) {
        c[1] = grid.node(i2);
        for (int i3 = 0; i3 < G; ++i3) {
          c[2] = grid.node(i3);
          for (int i4 = 0; i4 < G; ++i4) {
            c[3] = grid.node(i4);
            gf.samples[k++] = f(c);
          }
        }
      }
    }
  }
  record_boundary(gf);
  return gf;
}

GridFunction constant_grid(const ComplexGrid& grid, cdouble value) {
  GridFunction gf{grid, std::vector<cdouble>(grid.total(), value), std::abs(value)};
  return gf;
}

bool interior_index(const ComplexGrid& grid, int i) {
  return std::abs(grid.node(i)) <= 2.0 * grid.extent / 3.0 + 1e-12;
}

void write_grid_function(const std::string& path, const GridFunction& gf, bool binary) {
  std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << gf.grid.axes << " " << gf.grid.points << " ";
  {
    std::ostringstream ext;
    ext.precision(17);
    ext << gf.grid.extent;
    out << ext.str() << "\n";
  }
  if (binary) {
    static_assert(sizeof(cdouble) == 2 * sizeof(double));
    out.write(reinterpret_cast<const char*>(gf.samples.data()),
              std::streamsize(gf.samples.size() * sizeof(cdouble)));
  } else {
    out.precision(17);
    for (const cdouble& s : gf.samples) out << s.real() << " " << s.imag() << "\n";
  }
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

GridFunction read_grid_function(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string header;
  std::getline(in, header);
  std::istringstream hs(header);
  int axes = 0, points = 0;
  double extent = 0.0;
  if (!(hs >> axes >> points >> extent))
    throw std::runtime_error("bad grid-function header in " + path);
  GridFunction gf{make_grid(axes, points, extent), {}, 0.0};
  const long n = gf.grid.total();
  gf.samples.resize(n);

  // Peek at the payload: binary files hold exactly 16*n bytes after the header.
  std::streampos data_start = in.tellg();
  in.seekg(0, std::ios::end);
  std::streamoff payload = in.tellg() - data_start;
  in.seekg(data_start);
  if (payload == std::streamoff(n) * std::streamoff(sizeof(cdouble))) {
    in.read(reinterpret_cast<char*>(gf.samples.data()),
            std::streamsize(n * sizeof(cdouble)));
    if (!in) throw std::runtime_error("short binary payload in " + path);
  } else {
    for (long i = 0; i < n; ++i) {
      double re = 0.0, im = 0.0;
      if (!(in >> re >> im)) throw std::runtime_error("short text payload in " + path);
      gf.samples[size_t(i)] = cdouble(re, im);
    }
  }
  record_boundary(gf);
  return gf;
}

}  // namespace entwig
