#pragma once

#include <map>
#include <variant>
#include <vector>

#include "tw4p/moduli.hpp"
#include "tw4p/word.hpp"

namespace tw4p {

// A path built from straight segments and circular arcs, all away from the
// punctures by at least kPathMargin.
struct PathSpec {
  struct Line {
    cplx z0, z1;
  };
  struct Arc {
    cplx center;
    double radius;
    double angle0, angle1;  // traversed from angle0 to angle1
  };
  using Segment = std::variant<Line, Arc>;
  std::vector<Segment> segments;

  static PathSpec segment(cplx z0, cplx z1) { return {{Line{z0, z1}}}; }
  double min_puncture_distance(const ModuliConfig& cfg) const;
};

// Values of all iterated integrals Omega_w(endpoint) for words of length
// 1..depth over {1,2,3}, computed in one triangular ODE solve along the
// straight segment from 0.
struct OmegaTable {
  cplx endpoint;  // 1 or i
  int depth;
  cplx p;
  WordIndex idx;
  std::vector<cplx> values;
  std::vector<double> errs;

  cplx value(const Word& w) const { return values[idx.index(w)]; }
  double err(const Word& w) const { return errs[idx.index(w)]; }
};

// Throws "depth cap" for depth > 6 and "path-singularity" when the segment
// from 0 to the endpoint passes within kPathMargin of a puncture.
OmegaTable omega_table(const ModuliConfig& cfg, cplx endpoint, int depth, double tol = kOdeTol);

// Closed forms (principal logarithm): Omega_21(1) and Omega_31(i).
cplx omega21_closed(cplx p);
cplx omega31_closed(cplx p);

struct ShuffleResidual {
  double depth2 = 0.0;
  double depth3 = 0.0;
  double max() const { return std::max(depth2, depth3); }
};

ShuffleResidual shuffle_residual(const OmegaTable& table);

// zeta(3) by direct series with Euler-Maclaurin tail.
double zeta3();

}  // namespace tw4p
