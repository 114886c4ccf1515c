#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "psi/field.hpp"

namespace psi {

// PG(2,q): points and lines are homogeneous coordinate triples over GF(q),
// normalized so the first nonzero coordinate is 1 and sorted lexicographically
// by the integer encoding of the coordinates. A point lies on a line iff the
// dot product of the triples vanishes. Immutable after construction.
struct ProjectivePlane {
  int q = 0;
  int n = 0;  // q*q + q + 1
  std::vector<std::array<int, 3>> points;
  std::vector<std::array<int, 3>> lines;
  std::vector<std::vector<int>> line_points;  // per line: sorted point indices
};

ProjectivePlane build_plane(const FieldContext& field);

struct PlaneValidation {
  bool counts_ok = false;  // n points, n lines, q+1 incidences each way
  bool axiom1_ok = false;  // two points -> exactly one common line
  bool axiom2_ok = false;  // two lines  -> exactly one common point
  bool axiom3_ok = false;  // four points, no three collinear
  std::array<int, 2> axiom1_witness{-1, -1};
  std::array<int, 2> axiom2_witness{-1, -1};
  std::array<int, 4> quadrilateral{-1, -1, -1, -1};

  bool ok() const { return counts_ok && axiom1_ok && axiom2_ok && axiom3_ok; }
};

// Checks the axioms from the stored incidence lists alone, so corrupted
// structures are diagnosed with a concrete witness.
PlaneValidation validate_axioms(const ProjectivePlane& plane);

// One text row per line: the incident point indices.
void dump_plane(const ProjectivePlane& plane, std::ostream& out);

}  // namespace psi
