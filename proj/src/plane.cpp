#include "psi/plane.hpp"

#include <algorithm>
#include <ostream>

namespace psi {

namespace {

// Canonical projective triples: first nonzero coordinate is 1. Generated in
// lexicographic order of the coordinate encoding.
std::vector<std::array<int, 3>> canonical_triples(int q) {
  std::vector<std::array<int, 3>> out;
  out.reserve(static_cast<size_t>(q) * q + q + 1);
  out.push_back({0, 0, 1});
  for (int a = 0; a < q; ++a) out.push_back({0, 1, a});
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) out.push_back({1, a, b});
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Sorted-vector intersection size, bailing out once `cap` is exceeded.
int intersection_count(const std::vector<int>& a, const std::vector<int>& b,
                       int cap, int* first = nullptr) {
  size_t i = 0, j = 0;
  int count = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (a[i] > b[j]) {
      ++j;
    } else {
      if (first && count == 0) *first = a[i];
      if (++count > cap) return count;
      ++i;
      ++j;
    }
  }
  return count;
}

}  // namespace

ProjectivePlane build_plane(const FieldContext& field) {
  ProjectivePlane plane;
  plane.q = field.q;
  plane.n = field.q * field.q + field.q + 1;
  plane.points = canonical_triples(field.q);
  plane.lines = plane.points;  // same normal form for line coordinates

  plane.line_points.resize(static_cast<size_t>(plane.n));
  for (int l = 0; l < plane.n; ++l) {
    const auto& lc = plane.lines[static_cast<size_t>(l)];
    auto& incident = plane.line_points[static_cast<size_t>(l)];
    for (int pt = 0; pt < plane.n; ++pt) {
      const auto& pc = plane.points[static_cast<size_t>(pt)];
      int dot = field.add(field.add(field.mul(lc[0], pc[0]), field.mul(lc[1], pc[1])),
                          field.mul(lc[2], pc[2]));
      if (dot == 0) incident.push_back(pt);
    }
  }
  return plane;
}

PlaneValidation validate_axioms(const ProjectivePlane& plane) {
  PlaneValidation report;
  const int n = plane.n;
  const int q = plane.q;

  // Per-point line membership, derived from the incidence lists alone.
  std::vector<std::vector<int>> lines_of_point(static_cast<size_t>(n));
  for (int l = 0; l < static_cast<int>(plane.line_points.size()); ++l) {
    for (int pt : plane.line_points[static_cast<size_t>(l)]) {
      if (pt < 0 || pt >= n) continue;
      lines_of_point[static_cast<size_t>(pt)].push_back(l);
    }
  }

  report.counts_ok = static_cast<int>(plane.points.size()) == n &&
                     static_cast<int>(plane.line_points.size()) == n;
  if (report.counts_ok) {
    for (const auto& lp : plane.line_points) {
      if (static_cast<int>(lp.size()) != q + 1) report.counts_ok = false;
    }
    for (const auto& pl : lines_of_point) {
      if (static_cast<int>(pl.size()) != q + 1) report.counts_ok = false;
    }
  }

  report.axiom1_ok = true;
  for (int a = 0; a < n && report.axiom1_ok; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (intersection_count(lines_of_point[static_cast<size_t>(a)],
                             lines_of_point[static_cast<size_t>(b)], 1) != 1) {
        report.axiom1_ok = false;
        report.axiom1_witness = {a, b};
        break;
      }
    }
  }

  report.axiom2_ok = true;
  const int nl = static_cast<int>(plane.line_points.size());
  for (int a = 0; a < nl && report.axiom2_ok; ++a) {
    for (int b = a + 1; b < nl; ++b) {
      if (intersection_count(plane.line_points[static_cast<size_t>(a)],
                             plane.line_points[static_cast<size_t>(b)], 1) != 1) {
        report.axiom2_ok = false;
        report.axiom2_witness = {a, b};
        break;
      }
    }
  }

  // Three points are collinear iff some line contains all of them.
  auto collinear = [&](int a, int b, int c) {
    for (int l : lines_of_point[static_cast<size_t>(a)]) {
      const auto& lp = plane.line_points[static_cast<size_t>(l)];
      if (std::binary_search(lp.begin(), lp.end(), b) &&
          std::binary_search(lp.begin(), lp.end(), c)) {
        return true;
      }
    }
    return false;
  };

  report.axiom3_ok = false;
  for (int a = 0; a < n && !report.axiom3_ok; ++a) {
    for (int b = a + 1; b < n && !report.axiom3_ok; ++b) {
      for (int c = b + 1; c < n && !report.axiom3_ok; ++c) {
        if (collinear(a, b, c)) continue;
        for (int d = c + 1; d < n; ++d) {
          if (collinear(a, b, d) || collinear(a, c, d) || collinear(b, c, d)) {
            continue;
          }
          report.axiom3_ok = true;
          report.quadrilateral = {a, b, c, d};
          break;
        }
      }
    }
  }

  return report;
}

void dump_plane(const ProjectivePlane& plane, std::ostream& out) {
  for (const auto& lp : plane.line_points) {
    for (size_t i = 0; i < lp.size(); ++i) {
      if (i > 0) out << ' ';
      out << lp[i];
    }
    out << '\n';
  }
}

}  // namespace psi
