#pragma once

#include <array>
#include <string>
#include <vector>

#include "psi/coloring_types.hpp"

namespace psi {

// Serializable record of a coloring: the full edge -> color list plus the
// palette partition when the construction has one. The JSON form is canonical
// (fixed key order, one edge per line, edges sorted), so saving what was
// loaded reproduces the file byte for byte.
struct Certificate {
  int schema_version = 1;
  std::string construction;
  int n = 0;
  int q = 0;  // 0 when no plane is involved
  int k = 0;
  std::vector<std::array<int, 3>> edges;  // (u, v, color), canonical, sorted
  std::vector<std::vector<Color>> palette_partition;  // empty when absent

  static Certificate from_coloring(const EdgeColoring& coloring,
                                   const ColorPartition* partition = nullptr);

  // Validates ranges and rejects duplicate edges; uncovered edges stay
  // uncolored and are reported by the verifier.
  EdgeColoring to_coloring() const;

  std::string to_json() const;
  static Certificate parse_json(const std::string& text);

  std::string to_csv() const;
  static Certificate parse_csv(const std::string& text);

  // One pen color and label per color class.
  std::string to_dot() const;

  // Sniffs JSON vs CSV from the content.
  static Certificate load(const std::string& path);
  void save(const std::string& path) const;
};

}  // namespace psi
