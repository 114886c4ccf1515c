#include "psi/certificate.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace psi {

Certificate Certificate::from_coloring(const EdgeColoring& coloring,
                                       const ColorPartition* partition) {
  Certificate cert;
  cert.construction = coloring.provenance;
  cert.n = coloring.n;
  cert.q = coloring.q;
  cert.k = coloring.k;
  long long idx = 0;
  cert.edges.reserve(static_cast<size_t>(edge_count(coloring.n)));
  for (int u = 0; u < coloring.n; ++u) {
    for (int v = u + 1; v < coloring.n; ++v, ++idx) {
      Color c = coloring.color_of[static_cast<size_t>(idx)];
      if (c != 0) cert.edges.push_back({u, v, c});
    }
  }
  if (partition != nullptr) cert.palette_partition = partition->classes;
  return cert;
}

EdgeColoring Certificate::to_coloring() const {
  if (n < 2) throw Error("certificate has n < 2");
  if (k < 1) throw Error("certificate has k < 1");
  EdgeColoring out(n, k);
  out.q = q;
  out.provenance = construction;
  for (const auto& [u, v, c] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
      throw Error("certificate edge (" + std::to_string(u) + "," +
                  std::to_string(v) + ") out of range");
    }
    if (c < 1 || c > k) {
      throw Error("certificate color " + std::to_string(c) + " outside [1, " +
                  std::to_string(k) + "]");
    }
    if (out.at(u, v) != 0) {
      throw Error("certificate lists edge (" + std::to_string(u) + "," +
                  std::to_string(v) + ") twice");
    }
    out.set(u, v, c);
  }
  return out;
}

std::string Certificate::to_json() const {
  Certificate sorted = *this;
  std::sort(sorted.edges.begin(), sorted.edges.end());

  std::ostringstream os;
  os << "{\n";
  os << "  \"schema_version\": " << schema_version << ",\n";
  os << "  \"construction\": \"" << construction << "\",\n";
  os << "  \"n\": " << n << ",\n";
  os << "  \"q\": " << q << ",\n";
  os << "  \"k\": " << k << ",\n";
  if (!palette_partition.empty()) {
    os << "  \"palette_partition\": [\n";
    for (size_t i = 0; i < palette_partition.size(); ++i) {
      os << "    [";
      for (size_t j = 0; j < palette_partition[i].size(); ++j) {
        if (j > 0) os << ", ";
        os << palette_partition[i][j];
      }
      os << (i + 1 < palette_partition.size() ? "],\n" : "]\n");
    }
    os << "  ],\n";
  }
  os << "  \"edges\": [\n";
  for (size_t i = 0; i < sorted.edges.size(); ++i) {
    const auto& e = sorted.edges[i];
    os << "    [" << e[0] << ", " << e[1] << ", " << e[2]
       << (i + 1 < sorted.edges.size() ? "],\n" : "]\n");
  }
  os << "  ]\n";
  os << "}\n";
  return os.str();
}

Certificate Certificate::parse_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw ParseError(err.what());
  }
  try {
    Certificate cert;
    cert.schema_version = doc.at("schema_version").get<int>();
    cert.construction = doc.value("construction", std::string{});
    cert.n = doc.at("n").get<int>();
    cert.q = doc.value("q", 0);
    cert.k = doc.at("k").get<int>();
    for (const auto& row : doc.at("edges")) {
      if (!row.is_array() || row.size() != 3) {
        throw ParseError("edge rows must be [u, v, color] triples");
      }
      cert.edges.push_back({row[0].get<int>(), row[1].get<int>(), row[2].get<int>()});
    }
    if (doc.contains("palette_partition")) {
      for (const auto& block : doc.at("palette_partition")) {
        cert.palette_partition.push_back(block.get<std::vector<Color>>());
      }
    }
    std::sort(cert.edges.begin(), cert.edges.end());
    return cert;
  } catch (const nlohmann::json::exception& err) {
    throw ParseError(err.what());
  }
}

std::string Certificate::to_csv() const {
  Certificate sorted = *this;
  std::sort(sorted.edges.begin(), sorted.edges.end());

  std::ostringstream os;
  os << "# psi certificate\n";
  os << "# schema_version=" << schema_version << "\n";
  os << "# construction=" << construction << "\n";
  os << "# n=" << n << "\n";
  os << "# q=" << q << "\n";
  os << "# k=" << k << "\n";
  for (size_t i = 0; i < palette_partition.size(); ++i) {
    os << "# palette " << i + 1 << ":";
    for (Color c : palette_partition[i]) os << ' ' << c;
    os << "\n";
  }
  os << "u,v,color\n";
  for (const auto& e : sorted.edges) {
    os << e[0] << ',' << e[1] << ',' << e[2] << "\n";
  }
  return os.str();
}

Certificate Certificate::parse_csv(const std::string& text) {
  Certificate cert;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream ls(line.substr(1));
      std::string token;
      ls >> token;
      if (token == "palette") {
        int index = 0;
        char colon = 0;
        ls >> index >> colon;
        std::vector<Color> block;
        Color c = 0;
        while (ls >> c) block.push_back(c);
        if (index != static_cast<int>(cert.palette_partition.size()) + 1) {
          throw ParseError("line " + std::to_string(lineno) +
                           ": palette blocks out of order");
        }
        cert.palette_partition.push_back(std::move(block));
      } else {
        auto eq = token.find('=');
        if (eq != std::string::npos) {
          std::string key = token.substr(0, eq);
          std::string value = token.substr(eq + 1);
          try {
            if (key == "schema_version") cert.schema_version = std::stoi(value);
            else if (key == "n") cert.n = std::stoi(value);
            else if (key == "q") cert.q = std::stoi(value);
            else if (key == "k") cert.k = std::stoi(value);
            else if (key == "construction") cert.construction = value;
          } catch (const std::exception&) {
            throw ParseError("line " + std::to_string(lineno) + ": bad value for " + key);
          }
        }
      }
      continue;
    }
    if (!header_seen) {
      if (line != "u,v,color") {
        throw ParseError("line " + std::to_string(lineno) +
                         ": expected header 'u,v,color'");
      }
      header_seen = true;
      continue;
    }
    std::array<int, 3> row{};
    char c1 = 0, c2 = 0;
    std::istringstream ls(line);
    if (!(ls >> row[0] >> c1 >> row[1] >> c2 >> row[2]) || c1 != ',' || c2 != ',') {
      throw ParseError("line " + std::to_string(lineno) + ": malformed edge row");
    }
    cert.edges.push_back(row);
  }
  if (!header_seen) throw ParseError("missing 'u,v,color' header");
  std::sort(cert.edges.begin(), cert.edges.end());
  return cert;
}

std::string Certificate::to_dot() const {
  Certificate sorted = *this;
  std::sort(sorted.edges.begin(), sorted.edges.end());

  std::ostringstream os;
  os << "graph \"" << (construction.empty() ? "coloring" : construction)
     << " n=" << n << " k=" << k << "\" {\n";
  os << "  node [shape=circle fontsize=10];\n";
  for (const auto& e : sorted.edges) {
    // golden-ratio hue walk keeps neighbouring class colors far apart
    double hue = std::fmod(0.618033988749895 * e[2], 1.0);
    char color[32];
    std::snprintf(color, sizeof(color), "%.4f 0.75 0.85", hue);
    os << "  " << e[0] << " -- " << e[1] << " [color=\"" << color
       << "\" label=\"" << e[2] << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

Certificate Certificate::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ParseError(path + " is empty");
  return text[first] == '{' ? parse_json(text) : parse_csv(text);
}

void Certificate::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << to_json();
}

}  // namespace psi
