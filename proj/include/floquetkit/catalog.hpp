// Copyright 2026 The floquetkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "floquetkit/floquet.hpp"
#include "floquetkit/locality.hpp"
#include "floquetkit/stabiliser_group.hpp"

namespace floquetkit::catalog {

struct CatalogEntry {
  std::string name;
  std::string description;
  std::map<std::string, int> params;
  FloquetSequence sequence;
};

/// <Z> -> <X> -> <Z> on one qubit.
inline FloquetSequence single_qubit_zx() {
  const auto z = StabiliserGroup::from_strings({"Z"});
  const auto x = StabiliserGroup::from_strings({"X"});
  return make_sequence({z, x, z}, Lattice::line(1), 1.0);
}

/// <+ZI> -> <+XI> -> <+ZI>; the logical qubit sits on qubit 1.
inline FloquetSequence two_qubit_logical() {
  const auto z = StabiliserGroup::from_strings({"ZI"});
  const auto x = StabiliserGroup::from_strings({"XI"});
  return make_sequence({z, x, z}, Lattice::line(2), 1.0);
}

/// Repetition code switching between its Z and X bases.
inline FloquetSequence three_qubit_repetition() {
  const auto z = StabiliserGroup::from_strings({"ZZI", "IZZ"});
  const auto x = StabiliserGroup::from_strings({"XXI", "IXX"});
  return make_sequence({z, x, z}, Lattice::line(3), 1.0);
}

/// Geometry of the brick-wall honeycomb on a width x height torus.
struct HoneycombLayout {
  std::size_t width = 0, height = 0;
  struct Edge {
    std::size_t u, v;
    char pauli;
    int colour;
  };
  struct Plaquette {
    std::vector<std::size_t> vertices;
    std::vector<std::size_t> edges;
    int colour;
  };
  std::vector<Edge> edges;
  std::vector<Plaquette> plaquettes;

  std::size_t n() const { return width * height; }
  std::size_t vertex(std::size_t x, std::size_t y) const { return (y % height) * width + (x % width); }
};

/// Vertices (x, y) on the grid; horizontal edges everywhere, a vertical edge
/// (x,y)-(x,y+1) when x+y is even. Bricks start at x with x+y even and are
/// coloured x mod 3. Checks: vertical ZZ, horizontal XX or YY by parity.
inline HoneycombLayout honeycomb_layout(std::size_t width, std::size_t height) {
  if (width < 6 || width % 6 != 0) throw std::invalid_argument("honeycomb: width must be a positive multiple of 6");
  if (height < 2 || height % 2 != 0) throw std::invalid_argument("honeycomb: height must be even and at least 2");
  HoneycombLayout h;
  h.width = width;
  h.height = height;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_index;
  auto add_edge = [&](std::size_t u, std::size_t v, char pauli) {
    const auto key = std::minmax(u, v);
    edge_index[key] = h.edges.size();
    h.edges.push_back({u, v, pauli, -1});
  };
  for (std::size_t y = 0; y < height; ++y) {
    for (std::size_t x = 0; x < width; ++x) {
      add_edge(h.vertex(x, y), h.vertex(x + 1, y), (x + y) % 2 == 0 ? 'X' : 'Y');
      if ((x + y) % 2 == 0) add_edge(h.vertex(x, y), h.vertex(x, y + 1), 'Z');
    }
  }
  auto edge = [&](std::size_t u, std::size_t v) { return edge_index.at(std::minmax(u, v)); };
  std::vector<std::vector<int>> bordering(h.edges.size());
  for (std::size_t y = 0; y < height; ++y) {
    for (std::size_t x = 0; x < width; ++x) {
      if ((x + y) % 2 != 0) continue;
      HoneycombLayout::Plaquette p;
      p.colour = static_cast<int>(x % 3);
      for (std::size_t dx = 0; dx < 3; ++dx) {
        p.vertices.push_back(h.vertex(x + dx, y));
        p.vertices.push_back(h.vertex(x + dx, y + 1));
      }
      p.edges = {edge(h.vertex(x, y), h.vertex(x + 1, y)),         edge(h.vertex(x + 1, y), h.vertex(x + 2, y)),
                 edge(h.vertex(x, y + 1), h.vertex(x + 1, y + 1)), edge(h.vertex(x + 1, y + 1), h.vertex(x + 2, y + 1)),
                 edge(h.vertex(x, y), h.vertex(x, y + 1)),         edge(h.vertex(x + 2, y), h.vertex(x + 2, y + 1))};
      std::sort(p.vertices.begin(), p.vertices.end());
      for (auto e : p.edges) bordering[e].push_back(p.colour);
      h.plaquettes.push_back(std::move(p));
    }
  }
  for (std::size_t e = 0; e < h.edges.size(); ++e) {
    if (bordering[e].size() != 2 || bordering[e][0] == bordering[e][1]) throw std::logic_error("honeycomb: inconsistent plaquette colouring");
    h.edges[e].colour = 3 - bordering[e][0] - bordering[e][1];
  }
  return h;
}

inline PauliOperator honeycomb_check(const HoneycombLayout& h, std::size_t e) {
  PauliOperator p(h.n());
  p.set_factor(h.edges[e].u, h.edges[e].pauli);
  p.set_factor(h.edges[e].v, h.edges[e].pauli);
  return p;
}

inline PauliOperator honeycomb_plaquette(const HoneycombLayout& h, const HoneycombLayout::Plaquette& p) {
  PauliOperator out = PauliOperator::identity(h.n());
  for (auto e : p.edges) out = multiply(out, honeycomb_check(h, e));
  // The six checks around a plaquette commute, so the product is Hermitian.
  return out;
}

inline Lattice honeycomb_lattice(const HoneycombLayout& h) {
  std::vector<std::vector<double>> pos(h.n());
  for (std::size_t y = 0; y < h.height; ++y) {
    for (std::size_t x = 0; x < h.width; ++x) pos[h.vertex(x, y)] = {static_cast<double>(x), static_cast<double>(y)};
  }
  return Lattice(2, std::move(pos), {static_cast<double>(h.width), static_cast<double>(h.height)});
}

/// Round-r ISG: colour-r checks together with all plaquettes, dependent
/// entries dropped (checks are listed first).
inline StabiliserGroup honeycomb_isg(const HoneycombLayout& h, int round) {
  std::vector<PauliOperator> gens;
  for (std::size_t e = 0; e < h.edges.size(); ++e) {
    if (h.edges[e].colour == round) gens.push_back(honeycomb_check(h, e));
  }
  for (const auto& p : h.plaquettes) gens.push_back(honeycomb_plaquette(h, p));
  return StabiliserGroup::generated_by(h.n(), gens);
}

/// Diameter of a plaquette, used as the locality bound.
inline double honeycomb_l() { return std::sqrt(5.0); }

/// Three-round period A0 -> A1 -> A2 -> A0.
inline FloquetSequence honeycomb(std::size_t width, std::size_t height) {
  const auto h = honeycomb_layout(width, height);
  const auto a0 = honeycomb_isg(h, 0);
  return make_sequence({a0, honeycomb_isg(h, 1), honeycomb_isg(h, 2), a0}, honeycomb_lattice(h), honeycomb_l());
}

inline std::vector<std::string> names() { return {"single_qubit_zx", "two_qubit_logical", "three_qubit_repetition", "honeycomb"}; }

inline int param(const std::map<std::string, int>& params, const std::string& key, int fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

inline CatalogEntry build(const std::string& name, const std::map<std::string, int>& params = {}) {
  CatalogEntry e;
  e.name = name;
  if (name == "single_qubit_zx") {
    e.description = "<Z> -> <X> -> <Z> on one qubit (k = 0)";
    e.sequence = single_qubit_zx();
  } else if (name == "two_qubit_logical") {
    e.description = "<+ZI> -> <+XI> -> <+ZI>, logical qubit on qubit 1";
    e.sequence = two_qubit_logical();
  } else if (name == "three_qubit_repetition") {
    e.description = "<ZZI,IZZ> -> <XXI,IXX> -> <ZZI,IZZ> (k = 1)";
    e.sequence = three_qubit_repetition();
  } else if (name == "honeycomb") {
    const int lx = param(params, "Lx", 6);
    const int ly = param(params, "Ly", 2);
    if (lx <= 0 || ly <= 0) throw std::invalid_argument("honeycomb: Lx and Ly must be positive");
    e.params = {{"Lx", lx}, {"Ly", ly}};
    e.description = "brick-wall honeycomb on a torus, rounds 0 -> 1 -> 2 -> 0";
    e.sequence = honeycomb(static_cast<std::size_t>(lx), static_cast<std::size_t>(ly));
  } else {
    throw std::invalid_argument("unknown catalog entry '" + name + "'");
  }
  return e;
}

}  // namespace floquetkit::catalog
