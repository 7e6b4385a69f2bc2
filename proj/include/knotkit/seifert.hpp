// Copyright 2026 The knotkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Planar diagrams, Seifert circles and the guide graph whose smoothing gives
// an unknot that together with the link forms a mutual arc presentation.

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "knotkit/braid.hpp"

namespace knotkit {

/// A crossing X(a,b,c,d): edge labels counterclockwise from the incoming
/// under-strand, so the under-strand runs a -> c.
using PdCrossing = std::array<int, 4>;

struct Slot {
  int crossing = 0;
  int position = 0;  // 0..3 in the order a, b, c, d

  bool operator==(const Slot&) const = default;
};

class PlanarDiagram {
 public:
  PlanarDiagram() = default;
  /// Validates label multiplicity, contiguity along components and
  /// orientation; throws DomainError naming the culprit crossing.
  explicit PlanarDiagram(std::vector<PdCrossing> crossings);

  const std::vector<PdCrossing>& crossings() const { return crossings_; }
  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int edge_count() const { return 2 * crossing_count(); }
  /// Link components; a crossingless diagram is one unknotted component.
  int component_count() const;
  /// Component index of edge label e.
  int component_of(int e) const { return component_[static_cast<std::size_t>(e - 1)]; }

  /// +1 when the over-strand runs d -> b, -1 when it runs b -> d.
  int sign(int crossing) const { return sign_[static_cast<std::size_t>(crossing)]; }
  int writhe() const;
  /// Position where the over-strand leaves crossing x (1 or 3).
  int over_out(int crossing) const { return sign(crossing) > 0 ? 1 : 3; }
  int over_in(int crossing) const { return sign(crossing) > 0 ? 3 : 1; }
  bool outgoing(Slot s) const;
  int edge_at(Slot s) const {
    return crossings_[static_cast<std::size_t>(s.crossing)][static_cast<std::size_t>(s.position)];
  }
  /// Where edge e starts and ends.
  Slot tail(int e) const { return tail_[static_cast<std::size_t>(e - 1)]; }
  Slot head(int e) const { return head_[static_cast<std::size_t>(e - 1)]; }

  /// Number of connected pieces of the underlying 4-valent graph.
  int connected_pieces() const;

  /// Faces of the projection: face_left(e) / face_right(e) of edge e travelled
  /// along its orientation. Throws DomainError if Euler's formula fails.
  struct Faces {
    int count = 0;
    std::vector<int> left;   // by edge label - 1
    std::vector<int> right;  // by edge label - 1
    std::vector<int> size;   // number of edge sides on each face
  };
  Faces faces() const;

  bool operator==(const PlanarDiagram& o) const { return crossings_ == o.crossings_; }

 private:
  std::vector<PdCrossing> crossings_;
  std::vector<int> sign_;
  std::vector<int> component_;
  std::vector<Slot> tail_;
  std::vector<Slot> head_;
};

/// "PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]"; whitespace is ignored.
PlanarDiagram parse_pd(std::string_view text);
std::string format_pd(const PlanarDiagram& d);

/// Diagram of the braid closure; every generator must occur so that the
/// diagram is connected. Positive letters give positive crossings.
PlanarDiagram braid_closure_pd(const ArtinWord& w);

struct SeifertCircles {
  int count = 0;
  /// Circle index of each edge (by label - 1).
  std::vector<int> circle_of_edge;
  /// Edges of each circle in traversal order.
  std::vector<std::vector<int>> circles;
};

SeifertCircles seifert_circles(const PlanarDiagram& d);

/// First Betti number c - s + (connected pieces) of the canonical surface.
int seifert_betti(const PlanarDiagram& d);

/// Genus (1 + c - s) / 2 of the canonical surface of a knot diagram.
/// Throws DomainError for links, quoting the Betti number instead.
int canonical_genus(const PlanarDiagram& d);

enum class GuideKind { short_edge, long_edge, parallel };

struct GuideEdge {
  GuideKind kind = GuideKind::parallel;
  int u = 0;
  int v = 0;
  /// Crossing of a loop edge; -1 for parallel edges.
  int crossing = -1;
  /// Diagram edge followed by a parallel edge and the side it runs on
  /// (+1 left, -1 right of the orientation); 0 for loop edges.
  int diagram_edge = 0;
  int side = 0;
};

/// Vertex 4x + k sits on the half-edge at position k of crossing x.
/// rotation[v] lists the edges at v counterclockwise as
///   [loop towards k+1, loop towards k-1, parallel on the k-1 side,
///    parallel on the k+1 side],
/// so the link passes between entries 0|1 and 2|3.
struct GuideGraph {
  int crossings = 0;
  std::vector<GuideEdge> edges;
  std::vector<std::array<int, 4>> rotation;

  int vertex_count() const { return static_cast<int>(rotation.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  int count(GuideKind kind) const;
};

/// Throws DomainError for crossingless or disconnected diagrams.
GuideGraph build_guide_graph(const PlanarDiagram& d);

struct GuideCheck {
  bool valid = true;
  std::vector<std::string> violations;
};

/// 4-valence, one short + one long + two parallel edges per vertex,
/// connectivity and Euler's formula for the rotation system.
GuideCheck check_guide_graph(const GuideGraph& g);

/// choice[v] = 0 joins rotation entries (0,1),(2,3); 1 joins (1,2),(3,0).
using Smoothing = std::vector<std::uint8_t>;

/// Number of closed curves left after smoothing every vertex.
int smoothing_components(const GuideGraph& g, const Smoothing& s);

struct SmoothOptions {
  /// Varies the vertex order and the branch tried first.
  std::uint32_t order_seed = 0;
  /// Refuse graphs with more vertices than this.
  int max_vertices = 4 * 12;
};

/// Backtracking search for a smoothing with a single component, pruning as
/// soon as a closed curve appears before the last vertex.
Smoothing smooth_to_unknot(const GuideGraph& g, const SmoothOptions& options = {});

struct ArcPresentationReport {
  int crossings = 0;
  int seifert_circles = 0;
  GuideGraph graph;
  Smoothing smoothing;
  int unknot_components = 0;
  int unknot_edge_count = 0;
  /// Points where the unknot meets the link (two per smoothed vertex), which
  /// equals the number of link arcs between them.
  int link_arc_count = 0;
  /// Fiber index of each unknot edge in units of the thickening parameter.
  std::vector<int> page_labels;
  std::set<int> labels_used;
};

/// Page labels: 0 for short and parallel edges already on a Seifert disk,
/// -o(C) for the others (o(C) = +1 for a counterclockwise circle C through the
/// endpoints, so the edge goes below that disk), and 2 * crossing sign for
/// long edges. The outer face is the face with most edge sides.
ArcPresentationReport arc_presentation(const PlanarDiagram& d, const SmoothOptions& options = {});

std::string to_string(GuideKind kind);
std::string format_report(const ArcPresentationReport& r);

}  // namespace knotkit
