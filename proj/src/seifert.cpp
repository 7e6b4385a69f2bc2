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

#include "knotkit/seifert.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <sstream>

#include "knotkit/error.hpp"

namespace knotkit {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  /// False when x and y were already joined.
  bool unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (size_[x] < size_[y]) std::swap(x, y);
    parent_[y] = x;
    size_[x] += size_[y];
    history_.push_back(y);
    return true;
  }

  std::size_t size_of(std::size_t x) const { return size_[find(x)]; }
  std::size_t mark() const { return history_.size(); }

  void rollback(std::size_t mark) {
    while (history_.size() > mark) {
      const std::size_t y = history_.back();
      history_.pop_back();
      size_[parent_[y]] -= size_[y];
      parent_[y] = y;
    }
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::vector<std::size_t> history_;
};

std::string crossing_name(std::size_t x, const PdCrossing& c) {
  return "crossing " + std::to_string(x + 1) + " X(" + std::to_string(c[0]) + "," +
         std::to_string(c[1]) + "," + std::to_string(c[2]) + "," + std::to_string(c[3]) + ")";
}

}  // namespace

PlanarDiagram::PlanarDiagram(std::vector<PdCrossing> crossings)
    : crossings_(std::move(crossings)) {
  const std::size_t c = crossings_.size();
  const int edges = 2 * static_cast<int>(c);
  std::vector<int> seen(static_cast<std::size_t>(edges) + 1, 0);
  for (std::size_t x = 0; x < c; ++x) {
    for (int e : crossings_[x]) {
      if (e < 1 || e > edges) {
        throw DomainError(crossing_name(x, crossings_[x]) + ": label " + std::to_string(e) +
                          " is outside 1.." + std::to_string(edges));
      }
      if (++seen[static_cast<std::size_t>(e)] > 2) {
        throw DomainError(crossing_name(x, crossings_[x]) + ": label " + std::to_string(e) +
                          " appears more than twice");
      }
    }
  }
  for (int e = 1; e <= edges; ++e) {
    if (seen[static_cast<std::size_t>(e)] != 2) {
      throw DomainError("label " + std::to_string(e) + " appears " +
                        std::to_string(seen[static_cast<std::size_t>(e)]) + " times, expected 2");
    }
  }

  // Components are the classes of labels joined through crossings.
  UnionFind uf(static_cast<std::size_t>(edges) + 1);
  for (const auto& x : crossings_) {
    uf.unite(static_cast<std::size_t>(x[0]), static_cast<std::size_t>(x[2]));
    uf.unite(static_cast<std::size_t>(x[1]), static_cast<std::size_t>(x[3]));
  }
  component_.assign(static_cast<std::size_t>(edges), -1);
  std::vector<int> lo;
  std::vector<int> hi;
  std::map<std::size_t, int> ids;
  for (int e = 1; e <= edges; ++e) {
    const auto [it, fresh] = ids.emplace(uf.find(static_cast<std::size_t>(e)),
                                         static_cast<int>(ids.size()));
    if (fresh) {
      lo.push_back(e);
      hi.push_back(e);
    }
    component_[static_cast<std::size_t>(e - 1)] = it->second;
    hi[static_cast<std::size_t>(it->second)] = e;
  }
  std::vector<int> members(lo.size(), 0);
  for (int k : component_) ++members[static_cast<std::size_t>(k)];
  for (std::size_t k = 0; k < lo.size(); ++k) {
    if (members[k] != hi[k] - lo[k] + 1) {
      throw DomainError("edges of one component are not numbered consecutively (labels " +
                        std::to_string(lo[k]) + ".." + std::to_string(hi[k]) + ")");
    }
  }
  auto succ = [&](int e) {
    const auto k = static_cast<std::size_t>(component_of(e));
    return e == hi[k] ? lo[k] : e + 1;
  };

  // 0: b -> d, 1: d -> b, -1: undecided.
  std::vector<int> over(c, -1);
  for (std::size_t x = 0; x < c; ++x) {
    const auto& X = crossings_[x];
    if (X[2] != succ(X[0])) {
      throw DomainError(crossing_name(x, X) + ": under-strand " + std::to_string(X[0]) + " -> " +
                        std::to_string(X[2]) + " does not follow the edge numbering");
    }
    const bool bd = X[3] == succ(X[1]);
    const bool db = X[1] == succ(X[3]);
    if (!bd && !db) {
      throw DomainError(crossing_name(x, X) + ": over-strand labels " + std::to_string(X[1]) +
                        " and " + std::to_string(X[3]) + " are not consecutive");
    }
    if (bd != db) over[x] = db ? 1 : 0;
  }

  // Two-edge components leave the over direction open; every edge needs one
  // head and one tail.
  std::vector<int> heads(static_cast<std::size_t>(edges) + 1, 0);
  std::vector<int> tails(static_cast<std::size_t>(edges) + 1, 0);
  auto count = [&](std::size_t x, int dir, int delta) {
    const auto& X = crossings_[x];
    heads[static_cast<std::size_t>(X[0])] += delta;
    tails[static_cast<std::size_t>(X[2])] += delta;
    const int in = dir == 0 ? X[1] : X[3];
    const int out = dir == 0 ? X[3] : X[1];
    heads[static_cast<std::size_t>(in)] += delta;
    tails[static_cast<std::size_t>(out)] += delta;
  };
  for (std::size_t x = 0; x < c; ++x) {
    if (over[x] >= 0) {
      count(x, over[x], 1);
    } else {
      heads[static_cast<std::size_t>(crossings_[x][0])] += 1;
      tails[static_cast<std::size_t>(crossings_[x][2])] += 1;
    }
  }
  auto propagate = [&] {
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t x = 0; x < c; ++x) {
        if (over[x] >= 0) continue;
        const auto& X = crossings_[x];
        const bool bd_blocked = heads[static_cast<std::size_t>(X[1])] > 0 ||
                                tails[static_cast<std::size_t>(X[3])] > 0;
        const bool db_blocked = heads[static_cast<std::size_t>(X[3])] > 0 ||
                                tails[static_cast<std::size_t>(X[1])] > 0;
        if (bd_blocked != db_blocked) {
          over[x] = bd_blocked ? 1 : 0;
          heads[static_cast<std::size_t>(X[0])] -= 1;
          tails[static_cast<std::size_t>(X[2])] -= 1;
          count(x, over[x], 1);
          changed = true;
        }
      }
    }
  };
  // A component that is never an under-strand has no preferred direction.
  for (std::size_t x = 0; x < c; ++x) {
    propagate();
    if (over[x] < 0) {
      over[x] = 0;
      heads[static_cast<std::size_t>(crossings_[x][0])] -= 1;
      tails[static_cast<std::size_t>(crossings_[x][2])] -= 1;
      count(x, 0, 1);
    }
  }
  for (int e = 1; e <= edges; ++e) {
    if (heads[static_cast<std::size_t>(e)] != 1 || tails[static_cast<std::size_t>(e)] != 1) {
      throw DomainError("edge " + std::to_string(e) +
                        " is not entered once and left once; orientation is inconsistent");
    }
  }

  sign_.resize(c);
  tail_.resize(static_cast<std::size_t>(edges));
  head_.resize(static_cast<std::size_t>(edges));
  for (std::size_t x = 0; x < c; ++x) {
    sign_[x] = over[x] == 1 ? 1 : -1;
    const int xi = static_cast<int>(x);
    const auto& X = crossings_[x];
    head_[static_cast<std::size_t>(X[0] - 1)] = {xi, 0};
    tail_[static_cast<std::size_t>(X[2] - 1)] = {xi, 2};
    head_[static_cast<std::size_t>(X[static_cast<std::size_t>(over_in(xi))] - 1)] = {xi, over_in(xi)};
    tail_[static_cast<std::size_t>(X[static_cast<std::size_t>(over_out(xi))] - 1)] = {xi, over_out(xi)};
  }
}

int PlanarDiagram::component_count() const {
  if (crossings_.empty()) return 1;
  return *std::max_element(component_.begin(), component_.end()) + 1;
}

int PlanarDiagram::writhe() const { return std::accumulate(sign_.begin(), sign_.end(), 0); }

bool PlanarDiagram::outgoing(Slot s) const { return tail(edge_at(s)) == s; }

int PlanarDiagram::connected_pieces() const {
  if (crossings_.empty()) return 1;
  UnionFind uf(crossings_.size());
  for (int e = 1; e <= edge_count(); ++e) {
    uf.unite(static_cast<std::size_t>(tail(e).crossing), static_cast<std::size_t>(head(e).crossing));
  }
  int pieces = 0;
  for (std::size_t x = 0; x < crossings_.size(); ++x) pieces += uf.find(x) == x ? 1 : 0;
  return pieces;
}

PlanarDiagram::Faces PlanarDiagram::faces() const {
  Faces f;
  if (crossings_.empty()) {
    f.count = 2;
    f.size = {0, 0};
    return f;
  }
  const auto edges = static_cast<std::size_t>(edge_count());
  // Dart 2(e-1) runs along e, dart 2(e-1)+1 against it.
  std::vector<int> face_of(2 * edges, -1);
  auto arrival = [&](std::size_t dart) {
    const int e = static_cast<int>(dart / 2) + 1;
    return dart % 2 == 0 ? head(e) : tail(e);
  };
  auto departing = [&](Slot s) {
    const int e = edge_at(s);
    const auto base = 2 * static_cast<std::size_t>(e - 1);
    return tail(e) == s ? base : base + 1;
  };
  for (std::size_t start = 0; start < 2 * edges; ++start) {
    if (face_of[start] >= 0) continue;
    const int id = f.count++;
    int size = 0;
    for (std::size_t d = start; face_of[d] < 0;) {
      face_of[d] = id;
      ++size;
      const Slot at = arrival(d);
      d = departing({at.crossing, (at.position + 3) % 4});
    }
    f.size.push_back(size);
  }
  f.left.resize(edges);
  f.right.resize(edges);
  for (std::size_t e = 0; e < edges; ++e) {
    f.left[e] = face_of[2 * e];
    f.right[e] = face_of[2 * e + 1];
  }
  const int expected = crossing_count() + 1 + connected_pieces();
  if (f.count != expected) {
    throw DomainError("diagram is not planar: " + std::to_string(f.count) + " faces, expected " +
                      std::to_string(expected));
  }
  return f;
}

PlanarDiagram parse_pd(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char ch) {
    skip();
    if (pos >= text.size() || text[pos] != ch) {
      throw ParseError(std::string("expected '") + ch + "'", pos);
    }
    ++pos;
  };
  auto number = [&] {
    skip();
    const std::size_t begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (begin == pos) throw ParseError("expected an edge label", begin);
    if (pos - begin > 6) throw ParseError("edge label too large", begin);
    return std::stoi(std::string(text.substr(begin, pos - begin)));
  };
  expect('P');
  expect('D');
  expect('[');
  std::vector<PdCrossing> crossings;
  skip();
  if (pos < text.size() && text[pos] != ']') {
    for (;;) {
      expect('X');
      expect('(');
      PdCrossing x{};
      for (std::size_t k = 0; k < 4; ++k) {
        if (k) expect(',');
        x[k] = number();
      }
      expect(')');
      crossings.push_back(x);
      skip();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      break;
    }
  }
  expect(']');
  skip();
  if (pos != text.size()) throw ParseError("trailing text after PD[...]", pos);
  return PlanarDiagram(std::move(crossings));
}

std::string format_pd(const PlanarDiagram& d) {
  std::ostringstream os;
  os << "PD[";
  for (std::size_t x = 0; x < d.crossings().size(); ++x) {
    const auto& c = d.crossings()[x];
    os << (x ? "," : "") << "X(" << c[0] << ',' << c[1] << ',' << c[2] << ',' << c[3] << ')';
  }
  os << ']';
  return os.str();
}

PlanarDiagram braid_closure_pd(const ArtinWord& w) {
  const int m = w.strands();
  if (w.empty() && m == 1) return PlanarDiagram{};
  std::vector<bool> used(static_cast<std::size_t>(m), false);
  for (int letter : w.letters()) used[static_cast<std::size_t>(std::abs(letter))] = true;
  for (int i = 1; i < m; ++i) {
    if (!used[static_cast<std::size_t>(i)]) {
      throw DomainError("generator " + std::to_string(i) +
                        " does not occur, so the closure diagram is disconnected");
    }
  }

  std::vector<int> cur(static_cast<std::size_t>(m));
  std::iota(cur.begin(), cur.end(), 0);
  int segments = m;
  std::vector<PdCrossing> raw;
  for (int letter : w.letters()) {
    const auto left = static_cast<std::size_t>(std::abs(letter) - 1);
    const int lin = cur[left];
    const int rin = cur[left + 1];
    const int lout = segments++;
    const int rout = segments++;
    if (letter > 0) {
      raw.push_back({rin, rout, lout, lin});
    } else {
      raw.push_back({lin, rin, rout, lout});
    }
    cur[left] = lout;
    cur[left + 1] = rout;
  }
  // Closing the braid identifies the top of each strand with its bottom.
  std::vector<int> alias(static_cast<std::size_t>(segments));
  std::iota(alias.begin(), alias.end(), 0);
  for (int p = 0; p < m; ++p) alias[static_cast<std::size_t>(cur[static_cast<std::size_t>(p)])] = p;
  for (auto& x : raw) {
    for (auto& s : x) s = alias[static_cast<std::size_t>(s)];
  }

  // Successor of a segment along the orientation, through the crossing it enters.
  std::vector<int> next(static_cast<std::size_t>(segments), -1);
  for (std::size_t x = 0; x < raw.size(); ++x) {
    const bool positive = w.letters()[x] > 0;
    const auto& X = raw[x];
    next[static_cast<std::size_t>(X[0])] = X[2];
    if (positive) {
      next[static_cast<std::size_t>(X[3])] = X[1];
    } else {
      next[static_cast<std::size_t>(X[1])] = X[3];
    }
  }
  std::vector<int> label(static_cast<std::size_t>(segments), 0);
  int counter = 0;
  for (int s = 0; s < segments; ++s) {
    if (next[static_cast<std::size_t>(s)] < 0 || label[static_cast<std::size_t>(s)]) continue;
    for (int t = s; !label[static_cast<std::size_t>(t)]; t = next[static_cast<std::size_t>(t)]) {
      label[static_cast<std::size_t>(t)] = ++counter;
    }
  }
  for (auto& x : raw) {
    for (auto& s : x) s = label[static_cast<std::size_t>(s)];
  }
  return PlanarDiagram(std::move(raw));
}

SeifertCircles seifert_circles(const PlanarDiagram& d) {
  SeifertCircles out;
  if (d.crossing_count() == 0) {
    out.count = 1;
    out.circles.emplace_back();
    return out;
  }
  const int edges = d.edge_count();
  out.circle_of_edge.assign(static_cast<std::size_t>(edges), -1);
  auto next = [&](int e) {
    const Slot h = d.head(e);
    const int out_pos = h.position == 0 ? d.over_out(h.crossing) : 2;
    return d.edge_at({h.crossing, out_pos});
  };
  for (int e = 1; e <= edges; ++e) {
    if (out.circle_of_edge[static_cast<std::size_t>(e - 1)] >= 0) continue;
    out.circles.emplace_back();
    for (int f = e; out.circle_of_edge[static_cast<std::size_t>(f - 1)] < 0; f = next(f)) {
      out.circle_of_edge[static_cast<std::size_t>(f - 1)] = out.count;
      out.circles.back().push_back(f);
    }
    ++out.count;
  }
  return out;
}

int seifert_betti(const PlanarDiagram& d) {
  return d.crossing_count() - seifert_circles(d).count + d.connected_pieces();
}

int canonical_genus(const PlanarDiagram& d) {
  if (d.component_count() != 1) {
    throw DomainError("diagram has " + std::to_string(d.component_count()) +
                      " components; the canonical surface has first Betti number " +
                      std::to_string(seifert_betti(d)));
  }
  const int twice = 1 + d.crossing_count() - seifert_circles(d).count;
  if (twice < 0 || twice % 2 != 0) {
    throw DomainError("Euler characteristic gives a non-integral genus");
  }
  return twice / 2;
}

int GuideGraph::count(GuideKind kind) const {
  return static_cast<int>(
      std::count_if(edges.begin(), edges.end(), [&](const GuideEdge& e) { return e.kind == kind; }));
}

GuideGraph build_guide_graph(const PlanarDiagram& d) {
  const int c = d.crossing_count();
  if (c == 0) throw DomainError("the guide graph needs at least one crossing");
  if (d.connected_pieces() != 1) throw DomainError("the guide graph needs a connected diagram");
  const SeifertCircles circles = seifert_circles(d);
  auto circle_at = [&](int x, int k) {
    return circles.circle_of_edge[static_cast<std::size_t>(d.edge_at({x, k}) - 1)];
  };

  GuideGraph g;
  g.crossings = c;
  for (int x = 0; x < c; ++x) {
    for (int k = 0; k < 4; ++k) {
      GuideEdge e;
      e.kind = circle_at(x, k) == circle_at(x, (k + 1) % 4) ? GuideKind::short_edge
                                                           : GuideKind::long_edge;
      e.u = 4 * x + k;
      e.v = 4 * x + (k + 1) % 4;
      e.crossing = x;
      g.edges.push_back(e);
    }
  }
  const int loops = 4 * c;
  for (int label = 1; label <= d.edge_count(); ++label) {
    const Slot t = d.tail(label);
    const Slot h = d.head(label);
    for (int side : {1, -1}) {
      GuideEdge e;
      e.kind = GuideKind::parallel;
      e.u = 4 * t.crossing + t.position;
      e.v = 4 * h.crossing + h.position;
      e.diagram_edge = label;
      e.side = side;
      g.edges.push_back(e);
    }
  }
  g.rotation.resize(static_cast<std::size_t>(loops));
  for (int x = 0; x < c; ++x) {
    for (int k = 0; k < 4; ++k) {
      const Slot s{x, k};
      const int label = d.edge_at(s);
      const int left = loops + 2 * (label - 1);
      const int right = left + 1;
      const bool incoming = d.head(label) == s;
      g.rotation[static_cast<std::size_t>(4 * x + k)] = {4 * x + k, 4 * x + (k + 3) % 4,
                                                         incoming ? left : right,
                                                         incoming ? right : left};
    }
  }
  return g;
}

GuideCheck check_guide_graph(const GuideGraph& g) {
  GuideCheck check;
  const auto V = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> degree(V, 0);
  std::vector<std::array<int, 3>> kinds(V, {0, 0, 0});
  for (const auto& e : g.edges) {
    for (int v : {e.u, e.v}) {
      ++degree[static_cast<std::size_t>(v)];
      ++kinds[static_cast<std::size_t>(v)][static_cast<std::size_t>(e.kind)];
    }
  }
  for (std::size_t v = 0; v < V; ++v) {
    const std::string name = "vertex " + std::to_string(v);
    if (degree[v] != 4) check.violations.push_back(name + " has degree " + std::to_string(degree[v]));
    if (kinds[v] != std::array<int, 3>{1, 1, 2}) {
      check.violations.push_back(name + " meets " + std::to_string(kinds[v][0]) + " short, " +
                                 std::to_string(kinds[v][1]) + " long and " +
                                 std::to_string(kinds[v][2]) + " parallel edges");
    }
    for (int id : g.rotation[v]) {
      const auto& e = g.edges[static_cast<std::size_t>(id)];
      if (e.u != static_cast<int>(v) && e.v != static_cast<int>(v)) {
        check.violations.push_back(name + " lists edge " + std::to_string(id) +
                                   " in its rotation but is not an endpoint");
      }
    }
  }

  UnionFind uf(V);
  for (const auto& e : g.edges) uf.unite(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v));
  if (V > 0 && uf.size_of(0) != V) check.violations.push_back("graph is disconnected");

  if (check.violations.empty() && V > 0) {
    // Faces of the rotation system: arrive at entry m, leave by entry m-1.
    const std::size_t E = g.edges.size();
    std::vector<bool> done(2 * E, false);
    auto index_at = [&](int v, int edge) {
      const auto& rot = g.rotation[static_cast<std::size_t>(v)];
      return static_cast<int>(std::find(rot.begin(), rot.end(), edge) - rot.begin());
    };
    int faces = 0;
    for (std::size_t start = 0; start < 2 * E; ++start) {
      if (done[start]) continue;
      ++faces;
      for (std::size_t dart = start; !done[dart];) {
        done[dart] = true;
        const auto& e = g.edges[dart / 2];
        const int at = dart % 2 == 0 ? e.v : e.u;
        const int m = index_at(at, static_cast<int>(dart / 2));
        const int leave = g.rotation[static_cast<std::size_t>(at)][static_cast<std::size_t>((m + 3) % 4)];
        const auto& f = g.edges[static_cast<std::size_t>(leave)];
        dart = 2 * static_cast<std::size_t>(leave) + (f.u == at ? 0 : 1);
      }
    }
    const long euler = static_cast<long>(V) - static_cast<long>(E) + faces;
    if (euler != 2) {
      check.violations.push_back("rotation system is not planar (V - E + F = " +
                                 std::to_string(euler) + ")");
    }
  }
  check.valid = check.violations.empty();
  return check;
}

namespace {

constexpr std::array<std::array<int, 4>, 2> kPairs{{{0, 1, 2, 3}, {1, 2, 3, 0}}};

}  // namespace

int smoothing_components(const GuideGraph& g, const Smoothing& s) {
  if (s.size() != static_cast<std::size_t>(g.vertex_count())) {
    throw DomainError("smoothing has " + std::to_string(s.size()) + " choices for " +
                      std::to_string(g.vertex_count()) + " vertices");
  }
  UnionFind uf(g.edges.size());
  for (std::size_t v = 0; v < s.size(); ++v) {
    const auto& rot = g.rotation[v];
    const auto& p = kPairs[s[v] ? 1 : 0];
    uf.unite(static_cast<std::size_t>(rot[static_cast<std::size_t>(p[0])]),
             static_cast<std::size_t>(rot[static_cast<std::size_t>(p[1])]));
    uf.unite(static_cast<std::size_t>(rot[static_cast<std::size_t>(p[2])]),
             static_cast<std::size_t>(rot[static_cast<std::size_t>(p[3])]));
  }
  int components = 0;
  for (std::size_t e = 0; e < g.edges.size(); ++e) components += uf.find(e) == e ? 1 : 0;
  return components;
}

namespace {

class SmoothingSearch {
 public:
  SmoothingSearch(const GuideGraph& g, const SmoothOptions& options)
      : g_(g), uf_(g.edges.size()), choice_(static_cast<std::size_t>(g.vertex_count()), 0) {
    const auto V = static_cast<std::size_t>(g.vertex_count());
    std::mt19937 rng(options.order_seed);
    first_.resize(V);
    for (auto& f : first_) f = options.order_seed == 0 ? 0 : static_cast<std::uint8_t>(rng() & 1);

    // Breadth-first order keeps partial curves short, so closed curves are
    // detected early.
    std::vector<std::vector<int>> adjacent(V);
    for (const auto& e : g.edges) {
      adjacent[static_cast<std::size_t>(e.u)].push_back(e.v);
      adjacent[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    std::vector<bool> queued(V, false);
    std::queue<int> todo;
    const auto root = static_cast<int>(options.order_seed % V);
    todo.push(root);
    queued[static_cast<std::size_t>(root)] = true;
    while (!todo.empty()) {
      const int v = todo.front();
      todo.pop();
      order_.push_back(v);
      for (int w : adjacent[static_cast<std::size_t>(v)]) {
        if (!queued[static_cast<std::size_t>(w)]) {
          queued[static_cast<std::size_t>(w)] = true;
          todo.push(w);
        }
      }
    }
  }

  bool run() { return descend(0); }
  const Smoothing& choice() const { return choice_; }

 private:
  bool join(int a, int b, bool last) {
    if (uf_.unite(static_cast<std::size_t>(a), static_cast<std::size_t>(b))) return true;
    return last && uf_.size_of(static_cast<std::size_t>(a)) == g_.edges.size();
  }

  bool descend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const auto v = static_cast<std::size_t>(order_[depth]);
    const auto& rot = g_.rotation[v];
    const bool last = depth + 1 == order_.size();
    for (int attempt = 0; attempt < 2; ++attempt) {
      const auto c = static_cast<std::uint8_t>(first_[v] ^ attempt);
      const auto& p = kPairs[c];
      const std::size_t mark = uf_.mark();
      if (join(rot[static_cast<std::size_t>(p[0])], rot[static_cast<std::size_t>(p[1])], false) &&
          join(rot[static_cast<std::size_t>(p[2])], rot[static_cast<std::size_t>(p[3])], last)) {
        choice_[v] = c;
        if (descend(depth + 1)) return true;
      }
      uf_.rollback(mark);
    }
    return false;
  }

  const GuideGraph& g_;
  UnionFind uf_;
  Smoothing choice_;
  std::vector<std::uint8_t> first_;
  std::vector<int> order_;
};

}  // namespace

Smoothing smooth_to_unknot(const GuideGraph& g, const SmoothOptions& options) {
  if (g.vertex_count() == 0) throw DomainError("empty guide graph");
  if (g.vertex_count() > options.max_vertices) {
    throw DomainError("guide graph has " + std::to_string(g.vertex_count()) +
                      " vertices, above the search bound " + std::to_string(options.max_vertices));
  }
  SmoothingSearch search(g, options);
  if (!search.run()) throw DomainError("no smoothing yields a single curve");
  return search.choice();
}

ArcPresentationReport arc_presentation(const PlanarDiagram& d, const SmoothOptions& options) {
  ArcPresentationReport r;
  r.crossings = d.crossing_count();
  r.graph = build_guide_graph(d);
  const SeifertCircles circles = seifert_circles(d);
  r.seifert_circles = circles.count;
  r.smoothing = smooth_to_unknot(r.graph, options);
  r.unknot_components = smoothing_components(r.graph, r.smoothing);
  r.unknot_edge_count = r.graph.edge_count();
  // Each of the two arcs replacing a vertex meets the link once.
  r.link_arc_count = 2 * r.graph.vertex_count();

  // Regions left after Seifert smoothing: faces joined through the two
  // corners that the smoothing opens up at each crossing.
  const auto faces = d.faces();
  auto corner_face = [&](int x, int k) {
    const Slot s{x, (k + 1) % 4};
    const int e = d.edge_at(s);
    return d.head(e) == s ? faces.left[static_cast<std::size_t>(e - 1)]
                          : faces.right[static_cast<std::size_t>(e - 1)];
  };
  UnionFind regions(static_cast<std::size_t>(faces.count));
  for (int x = 0; x < d.crossing_count(); ++x) {
    const int open = d.sign(x) > 0 ? 1 : 0;
    regions.unite(static_cast<std::size_t>(corner_face(x, open)),
                  static_cast<std::size_t>(corner_face(x, open + 2)));
  }
  auto region = [&](int face) { return static_cast<int>(regions.find(static_cast<std::size_t>(face))); };

  std::vector<std::pair<int, int>> sides(static_cast<std::size_t>(circles.count));
  for (int k = 0; k < circles.count; ++k) {
    const int e = circles.circles[static_cast<std::size_t>(k)].front();
    sides[static_cast<std::size_t>(k)] = {region(faces.left[static_cast<std::size_t>(e - 1)]),
                                          region(faces.right[static_cast<std::size_t>(e - 1)])};
  }
  int outer = 0;
  for (int f = 1; f < faces.count; ++f) {
    if (faces.size[static_cast<std::size_t>(f)] > faces.size[static_cast<std::size_t>(outer)]) outer = f;
  }
  std::map<int, int> depth{{region(outer), 0}};
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& [a, b] : sides) {
      if (depth.count(a) && !depth.count(b)) depth[b] = depth[a] + 1, grew = true;
      if (depth.count(b) && !depth.count(a)) depth[a] = depth[b] + 1, grew = true;
    }
  }
  std::vector<int> interior(static_cast<std::size_t>(circles.count));
  std::vector<int> orient(static_cast<std::size_t>(circles.count));
  for (std::size_t k = 0; k < sides.size(); ++k) {
    const auto [l, rt] = sides[k];
    interior[k] = depth.at(l) > depth.at(rt) ? l : rt;
    orient[k] = interior[k] == l ? 1 : -1;
  }

  r.page_labels.resize(r.graph.edges.size());
  for (std::size_t id = 0; id < r.graph.edges.size(); ++id) {
    const auto& e = r.graph.edges[id];
    int label = 0;
    if (e.kind == GuideKind::long_edge) {
      label = 2 * d.sign(e.crossing);
    } else {
      int circle = 0;
      int face = 0;
      if (e.kind == GuideKind::short_edge) {
        const int k = e.u % 4;
        circle = circles.circle_of_edge[static_cast<std::size_t>(d.edge_at({e.crossing, k}) - 1)];
        face = corner_face(e.crossing, k);
      } else {
        const auto idx = static_cast<std::size_t>(e.diagram_edge - 1);
        circle = circles.circle_of_edge[idx];
        face = e.side > 0 ? faces.left[idx] : faces.right[idx];
      }
      const auto c = static_cast<std::size_t>(circle);
      label = region(face) == interior[c] ? 0 : -orient[c];
    }
    r.page_labels[id] = label;
    r.labels_used.insert(label);
  }
  return r;
}

std::string to_string(GuideKind kind) {
  switch (kind) {
    case GuideKind::short_edge:
      return "short";
    case GuideKind::long_edge:
      return "long";
    case GuideKind::parallel:
      return "parallel";
  }
  return "?";
}

std::string format_report(const ArcPresentationReport& r) {
  std::ostringstream os;
  os << "crossings " << r.crossings << '\n'
     << "seifert_circles " << r.seifert_circles << '\n'
     << "guide_vertices " << r.graph.vertex_count() << '\n'
     << "guide_edges " << r.graph.edge_count() << '\n'
     << "short " << r.graph.count(GuideKind::short_edge) << '\n'
     << "long " << r.graph.count(GuideKind::long_edge) << '\n'
     << "parallel " << r.graph.count(GuideKind::parallel) << '\n'
     << "smoothing ";
  for (auto c : r.smoothing) os << static_cast<int>(c);
  os << '\n'
     << "unknot_components " << r.unknot_components << '\n'
     << "unknot_edge_count " << r.unknot_edge_count << '\n'
     << "link_arc_count " << r.link_arc_count << '\n'
     << "page_labels_used";
  for (int l : r.labels_used) os << ' ' << l;
  os << '\n';
  for (std::size_t id = 0; id < r.graph.edges.size(); ++id) {
    const auto& e = r.graph.edges[id];
    os << "edge " << id << ' ' << to_string(e.kind) << ' ' << e.u << ' ' << e.v << ' '
       << r.page_labels[id] << '\n';
  }
  return os.str();
}

}  // namespace knotkit
