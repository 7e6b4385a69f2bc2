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

// Rampichini diagrams in an order-based encoding.
//
// The torus is cut along a vertical circle. The curves meet that circle in
// an ordered list of entries (bottom to top), each carrying a transposition
// label, the crossing direction of its oriented arc (sign) and the vertical
// direction of its component (monotone curves never change it). Sweeping to
// the right, the list changes only at events:
//
//   cross p lower|upper  entries p and p+1 exchange places; the under entry's
//                        label t becomes s t s for the over entry's label s.
//   wrap up|down         the top entry leaves through the top edge and
//                        re-enters at the bottom (or the reverse).
//
// After all events the list must equal the start list with every label
// (i j) shifted to (i+1 j+1) mod n. Wrap events are the points where the
// curves meet the bottom edge, so there are n-1 of them and their labels in
// event order multiply (left to right) to the cycle (1 2 ... n).

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "knotkit/braid.hpp"
#include "knotkit/permutation.hpp"
#include "knotkit/plumb.hpp"

namespace knotkit {

enum class YDir { up, down };
enum class OverStrand { lower, upper };

struct Entry {
  Transposition label;
  int sign = 1;  // +1: a(i,j), -1: a(i,j)^-1
  YDir dir = YDir::up;

  bool operator==(const Entry&) const = default;
};

struct Cross {
  int position = 1;  // entries position and position+1 (1-based)
  OverStrand over = OverStrand::lower;

  bool operator==(const Cross&) const = default;
};

struct Wrap {
  YDir direction = YDir::up;

  bool operator==(const Wrap&) const = default;
};

using Event = std::variant<Cross, Wrap>;
using RampState = std::vector<Entry>;

struct RampichiniDiagram {
  int n = 1;
  RampState start;
  std::vector<Event> events;

  bool operator==(const RampichiniDiagram&) const = default;
};

/// Applies one event in place. Throws DomainError on an out-of-range cross or
/// a wrap whose moving entry runs the other way.
void apply_event(RampState& state, const Event& event);

/// States after 0, 1, ..., events.size() events.
std::vector<RampState> replay(const RampichiniDiagram& r);

struct RampViolation {
  std::string rule;
  std::optional<std::size_t> event;
  std::string message;
};

struct RampCheck {
  bool valid = true;
  std::vector<RampViolation> violations;
};

/// Checks label ranges, replay, the wrap count, the left-to-right product of
/// bottom-edge labels and the shifted seam. Equality of top and bottom edge
/// labels holds by construction and is not checked.
RampCheck validate(const RampichiniDiagram& r);

/// Reads the entries after `cut` events bottom to top as a BKL word.
BklWord extract_word(const RampichiniDiagram& r, std::size_t cut);

/// Moves the cut line past the first k events.
RampichiniDiagram translate(const RampichiniDiagram& r, std::size_t k);

/// Relabels every transposition by (i+k j+k) mod n.
RampichiniDiagram shift_labels(const RampichiniDiagram& r, int k);

struct RampPlumbing {
  RampichiniDiagram diagram;
  /// Cut after the events swept from r1: the right edge of the glued square.
  /// The left edge reads the same labels shifted by -1.
  std::size_t seam_cut = 0;
};

/// Glues r2 (labels shifted by n1-1) to the left of r1 along a vertical line
/// where r1's start reads B1 and r2's start reads B2, interleaved by f. The
/// result starts on that line and reads B1 *_f B2 at cut 0. Its events sweep
/// r1 with the r2 curves held horizontal under it, then r2 with the r1 curves
/// held horizontal under it.
RampPlumbing plumb_diagrams(const RampichiniDiagram& r1, const RampichiniDiagram& r2,
                            const Merger& f);

/// Breadth-first search for events completing `start` to a valid diagram on
/// n strands with at most max_events events. Crossings where the lower entry
/// runs down and the upper one up are never generated.
std::optional<RampichiniDiagram> find_diagram(int n, const RampState& start,
                                              std::size_t max_events);

/// Line-oriented text: "n <int>", "entry <i> <j> <+|-> <up|down>",
/// "cross <p> <lower|upper>", "wrap <up|down>"; '#' starts a comment.
RampichiniDiagram parse_diagram(std::string_view text);
std::string format_diagram(const RampichiniDiagram& r);

std::string to_string(const Event& e);

}  // namespace knotkit
