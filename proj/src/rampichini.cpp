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

#include "knotkit/rampichini.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "knotkit/error.hpp"

namespace knotkit {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

const char* dir_name(YDir d) { return d == YDir::up ? "up" : "down"; }

RampState shifted_state(const RampState& s, int k, int n) {
  RampState out = s;
  for (auto& e : out) e.label = e.label.shifted(k, n);
  return out;
}

std::size_t wrap_count(const std::vector<Event>& events) {
  return static_cast<std::size_t>(std::count_if(events.begin(), events.end(), [](const Event& e) {
    return std::holds_alternative<Wrap>(e);
  }));
}

}  // namespace

void apply_event(RampState& state, const Event& event) {
  std::visit(Overloaded{
                 [&](const Cross& c) {
                   if (c.position < 1 || static_cast<std::size_t>(c.position) >= state.size()) {
                     throw DomainError("cross at position " + std::to_string(c.position) +
                                       " needs entries " + std::to_string(c.position) + " and " +
                                       std::to_string(c.position + 1) + " but only " +
                                       std::to_string(state.size()) + " exist");
                   }
                   auto& lower = state[static_cast<std::size_t>(c.position - 1)];
                   auto& upper = state[static_cast<std::size_t>(c.position)];
                   if (c.over == OverStrand::lower) {
                     upper.label = upper.label.conjugated_by(lower.label);
                   } else {
                     lower.label = lower.label.conjugated_by(upper.label);
                   }
                   std::swap(lower, upper);
                 },
                 [&](const Wrap& w) {
                   if (state.empty()) throw DomainError("wrap on a diagram without entries");
                   if (w.direction == YDir::up) {
                     if (state.back().dir != YDir::up) {
                       throw DomainError("wrap up moves the top entry, which runs down");
                     }
                     std::rotate(state.rbegin(), state.rbegin() + 1, state.rend());
                   } else {
                     if (state.front().dir != YDir::down) {
                       throw DomainError("wrap down moves the bottom entry, which runs up");
                     }
                     std::rotate(state.begin(), state.begin() + 1, state.end());
                   }
                 },
             },
             event);
}

std::vector<RampState> replay(const RampichiniDiagram& r) {
  std::vector<RampState> states;
  states.reserve(r.events.size() + 1);
  states.push_back(r.start);
  for (std::size_t k = 0; k < r.events.size(); ++k) {
    RampState next = states.back();
    try {
      apply_event(next, r.events[k]);
    } catch (const DomainError& e) {
      throw DomainError("event " + std::to_string(k + 1) + ": " + e.what());
    }
    states.push_back(std::move(next));
  }
  return states;
}

RampCheck validate(const RampichiniDiagram& r) {
  RampCheck check;
  auto fail = [&](std::string rule, std::optional<std::size_t> event, std::string message) {
    check.violations.push_back({std::move(rule), event, std::move(message)});
  };

  if (r.n < 1) fail("strands", std::nullopt, "n must be at least 1");
  for (std::size_t k = 0; k < r.start.size(); ++k) {
    const auto& e = r.start[k];
    if (e.label.j > r.n) {
      fail("labels", std::nullopt,
           "entry " + std::to_string(k + 1) + " label (" + std::to_string(e.label.i) + " " +
               std::to_string(e.label.j) + ") is not in S_" + std::to_string(r.n));
    }
    if (e.sign != 1 && e.sign != -1) {
      fail("labels", std::nullopt, "entry " + std::to_string(k + 1) + " sign must be + or -");
    }
  }
  if (!check.violations.empty()) {
    check.valid = false;
    return check;
  }

  RampState state = r.start;
  Permutation bottom_product(r.n);
  for (std::size_t k = 0; k < r.events.size(); ++k) {
    if (const auto* w = std::get_if<Wrap>(&r.events[k]); w && !state.empty()) {
      const Entry& moving = w->direction == YDir::up ? state.back() : state.front();
      // Labels read left to right along the bottom edge: the earliest acts first.
      bottom_product = Permutation::transposition(r.n, moving.label) * bottom_product;
    }
    try {
      apply_event(state, r.events[k]);
    } catch (const DomainError& e) {
      fail("replay", k + 1, e.what());
      check.valid = false;
      return check;
    }
  }

  const std::size_t wraps = wrap_count(r.events);
  if (wraps != static_cast<std::size_t>(r.n - 1)) {
    fail("wrap-count", std::nullopt,
         "curves meet a horizontal line " + std::to_string(wraps) + " times, expected n-1 = " +
             std::to_string(r.n - 1));
  }
  if (bottom_product != Permutation::full_cycle(r.n)) {
    fail("bottom-product", std::nullopt,
         "bottom-edge labels multiply to " + bottom_product.to_string() + ", expected " +
             Permutation::full_cycle(r.n).to_string());
  }
  const RampState expected = shifted_state(r.start, 1, r.n);
  for (std::size_t k = 0; k < expected.size(); ++k) {
    if (state[k] != expected[k]) {
      fail("seam-shift", r.events.size(),
           "entry " + std::to_string(k + 1) + " on the right edge is (" +
               std::to_string(state[k].label.i) + " " + std::to_string(state[k].label.j) +
               "), expected the left-edge label shifted by one: (" +
               std::to_string(expected[k].label.i) + " " + std::to_string(expected[k].label.j) +
               ") with the same sign and direction");
      break;
    }
  }
  check.valid = check.violations.empty();
  return check;
}

namespace {

void require_valid(const RampichiniDiagram& r, const char* what) {
  const auto check = validate(r);
  if (!check.valid) {
    throw DomainError(std::string(what) + ": invalid diagram (" + check.violations.front().rule +
                      ": " + check.violations.front().message + ")");
  }
}

BklWord state_word(const RampState& s, int n) {
  std::vector<BandLetter> letters;
  letters.reserve(s.size());
  for (const auto& e : s) letters.push_back({e.label.i, e.label.j, e.sign});
  return BklWord(std::move(letters), n);
}

}  // namespace

BklWord extract_word(const RampichiniDiagram& r, std::size_t cut) {
  if (cut > r.events.size()) {
    throw DomainError("cut " + std::to_string(cut) + " is outside 0.." +
                      std::to_string(r.events.size()));
  }
  require_valid(r, "extract_word");
  return state_word(replay(r)[cut], r.n);
}

RampichiniDiagram translate(const RampichiniDiagram& r, std::size_t k) {
  if (k > r.events.size()) {
    throw DomainError("translation " + std::to_string(k) + " is outside 0.." +
                      std::to_string(r.events.size()));
  }
  require_valid(r, "translate");
  RampichiniDiagram out;
  out.n = r.n;
  out.start = replay(r)[k];
  out.events.assign(r.events.begin() + static_cast<std::ptrdiff_t>(k), r.events.end());
  out.events.insert(out.events.end(), r.events.begin(),
                    r.events.begin() + static_cast<std::ptrdiff_t>(k));
  return out;
}

RampichiniDiagram shift_labels(const RampichiniDiagram& r, int k) {
  RampichiniDiagram out = r;
  out.start = shifted_state(r.start, k, r.n);
  return out;
}

namespace {

// Entries of the glued diagram remember which summand they came from.
class GluedSweep {
 public:
  GluedSweep(RampState state, std::vector<int> origin, int n)
      : origin_(std::move(origin)) {
    out_.n = n;
    out_.start = state;
    state_ = std::move(state);
  }

  // Replays one summand's events; the other summand's entries stay at fixed
  // levels and pass under every moving entry.
  void sweep(int moving, const std::vector<Event>& events) {
    for (const auto& ev : events) {
      std::vector<std::size_t> pos;
      for (std::size_t q = 0; q < origin_.size(); ++q) {
        if (origin_[q] == moving) pos.push_back(q);
      }
      if (const auto* c = std::get_if<Cross>(&ev)) {
        std::size_t lo = pos.at(static_cast<std::size_t>(c->position - 1));
        std::size_t hi = pos.at(static_cast<std::size_t>(c->position));
        if (state_[lo].dir == YDir::up) {
          for (; lo + 1 < hi; ++lo) emit(Cross{static_cast<int>(lo) + 1, OverStrand::lower});
        } else {
          for (; hi > lo + 1; --hi) emit(Cross{static_cast<int>(hi), OverStrand::upper});
        }
        emit(Cross{static_cast<int>(lo) + 1, c->over});
      } else {
        const auto& w = std::get<Wrap>(ev);
        if (w.direction == YDir::up) {
          for (std::size_t q = pos.back(); q + 1 < state_.size(); ++q) {
            emit(Cross{static_cast<int>(q) + 1, OverStrand::lower});
          }
        } else {
          for (std::size_t q = pos.front(); q > 0; --q) {
            emit(Cross{static_cast<int>(q), OverStrand::upper});
          }
        }
        emit(w);
      }
    }
  }

  // Reorders entries into the given origin pattern; entries of `over` pass above.
  void restore_interleaving(const std::vector<int>& target, int over) {
    for (std::size_t q = 0; q < target.size(); ++q) {
      if (origin_[q] == target[q]) continue;
      std::size_t r = q + 1;
      while (origin_[r] != target[q]) ++r;
      for (; r > q; --r) {
        emit(Cross{static_cast<int>(r), origin_[r] == over ? OverStrand::upper : OverStrand::lower});
      }
    }
  }

  const RampState& state() const { return state_; }
  const std::vector<int>& origin() const { return origin_; }
  RampichiniDiagram take() { return std::move(out_); }

 private:
  void emit(const Event& ev) {
    apply_event(state_, ev);
    if (const auto* c = std::get_if<Cross>(&ev)) {
      std::swap(origin_[static_cast<std::size_t>(c->position - 1)],
                origin_[static_cast<std::size_t>(c->position)]);
    } else if (std::get<Wrap>(ev).direction == YDir::up) {
      std::rotate(origin_.rbegin(), origin_.rbegin() + 1, origin_.rend());
    } else {
      std::rotate(origin_.begin(), origin_.begin() + 1, origin_.end());
    }
    out_.events.push_back(ev);
  }

  RampState state_;
  std::vector<int> origin_;
  RampichiniDiagram out_;
};

}  // namespace

RampPlumbing plumb_diagrams(const RampichiniDiagram& r1, const RampichiniDiagram& r2,
                            const Merger& f) {
  require_valid(r1, "plumb_diagrams (first summand)");
  require_valid(r2, "plumb_diagrams (second summand)");
  if (r1.n < 2 || r2.n < 2) throw DomainError("plumbing needs n >= 2 on both diagrams");
  if (f.l1() != static_cast<int>(r1.start.size()) ||
      f.l2() != static_cast<int>(r2.start.size())) {
    throw DomainError("merger size (" + std::to_string(f.l1()) + "," + std::to_string(f.l2()) +
                      ") does not match the entry counts (" + std::to_string(r1.start.size()) +
                      "," + std::to_string(r2.start.size()) + ")");
  }
  const int n1 = r1.n;
  const int n = r1.n + r2.n - 1;

  RampState start;
  std::vector<int> origin;
  for (int k = 1; k <= f.l1() + f.l2(); ++k) {
    const int x = f.preimage(k);
    if (x <= f.l1()) {
      start.push_back(r1.start[static_cast<std::size_t>(x - 1)]);
      origin.push_back(1);
    } else {
      Entry e = r2.start[static_cast<std::size_t>(x - f.l1() - 1)];
      e.label = Transposition(e.label.i + n1 - 1, e.label.j + n1 - 1);
      start.push_back(e);
      origin.push_back(2);
    }
  }

  // Right half: the glued line swept through r1.
  GluedSweep right(start, origin, n);
  right.sweep(1, r1.events);
  right.restore_interleaving(origin, 1);

  // Left half: from the left edge through r2 back to the glued line.
  GluedSweep left(shifted_state(right.state(), -1, n), right.origin(), n);
  left.sweep(2, r2.events);
  left.restore_interleaving(origin, 2);
  if (left.state() != start) {
    throw DomainError("plumb_diagrams: the left half does not close up on the glued line");
  }

  RampichiniDiagram out = right.take();
  const std::size_t seam = out.events.size();
  const RampichiniDiagram tail = left.take();
  out.events.insert(out.events.end(), tail.events.begin(), tail.events.end());
  return RampPlumbing{std::move(out), seam};
}

namespace {

struct SearchNode {
  RampState state;
  std::size_t wraps = 0;
  Permutation product;
  std::size_t depth = 0;
  std::ptrdiff_t parent = -1;
  Event via;
};

std::string node_key(const SearchNode& node) {
  std::string key;
  key.reserve(node.state.size() * 4 + 16);
  for (const auto& e : node.state) {
    key.push_back(static_cast<char>(e.label.i));
    key.push_back(static_cast<char>(e.label.j));
    key.push_back(e.sign > 0 ? '+' : '-');
    key.push_back(e.dir == YDir::up ? 'u' : 'd');
  }
  key.push_back('|');
  key.push_back(static_cast<char>(node.wraps));
  for (int x : node.product.images()) key.push_back(static_cast<char>(x));
  return key;
}

}  // namespace

std::optional<RampichiniDiagram> find_diagram(int n, const RampState& start,
                                              std::size_t max_events) {
  if (n < 1) throw DomainError("n must be at least 1");
  const RampState target = shifted_state(start, 1, n);
  const Permutation cycle = Permutation::full_cycle(n);
  const auto needed_wraps = static_cast<std::size_t>(n - 1);

  std::vector<SearchNode> nodes;
  std::unordered_map<std::string, std::size_t> seen;
  nodes.push_back({start, 0, Permutation(n), 0, -1, Cross{}});
  seen.emplace(node_key(nodes.front()), 0);

  for (std::size_t head = 0; head < nodes.size(); ++head) {
    if (nodes[head].wraps == needed_wraps && nodes[head].product == cycle &&
        nodes[head].state == target) {
      RampichiniDiagram r{n, start, {}};
      for (auto k = static_cast<std::ptrdiff_t>(head); nodes[static_cast<std::size_t>(k)].parent >= 0;
           k = nodes[static_cast<std::size_t>(k)].parent) {
        r.events.push_back(nodes[static_cast<std::size_t>(k)].via);
      }
      std::reverse(r.events.begin(), r.events.end());
      return r;
    }
    if (nodes[head].depth == max_events) continue;

    std::vector<Event> moves;
    const RampState s = nodes[head].state;
    const std::size_t wraps = nodes[head].wraps;
    const Permutation product = nodes[head].product;
    const std::size_t depth = nodes[head].depth;
    for (std::size_t p = 1; p < s.size(); ++p) {
      if (s[p - 1].dir == YDir::down && s[p].dir == YDir::up) continue;
      moves.push_back(Cross{static_cast<int>(p), OverStrand::lower});
      moves.push_back(Cross{static_cast<int>(p), OverStrand::upper});
    }
    if (wraps < needed_wraps && !s.empty()) {
      if (s.back().dir == YDir::up) moves.push_back(Wrap{YDir::up});
      if (s.front().dir == YDir::down) moves.push_back(Wrap{YDir::down});
    }
    for (const auto& mv : moves) {
      SearchNode child{s, wraps, product, depth + 1,
                       static_cast<std::ptrdiff_t>(head), mv};
      if (const auto* w = std::get_if<Wrap>(&mv)) {
        const Entry& moving = w->direction == YDir::up ? s.back() : s.front();
        child.product = Permutation::transposition(n, moving.label) * child.product;
        ++child.wraps;
      }
      apply_event(child.state, mv);
      if (seen.emplace(node_key(child), nodes.size()).second) nodes.push_back(std::move(child));
    }
  }
  return std::nullopt;
}

std::string to_string(const Event& e) {
  return std::visit(Overloaded{
                        [](const Cross& c) {
                          return "cross " + std::to_string(c.position) + " " +
                                 (c.over == OverStrand::lower ? "lower" : "upper");
                        },
                        [](const Wrap& w) { return std::string("wrap ") + dir_name(w.direction); },
                    },
                    e);
}

std::string format_diagram(const RampichiniDiagram& r) {
  std::ostringstream os;
  os << "n " << r.n << '\n';
  for (const auto& e : r.start) {
    os << "entry " << e.label.i << ' ' << e.label.j << ' ' << (e.sign > 0 ? '+' : '-') << ' '
       << dir_name(e.dir) << '\n';
  }
  for (const auto& ev : r.events) os << to_string(ev) << '\n';
  return os.str();
}

RampichiniDiagram parse_diagram(std::string_view text) {
  RampichiniDiagram r;
  bool have_n = false;
  std::size_t line_no = 0;
  std::size_t offset = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  auto dir_of = [&](const std::string& word) {
    if (word == "up") return YDir::up;
    if (word == "down") return YDir::down;
    throw ParseError("line " + std::to_string(line_no) + ": expected up or down, got '" + word +
                         "'",
                     offset);
  };
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t line_offset = offset;
    offset += line.size() + 1;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string keyword;
    if (!(words >> keyword)) continue;
    auto bad = [&](const std::string& why) {
      return ParseError("line " + std::to_string(line_no) + ": " + why, line_offset);
    };
    if (keyword == "n") {
      if (have_n || !(words >> r.n)) throw bad("expected a single 'n <int>' header");
      have_n = true;
    } else if (keyword == "entry") {
      int i = 0;
      int j = 0;
      std::string sign;
      std::string dir;
      if (!(words >> i >> j >> sign >> dir)) throw bad("expected 'entry <i> <j> <+|-> <up|down>'");
      if (i < 1 || j <= i) throw bad("entry needs 1 <= i < j");
      if (sign != "+" && sign != "-") throw bad("sign must be + or -");
      if (!r.events.empty()) throw bad("entries must precede events");
      r.start.push_back({Transposition(i, j), sign == "+" ? 1 : -1, dir_of(dir)});
    } else if (keyword == "cross") {
      int p = 0;
      std::string over;
      if (!(words >> p >> over) || (over != "lower" && over != "upper")) {
        throw bad("expected 'cross <p> <lower|upper>'");
      }
      r.events.push_back(Cross{p, over == "lower" ? OverStrand::lower : OverStrand::upper});
    } else if (keyword == "wrap") {
      std::string dir;
      if (!(words >> dir)) throw bad("expected 'wrap <up|down>'");
      r.events.push_back(Wrap{dir_of(dir)});
    } else {
      throw bad("unknown keyword '" + keyword + "'");
    }
    std::string extra;
    if (words >> extra) throw bad("trailing text '" + extra + "'");
  }
  if (!have_n) throw ParseError("missing 'n <int>' header");
  return r;
}

}  // namespace knotkit
