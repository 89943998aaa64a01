#include "fpb/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "diagram_ops.hpp"

namespace fpb {

// ------------------------------------------------------------------ basics

bool LinkDiagram::is_incoming(int end) const {
  const int s = slot_of(end);
  if (s == 0) return true;
  if (s == 2) return false;
  const bool positive = sign(crossing_of(end)) > 0;
  return positive ? s == 3 : s == 1;
}

int LinkDiagram::through(int end) const { return end_of(crossing_of(end), (slot_of(end) + 2) & 3); }

int LinkDiagram::add_crossing(int s) {
  if (s != 1 && s != -1) throw DiagramError("crossing sign must be +1 or -1");
  sign_.push_back(static_cast<std::int8_t>(s));
  link_.insert(link_.end(), 4, -1);
  return crossing_count() - 1;
}

void LinkDiagram::connect(int out_end, int in_end) {
  link_[static_cast<std::size_t>(out_end)] = in_end;
  link_[static_cast<std::size_t>(in_end)] = out_end;
}

void LinkDiagram::validate() const {
  if (link_.size() != 4 * sign_.size()) throw DiagramError("end table size mismatch");
  for (int e = 0; e < static_cast<int>(link_.size()); ++e) {
    const int p = link_[static_cast<std::size_t>(e)];
    if (p < 0 || p >= static_cast<int>(link_.size())) throw DiagramError("dangling end");
    if (link_[static_cast<std::size_t>(p)] != e) throw DiagramError("arc table is not symmetric");
    if (is_incoming(e) == is_incoming(p)) throw DiagramError("arc does not join an out end to an in end");
  }
  if (free_loops_ < 0) throw DiagramError("negative free loop count");
}

std::vector<std::vector<int>> LinkDiagram::component_walks() const {
  std::vector<std::vector<int>> walks;
  std::vector<char> seen(link_.size(), 0);
  for (int c = 0; c < crossing_count(); ++c) {
    for (int start : {under_in(c), over_in(c)}) {
      if (seen[static_cast<std::size_t>(start)]) continue;
      std::vector<int> walk;
      int e = start;
      while (!seen[static_cast<std::size_t>(e)]) {
        seen[static_cast<std::size_t>(e)] = 1;
        walk.push_back(e);
        e = partner(through(e));
      }
      walks.push_back(std::move(walk));
    }
  }
  return walks;
}

int LinkDiagram::components() const {
  return static_cast<int>(component_walks().size()) + free_loops_;
}

int LinkDiagram::writhe() const {
  int w = 0;
  for (auto s : sign_) w += s;
  return w;
}

DiagramStats diagram_stats(const LinkDiagram& d) {
  return {d.components(), d.writhe(), d.crossing_count()};
}

// ------------------------------------------------------------ serialization

std::string LinkDiagram::to_pd() const {
  // Arc ids follow traversal: the arc entering the k-th visited in-end gets
  // id k+1.
  std::vector<int> arc_at(link_.size(), 0);
  int next_id = 1;
  for (const auto& walk : component_walks()) {
    for (int e : walk) {
      arc_at[static_cast<std::size_t>(e)] = next_id;
      arc_at[static_cast<std::size_t>(partner(e))] = next_id;
      ++next_id;
    }
  }
  std::ostringstream out;
  for (int c = 0; c < crossing_count(); ++c) {
    out << "X";
    for (int s = 0; s < 4; ++s) out << ' ' << arc_at[static_cast<std::size_t>(end_of(c, s))];
    out << ' ' << (sign(c) > 0 ? '+' : '-') << '\n';
  }
  out << "loops: " << free_loops_ << '\n';
  return out.str();
}

LinkDiagram LinkDiagram::from_pd(std::string_view text) {
  LinkDiagram d;
  std::istringstream in{std::string(text)};
  std::string line;
  std::map<int, std::vector<int>> ends_of_arc;
  bool saw_loops = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "loops:") {
      int k = -1;
      if (!(ls >> k) || k < 0) throw DiagramError("bad loops trailer on line " + std::to_string(line_no));
      d.free_loops_ = k;
      saw_loops = true;
      continue;
    }
    if (tag != "X" || saw_loops) throw DiagramError("unexpected text on line " + std::to_string(line_no));
    int arcs[4];
    char sign_char = 0;
    if (!(ls >> arcs[0] >> arcs[1] >> arcs[2] >> arcs[3] >> sign_char) ||
        (sign_char != '+' && sign_char != '-')) {
      throw DiagramError("malformed crossing on line " + std::to_string(line_no));
    }
    const int c = d.add_crossing(sign_char == '+' ? 1 : -1);
    for (int s = 0; s < 4; ++s) ends_of_arc[arcs[s]].push_back(end_of(c, s));
  }
  if (!saw_loops) throw DiagramError("missing 'loops:' trailer");
  for (const auto& [arc, ends] : ends_of_arc) {
    if (ends.size() != 2) throw DiagramError("arc " + std::to_string(arc) + " does not occur exactly twice");
    const bool first_in = d.is_incoming(ends[0]);
    if (first_in == d.is_incoming(ends[1]))
      throw DiagramError("arc " + std::to_string(arc) + " is inconsistently oriented");
    if (first_in) d.connect(ends[1], ends[0]);
    else d.connect(ends[0], ends[1]);
  }
  d.validate();
  return d;
}

// ------------------------------------------------------------ construction

namespace {

struct Point {
  double x = 0;
  double y = 0;
};

double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
Point sub(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }

// A band edge drawn as a straight chord; edges drawn outside the binding
// circle are straight in the inverted plane, which fixes the circle
// pointwise and reverses orientation.
struct Edge {
  Point a;
  Point b;
  int band = 0;
  bool outside = false;
  double height = 0;
  struct Hit {
    double t;
    int crossing;
    bool over;
  };
  std::vector<Hit> hits;
};

// Deterministic jitter keeps chords in general position (no three
// concurrent, no two crossings coincident along an edge).
double jitter(int k) {
  const double golden = 0.6180339887498949;
  double f = std::fmod((k + 1) * golden, 1.0);
  return 0.16 * (f - 0.5);
}

struct Layout {
  std::vector<bool> outside;     // by label
  std::vector<double> height;    // by label
};

LinkDiagram build_basket_diagram(const FlatBasketCode& code, const Layout& layout) {
  const int len = static_cast<int>(code.size());
  const double step = 2 * std::numbers::pi / len;
  auto endpoint = [&](int pos, bool right) {
    const double phi = step * (pos + jitter(pos)) + (right ? 0.22 : -0.22) * step;
    return Point{std::cos(phi), std::sin(phi)};
  };

  // Edge from the left endpoint of foot x to the right endpoint of its
  // partner; edge index equals x.
  std::vector<Edge> edges(static_cast<std::size_t>(len));
  for (int x = 0; x < len; ++x) {
    Edge& e = edges[static_cast<std::size_t>(x)];
    const int label = code[static_cast<std::size_t>(x)];
    e.a = endpoint(x, false);
    e.b = endpoint(code.partner(x), true);
    e.band = label;
    e.outside = layout.outside[static_cast<std::size_t>(label)];
    e.height = layout.height[static_cast<std::size_t>(label)];
  }

  LinkDiagram d;
  for (int i = 0; i < len; ++i) {
    for (int j = i + 1; j < len; ++j) {
      Edge& e = edges[static_cast<std::size_t>(i)];
      Edge& f = edges[static_cast<std::size_t>(j)];
      if (e.band == f.band || e.outside != f.outside) continue;
      const Point r = sub(e.b, e.a);
      const Point s = sub(f.b, f.a);
      const double denom = cross(r, s);
      if (std::abs(denom) < 1e-12) continue;
      const Point qp = sub(f.a, e.a);
      const double t = cross(qp, s) / denom;
      const double u = cross(qp, r) / denom;
      if (t <= 1e-9 || t >= 1 - 1e-9 || u <= 1e-9 || u >= 1 - 1e-9) continue;
      const bool e_over = e.height > f.height;
      const Point over_dir = e_over ? r : s;
      const Point under_dir = e_over ? s : r;
      int sign = cross(over_dir, under_dir) > 0 ? 1 : -1;
      if (e.outside) sign = -sign;
      const int c = d.add_crossing(sign);
      e.hits.push_back({t, c, e_over});
      f.hits.push_back({u, c, !e_over});
    }
  }
  for (Edge& e : edges) {
    std::sort(e.hits.begin(), e.hits.end(), [](const auto& p, const auto& q) { return p.t < q.t; });
    for (std::size_t k = 1; k < e.hits.size(); ++k)
      if (e.hits[k].t - e.hits[k - 1].t < 1e-9) throw DiagramError("degenerate basket layout");
  }

  // Walk each boundary component: edge x, then along the binding to the
  // left endpoint of the foot after partner(x).
  std::vector<char> seen(static_cast<std::size_t>(len), 0);
  for (int start = 0; start < len; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<std::pair<int, bool>> seq;  // (crossing, over)
    int x = start;
    while (!seen[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = 1;
      for (const auto& h : edges[static_cast<std::size_t>(x)].hits) seq.emplace_back(h.crossing, h.over);
      x = (code.partner(x) + 1) % len;
    }
    if (seq.empty()) {
      d.add_free_loops(1);
      continue;
    }
    for (std::size_t k = 0; k < seq.size(); ++k) {
      const auto [c0, over0] = seq[k];
      const auto [c1, over1] = seq[(k + 1) % seq.size()];
      const int out = over0 ? d.over_out(c0) : d.under_out(c0);
      const int in = over1 ? d.over_in(c1) : d.under_in(c1);
      d.connect(out, in);
    }
  }
  d.validate();
  return d;
}

}  // namespace

LinkDiagram code_to_diagram(const FlatBasketCode& code, OverRule rule) {
  const int n = code.bands();
  Layout layout;
  layout.outside.assign(static_cast<std::size_t>(n) + 1, false);
  layout.height.assign(static_cast<std::size_t>(n) + 1, 0.0);
  for (int label = 1; label <= n; ++label)
    layout.height[static_cast<std::size_t>(label)] = rule == OverRule::kLaterPageOver ? label : -label;
  return build_basket_diagram(code, layout);
}

LinkDiagram code_to_compact_diagram(const FlatBasketCode& code, OverRule rule) {
  const int n = code.bands();
  std::vector<std::vector<char>> inter(static_cast<std::size_t>(n) + 1,
                                       std::vector<char>(static_cast<std::size_t>(n) + 1, 0));
  for (const auto& [a, b] : interleaving_pairs(code)) {
    inter[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
    inter[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = 1;
  }
  // Pages in cyclic order starting after `shift`: the first `k` are drawn
  // inside the circle (stacked upward), the rest outside where the stacking
  // reverses.
  int best_cost = -1, best_shift = 0, best_k = n;
  for (int shift = 0; shift < n; ++shift) {
    std::vector<int> order;
    for (int t = 0; t < n; ++t) order.push_back((shift + t) % n + 1);
    for (int k = 0; k <= n; ++k) {
      int cost = 0;
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          if ((a < k) == (b < k) &&
              inter[static_cast<std::size_t>(order[static_cast<std::size_t>(a)])]
                   [static_cast<std::size_t>(order[static_cast<std::size_t>(b)])])
            ++cost;
      if (best_cost < 0 || cost < best_cost) {
        best_cost = cost;
        best_shift = shift;
        best_k = k;
      }
    }
  }
  Layout layout;
  layout.outside.assign(static_cast<std::size_t>(n) + 1, false);
  layout.height.assign(static_cast<std::size_t>(n) + 1, 0.0);
  const double dir = rule == OverRule::kLaterPageOver ? 1.0 : -1.0;
  for (int t = 0; t < n; ++t) {
    const int label = (best_shift + t) % n + 1;
    const bool out = t >= best_k;
    layout.outside[static_cast<std::size_t>(label)] = out;
    layout.height[static_cast<std::size_t>(label)] = dir * (out ? -t : t);
  }
  return build_basket_diagram(code, layout);
}

LinkDiagram braid_closure(int strands, std::span<const int> word) {
  if (strands < 1) throw DiagramError("braid needs at least one strand");
  LinkDiagram d;
  // pending[i]: the out end currently sitting at strand position i, or -1
  // if the strand has not met a crossing yet.
  std::vector<int> first_in(static_cast<std::size_t>(strands), -1);
  std::vector<int> pending(static_cast<std::size_t>(strands), -1);
  auto attach = [&](int pos, int in_end) {
    auto& p = pending[static_cast<std::size_t>(pos)];
    if (p < 0) first_in[static_cast<std::size_t>(pos)] = in_end;
    else d.connect(p, in_end);
  };
  for (int g : word) {
    const int i = std::abs(g) - 1;
    if (g == 0 || i + 1 >= strands) throw DiagramError("braid generator out of range");
    const int c = d.add_crossing(g > 0 ? 1 : -1);
    // sigma_i: the strand at position i passes over to position i+1.
    const int left_in = g > 0 ? d.over_in(c) : d.under_in(c);
    const int right_in = g > 0 ? d.under_in(c) : d.over_in(c);
    const int left_out = g > 0 ? d.under_out(c) : d.over_out(c);
    const int right_out = g > 0 ? d.over_out(c) : d.under_out(c);
    attach(i, left_in);
    attach(i + 1, right_in);
    pending[static_cast<std::size_t>(i)] = left_out;
    pending[static_cast<std::size_t>(i + 1)] = right_out;
  }
  for (int pos = 0; pos < strands; ++pos) {
    if (pending[static_cast<std::size_t>(pos)] < 0) d.add_free_loops(1);
    else d.connect(pending[static_cast<std::size_t>(pos)], first_in[static_cast<std::size_t>(pos)]);
  }
  d.validate();
  return d;
}

LinkDiagram torus_braid_diagram(int p, int q) {
  if (p < 2) throw DiagramError("torus link needs p >= 2");
  if (q == 0) throw DiagramError("torus link needs q != 0");
  std::vector<int> word;
  for (int r = 0; r < std::abs(q); ++r)
    for (int i = 1; i < p; ++i) word.push_back(q > 0 ? i : -i);
  return braid_closure(p, word);
}

LinkDiagram mirror_diagram(const LinkDiagram& d) {
  LinkDiagram m = d;
  for (int c = 0; c < d.crossing_count(); ++c) detail::switch_crossing(m, c);
  return m;
}

LinkDiagram simplify(const LinkDiagram& d, SimplifyEffort effort) {
  LinkDiagram out = d;
  detail::reduce(out, effort == SimplifyEffort::kFull);
  return out;
}

}  // namespace fpb
