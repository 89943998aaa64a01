#include "fpb/homfly.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

#include "diagram_ops.hpp"

namespace fpb {

BudgetExceeded::BudgetExceeded(std::uint64_t nodes_used)
    : std::runtime_error("skein budget exceeded after " + std::to_string(nodes_used) + " nodes"),
      nodes_used_(nodes_used) {}

LaurentPoly2 unlink_poly(int components) {
  if (components < 1) throw PolyError("an unlink needs at least one component");
  static const LaurentPoly2 delta = LaurentPoly2::from_terms({{-1, -1, 1}, {1, -1, -1}});
  LaurentPoly2 p = LaurentPoly2::constant(1);
  for (int k = 1; k < components; ++k) p = p * delta;
  return p;
}

namespace {

using D = LinkDiagram;

// Splits a diagram into its connected pieces (sharing no arcs); free loops
// are dropped and must be accounted for by the caller.
std::vector<LinkDiagram> split_pieces(const LinkDiagram& d) {
  const int n = d.crossing_count();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (int e = 0; e < 4 * n; ++e) {
    const int a = find(D::crossing_of(e)), b = find(D::crossing_of(d.partner(e)));
    if (a != b) parent[static_cast<std::size_t>(a)] = b;
  }
  std::vector<int> root_index(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> members;
  for (int c = 0; c < n; ++c) {
    const int r = find(c);
    if (root_index[static_cast<std::size_t>(r)] < 0) {
      root_index[static_cast<std::size_t>(r)] = static_cast<int>(members.size());
      members.emplace_back();
    }
    members[static_cast<std::size_t>(root_index[static_cast<std::size_t>(r)])].push_back(c);
  }
  std::vector<LinkDiagram> pieces;
  if (members.size() <= 1) return pieces;
  for (const auto& m : members) {
    std::vector<int> local(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < m.size(); ++i) local[static_cast<std::size_t>(m[i])] = static_cast<int>(i);
    LinkDiagram piece;
    for (int c : m) piece.add_crossing(d.sign(c));
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (int s = 0; s < 4; ++s) {
        const int p = d.partner(D::end_of(m[i], s));
        piece.links()[static_cast<std::size_t>(D::end_of(static_cast<int>(i), s))] =
            D::end_of(local[static_cast<std::size_t>(D::crossing_of(p))], D::slot_of(p));
      }
    }
    pieces.push_back(std::move(piece));
  }
  return pieces;
}

struct Plan {
  int bad_crossing = -1;  // -1 when the diagram is descending
  std::string key;
  int components = 0;
};

// Picks a component order and base points with few "bad" crossings (first
// met on the under strand), returns the first bad crossing along the
// traversal and a key describing the diagram relative to that traversal.
Plan plan_descent(const LinkDiagram& d) {
  auto walks = d.component_walks();
  const int k = static_cast<int>(walks.size());
  const int n = d.crossing_count();
  std::vector<int> comp_of_end(static_cast<std::size_t>(4 * n), -1);
  for (int i = 0; i < k; ++i)
    for (int e : walks[static_cast<std::size_t>(i)]) {
      comp_of_end[static_cast<std::size_t>(e)] = i;
      comp_of_end[static_cast<std::size_t>(d.through(e))] = i;
    }

  // Base point per component: rotation of the walk with fewest self bad
  // crossings.
  for (auto& walk : walks) {
    const int len = static_cast<int>(walk.size());
    int best = 0, best_bad = -1;
    for (int start = 0; start < len; ++start) {
      int bad = 0;
      std::unordered_map<int, bool> seen;
      for (int t = 0; t < len; ++t) {
        const int e = walk[static_cast<std::size_t>((start + t) % len)];
        const int c = D::crossing_of(e);
        if (seen.emplace(c, true).second && !d.is_over(e)) ++bad;
      }
      if (best_bad < 0 || bad < best_bad) {
        best_bad = bad;
        best = start;
      }
    }
    std::rotate(walk.begin(), walk.begin() + best, walk.end());
  }

  // Component order: between components i and j, every crossing with i on
  // top is bad when j comes first.
  std::vector<int> order(static_cast<std::size_t>(k));
  std::iota(order.begin(), order.end(), 0);
  if (k > 1) {
    std::vector<std::vector<int>> over_count(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(k), 0));
    for (int c = 0; c < n; ++c) {
      const int ci = comp_of_end[static_cast<std::size_t>(d.over_in(c))];
      const int cj = comp_of_end[static_cast<std::size_t>(d.under_in(c))];
      if (ci != cj) ++over_count[static_cast<std::size_t>(ci)][static_cast<std::size_t>(cj)];
    }
    auto cost = [&](const std::vector<int>& ord) {
      int bad = 0;
      for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
          bad += over_count[static_cast<std::size_t>(ord[static_cast<std::size_t>(b)])]
                           [static_cast<std::size_t>(ord[static_cast<std::size_t>(a)])];
      return bad;
    };
    if (k <= 6) {
      std::vector<int> best = order, perm = order;
      int best_cost = cost(order);
      while (std::next_permutation(perm.begin(), perm.end())) {
        const int c = cost(perm);
        if (c < best_cost) {
          best_cost = c;
          best = perm;
        }
      }
      order = best;
    } else {
      // greedy: repeatedly take the component that is over the most others
      std::vector<char> used(static_cast<std::size_t>(k), 0);
      order.clear();
      for (int step = 0; step < k; ++step) {
        int pick = -1, pick_score = 0;
        for (int i = 0; i < k; ++i) {
          if (used[static_cast<std::size_t>(i)]) continue;
          int score = 0;
          for (int j = 0; j < k; ++j)
            if (!used[static_cast<std::size_t>(j)] && j != i)
              score += over_count[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                       over_count[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
          if (pick < 0 || score > pick_score) {
            pick = i;
            pick_score = score;
          }
        }
        used[static_cast<std::size_t>(pick)] = 1;
        order.push_back(pick);
      }
    }
  }

  Plan plan;
  plan.components = k;
  std::vector<int> new_id(static_cast<std::size_t>(n), -1);
  int next = 0;
  plan.key.reserve(static_cast<std::size_t>(4 * n + k + 2));
  for (int idx : order) {
    for (int e : walks[static_cast<std::size_t>(idx)]) {
      const int c = D::crossing_of(e);
      if (new_id[static_cast<std::size_t>(c)] < 0) {
        new_id[static_cast<std::size_t>(c)] = next++;
        if (!d.is_over(e) && plan.bad_crossing < 0) plan.bad_crossing = c;
      }
      // key entry: crossing id (in visit order), over/under, sign
      const int id = new_id[static_cast<std::size_t>(c)];
      plan.key.push_back(static_cast<char>(id & 0x7f));
      plan.key.push_back(static_cast<char>((id >> 7) | (d.is_over(e) ? 0x40 : 0) | (d.sign(c) > 0 ? 0x20 : 0)));
    }
    plan.key.append(2, static_cast<char>(0xff));
  }
  return plan;
}

class SkeinEngine {
 public:
  explicit SkeinEngine(std::uint64_t budget) : budget_(budget) {}

  LaurentPoly2 eval(LinkDiagram d) {
    detail::reduce(d, true);
    const int loops = d.free_loops();
    if (d.crossing_count() == 0) return unlink_poly(loops);
    auto pieces = split_pieces(d);
    if (!pieces.empty()) {
      LaurentPoly2 p = unlink_poly(static_cast<int>(pieces.size()) + loops);
      for (auto& piece : pieces) p = p * eval(std::move(piece));
      return p;
    }
    if (loops > 0) {
      LinkDiagram core = d;
      core.add_free_loops(-loops);
      return unlink_poly(loops + 1) * eval(std::move(core));
    }
    return eval_connected(d);
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  LaurentPoly2 eval_connected(const LinkDiagram& d) {
    Plan plan = plan_descent(d);
    if (plan.bad_crossing < 0) return unlink_poly(plan.components);
    if (auto it = memo_.find(plan.key); it != memo_.end()) return it->second;
    if (++nodes_ > budget_) throw BudgetExceeded(nodes_);

    const int c = plan.bad_crossing;
    const int sign = d.sign(c);
    LinkDiagram switched = d;
    detail::switch_crossing(switched, c);
    LinkDiagram smoothed = d;
    detail::smooth_crossing(smoothed, c);
    LaurentPoly2 p_switched = eval(std::move(switched));
    LaurentPoly2 p_smoothed = eval(std::move(smoothed));
    // v^-1 P+ - v P- = z P0
    LaurentPoly2 result = sign > 0 ? p_switched.shifted(1, 2, 0) + p_smoothed.shifted(1, 1, 1)
                                   : p_switched.shifted(1, -2, 0) - p_smoothed.shifted(1, -1, 1);
    memo_.emplace(std::move(plan.key), result);
    return result;
  }

  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::unordered_map<std::string, LaurentPoly2> memo_;
};

}  // namespace

LaurentPoly2 homfly(const LinkDiagram& diagram, std::uint64_t budget, std::uint64_t& nodes_used) {
  if (budget < 1) throw std::invalid_argument("skein budget must be at least 1");
  diagram.validate();
  SkeinEngine engine(budget);
  try {
    LaurentPoly2 p = engine.eval(diagram);
    nodes_used = engine.nodes();
    return p;
  } catch (const BudgetExceeded&) {
    nodes_used = engine.nodes();
    throw;
  }
}

LaurentPoly2 homfly(const LinkDiagram& diagram, std::uint64_t budget) {
  std::uint64_t nodes = 0;
  return homfly(diagram, budget, nodes);
}

VDegrees v_degrees(const LaurentPoly2& p) {
  if (p.is_zero()) throw PolyError("v-degrees of the zero polynomial");
  VDegrees d{p.terms().front().v, p.terms().front().v, 0};
  for (const auto& t : p.terms()) {
    d.max_v = std::max(d.max_v, t.v);
    d.min_v = std::min(d.min_v, t.v);
  }
  d.breadth = d.max_v - d.min_v;
  return d;
}

LaurentPoly2 mirror_poly(const LaurentPoly2& p) {
  std::vector<LaurentPoly2::Term> t = p.terms();
  for (auto& x : t) {
    x.v = -x.v;
    if (x.z % 2 != 0) x.c = -x.c;
  }
  return LaurentPoly2::from_terms(std::move(t));
}

LaurentPoly1 conway_alexander(const LaurentPoly2& p, int components) {
  if (p.is_zero()) throw PolyError("Conway specialization of the zero polynomial");
  // Conway polynomial: v = 1.
  std::map<int, std::int64_t> conway;
  for (const auto& t : p.terms()) conway[t.z] = checked_add(conway[t.z], t.c);
  std::map<int, std::int64_t> in_s;  // z = s - 1/s
  for (const auto& [b, c] : conway) {
    if (c == 0) continue;
    if (b < 0) throw PolyError("negative z power survives v = 1");
    std::int64_t binom = 1;
    for (int k = 0; k <= b; ++k) {
      const std::int64_t term = checked_mul(c, (k % 2 == 0) ? binom : -binom);
      in_s[b - 2 * k] = checked_add(in_s[b - 2 * k], term);
      binom = binom * (b - k) / (k + 1);
    }
  }
  std::erase_if(in_s, [](const auto& kv) { return kv.second == 0; });
  if (in_s.empty()) return {};
  const int parity = ((in_s.begin()->first % 2) + 2) % 2;
  for (const auto& [e, c] : in_s)
    if (((e % 2) + 2) % 2 != parity) throw PolyError("mixed parity in Conway specialization");
  if (parity != (components + 1) % 2)
    throw PolyError("Conway specialization parity disagrees with the component count");
  LaurentPoly1 out;
  for (const auto& [e, c] : in_s) out += LaurentPoly1::monomial(c, (e + parity) / 2);
  return out.normalized();
}

LaurentPoly2 connected_sum_poly(const LaurentPoly2& a, const LaurentPoly2& b) {
  if (a.is_zero() || b.is_zero()) throw PolyError("connected sum of a zero polynomial");
  return a * b;
}

}  // namespace fpb
