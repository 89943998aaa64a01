#include "diagram_ops.hpp"

#include <algorithm>

namespace fpb::detail {

namespace {

using D = LinkDiagram;

// Removes the crossings in `gone`, joining every strand that passed through
// them. `through` maps an incoming end of a removed crossing to the outgoing
// end the strand leaves by. Strands that close up inside the removed set
// become free loops.
template <class Through>
void splice_out(LinkDiagram& d, std::vector<char>& dead, std::span<const int> gone, Through through) {
  auto& link = d.links();
  auto removed = [&](int end) {
    const int c = D::crossing_of(end);
    return std::find(gone.begin(), gone.end(), c) != gone.end();
  };
  std::vector<int> visited;
  auto was_visited = [&](int e) { return std::find(visited.begin(), visited.end(), e) != visited.end(); };
  for (int c : gone) {
    for (int s = 0; s < 4; ++s) {
      const int e = D::end_of(c, s);
      if (!d.is_incoming(e)) continue;
      const int p = link[static_cast<std::size_t>(e)];
      if (removed(p)) continue;
      int cur = e;
      int q = -1;
      for (;;) {
        visited.push_back(cur);
        const int o = through(cur);
        q = link[static_cast<std::size_t>(o)];
        if (!removed(q)) break;
        cur = q;
      }
      link[static_cast<std::size_t>(p)] = q;
      link[static_cast<std::size_t>(q)] = p;
    }
  }
  for (int c : gone) {
    for (int s = 0; s < 4; ++s) {
      const int e = D::end_of(c, s);
      if (!d.is_incoming(e) || was_visited(e)) continue;
      int cur = e;
      do {
        visited.push_back(cur);
        cur = link[static_cast<std::size_t>(through(cur))];
      } while (cur != e);
      d.add_free_loops(1);
    }
  }
  for (int c : gone) dead[static_cast<std::size_t>(c)] = 1;
}

void compact(LinkDiagram& d, const std::vector<char>& dead) {
  const int n = d.crossing_count();
  std::vector<int> remap(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int c = 0; c < n; ++c)
    if (!dead[static_cast<std::size_t>(c)]) remap[static_cast<std::size_t>(c)] = next++;
  if (next == n) return;
  std::vector<std::int8_t> sign(static_cast<std::size_t>(next));
  std::vector<int> link(static_cast<std::size_t>(4 * next));
  for (int c = 0; c < n; ++c) {
    const int nc = remap[static_cast<std::size_t>(c)];
    if (nc < 0) continue;
    sign[static_cast<std::size_t>(nc)] = d.signs()[static_cast<std::size_t>(c)];
    for (int s = 0; s < 4; ++s) {
      const int p = d.links()[static_cast<std::size_t>(D::end_of(c, s))];
      link[static_cast<std::size_t>(D::end_of(nc, s))] =
          D::end_of(remap[static_cast<std::size_t>(D::crossing_of(p))], D::slot_of(p));
    }
  }
  d.signs() = std::move(sign);
  d.links() = std::move(link);
}

bool try_r1(LinkDiagram& d, std::vector<char>& dead, int c) {
  const int uo = d.under_out(c), oi = d.over_in(c), oo = d.over_out(c), ui = d.under_in(c);
  if (d.partner(uo) != oi && d.partner(oo) != ui) return false;
  const int gone[1] = {c};
  splice_out(d, dead, gone, [&](int e) { return d.through(e); });
  return true;
}

bool try_r2(LinkDiagram& d, std::vector<char>& dead, int x) {
  for (int j = 0; j < 4; ++j) {
    const int e = D::end_of(x, j);
    const int f = d.partner(e);
    const int y = D::crossing_of(f);
    if (y == x || dead[static_cast<std::size_t>(y)]) continue;
    if (d.is_over(e) != d.is_over(f)) continue;
    const int k = D::slot_of(f);
    const int back = d.partner(D::end_of(y, (k + 3) & 3));
    if (back != D::end_of(x, (j + 1) & 3)) continue;
    const int gone[2] = {x, y};
    splice_out(d, dead, gone, [&](int end) { return d.through(end); });
    return true;
  }
  return false;
}

}  // namespace

void switch_crossing(LinkDiagram& d, int c) {
  auto& link = d.links();
  const int r = d.sign(c) > 0 ? 3 : 1;
  auto relabel = [&](int end) {
    if (D::crossing_of(end) != c) return end;
    return D::end_of(c, (D::slot_of(end) + 4 - r) & 3);
  };
  int old_partner[4];
  for (int s = 0; s < 4; ++s) old_partner[s] = link[static_cast<std::size_t>(D::end_of(c, s))];
  for (int s = 0; s < 4; ++s) {
    const int ne = D::end_of(c, (s + 4 - r) & 3);
    const int np = relabel(old_partner[s]);
    link[static_cast<std::size_t>(ne)] = np;
    link[static_cast<std::size_t>(np)] = ne;
  }
  d.signs()[static_cast<std::size_t>(c)] = static_cast<std::int8_t>(-d.sign(c));
}

void smooth_crossing(LinkDiagram& d, int c) {
  std::vector<char> dead(static_cast<std::size_t>(d.crossing_count()), 0);
  const int ui = d.under_in(c), oi = d.over_in(c), uo = d.under_out(c), oo = d.over_out(c);
  const int gone[1] = {c};
  splice_out(d, dead, gone, [&](int e) { return e == ui ? oo : (e == oi ? uo : d.through(e)); });
  compact(d, dead);
}

void reduce(LinkDiagram& d, bool use_r2) {
  std::vector<char> dead(static_cast<std::size_t>(d.crossing_count()), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int c = 0; c < d.crossing_count(); ++c) {
      if (dead[static_cast<std::size_t>(c)]) continue;
      if (try_r1(d, dead, c)) {
        changed = true;
        continue;
      }
      if (use_r2 && try_r2(d, dead, c)) changed = true;
    }
  }
  compact(d, dead);
}

}  // namespace fpb::detail
