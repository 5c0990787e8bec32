#include "lusztig/pquiver.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>

#include "lusztig/error.hpp"

namespace lusztig {

namespace {

Edge parse_symbol(char c, bool allow_undirected) {
  switch (c) {
    case 'L':
      return Edge::L;
    case 'R':
      return Edge::R;
    case '-':
      if (allow_undirected) return Edge::Undirected;
      [[fallthrough]];
    default:
      throw InputError(std::string("bad edge symbol '") + c + "'");
  }
}

// Text is written edge n first, edge 2 last.
std::vector<Edge> parse_edges(std::string_view text, int n, bool allow_undirected) {
  std::string compact;
  for (char c : text)
    if (c != ' ' && c != '\t') compact += c;
  if (static_cast<int>(compact.size()) != n - 1) {
    throw InputError("expected " + std::to_string(n - 1) + " edge symbols, got \"" + std::string(text) + "\"");
  }
  std::vector<Edge> edges(compact.size());
  for (std::size_t i = 0; i < compact.size(); ++i) edges[compact.size() - 1 - i] = parse_symbol(compact[i], allow_undirected);
  return edges;
}

std::string format_edges(const std::vector<Edge>& edges) {
  std::string out;
  for (auto it = edges.rbegin(); it != edges.rend(); ++it) out += static_cast<char>(*it);
  return out;
}

int inferred_rank(std::string_view text) {
  int symbols = 0;
  for (char c : text)
    if (c != ' ' && c != '\t') ++symbols;
  return symbols + 1;
}

std::vector<int> interval(int from, int to) {
  std::vector<int> out;
  for (int x = from; x <= to; ++x) out.push_back(x);
  return out;
}

}  // namespace

PartialQuiver::PartialQuiver(std::vector<Edge> edges, int n) : n_(Rank(n).n()), edges_(std::move(edges)) {
  if (static_cast<int>(edges_.size()) != n - 1) throw InputError("partial quiver needs n-1 edges");
  int first = 0, last = 0;
  for (int e = 2; e <= n; ++e) {
    if (edges_[e - 2] == Edge::Undirected) continue;
    if (!first) first = e;
    last = e;
  }
  if (!first) throw InputError("partial quiver has no directed edge");
  for (int e = first; e <= last; ++e) {
    if (edges_[e - 2] == Edge::Undirected) {
      throw InputError("directed edges of partial quiver " + format_edges(edges_) + " are not connected");
    }
  }
  a_ = first;
  b_ = last;
}

PartialQuiver PartialQuiver::parse(std::string_view text, int n) { return {parse_edges(text, n, true), n}; }
PartialQuiver PartialQuiver::parse(std::string_view text) { return parse(text, inferred_rank(text)); }

Edge PartialQuiver::edge(int e) const {
  if (e < 2 || e > n_) throw InputError("edge index " + std::to_string(e) + " outside [2,n]");
  return edges_[e - 2];
}

std::string PartialQuiver::to_string() const { return format_edges(edges_); }

Quiver::Quiver(std::vector<Edge> edges, int n) : n_(Rank(n).n()), edges_(std::move(edges)) {
  if (static_cast<int>(edges_.size()) != n - 1) throw InputError("quiver needs n-1 edges");
  for (Edge e : edges_)
    if (e == Edge::Undirected) throw InputError("quiver edges must all be directed");
}

Quiver Quiver::parse(std::string_view text, int n) { return {parse_edges(text, n, false), n}; }
Quiver Quiver::parse(std::string_view text) { return parse(text, inferred_rank(text)); }

Quiver Quiver::from_left_edges(const std::vector<int>& left_edges, int n) {
  std::vector<Edge> edges(static_cast<std::size_t>(std::max(n - 1, 0)), Edge::R);
  for (int e : left_edges) {
    if (e < 2 || e > n) throw InputError("left edge " + std::to_string(e) + " outside [2,n]");
    edges[e - 2] = Edge::L;
  }
  return {std::move(edges), n};
}

std::vector<Quiver> Quiver::all(int n) {
  const int edges = Rank(n).n() - 1;
  if (edges > 30) throw InputError("Quiver::all is limited to n <= 31");
  std::vector<Quiver> quivers;
  for (std::uint32_t mask = 0; mask < (1u << edges); ++mask) {
    // Bit i of the mask (from the top) is the i-th symbol of the text, 1 = R.
    std::vector<Edge> symbols(edges);
    for (int i = 0; i < edges; ++i) symbols[edges - 1 - i] = (mask >> (edges - 1 - i)) & 1u ? Edge::R : Edge::L;
    quivers.emplace_back(std::move(symbols), n);
  }
  return quivers;
}

Edge Quiver::edge(int e) const {
  if (e < 2 || e > n_) throw InputError("edge index " + std::to_string(e) + " outside [2,n]");
  return edges_[e - 2];
}

std::vector<int> Quiver::left_edges() const {
  std::vector<int> out;
  for (int e = 2; e <= n_; ++e)
    if (edge(e) == Edge::L) out.push_back(e);
  return out;
}

PartialQuiver Quiver::as_partial() const { return {edges_, n_}; }

std::string Quiver::to_string() const { return format_edges(edges_); }

bool leq(const PartialQuiver& p, const PartialQuiver& p2) {
  if (p.n() != p2.n()) throw InputError("partial quivers have different ranks");
  for (int e = p.rightmost(); e <= p.leftmost(); ++e)
    if (p.edge(e) != p2.edge(e)) return false;
  return true;
}

bool leq(const PartialQuiver& p, const Quiver& q) {
  if (p.n() != q.n()) throw InputError("partial quiver and quiver have different ranks");
  for (int e = p.rightmost(); e <= p.leftmost(); ++e)
    if (p.edge(e) != q.edge(e)) return false;
  return true;
}

ChamberSet chamber_set_of(const PartialQuiver& p) {
  const int n = p.n();
  std::vector<int> members;
  for (int e = 2; e <= n; ++e)
    if (p.edge(e) == Edge::L) members.push_back(e);
  if (p.edge(p.rightmost()) == Edge::R) {
    const auto l2 = interval(1, p.rightmost() - 1);
    members.insert(members.end(), l2.begin(), l2.end());
  }
  if (p.edge(p.leftmost()) == Edge::R) {
    const auto l3 = interval(p.leftmost() + 1, n + 1);
    members.insert(members.end(), l3.begin(), l3.end());
  }
  return ChamberSet(std::move(members), n);
}

PartialQuiver partial_quiver_of(const ChamberSet& s) {
  const int n = s.n();
  std::vector<int> complement;
  for (int x = 1; x <= n + 1; ++x)
    if (!s.contains(x)) complement.push_back(x);
  const auto members = s.members();
  // Legal chamber sets always have a nonempty complement.
  const int a = s.contains(1) ? complement.front() : members.front();
  const int b = s.contains(n + 1) ? complement.back() : members.back();
  if (a < 2 || b > n || a > b) throw InvariantViolation("chamber set " + s.label() + " gives no edge span");

  std::vector<Edge> edges(n - 1, Edge::Undirected);
  for (int e = a; e <= b; ++e) edges[e - 2] = s.contains(e) ? Edge::L : Edge::R;
  return {std::move(edges), n};
}

std::vector<Component> components(const PartialQuiver& p) {
  std::vector<Component> out;
  for (int e = p.leftmost(); e >= p.rightmost(); --e) {
    const Edge symbol = p.edge(e);
    if (!out.empty() && out.back().type == symbol) {
      out.back().a = e;
    } else {
      out.push_back({symbol, e, e});
    }
  }
  return out;
}

std::vector<PartialQuiver> all_partial_quivers(int n) {
  Rank rank(n);
  std::vector<PartialQuiver> out;
  for (int a = 2; a <= n; ++a) {
    for (int b = a; b <= n; ++b) {
      const int len = b - a + 1;
      if (len > 30) throw InputError("all_partial_quivers is limited to spans of 30 edges");
      for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
        std::vector<Edge> edges(n - 1, Edge::Undirected);
        for (int e = a; e <= b; ++e) edges[e - 2] = (mask >> (e - a)) & 1u ? Edge::R : Edge::L;
        out.emplace_back(std::move(edges), n);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PartialQuiver> sub_partial_quivers(const Quiver& q) {
  const int n = q.n();
  std::vector<PartialQuiver> out;
  for (int a = 2; a <= n; ++a) {
    for (int b = a; b <= n; ++b) {
      std::vector<Edge> edges(n - 1, Edge::Undirected);
      for (int e = a; e <= b; ++e) edges[e - 2] = q.edge(e);
      out.emplace_back(std::move(edges), n);
    }
  }
  return out;
}

namespace {

struct Segment {
  GridPoint from;
  GridPoint to;
  int slope() const { return (to.y - from.y) / (to.x - from.x); }
};

std::vector<GridPoint> arrangement_line(int h, int n, bool bounce_bottom) {
  const GridPoint left{0, 2 * (n + 1 - h)};
  const GridPoint right{2 * n, 2 * (h - 1)};
  if (h == 1 || h == n + 1) return {left, right};
  if (bounce_bottom) return {left, {left.y, 0}, right};
  return {left, {2 * n - left.y, 2 * n}, right};
}

// Intersections of two slope +-1 segments with even intercepts land on
// integer points.
std::optional<GridPoint> intersect(const Segment& u, const Segment& v) {
  const int su = u.slope(), sv = v.slope();
  if (su == sv) {
    const bool collinear = u.from.y - su * u.from.x == v.from.y - sv * v.from.x;
    const bool overlap = std::max(u.from.x, v.from.x) < std::min(u.to.x, v.to.x);
    if (collinear && overlap) throw InvariantViolation("arrangement lines overlap");
    return std::nullopt;
  }
  // u.from.y + su (x - u.from.x) = v.from.y + sv (x - v.from.x)
  const int numerator = v.from.y - u.from.y + su * u.from.x - sv * v.from.x;
  const int denominator = su - sv;
  if (numerator % denominator != 0) throw InvariantViolation("arrangement crossing off the grid");
  const int x = numerator / denominator;
  if (x < std::max(u.from.x, v.from.x) || x > std::min(u.to.x, v.to.x)) return std::nullopt;
  return GridPoint{x, u.from.y + su * (x - u.from.x)};
}

}  // namespace

Arrangement bfz_arrangement(const Quiver& q) {
  const int n = q.n();
  Arrangement arr;
  arr.n = n;
  for (int h = 1; h <= n + 1; ++h) {
    const bool in_lambda = h >= 2 && h <= n && q.edge(h) == Edge::L;
    arr.lines.push_back(arrangement_line(h, n, in_lambda));
  }

  for (int h1 = 1; h1 <= n + 1; ++h1) {
    for (int h2 = h1 + 1; h2 <= n + 1; ++h2) {
      std::vector<GridPoint> found;
      const auto& l1 = arr.lines[h1 - 1];
      const auto& l2 = arr.lines[h2 - 1];
      for (std::size_t i = 0; i + 1 < l1.size(); ++i) {
        for (std::size_t j = 0; j + 1 < l2.size(); ++j) {
          const auto point = intersect({l1[i], l1[i + 1]}, {l2[j], l2[j + 1]});
          if (point && std::find(found.begin(), found.end(), *point) == found.end()) found.push_back(*point);
        }
      }
      if (found.size() != 1) {
        throw InvariantViolation("lines " + std::to_string(h1) + " and " + std::to_string(h2) + " cross " +
                                 std::to_string(found.size()) + " times");
      }
      arr.crossings.push_back({found.front(), {h1, h2}});
    }
  }
  std::sort(arr.crossings.begin(), arr.crossings.end(),
            [](const ArrangementCrossing& x, const ArrangementCrossing& y) { return x.at < y.at; });
  return arr;
}

ReducedWord bfz_word(const Quiver& q) {
  const int n = q.n();
  const Arrangement arr = bfz_arrangement(q);

  // Track which line occupies each level (1 = top) while sweeping left to right.
  std::vector<int> profile(n + 1);
  for (int h = 1; h <= n + 1; ++h) profile[h - 1] = h;
  std::vector<int> letters;
  for (const ArrangementCrossing& c : arr.crossings) {
    const auto top = std::find(profile.begin(), profile.end(), c.lines.p);
    const auto bottom = std::find(profile.begin(), profile.end(), c.lines.q);
    const auto upper = std::min(top, bottom);
    if (std::abs(top - bottom) != 1) throw InvariantViolation("arrangement crossing between non-adjacent levels");
    letters.push_back(static_cast<int>(upper - profile.begin()) + 1);
    std::iter_swap(top, bottom);
  }
  ReducedWord word(std::move(letters), n);

  std::vector<ChamberSet> expected;
  if (n >= 2)
    for (const PartialQuiver& p : sub_partial_quivers(q)) expected.push_back(chamber_set_of(p));
  std::sort(expected.begin(), expected.end());
  if (chamber_sets(word) != expected) {
    throw InvariantViolation("bfz word " + word.to_string() + " is not compatible with quiver " + q.to_string());
  }
  return word;
}

ChamberSet quiver_chamber_set(const Quiver& q, int i, int j) {
  const int n = q.n();
  if (i < 1 || j > n + 1 || i >= j) throw InputError("need 1 <= i < j <= n+1");
  auto in_x = [&](int e) { return e >= 2 && e <= n && q.edge(e) == Edge::L; };
  std::vector<int> members;
  for (int e = i + 1; e <= j - 1; ++e)
    if (in_x(e)) members.push_back(e);
  if (i >= 2 && i <= n && !in_x(i))
    for (int x = 1; x <= i - 1; ++x) members.push_back(x);
  if (j >= 2 && j <= n && !in_x(j))
    for (int x = j + 1; x <= n + 1; ++x) members.push_back(x);
  return ChamberSet(std::move(members), n);
}

std::optional<PositiveRoot> BoundaryStrings::pair(int x, int y) {
  if (x == y) return std::nullopt;
  return PositiveRoot{std::min(x, y), std::max(x, y)};
}

BoundaryStrings chamber_crossings(const Quiver& q, const PartialQuiver& p) {
  if (!leq(p, q)) throw InputError("partial quiver " + p.to_string() + " is not <= quiver " + q.to_string());
  const int n = q.n();
  const int a = p.rightmost(), b = p.leftmost();

  // Virtual edge 1 copies the orientation of edge a; virtual edge n+1 that of edge b.
  auto next_left = [&](int from, Edge symbol) {
    for (int e = from + 1; e <= n; ++e)
      if (q.edge(e) == symbol) return e;
    return n + 1;
  };
  auto next_right = [&](int from, Edge symbol) {
    for (int e = from - 1; e >= 2; --e)
      if (q.edge(e) == symbol) return e;
    return 1;
  };

  BoundaryStrings out;
  if (q.edge(b) == Edge::L) {
    out.r = b;
    out.q = next_left(b, Edge::L);
  } else {
    out.q = b;
    out.r = next_left(b, Edge::R);
  }
  if (q.edge(a) == Edge::L) {
    out.s = a;
    out.p = next_right(a, Edge::L);
  } else {
    out.p = a;
    out.s = next_right(a, Edge::R);
  }
  return out;
}

}  // namespace lusztig
