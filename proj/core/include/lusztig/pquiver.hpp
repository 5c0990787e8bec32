#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lusztig/weyl_words.hpp"
#include "lusztig/wiring.hpp"

namespace lusztig {

/// Symbol carried by an edge of the type-A Dynkin graph. Edges are numbered
/// 2..n starting from the right-hand end.
enum class Edge : char { L = 'L', R = 'R', Undirected = '-' };

/// A quiver / partial quiver of type A_n. A partial quiver has a nonempty,
/// contiguous run of directed edges; a quiver has every edge directed.
///
/// Text form: n-1 symbols written left to right, i.e. edge n first and edge 2
/// last, so "---LRLL-" at n=9 has edge 2 undirected and edge 5 an R.
class PartialQuiver {
 public:
  /// `edges[e-2]` is the symbol of edge e. Throws InputError if no edge is
  /// directed or the directed edges are not contiguous.
  PartialQuiver(std::vector<Edge> edges, int n);

  static PartialQuiver parse(std::string_view text, int n);
  /// Rank inferred from the text length (n = length + 1).
  static PartialQuiver parse(std::string_view text);

  int n() const noexcept { return n_; }
  /// Symbol of edge e, 2 <= e <= n.
  Edge edge(int e) const;
  bool directed(int e) const { return edge(e) != Edge::Undirected; }
  /// Rightmost directed edge (smallest index).
  int rightmost() const noexcept { return a_; }
  /// Leftmost directed edge (largest index).
  int leftmost() const noexcept { return b_; }
  bool is_quiver() const noexcept { return a_ == 2 && b_ == n_; }

  std::string to_string() const;

  friend bool operator==(const PartialQuiver&, const PartialQuiver&) = default;
  friend auto operator<=>(const PartialQuiver& x, const PartialQuiver& y) {
    if (auto c = x.n_ <=> y.n_; c != 0) return c;
    return x.to_string() <=> y.to_string();
  }

 private:
  int n_;
  std::vector<Edge> edges_;
  int a_ = 0;
  int b_ = 0;
};

/// A quiver of type A_n: every edge 2..n is L or R. At n = 1 there are no
/// edges and a single (empty) quiver.
class Quiver {
 public:
  Quiver(std::vector<Edge> edges, int n);
  static Quiver parse(std::string_view text, int n);
  static Quiver parse(std::string_view text);
  /// Quiver whose L-edges are exactly `left_edges`.
  static Quiver from_left_edges(const std::vector<int>& left_edges, int n);
  /// All 2^{n-1} quivers, in lexicographic order of their text forms.
  static std::vector<Quiver> all(int n);

  int n() const noexcept { return n_; }
  Edge edge(int e) const;
  /// Edges pointing left.
  std::vector<int> left_edges() const;
  /// The quiver itself as a partial quiver; requires n >= 2.
  PartialQuiver as_partial() const;
  std::string to_string() const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  int n_;
  std::vector<Edge> edges_;
};

/// Type and span of a maximal run of equally oriented edges.
struct Component {
  Edge type = Edge::L;
  int a = 0;  // rightmost edge
  int b = 0;  // leftmost edge
  friend bool operator==(const Component&, const Component&) = default;
};

/// True iff every edge directed in `p` is directed the same way in `p2`.
/// Throws InputError on rank mismatch.
bool leq(const PartialQuiver& p, const PartialQuiver& p2);
bool leq(const PartialQuiver& p, const Quiver& q);

/// l(P) = l1 u l2 u l3.
ChamberSet chamber_set_of(const PartialQuiver& p);
/// Inverse of chamber_set_of.
PartialQuiver partial_quiver_of(const ChamberSet& s);

/// Maximal same-orientation runs, ordered left to right (decreasing edge index).
std::vector<Component> components(const PartialQuiver& p);

/// Every partial quiver of rank n; there are 2^{n+1} - 2(n+1) of them.
std::vector<PartialQuiver> all_partial_quivers(int n);
/// The n(n-1)/2 partial quivers P <= q.
std::vector<PartialQuiver> sub_partial_quivers(const Quiver& q);

/// Point of the arrangement Arr(Lambda), in doubled integer coordinates on the
/// square [0,2n]^2 with y increasing upwards.
struct GridPoint {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

struct ArrangementCrossing {
  GridPoint at;
  PositiveRoot lines;
};

/// The pseudoline arrangement Arr(Lambda) for Lambda = left edges of q.
/// Line h runs from left point h (h-th from the top) to right point h
/// (h-th from the bottom); for 2 <= h <= n it bounces off the bottom when
/// h is in Lambda and off the top otherwise.
struct Arrangement {
  int n = 0;
  std::vector<std::vector<GridPoint>> lines;    // lines[h-1]: polyline vertices
  std::vector<ArrangementCrossing> crossings;   // sorted by x, then bottom-up
};

Arrangement bfz_arrangement(const Quiver& q);

/// Reads Arr(Lambda) left to right and converts each crossing to its level.
/// Asserts that the chamber sets of the result are {l(P) : P <= q}.
ReducedWord bfz_word(const Quiver& q);

/// l(ij) = Y1 u Y2 u Y3 for strings i < j crossing immediately above a chamber
/// of a q-compatible word. Throws InputError if the result is not a chamber set.
ChamberSet quiver_chamber_set(const Quiver& q, int i, int j);

/// String numbers around the chamber labelled by p in a q-compatible word:
/// (p,q) cross above, (q,s) at the left end, (p,r) at the right end and (r,s)
/// below; equal strings mean no crossing.
struct BoundaryStrings {
  int p = 0;
  int q = 0;
  int r = 0;
  int s = 0;

  static std::optional<PositiveRoot> pair(int x, int y);
  std::optional<PositiveRoot> above() const { return pair(p, q); }
  std::optional<PositiveRoot> left() const { return pair(q, s); }
  std::optional<PositiveRoot> right() const { return pair(p, r); }
  std::optional<PositiveRoot> below() const { return pair(r, s); }

  friend bool operator==(const BoundaryStrings&, const BoundaryStrings&) = default;
};

/// Throws InputError unless p <= q.
BoundaryStrings chamber_crossings(const Quiver& q, const PartialQuiver& p);

}  // namespace lusztig
