#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "lusztig/weyl_words.hpp"

namespace lusztig {

/// A subset of [1,n+1] that labels a bounded chamber: nonempty and neither an
/// initial interval [1,j] nor a final interval [j,n+1].
class ChamberSet {
 public:
  /// Throws InputError for an illegal set. Members may be given in any order.
  ChamberSet(std::vector<int> members, int n);

  /// Parses "1,3,4".
  static ChamberSet parse(const std::string& text, int n);
  static bool is_legal(std::span<const int> sorted_unique_members, int n);
  /// Every legal chamber set at rank n; there are 2^{n+1} - 2(n+1) of them.
  static std::vector<ChamberSet> all(int n);

  int n() const noexcept { return n_; }
  std::span<const int> members() const noexcept { return members_; }
  bool contains(int string) const;

  /// Compact label: "134" when every member is a single digit, "1,3,10" otherwise.
  std::string label() const;

  friend bool operator==(const ChamberSet&, const ChamberSet&) = default;
  friend auto operator<=>(const ChamberSet& a, const ChamberSet& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.members_ <=> b.members_;
  }

 private:
  int n_;
  std::vector<int> members_;
};

struct Crossing {
  std::size_t index = 0;  // 0-based position in the word
  int level = 0;          // the letter i_j: levels i_j and i_j + 1 cross
  PositiveRoot strings;   // string pair (p,q), p < q

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Bounded chamber of a wiring diagram, one per minimal pair of equal letters.
struct Chamber {
  std::size_t left = 0;   // 0-based index of the left letter of the minimal pair
  std::size_t right = 0;  // 0-based index of the right letter
  int level = 0;          // common letter value; the chamber sits between levels level and level+1
  ChamberSet set;         // strings passing below the chamber
  Crossing left_crossing;
  Crossing right_crossing;
  std::vector<Crossing> above;  // letters level-1 strictly between left and right
  std::vector<Crossing> below;  // letters level+1 strictly between left and right
};

/// Chamber ansatz of a reduced word. Strings are numbered 1..n+1 by their
/// left endpoints, top to bottom; levels are numbered the same way.
class WiringDiagram {
 public:
  explicit WiringDiagram(ReducedWord word);

  const ReducedWord& word() const noexcept { return word_; }
  int n() const noexcept { return word_.n(); }
  std::span<const Crossing> crossings() const noexcept { return crossings_; }

  /// String occupying `level` (1-based) after the first `prefix` crossings.
  int string_at(std::size_t prefix, int level) const { return profiles_[prefix][level - 1]; }
  /// Level profile after `prefix` crossings: profile[level-1] = string.
  std::span<const int> profile(std::size_t prefix) const noexcept { return profiles_[prefix]; }

 private:
  ReducedWord word_;
  std::vector<std::vector<int>> profiles_;  // k+1 profiles
  std::vector<Crossing> crossings_;
};

/// Traces strings through the word. Asserts that the crossing string pairs
/// coincide with root_ordering(word) and the final profile is reversed.
WiringDiagram build_wiring(const ReducedWord& word);

/// The n(n-1)/2 bounded chambers, ordered by left index.
std::vector<Chamber> chambers(const WiringDiagram& diagram);

/// Sorted chamber sets of a word (a multiset, since no set repeats within a word).
std::vector<ChamberSet> chamber_sets(const ReducedWord& word);

enum class RenderFormat { Ascii, Svg };

/// Deterministic drawing with n+1 horizontal tracks, crossing j in column j and
/// chambers annotated with their chamber sets.
std::string render(const WiringDiagram& diagram, RenderFormat format);

}  // namespace lusztig
