#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "lusztig/cone.hpp"
#include "lusztig/pquiver.hpp"
#include "lusztig/weyl_words.hpp"

namespace lusztig {

/// v(j)_{pq} = 1 iff p <= j and j+1 <= q.
RootVector v_simple(int j, int n);
/// v(Y)_{pq} = 1 iff p < a(Y) <= b(Y) < q.
RootVector v_component(const Component& y, int n);
/// w(P) = sum of v(Y) over the components of P.
RootVector w_partial_quiver(const PartialQuiver& p);
/// v(P)_{pq} = ceil(w(P)_{pq} / 2).
RootVector v_partial_quiver(const PartialQuiver& p);

struct LabelVerdict {
  RowLabel label;
  std::optional<PartialQuiver> partial_quiver;  // chamber rows only
  RootVector formula;
  RootVector inverse;
  bool equal = false;
};

struct TheoremReport {
  ReducedWord word;
  BigInt determinant;
  bool unimodular = false;  // det = +-1 and inverse nonnegative
  std::vector<LabelVerdict> verdicts;
  bool overall = false;     // every verdict equal
};

/// Compares every column of P_i^{-1} with the closed-form vector, in root
/// coordinates. Mismatches are reported, never thrown.
TheoremReport verify_theorem(const ReducedWord& word);

struct Mismatch {
  ReducedWord word;
  RowLabel label;
  RootVector expected;  // closed form
  RootVector got;       // inverse column
};

/// Aggregate over many words. Merging is commutative up to the order of the
/// mismatch list, which is kept sorted.
struct VerificationReport {
  int n = 0;
  std::size_t checked = 0;
  std::size_t non_unimodular = 0;
  std::vector<Mismatch> mismatches;
  std::vector<ReducedWord> non_unimodular_words;

  void add(const TheoremReport& report);
  void merge(VerificationReport other);
  bool ok() const { return mismatches.empty() && non_unimodular == 0; }
};

struct Exhaustive {};
struct Sample {
  std::size_t count = 0;
  std::uint64_t seed = 0;
};
using VerifyMode = std::variant<Exhaustive, Sample>;

/// Words used by Sample mode: word i is a walk of 4k uniformly chosen braid
/// moves from ReducedWord::seed(n), driven by an RNG seeded with (seed, i),
/// so the sample does not depend on how it is split across workers.
ReducedWord sampled_word(int n, std::uint64_t seed, std::size_t index);

VerificationReport verify_all(int n, const VerifyMode& mode, unsigned jobs = 1);

}  // namespace lusztig
