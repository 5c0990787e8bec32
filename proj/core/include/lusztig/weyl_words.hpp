#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <random>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace lusztig {

/// Dynkin type A_n. The longest element w0 of S_{n+1} has length k = n(n+1)/2.
class Rank {
 public:
  explicit Rank(int n);

  int n() const noexcept { return n_; }
  /// Length of w0, which is also the number of positive roots.
  int k() const noexcept { return n_ * (n_ + 1) / 2; }
  /// Number of strings in a wiring diagram.
  int strings() const noexcept { return n_ + 1; }

  friend bool operator==(Rank, Rank) = default;

 private:
  int n_;
};

/// The positive root alpha_p + ... + alpha_{q-1}, written (p,q) with p < q.
struct PositiveRoot {
  int p = 0;
  int q = 0;

  bool is_simple() const noexcept { return q == p + 1; }
  friend auto operator<=>(const PositiveRoot&, const PositiveRoot&) = default;
};

std::string to_string(const PositiveRoot& root);

/// Number of positive roots of A_n; equals Rank(n).k().
inline std::size_t root_count(int n) { return static_cast<std::size_t>(n) * (n + 1) / 2; }

/// Canonical dense index of (p,q): lexicographic over 1 <= p < q <= n+1.
std::size_t root_index(const PositiveRoot& root, int n);
PositiveRoot root_at(std::size_t index, int n);
/// All positive roots in canonical (lexicographic) order.
std::vector<PositiveRoot> all_positive_roots(int n);

/// Checks whether `letters` is a reduced expression for w0 in type A_n by
/// tracking the permutation s_{i_1} ... s_{i_k} applied to the identity.
/// Throws InputError if a letter lies outside [1,n] or n < 1.
bool is_reduced_word_for_w0(std::span<const int> letters, int n);

/// A reduced expression (i_1, ..., i_k) for w0. Validated on construction;
/// immutable afterwards.
class ReducedWord {
 public:
  /// Throws InputError unless `letters` is a reduced word for w0 of A_n.
  ReducedWord(std::vector<int> letters, int n);
  ReducedWord(std::initializer_list<int> letters, int n)
      : ReducedWord(std::vector<int>(letters), n) {}

  /// Parses "1,3,2,1,3,2" (whitespace tolerated).
  static ReducedWord parse(const std::string& text, int n);
  /// The word (1, 2,1, 3,2,1, ..., n,...,1).
  static ReducedWord seed(int n);

  Rank rank() const noexcept { return rank_; }
  int n() const noexcept { return rank_.n(); }
  std::size_t size() const noexcept { return letters_.size(); }
  /// 0-based access.
  int operator[](std::size_t index) const { return letters_[index]; }
  std::span<const int> letters() const noexcept { return letters_; }

  std::string to_string() const;

  friend bool operator==(const ReducedWord& a, const ReducedWord& b) {
    return a.rank_ == b.rank_ && a.letters_ == b.letters_;
  }
  friend std::strong_ordering operator<=>(const ReducedWord& a, const ReducedWord& b) {
    if (auto c = a.n() <=> b.n(); c != 0) return c;
    return a.letters_ <=> b.letters_;
  }

 private:
  Rank rank_;
  std::vector<int> letters_;
};

enum class BraidKind { Short, Long };

struct BraidMove {
  std::size_t index = 0;  // 0-based position of the first affected letter
  BraidKind kind = BraidKind::Short;
  friend bool operator==(const BraidMove&, const BraidMove&) = default;
};

/// Applies (i,j)->(j,i) with |i-j|>=2 (Short) or (i,j,i)->(j,i,j) with
/// |i-j|=1 (Long) at 0-based `index`. Throws MoveNotApplicable otherwise.
ReducedWord apply_braid_move(const ReducedWord& word, std::size_t index, BraidKind kind);

/// Every braid move that applies to `word`, short moves first, then long,
/// each by ascending index.
std::vector<BraidMove> applicable_braid_moves(const ReducedWord& word);

/// Closure of {word} under short braid moves.
std::set<ReducedWord> commutation_class(const ReducedWord& word);

/// Breadth-first enumeration of every reduced word of w0 of A_n, starting from
/// ReducedWord::seed(n). Each word is visited exactly once. The visitor may
/// return false to stop early.
void for_each_reduced_word(int n, const std::function<bool(const ReducedWord&)>& visit);
std::vector<ReducedWord> enumerate_reduced_words(int n);

/// Random walk of `steps` braid moves from `start`, choosing uniformly among
/// the applicable moves at each step.
ReducedWord random_braid_walk(const ReducedWord& start, std::size_t steps, std::mt19937_64& rng);

/// Ordering on positive roots induced by a reduced word.
class RootOrdering {
 public:
  RootOrdering(std::vector<PositiveRoot> roots, int n);

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return roots_.size(); }
  const PositiveRoot& operator[](std::size_t position) const { return roots_[position]; }
  std::span<const PositiveRoot> roots() const noexcept { return roots_; }
  /// 0-based position j with alpha^{j+1} == root.
  std::size_t position_of(const PositiveRoot& root) const;

  friend bool operator==(const RootOrdering&, const RootOrdering&) = default;

 private:
  int n_;
  std::vector<PositiveRoot> roots_;
  std::vector<std::size_t> position_by_root_;
};

/// alpha^j = s_{i_1} ... s_{i_{j-1}}(alpha_{i_j}), computed by applying simple
/// reflections to vectors in the simple-root basis.
RootOrdering root_ordering(const ReducedWord& word);

}  // namespace lusztig

template <>
struct std::hash<lusztig::ReducedWord> {
  std::size_t operator()(const lusztig::ReducedWord& w) const noexcept;
};
