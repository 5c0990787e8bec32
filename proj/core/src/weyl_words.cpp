#include "lusztig/weyl_words.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "lusztig/error.hpp"

namespace lusztig {

Rank::Rank(int n) : n_(n) {
  if (n < 1) throw InputError("rank n must be >= 1, got " + std::to_string(n));
}

std::string to_string(const PositiveRoot& root) {
  return "(" + std::to_string(root.p) + "," + std::to_string(root.q) + ")";
}

std::size_t root_index(const PositiveRoot& root, int n) {
  const int m = n + 1;
  if (root.p < 1 || root.q > m || root.p >= root.q) {
    throw InputError("invalid positive root " + to_string(root) + " for n=" + std::to_string(n));
  }
  // Roots (p',q') with p' < p come first: sum_{t=1}^{p-1} (m - t).
  const std::size_t p = static_cast<std::size_t>(root.p);
  const std::size_t before = (p - 1) * static_cast<std::size_t>(m) - (p - 1) * p / 2;
  return before + static_cast<std::size_t>(root.q - root.p - 1);
}

PositiveRoot root_at(std::size_t index, int n) {
  const int m = n + 1;
  for (int p = 1; p < m; ++p) {
    const std::size_t row = static_cast<std::size_t>(m - p);
    if (index < row) return {p, p + 1 + static_cast<int>(index)};
    index -= row;
  }
  throw InputError("root index out of range");
}

std::vector<PositiveRoot> all_positive_roots(int n) {
  std::vector<PositiveRoot> roots;
  roots.reserve(root_count(n));
  for (int p = 1; p <= n; ++p)
    for (int q = p + 1; q <= n + 1; ++q) roots.push_back({p, q});
  return roots;
}

bool is_reduced_word_for_w0(std::span<const int> letters, int n) {
  const Rank rank(n);
  for (int letter : letters) {
    if (letter < 1 || letter > n) {
      throw InputError("letter " + std::to_string(letter) + " outside [1," + std::to_string(n) + "]");
    }
  }
  if (letters.size() != static_cast<std::size_t>(rank.k())) return false;

  std::vector<int> perm(rank.strings());
  std::iota(perm.begin(), perm.end(), 1);
  for (int letter : letters) std::swap(perm[letter - 1], perm[letter]);
  // A word of length k whose product is w0 is automatically reduced.
  for (int i = 0; i < rank.strings(); ++i) {
    if (perm[i] != rank.strings() - i) return false;
  }
  return true;
}

ReducedWord::ReducedWord(std::vector<int> letters, int n) : rank_(n), letters_(std::move(letters)) {
  if (!is_reduced_word_for_w0(letters_, n)) {
    throw InputError("not a reduced word for w0 of A_" + std::to_string(n) + ": " + to_string());
  }
}

ReducedWord ReducedWord::parse(const std::string& text, int n) {
  std::vector<int> letters;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    const auto first = token.find_first_not_of(" \t");
    if (first == std::string::npos) throw InputError("empty letter in word \"" + text + "\"");
    const auto last = token.find_last_not_of(" \t");
    token = token.substr(first, last - first + 1);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw InputError("bad letter \"" + token + "\" in word \"" + text + "\"");
    }
    if (used != token.size()) throw InputError("bad letter \"" + token + "\" in word \"" + text + "\"");
    letters.push_back(value);
  }
  return ReducedWord(std::move(letters), n);
}

ReducedWord ReducedWord::seed(int n) {
  const Rank rank(n);
  std::vector<int> letters;
  letters.reserve(rank.k());
  for (int j = 1; j <= n; ++j)
    for (int i = j; i >= 1; --i) letters.push_back(i);
  return ReducedWord(std::move(letters), n);
}

std::string ReducedWord::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(letters_[i]);
  }
  return out;
}

namespace {

bool short_applies(std::span<const int> w, std::size_t i) {
  return i + 1 < w.size() && std::abs(w[i] - w[i + 1]) >= 2;
}

bool long_applies(std::span<const int> w, std::size_t i) {
  return i + 2 < w.size() && w[i] == w[i + 2] && std::abs(w[i] - w[i + 1]) == 1;
}

}  // namespace

ReducedWord apply_braid_move(const ReducedWord& word, std::size_t index, BraidKind kind) {
  std::vector<int> letters(word.letters().begin(), word.letters().end());
  if (kind == BraidKind::Short) {
    if (!short_applies(letters, index)) {
      throw MoveNotApplicable("short braid move not applicable at position " + std::to_string(index + 1) +
                              " of " + word.to_string());
    }
    std::swap(letters[index], letters[index + 1]);
  } else {
    if (!long_applies(letters, index)) {
      throw MoveNotApplicable("long braid move not applicable at position " + std::to_string(index + 1) +
                              " of " + word.to_string());
    }
    const int i = letters[index], j = letters[index + 1];
    letters[index] = j;
    letters[index + 1] = i;
    letters[index + 2] = j;
  }
  return ReducedWord(std::move(letters), word.n());
}

std::vector<BraidMove> applicable_braid_moves(const ReducedWord& word) {
  std::vector<BraidMove> moves;
  const auto w = word.letters();
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (short_applies(w, i)) moves.push_back({i, BraidKind::Short});
  for (std::size_t i = 0; i + 2 < w.size(); ++i)
    if (long_applies(w, i)) moves.push_back({i, BraidKind::Long});
  return moves;
}

std::set<ReducedWord> commutation_class(const ReducedWord& word) {
  std::set<ReducedWord> seen{word};
  std::deque<ReducedWord> queue{word};
  while (!queue.empty()) {
    const ReducedWord current = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i + 1 < current.size(); ++i) {
      if (!short_applies(current.letters(), i)) continue;
      ReducedWord next = apply_braid_move(current, i, BraidKind::Short);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return seen;
}

void for_each_reduced_word(int n, const std::function<bool(const ReducedWord&)>& visit) {
  const ReducedWord start = ReducedWord::seed(n);
  std::unordered_set<ReducedWord> seen{start};
  std::deque<ReducedWord> queue{start};
  while (!queue.empty()) {
    ReducedWord current = std::move(queue.front());
    queue.pop_front();
    if (!visit(current)) return;
    for (const BraidMove& move : applicable_braid_moves(current)) {
      ReducedWord next = apply_braid_move(current, move.index, move.kind);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
}

std::vector<ReducedWord> enumerate_reduced_words(int n) {
  std::vector<ReducedWord> words;
  for_each_reduced_word(n, [&](const ReducedWord& w) {
    words.push_back(w);
    return true;
  });
  return words;
}

ReducedWord random_braid_walk(const ReducedWord& start, std::size_t steps, std::mt19937_64& rng) {
  ReducedWord current = start;
  for (std::size_t step = 0; step < steps; ++step) {
    const auto moves = applicable_braid_moves(current);
    if (moves.empty()) break;  // only A_1
    std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
    const BraidMove& move = moves[pick(rng)];
    current = apply_braid_move(current, move.index, move.kind);
  }
  return current;
}

RootOrdering::RootOrdering(std::vector<PositiveRoot> roots, int n)
    : n_(n), roots_(std::move(roots)), position_by_root_(root_count(n), root_count(n)) {
  if (roots_.size() != root_count(n)) throw InputError("root ordering has wrong length");
  for (std::size_t j = 0; j < roots_.size(); ++j) {
    std::size_t& slot = position_by_root_[root_index(roots_[j], n)];
    if (slot != root_count(n)) throw InputError("root " + to_string(roots_[j]) + " repeated in ordering");
    slot = j;
  }
}

std::size_t RootOrdering::position_of(const PositiveRoot& root) const {
  return position_by_root_[root_index(root, n_)];
}

RootOrdering root_ordering(const ReducedWord& word) {
  const int n = word.n();
  // s_i(beta) = beta - <beta, alpha_i^vee> alpha_i, Cartan matrix of type A_n.
  auto reflect = [n](std::vector<int>& beta, int i) {
    int pairing = 2 * beta[i - 1];
    if (i > 1) pairing -= beta[i - 2];
    if (i < n) pairing -= beta[i];
    beta[i - 1] -= pairing;
  };

  std::vector<PositiveRoot> roots;
  roots.reserve(word.size());
  for (std::size_t j = 0; j < word.size(); ++j) {
    std::vector<int> beta(n, 0);
    beta[word[j] - 1] = 1;
    for (std::size_t t = j; t-- > 0;) reflect(beta, word[t]);

    // A positive root of A_n is a contiguous run of ones in the simple basis.
    const auto first = std::find(beta.begin(), beta.end(), 1);
    const auto end = std::find_if(first, beta.end(), [](int c) { return c != 1; });
    const bool contiguous = first != beta.end() &&
                            std::all_of(beta.begin(), first, [](int c) { return c == 0; }) &&
                            std::all_of(end, beta.end(), [](int c) { return c == 0; });
    if (!contiguous) throw InvariantViolation("reflection did not produce a positive root");
    roots.push_back({static_cast<int>(first - beta.begin()) + 1, static_cast<int>(end - beta.begin()) + 1});
  }
  return RootOrdering(std::move(roots), n);
}

}  // namespace lusztig

std::size_t std::hash<lusztig::ReducedWord>::operator()(const lusztig::ReducedWord& w) const noexcept {
  // FNV-1a over the letter sequence.
  std::uint64_t h = 1469598103934665603ull ^ static_cast<std::uint64_t>(w.n());
  for (int letter : w.letters()) {
    h ^= static_cast<std::uint64_t>(letter);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}
