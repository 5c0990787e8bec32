#include "lusztig/wiring.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>

#include "lusztig/error.hpp"

namespace lusztig {

ChamberSet::ChamberSet(std::vector<int> members, int n) : n_(Rank(n).n()), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!is_legal(members_, n)) {
    std::string text;
    for (int m : members_) text += (text.empty() ? "" : ",") + std::to_string(m);
    throw InputError("{" + text + "} is not a chamber set for n=" + std::to_string(n));
  }
}

ChamberSet ChamberSet::parse(const std::string& text, int n) {
  std::vector<int> members;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    try {
      std::size_t used = 0;
      members.push_back(std::stoi(token, &used));
      if (token.find_first_not_of(" \t", used) != std::string::npos) throw InputError("");
    } catch (const std::exception&) {
      throw InputError("bad chamber-set member \"" + token + "\"");
    }
  }
  return ChamberSet(std::move(members), n);
}

bool ChamberSet::is_legal(std::span<const int> m, int n) {
  if (m.empty()) return false;
  if (m.front() < 1 || m.back() > n + 1) return false;
  const bool contiguous = m.back() - m.front() + 1 == static_cast<int>(m.size());
  if (contiguous && (m.front() == 1 || m.back() == n + 1)) return false;
  return true;
}

std::vector<ChamberSet> ChamberSet::all(int n) {
  const int m = Rank(n).strings();
  if (m > 30) throw InputError("ChamberSet::all is limited to n <= 29");
  std::vector<ChamberSet> sets;
  std::vector<int> members;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    members.clear();
    for (int s = 0; s < m; ++s)
      if (mask & (1u << s)) members.push_back(s + 1);
    if (is_legal(members, n)) sets.emplace_back(members, n);
  }
  std::sort(sets.begin(), sets.end());
  return sets;
}

bool ChamberSet::contains(int string) const {
  return std::binary_search(members_.begin(), members_.end(), string);
}

std::string ChamberSet::label() const {
  const bool compact = members_.back() <= 9;
  std::string out;
  for (int m : members_) {
    if (!compact && !out.empty()) out += ',';
    out += std::to_string(m);
  }
  return out;
}

WiringDiagram::WiringDiagram(ReducedWord word) : word_(std::move(word)) {
  std::vector<int> profile(word_.rank().strings());
  std::iota(profile.begin(), profile.end(), 1);
  profiles_.reserve(word_.size() + 1);
  profiles_.push_back(profile);
  crossings_.reserve(word_.size());
  for (std::size_t j = 0; j < word_.size(); ++j) {
    const int level = word_[j];
    const int upper = profile[level - 1], lower = profile[level];
    crossings_.push_back({j, level, {std::min(upper, lower), std::max(upper, lower)}});
    std::swap(profile[level - 1], profile[level]);
    profiles_.push_back(profile);
  }
}

WiringDiagram build_wiring(const ReducedWord& word) {
  WiringDiagram diagram(word);
  const RootOrdering ordering = root_ordering(word);
  for (const Crossing& c : diagram.crossings()) {
    if (c.strings != ordering[c.index]) {
      throw InvariantViolation("crossing " + std::to_string(c.index + 1) + " has strings " + to_string(c.strings) +
                               " but the root ordering gives " + to_string(ordering[c.index]));
    }
    // Each pair crosses once in a reduced word, so the smaller string arrives from above.
    if (diagram.string_at(c.index, c.level) != c.strings.p) {
      throw InvariantViolation("string pair crossed twice at position " + std::to_string(c.index + 1));
    }
  }
  const auto last = diagram.profile(word.size());
  for (std::size_t level = 0; level < last.size(); ++level) {
    if (last[level] != static_cast<int>(last.size() - level)) {
      throw InvariantViolation("final level profile is not the reversal");
    }
  }
  return diagram;
}

std::vector<Chamber> chambers(const WiringDiagram& diagram) {
  const ReducedWord& word = diagram.word();
  const int n = word.n();
  const auto crossings = diagram.crossings();
  std::vector<Chamber> result;
  for (std::size_t s = 0; s < word.size(); ++s) {
    const int level = word[s];
    std::size_t t = s + 1;
    while (t < word.size() && word[t] != level) ++t;
    if (t == word.size()) continue;

    // Strings below the chamber occupy levels level+1 .. n+1 and only permute
    // among themselves between the two ends.
    std::vector<int> below_set;
    for (std::size_t prefix = s + 1; prefix <= t; ++prefix) {
      const auto profile = diagram.profile(prefix);
      std::vector<int> current(profile.begin() + level, profile.end());
      std::sort(current.begin(), current.end());
      if (prefix == s + 1) {
        below_set = std::move(current);
      } else if (current != below_set) {
        throw InvariantViolation("strings below a chamber change across its range");
      }
    }

    Chamber chamber{s, t, level, ChamberSet(std::move(below_set), n), crossings[s], crossings[t], {}, {}};
    for (std::size_t p = s + 1; p < t; ++p) {
      if (word[p] == level - 1) chamber.above.push_back(crossings[p]);
      if (word[p] == level + 1) chamber.below.push_back(crossings[p]);
    }
    result.push_back(std::move(chamber));
  }
  const std::size_t expected = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (result.size() != expected) throw InvariantViolation("wrong number of chambers");
  return result;
}

std::vector<ChamberSet> chamber_sets(const ReducedWord& word) {
  std::vector<ChamberSet> sets;
  for (Chamber& c : chambers(build_wiring(word))) sets.push_back(std::move(c.set));
  std::sort(sets.begin(), sets.end());
  return sets;
}

}  // namespace lusztig
