// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "lusztig/cone.hpp"
#include "lusztig/pquiver.hpp"
#include "lusztig/spanning.hpp"
#include "lusztig/wiring.hpp"
#include "oracles/oracles.hpp"

using namespace lusztig;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    if (condition) return;
    if (ok) detail << what;
    ok = false;
  }
};

struct Criterion {
  int number;
  std::string title;
  double time_limit_s;  // 0 = unlimited
  std::function<void(Outcome&)> body;
};

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

std::vector<ReducedWord> sample_or_all(int n, std::size_t count, std::uint64_t seed) {
  std::vector<ReducedWord> words;
  if (oracle::staircase_tableaux_count(n) <= count) return enumerate_reduced_words(n);
  for (std::size_t i = 0; i < count; ++i) words.push_back(sampled_word(n, seed, i));
  return words;
}

RootVector over_simple_roots(const PositiveRoot& r, int n) {
  RootVector v(n);
  for (int j = r.p; j < r.q; ++j) v[PositiveRoot{j, j + 1}] += 1;
  return v;
}

void word_132132_chambers(Outcome& o) {
  const auto cs = chambers(build_wiring(ReducedWord({1, 3, 2, 1, 3, 2}, 3)));
  const std::map<std::pair<std::size_t, std::size_t>, std::vector<int>> expected{
      {{0, 3}, {1, 3, 4}}, {{1, 4}, {3}}, {{2, 5}, {1, 3}}};
  o.require(cs.size() == 3, "wrong chamber count");
  for (const auto& c : cs) {
    const auto it = expected.find({c.left, c.right});
    o.require(it != expected.end() &&
                  std::vector<int>(c.set.members().begin(), c.set.members().end()) == it->second,
              "chamber set mismatch at pair (" + std::to_string(c.left + 1) + "," + std::to_string(c.right + 1) + ")");
  }
}

VerificationReport exhaustive_reports[5];
VerificationReport sampled_reports[3];

void theorem_exhaustive(Outcome& o) {
  const std::uint64_t counts[] = {1, 2, 16, 768};
  for (int n = 1; n <= 4; ++n) {
    const std::uint64_t brute = oracle::count_reduced_words_dfs(n);
    const auto words = enumerate_reduced_words(n);
    o.require(brute == counts[n - 1] && words.size() == brute, "word count mismatch at n=" + std::to_string(n));
    exhaustive_reports[n] = verify_all(n, Exhaustive{}, workers());
    const auto& r = exhaustive_reports[n];
    o.require(r.checked == brute, "checked count mismatch at n=" + std::to_string(n));
    o.require(r.mismatches.empty(), std::to_string(r.mismatches.size()) + " mismatches at n=" + std::to_string(n));
  }
}

void theorem_sampled(Outcome& o) {
  for (int n = 5; n <= 7; ++n) {
    auto& r = sampled_reports[n - 5];
    r = verify_all(n, Sample{1000, 1}, workers());
    o.require(r.checked == 1000, "fewer than 1000 words at n=" + std::to_string(n));
    o.require(r.mismatches.empty(), std::to_string(r.mismatches.size()) + " mismatches at n=" + std::to_string(n));
  }
}

void unimodularity(Outcome& o) {
  std::size_t inverted = 0;
  for (int n = 1; n <= 4; ++n) {
    o.require(exhaustive_reports[n].non_unimodular == 0, "non-unimodular word at n=" + std::to_string(n));
    inverted += exhaustive_reports[n].checked;
  }
  for (const auto& r : sampled_reports) {
    o.require(r.checked > 0 && r.non_unimodular == 0, "non-unimodular sampled word at n=" + std::to_string(r.n));
    inverted += r.checked;
  }
  o.require(inverted == 1 + 2 + 16 + 768 + 3000, "criteria 2 and 3 did not run");
  // cross-check the determinant with a second exact route on the smaller ranks
  for (int n = 1; n <= 4; ++n) {
    for (const auto& w : enumerate_reduced_words(n)) {
      const ConeMatrix m = cone_matrix(w);
      std::vector<std::vector<std::int64_t>> rows(m.size(), std::vector<std::int64_t>(m.size()));
      for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < m.size(); ++c) rows[r][c] = m.rows()(r, c);
      const auto inv = oracle::rational_inverse(rows);
      bool integral_nonnegative = inv.has_value();
      if (inv)
        for (const auto& row : *inv)
          for (const auto& x : row)
            integral_nonnegative = integral_nonnegative && denominator(x) == 1 && x >= 0;
      o.require(integral_nonnegative, "rational oracle disagrees for " + w.to_string());
    }
  }
}

void bijection(Outcome& o) {
  for (int n = 1; n <= 6; ++n) {
    const std::size_t expected = (std::size_t{1} << (n + 1)) - 2 * (n + 1);
    const auto sets = ChamberSet::all(n);
    const auto pqs = all_partial_quivers(n);
    o.require(sets.size() == expected && pqs.size() == expected, "count mismatch at n=" + std::to_string(n));
    std::set<ChamberSet> images;
    for (const auto& s : sets) o.require(chamber_set_of(partial_quiver_of(s)) == s, "l(l^-1(S)) != S for " + s.label());
    for (const auto& p : pqs) {
      const ChamberSet s = chamber_set_of(p);
      o.require(partial_quiver_of(s) == p, "l^-1(l(P)) != P for " + p.to_string());
      images.insert(s);
    }
    o.require(images.size() == expected, "l not injective at n=" + std::to_string(n));
  }
}

void bfz_compatibility(Outcome& o) {
  for (int n = 1; n <= 5; ++n) {
    for (const Quiver& q : Quiver::all(n)) {
      const ReducedWord w = bfz_word(q);
      const WiringDiagram d = build_wiring(w);
      std::set<PartialQuiver> labels;
      for (const auto& c : chambers(d)) {
        labels.insert(partial_quiver_of(c.set));
        if (c.above.empty()) continue;
        o.require(c.above.size() == 1, "more than one crossing above a chamber for " + q.to_string());
        const PositiveRoot ij = c.above.front().strings;
        o.require(quiver_chamber_set(q, ij.p, ij.q) == c.set, "l(ij) formula fails for " + q.to_string());
      }
      std::vector<PartialQuiver> subs;
      if (n >= 2) subs = sub_partial_quivers(q);
      o.require(labels == std::set<PartialQuiver>(subs.begin(), subs.end()),
                "chamber labels are not {P <= Q} for " + q.to_string());
    }
  }
  const auto drawn = oracle::polyline_crossings(oracle::drawn_arr_2_4());
  const ReducedWord w = bfz_word(Quiver::from_left_edges({2, 4}, 5));
  const WiringDiagram d = build_wiring(w);
  std::vector<oracle::PlaneCrossing> from_word;
  for (const auto& c : d.crossings()) from_word.push_back({oracle::Rational(c.index), 0, c.strings.p, c.strings.q});
  o.require(oracle::crossing_sequences(drawn) == oracle::crossing_sequences(from_word),
            "Arr{2,4} is not isotopic to the hand-drawn arrangement");
  std::multiset<std::set<int>> mine;
  for (const auto& s : chamber_sets(w)) mine.insert(std::set<int>(s.members().begin(), s.members().end()));
  o.require(oracle::swept_chamber_sets(drawn, 6) == mine, "Arr{2,4} chamber sets differ from the hand-drawn arrangement");
}

void boundary_strings(Outcome& o) {
  std::size_t absent = 0;
  for (int n = 2; n <= 5; ++n) {
    for (const Quiver& q : Quiver::all(n)) {
      const WiringDiagram d = build_wiring(bfz_word(q));
      for (const auto& c : chambers(d)) {
        const PartialQuiver p = partial_quiver_of(c.set);
        const BoundaryStrings b = chamber_crossings(q, p);
        const std::string where = " for " + q.to_string() + " / " + p.to_string();
        const auto above = b.above();
        const auto below = b.below();
        absent += !above + !below;
        o.require(b.left() && *b.left() == c.left_crossing.strings, "left crossing" + where);
        o.require(b.right() && *b.right() == c.right_crossing.strings, "right crossing" + where);
        o.require(above ? c.above.size() == 1 && c.above[0].strings == *above : c.above.empty(), "above" + where);
        o.require(below ? c.below.size() == 1 && c.below[0].strings == *below : c.below.empty(), "below" + where);
        o.require(b.q == d.string_at(c.left + 1, c.level) && b.s == d.string_at(c.left + 1, c.level + 1) &&
                      b.p == d.string_at(c.right, c.level) && b.r == d.string_at(c.right, c.level + 1),
                  "boundary strings" + where);
      }
    }
  }
  o.require(absent > 0, "no absent crossings exercised");
}

void superadditivity_check(Outcome& o) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::int64_t> coeff(0, 1000);
  for (int n = 1; n <= 6; ++n) {
    for (const ReducedWord& w : sample_or_all(n, 100, 8)) {
      const ConeMatrix m = cone_matrix(w);
      const SpanningSet q = invert_unimodular(m);
      for (const auto& v : q.vectors) o.require(superadditivity(v), "spanning vector of " + w.to_string());
      const std::size_t k = q.vectors.size();
      std::vector<std::int64_t> a(k);
      for (int rep = 0; rep < 10000; ++rep) {
        std::fill(a.begin(), a.end(), 0);
        for (std::size_t l = 0; l < k; ++l) {
          const std::int64_t c = coeff(rng);
          const auto e = q.vectors[l].entries();
          for (std::size_t i = 0; i < k; ++i) a[i] += c * e[i];
        }
        if (!superadditivity(RootVector(a, n))) {
          o.require(false, "conic combination for " + w.to_string());
          break;
        }
      }
      if (n <= 4) {
        for (int i = 1; i <= n + 1; ++i)
          for (int j = i + 1; j <= n + 1; ++j)
            for (int kk = j + 1; kk <= n + 1; ++kk) {
              const auto y = triangle_combination(m, q, i, j, kk);
              bool zero_one = y.has_value();
              if (y)
                for (const auto& [label, c] : *y) zero_one = zero_one && (c == 0 || c == 1);
              o.require(zero_one, "triangle not a 0/1 sum of chamber rows for " + w.to_string());
            }
      }
    }
  }
}

void chamber_roots(Outcome& o) {
  for (int n = 1; n <= 4; ++n) {
    for (const ReducedWord& w : enumerate_reduced_words(n)) {
      for (const auto& c : chambers(build_wiring(w))) {
        const RootVector lhs = over_simple_roots(c.left_crossing.strings, n) + over_simple_roots(c.right_crossing.strings, n);
        RootVector rhs(n);
        for (const auto& x : c.above) rhs += over_simple_roots(x.strings, n);
        for (const auto& x : c.below) rhs += over_simple_roots(x.strings, n);
        o.require(lhs == rhs, "identity fails in " + w.to_string());
      }
    }
  }
}

void commutation_invariance(Outcome& o) {
  for (int n = 1; n <= 4; ++n) {
    std::set<ReducedWord> seen;
    for (const ReducedWord& w : enumerate_reduced_words(n)) {
      if (seen.count(w)) continue;
      const auto sets = chamber_sets(w);
      for (const ReducedWord& u : commutation_class(w)) {
        seen.insert(u);
        o.require(chamber_sets(u) == sets, "class of " + w.to_string() + " differs at " + u.to_string());
      }
    }
    o.require(seen.size() == oracle::staircase_tableaux_count(n), "classes do not cover n=" + std::to_string(n));
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Chamber sets of 1,3,2,1,3,2 are {1,3,4}, {3}, {1,3}", 1.0, word_132132_chambers},
      {2, "Closed form equals inverse columns, all words n=1..4 (1, 2, 16, 768)", 30.0, theorem_exhaustive},
      {3, "Closed form equals inverse columns, 1000 sampled words at each n=5,6,7", 300.0, theorem_sampled},
      {4, "Unimodularity: det +-1 and nonnegative integer inverse", 0.0, unimodularity},
      {5, "Bijection l over all chamber sets, n<=6", 0.0, bijection},
      {6, "BFZ compatibility, all quivers n<=5, and Arr{2,4}", 0.0, bfz_compatibility},
      {7, "Boundary strings (p,q,r,s), all quivers n<=5", 0.0, boundary_strings},
      {8, "Superadditivity: spanning vectors and 10^4 conic combinations x 100 words, n<=6", 0.0,
       superadditivity_check},
      {9, "Chamber roots identity, all words n<=4", 0.0, chamber_roots},
      {10, "Commutation-class invariance of chamber sets, n<=4", 0.0, commutation_invariance},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && seconds >= c.time_limit_s) {
      o.require(false, "time limit exceeded");
    }
    char timing[64];
    if (c.time_limit_s > 0) {
      std::snprintf(timing, sizeof timing, "%.3f s, limit %.0f s", seconds, c.time_limit_s);
    } else {
      std::snprintf(timing, sizeof timing, "%.3f s, exact", seconds);
    }
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << c.number << ": " << c.title << " (" << timing << ")";
    if (!o.ok) std::cout << ": " << o.detail.str();
    std::cout << std::endl;
    failed += !o.ok;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
