#include "lusztig/spanning.hpp"

#include <algorithm>
#include <exception>
#include <thread>

#include "lusztig/error.hpp"
#include "lusztig/wiring.hpp"

namespace lusztig {

RootVector v_simple(int j, int n) {
  if (j < 1 || j > n) throw InputError("simple root index " + std::to_string(j) + " outside [1,n]");
  RootVector v(n);
  for (int p = 1; p <= j; ++p)
    for (int q = j + 1; q <= n + 1; ++q) v[PositiveRoot{p, q}] = 1;
  return v;
}

RootVector v_component(const Component& y, int n) {
  if (y.a < 2 || y.b > n || y.a > y.b) throw InputError("component span outside [2,n]");
  RootVector v(n);
  for (int p = 1; p < y.a; ++p)
    for (int q = y.b + 1; q <= n + 1; ++q) v[PositiveRoot{p, q}] = 1;
  return v;
}

RootVector w_partial_quiver(const PartialQuiver& p) {
  RootVector w(p.n());
  for (const Component& y : components(p)) w += v_component(y, p.n());
  return w;
}

RootVector v_partial_quiver(const PartialQuiver& p) {
  RootVector w = w_partial_quiver(p);
  std::vector<std::int64_t> entries(w.entries().begin(), w.entries().end());
  for (auto& x : entries) x = (x + 1) / 2;  // ceil(x/2) for x >= 0
  return {std::move(entries), p.n()};
}

TheoremReport verify_theorem(const ReducedWord& word) {
  const ConeMatrix matrix = cone_matrix(word);
  const ExactInverse inverse = exact_inverse(matrix);
  const std::vector<Chamber> chamber_list = chambers(build_wiring(word));

  TheoremReport report{word, inverse.determinant, false, {}, true};
  report.unimodular = (inverse.determinant == 1 || inverse.determinant == -1) && inverse.nonnegative;

  for (std::size_t r = 0; r < inverse.labels.size(); ++r) {
    const RowLabel& label = inverse.labels[r];
    LabelVerdict verdict{label, std::nullopt, RootVector(word.n()), inverse.columns[r], false};
    if (const auto* simple = std::get_if<SimpleRootLabel>(&label)) {
      verdict.formula = v_simple(simple->root, word.n());
    } else {
      const auto& pair = std::get<ChamberLabel>(label);
      const auto it = std::find_if(chamber_list.begin(), chamber_list.end(),
                                   [&](const Chamber& c) { return c.left == pair.left && c.right == pair.right; });
      if (it == chamber_list.end()) throw InvariantViolation("cone row without a chamber");
      verdict.partial_quiver = partial_quiver_of(it->set);
      verdict.formula = v_partial_quiver(*verdict.partial_quiver);
    }
    verdict.equal = verdict.formula == verdict.inverse;
    report.overall = report.overall && verdict.equal;
    report.verdicts.push_back(std::move(verdict));
  }
  return report;
}

void VerificationReport::add(const TheoremReport& report) {
  ++checked;
  if (!report.unimodular) {
    ++non_unimodular;
    non_unimodular_words.push_back(report.word);
  }
  for (const LabelVerdict& v : report.verdicts)
    if (!v.equal) mismatches.push_back({report.word, v.label, v.formula, v.inverse});
}

void VerificationReport::merge(VerificationReport other) {
  checked += other.checked;
  non_unimodular += other.non_unimodular;
  for (auto& m : other.mismatches) mismatches.push_back(std::move(m));
  for (auto& w : other.non_unimodular_words) non_unimodular_words.push_back(std::move(w));
  std::sort(mismatches.begin(), mismatches.end(), [](const Mismatch& x, const Mismatch& y) {
    if (x.word != y.word) return x.word < y.word;
    return x.label < y.label;
  });
  std::sort(non_unimodular_words.begin(), non_unimodular_words.end());
}

ReducedWord sampled_word(int n, std::uint64_t seed, std::size_t index) {
  std::seed_seq sequence{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                         static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(sequence);
  const ReducedWord start = ReducedWord::seed(n);
  return random_braid_walk(start, 4 * start.size(), rng);
}

namespace {

template <class WordAt>
VerificationReport run_parallel(int n, std::size_t total, unsigned jobs, const WordAt& word_at) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(total, 1))));
  std::vector<VerificationReport> partial(jobs);
  std::vector<std::exception_ptr> failures(jobs);
  auto work = [&](unsigned worker) {
    VerificationReport& mine = partial[worker];
    mine.n = n;
    try {
      for (std::size_t i = worker; i < total; i += jobs) mine.add(verify_theorem(word_at(i)));
    } catch (...) {
      failures[worker] = std::current_exception();
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(work, w);
  }
  for (const auto& failure : failures)
    if (failure) std::rethrow_exception(failure);
  VerificationReport out;
  out.n = n;
  for (auto& p : partial) out.merge(std::move(p));
  return out;
}

}  // namespace

VerificationReport verify_all(int n, const VerifyMode& mode, unsigned jobs) {
  Rank rank(n);
  if (std::holds_alternative<Exhaustive>(mode)) {
    const std::vector<ReducedWord> words = enumerate_reduced_words(n);
    return run_parallel(n, words.size(), jobs, [&](std::size_t i) -> const ReducedWord& { return words[i]; });
  }
  const Sample sample = std::get<Sample>(mode);
  return run_parallel(n, sample.count, jobs, [&](std::size_t i) { return sampled_word(n, sample.seed, i); });
}

}  // namespace lusztig
