#include "lusztig/cone.hpp"

#include <algorithm>
#include <cstdlib>

#include "lusztig/bareiss.hpp"
#include "lusztig/error.hpp"

namespace lusztig {

RootVector::RootVector(int n) : n_(Rank(n).n()), entries_(root_count(n), 0) {}

RootVector::RootVector(std::vector<std::int64_t> entries, int n) : n_(Rank(n).n()), entries_(std::move(entries)) {
  if (entries_.size() != root_count(n)) {
    throw InputError("root vector for n=" + std::to_string(n) + " needs " + std::to_string(root_count(n)) +
                     " entries, got " + std::to_string(entries_.size()));
  }
}

RootVector RootVector::from_positions(std::span<const std::int64_t> positions, const RootOrdering& ordering) {
  if (positions.size() != ordering.size()) {
    throw InputError("point has " + std::to_string(positions.size()) + " coordinates, expected " +
                     std::to_string(ordering.size()));
  }
  RootVector v(ordering.n());
  for (std::size_t j = 0; j < positions.size(); ++j) v[ordering[j]] = positions[j];
  return v;
}

RootVector RootVector::unit(const PositiveRoot& root, int n) {
  RootVector v(n);
  v[root] = 1;
  return v;
}

std::vector<std::int64_t> RootVector::to_positions(const RootOrdering& ordering) const {
  if (ordering.n() != n_) throw InputError("rank mismatch between vector and word");
  std::vector<std::int64_t> out(ordering.size());
  for (std::size_t j = 0; j < ordering.size(); ++j) out[j] = (*this)[ordering[j]];
  return out;
}

bool RootVector::nonnegative() const {
  return std::all_of(entries_.begin(), entries_.end(), [](std::int64_t x) { return x >= 0; });
}

RootVector& RootVector::operator+=(const RootVector& other) {
  if (other.n_ != n_) throw InputError("rank mismatch in vector sum");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

RootVector operator*(std::int64_t c, RootVector v) {
  for (auto& x : v.entries_) x *= c;
  return v;
}

std::string to_string(const RootVector& v) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v.entries()[i] == 0) continue;
    if (!first) out += ", ";
    first = false;
    out += to_string(root_at(i, v.n())) + ":" + std::to_string(v.entries()[i]);
  }
  return out + "}";
}

std::string to_string(const RowLabel& label) {
  if (const auto* s = std::get_if<SimpleRootLabel>(&label)) return "simple(" + std::to_string(s->root) + ")";
  const auto& c = std::get<ChamberLabel>(label);
  return "chamber(" + std::to_string(c.left + 1) + "," + std::to_string(c.right + 1) + ")";
}

ConeMatrix::ConeMatrix(ReducedWord word, std::vector<RowLabel> labels, Matrix<std::int64_t> rows)
    : word_(std::move(word)), ordering_(root_ordering(word_)), labels_(std::move(labels)), rows_(std::move(rows)) {
  const std::size_t k = word_.size();
  if (labels_.size() != k || rows_.rows() != k || rows_.cols() != k) throw InputError("cone matrix must be k x k");
}

std::size_t ConeMatrix::row_of(const RowLabel& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw InputError("no row labelled " + to_string(label));
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<std::int64_t> ConeMatrix::evaluate(const RootVector& a) const {
  if (a.n() != word_.n()) throw InputError("rank mismatch between point and word");
  const auto x = a.to_positions(ordering_);
  std::vector<std::int64_t> out(size(), 0);
  for (std::size_t r = 0; r < size(); ++r)
    for (std::size_t c = 0; c < size(); ++c) out[r] += rows_(r, c) * x[c];
  return out;
}

ConeMatrix cone_matrix(const ReducedWord& word) {
  const std::size_t k = word.size();
  const int n = word.n();
  const RootOrdering ordering = root_ordering(word);
  std::vector<RowLabel> labels;
  Matrix<std::int64_t> rows(k, k);

  for (int j = 1; j <= n; ++j) {
    rows(labels.size(), ordering.position_of({j, j + 1})) = 1;
    labels.emplace_back(SimpleRootLabel{j});
  }
  for (std::size_t s = 0; s < k; ++s) {
    std::size_t t = s + 1;
    while (t < k && word[t] != word[s]) ++t;
    if (t == k) continue;
    const std::size_t r = labels.size();
    rows(r, s) = -1;
    rows(r, t) = -1;
    for (std::size_t p = s + 1; p < t; ++p)
      if (std::abs(word[p] - word[s]) == 1) rows(r, p) = 1;
    labels.emplace_back(ChamberLabel{s, t});
  }
  return {word, std::move(labels), std::move(rows)};
}

ExactInverse exact_inverse(const ConeMatrix& m) {
  const std::size_t k = m.size();
  Matrix<BigInt> big(k, k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) big(r, c) = m.rows()(r, c);

  const auto adj = bareiss_adjugate(big);
  if (!adj) throw InvariantViolation("cone matrix of " + m.word().to_string() + " is singular");

  ExactInverse out{adj->determinant, {m.labels().begin(), m.labels().end()}, {}, true};
  for (std::size_t col = 0; col < k; ++col) {
    std::vector<std::int64_t> positions(k);
    for (std::size_t row = 0; row < k; ++row) {
      const BigInt& entry = adj->adjugate(row, col);
      if (entry % adj->determinant != 0) {
        throw InvariantViolation("inverse of cone matrix of " + m.word().to_string() + " is not integral");
      }
      const BigInt value = entry / adj->determinant;
      positions[row] = value.convert_to<std::int64_t>();
      if (value < 0) out.nonnegative = false;
    }
    out.columns.push_back(RootVector::from_positions(positions, m.ordering()));
  }
  return out;
}

const RootVector& SpanningSet::vector_for(const RowLabel& label) const {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw InputError("no spanning vector labelled " + to_string(label));
  return vectors[static_cast<std::size_t>(it - labels.begin())];
}

SpanningSet invert_unimodular(const ConeMatrix& m) {
  ExactInverse inv = exact_inverse(m);
  const std::string word = m.word().to_string();
  if (inv.determinant != 1 && inv.determinant != -1) {
    throw InvariantViolation("cone matrix of " + word + " has determinant " + inv.determinant.str());
  }
  if (!inv.nonnegative) throw InvariantViolation("inverse of cone matrix of " + word + " has a negative entry");

  const std::size_t k = m.size();
  Matrix<std::int64_t> q(k, k);
  for (std::size_t c = 0; c < k; ++c) {
    const auto positions = inv.columns[c].to_positions(m.ordering());
    for (std::size_t r = 0; r < k; ++r) q(r, c) = positions[r];
  }
  const auto identity = Matrix<std::int64_t>::identity(k);
  if (m.rows() * q != identity || q * m.rows() != identity) {
    throw InvariantViolation("P*Q or Q*P is not the identity for " + word);
  }
  return {std::move(inv.labels), std::move(inv.columns)};
}

Membership membership(const ConeMatrix& m, const RootVector& a) {
  Membership out;
  const auto values = m.evaluate(a);
  for (std::size_t r = 0; r < values.size(); ++r)
    if (values[r] < 0) out.violated_rows.push_back(m.labels()[r]);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.entries()[i] < 0) out.negative_coordinates.push_back(root_at(i, a.n()));
  out.member = out.violated_rows.empty() && out.negative_coordinates.empty();
  return out;
}

bool contains(const ConeMatrix& m, const RootVector& a) { return membership(m, a).member; }
bool contains(const ReducedWord& word, const RootVector& a) { return contains(cone_matrix(word), a); }

std::map<RowLabel, std::int64_t> decompose(const ConeMatrix& m, const RootVector& a) {
  const Membership mem = membership(m, a);
  if (!mem.member) {
    std::string why;
    for (const auto& label : mem.violated_rows) why += " " + to_string(label);
    for (const auto& root : mem.negative_coordinates) why += " a" + to_string(root) + "<0";
    throw NotInCone("point " + to_string(a) + " is not in the cone of " + m.word().to_string() + ":" + why);
  }
  const auto values = m.evaluate(a);
  std::map<RowLabel, std::int64_t> out;
  for (std::size_t r = 0; r < values.size(); ++r) out.emplace(m.labels()[r], values[r]);
  return out;
}

std::map<RowLabel, std::int64_t> decompose(const ReducedWord& word, const RootVector& a) {
  return decompose(cone_matrix(word), a);
}

bool superadditivity(const RootVector& a) {
  const int m = a.n() + 1;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      for (int k = j + 1; k <= m; ++k)
        if (a(i, k) < a(i, j) + a(j, k)) return false;
  return true;
}

bool superadditivity(const ReducedWord& word, const RootVector& a) {
  if (word.n() != a.n()) throw InputError("rank mismatch between point and word");
  return superadditivity(a);
}

std::optional<std::map<ChamberLabel, std::int64_t>> triangle_combination(const ConeMatrix& m,
                                                                          const SpanningSet& spanning, int i, int j,
                                                                          int k) {
  const int n = m.word().n();
  if (!(1 <= i && i < j && j < k && k <= n + 1)) throw InputError("need 1 <= i < j < k <= n+1");
  const RootOrdering& ordering = m.ordering();

  // Target row over position coordinates; y_r = target . Q e_r = target . v_r.
  std::vector<std::int64_t> target(m.size(), 0);
  target[ordering.position_of({i, k})] += 1;
  target[ordering.position_of({i, j})] -= 1;
  target[ordering.position_of({j, k})] -= 1;

  std::map<ChamberLabel, std::int64_t> out;
  for (std::size_t r = 0; r < spanning.labels.size(); ++r) {
    const auto column = spanning.vectors[r].to_positions(ordering);
    std::int64_t y = 0;
    for (std::size_t c = 0; c < column.size(); ++c) y += target[c] * column[c];
    if (std::holds_alternative<SimpleRootLabel>(spanning.labels[r])) {
      if (y != 0) return std::nullopt;
    } else if (y != 0) {
      out.emplace(std::get<ChamberLabel>(spanning.labels[r]), y);
    }
  }
  return out;
}

}  // namespace lusztig
