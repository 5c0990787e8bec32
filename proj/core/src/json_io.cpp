#include "lusztig/json_io.hpp"

#include <cstdio>

#include "lusztig/error.hpp"

namespace lusztig::json {

namespace {

json pair(const PositiveRoot& r) { return json::array({r.p, r.q}); }

std::string root_key(const PositiveRoot& r) { return to_string(r); }

PositiveRoot parse_root_key(const std::string& key) {
  PositiveRoot r;
  char tail = 0;
  if (std::sscanf(key.c_str(), "(%d,%d%c", &r.p, &r.q, &tail) != 3 || tail != ')') {
    throw InputError("bad root key \"" + key + "\"");
  }
  return r;
}

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

json word(const ReducedWord& w) {
  return {{"n", w.n()}, {"word", std::vector<int>(w.letters().begin(), w.letters().end())}};
}

ReducedWord word_from(const json& j) {
  return guarded([&] { return ReducedWord(j.at("word").get<std::vector<int>>(), j.at("n").get<int>()); });
}

json wiring(const WiringDiagram& d) {
  json out = word(d.word());
  json crossings = json::array();
  for (const Crossing& c : d.crossings()) {
    crossings.push_back({{"pos", c.index + 1}, {"level", c.level}, {"strings", pair(c.strings)}});
  }
  json chamber_list = json::array();
  for (const Chamber& c : chambers(d)) {
    json above = json::array(), below = json::array();
    for (const Crossing& x : c.above) above.push_back(pair(x.strings));
    for (const Crossing& x : c.below) below.push_back(pair(x.strings));
    chamber_list.push_back({{"pair", {c.left + 1, c.right + 1}},
                            {"level", c.level},
                            {"set", chamber_set(c.set)},
                            {"label", c.set.label()},
                            {"above", above},
                            {"below", below}});
  }
  out["crossings"] = crossings;
  out["chambers"] = chamber_list;
  return out;
}

json label(const RowLabel& l) {
  if (const auto* s = std::get_if<SimpleRootLabel>(&l)) return {{"kind", "simple"}, {"root", s->root}};
  const auto& c = std::get<ChamberLabel>(l);
  return {{"kind", "chamber"}, {"pair", {c.left + 1, c.right + 1}}};
}

RowLabel label_from(const json& j) {
  return guarded([&]() -> RowLabel {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "simple") return SimpleRootLabel{j.at("root").get<int>()};
    if (kind == "chamber") {
      const auto p = j.at("pair").get<std::vector<std::size_t>>();
      if (p.size() != 2 || p[0] < 1 || p[1] <= p[0]) throw InputError("bad chamber pair");
      return ChamberLabel{p[0] - 1, p[1] - 1};
    }
    throw InputError("unknown label kind \"" + kind + "\"");
  });
}

json cone(const ConeMatrix& m) {
  json out = word(m.word());
  json rows = json::array();
  for (std::size_t r = 0; r < m.size(); ++r) {
    const auto row = m.rows().row(r);
    rows.push_back({{"label", label(m.labels()[r])}, {"row", std::vector<std::int64_t>(row.begin(), row.end())}});
  }
  out["rows"] = rows;
  return out;
}

ConeMatrix cone_from(const json& j) {
  return guarded([&] {
    const ReducedWord w = word_from(j);
    const std::size_t k = w.size();
    std::vector<RowLabel> labels;
    Matrix<std::int64_t> rows(k, k);
    const json& list = j.at("rows");
    if (list.size() != k) throw InputError("cone matrix needs k rows");
    for (std::size_t r = 0; r < k; ++r) {
      labels.push_back(label_from(list[r].at("label")));
      const auto row = list[r].at("row").get<std::vector<std::int64_t>>();
      if (row.size() != k) throw InputError("cone matrix row has wrong length");
      for (std::size_t c = 0; c < k; ++c) rows(r, c) = row[c];
    }
    ConeMatrix parsed(w, std::move(labels), std::move(rows));
    const ConeMatrix reference = cone_matrix(w);
    if (!std::equal(parsed.labels().begin(), parsed.labels().end(), reference.labels().begin()) ||
        parsed.rows() != reference.rows()) {
      throw InputError("cone matrix rows do not match the word " + w.to_string());
    }
    return parsed;
  });
}

json root_vector(const RootVector& v) {
  json values = json::object();
  for (std::size_t i = 0; i < v.size(); ++i) values[root_key(root_at(i, v.n()))] = v.entries()[i];
  return {{"coords", "root"}, {"n", v.n()}, {"values", values}};
}

json position_vector(const RootVector& v, const ReducedWord& w) {
  return {{"coords", "position"},
          {"n", w.n()},
          {"word", std::vector<int>(w.letters().begin(), w.letters().end())},
          {"values", v.to_positions(root_ordering(w))}};
}

RootVector vector_from(const json& j) {
  return guarded([&] {
    const std::string coords = j.at("coords").get<std::string>();
    if (coords == "root") {
      RootVector v(j.at("n").get<int>());
      for (const auto& [key, value] : j.at("values").items()) v[parse_root_key(key)] = value.get<std::int64_t>();
      return v;
    }
    if (coords == "position") {
      const ReducedWord w = word_from(j);
      const auto values = j.at("values").get<std::vector<std::int64_t>>();
      return RootVector::from_positions(values, root_ordering(w));
    }
    throw InputError("unknown coords tag \"" + coords + "\"");
  });
}

json chamber_set(const ChamberSet& s) { return std::vector<int>(s.members().begin(), s.members().end()); }

json report(const VerificationReport& r) {
  json mismatches = json::array();
  for (const Mismatch& m : r.mismatches) {
    mismatches.push_back({{"word", word(m.word)["word"]},
                          {"label", label(m.label)},
                          {"expected", std::vector<std::int64_t>(m.expected.entries().begin(), m.expected.entries().end())},
                          {"got", std::vector<std::int64_t>(m.got.entries().begin(), m.got.entries().end())}});
  }
  json non_unimodular = json::array();
  for (const ReducedWord& w : r.non_unimodular_words) non_unimodular.push_back(word(w)["word"]);
  return {{"n", r.n},
          {"checked", r.checked},
          {"mismatches", mismatches},
          {"non_unimodular", r.non_unimodular},
          {"non_unimodular_words", non_unimodular}};
}

VerificationReport report_from(const json& j) {
  return guarded([&] {
    VerificationReport r;
    r.n = j.at("n").get<int>();
    r.checked = j.at("checked").get<std::size_t>();
    r.non_unimodular = j.value("non_unimodular", std::size_t{0});
    for (const json& m : j.at("mismatches")) {
      r.mismatches.push_back({ReducedWord(m.at("word").get<std::vector<int>>(), r.n), label_from(m.at("label")),
                              RootVector(m.at("expected").get<std::vector<std::int64_t>>(), r.n),
                              RootVector(m.at("got").get<std::vector<std::int64_t>>(), r.n)});
    }
    if (j.contains("non_unimodular_words"))
      for (const json& w : j.at("non_unimodular_words"))
        r.non_unimodular_words.emplace_back(w.get<std::vector<int>>(), r.n);
    return r;
  });
}

}  // namespace lusztig::json
