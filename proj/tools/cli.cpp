#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "lusztig/cone.hpp"
#include "lusztig/error.hpp"
#include "lusztig/json_io.hpp"
#include "lusztig/pquiver.hpp"
#include "lusztig/spanning.hpp"
#include "lusztig/weyl_words.hpp"
#include "lusztig/wiring.hpp"

namespace lusztig::cli {

namespace {

using json = nlohmann::json;
namespace io = lusztig::json;

struct Options {
  int n = 0;
  std::string word;
  std::string quiver;
  std::string set;
  std::string partial_quiver;
  std::string point;
  std::string format = "text";
  std::string mode = "exhaustive";
  std::uint64_t seed = 1;
  std::size_t count = 1000;
  unsigned jobs = 1;
  std::string out_file;
  bool commutation_class = false;
};

std::vector<std::int64_t> parse_point(const std::string& text) {
  std::vector<std::int64_t> values;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stoll(token, &used));
      if (token.find_first_not_of(" \t", used) != std::string::npos) throw InputError("");
    } catch (const std::exception&) {
      throw InputError("bad point coordinate \"" + token + "\"");
    }
  }
  return values;
}

std::string join(std::span<const std::int64_t> values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + std::to_string(values[i]);
  return s;
}

std::string root_list(const RootVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v.entries()[i] == 0) continue;
    if (!s.empty()) s += ' ';
    s += to_string(root_at(i, v.n()));
    if (v.entries()[i] != 1) s += "x" + std::to_string(v.entries()[i]);
  }
  return s.empty() ? "0" : s;
}

void need(bool present, const std::string& what) {
  if (!present) throw CLI::RequiredError(what);
}

class Dispatcher {
 public:
  explicit Dispatcher(const Options& o) : o_(o) {}

  ReducedWord word() const {
    need(o_.n > 0, "--n");
    need(!o_.word.empty(), "--word");
    return ReducedWord::parse(o_.word, o_.n);
  }

  bool json_format() const { return o_.format == "json"; }

  int roots(std::ostream& out) const {
    const ReducedWord w = word();
    const RootOrdering ordering = root_ordering(w);
    if (json_format()) {
      json list = json::array();
      for (const auto& r : ordering.roots()) list.push_back({r.p, r.q});
      json j = io::word(w);
      j["roots"] = list;
      out << j.dump() << '\n';
    } else {
      for (std::size_t i = 0; i < ordering.size(); ++i)
        out << i + 1 << ' ' << w[i] << ' ' << to_string(ordering[i]) << '\n';
    }
    return kExitOk;
  }

  int chambers_cmd(std::ostream& out) const {
    const WiringDiagram d = build_wiring(word());
    if (json_format()) {
      out << io::wiring(d).dump() << '\n';
      return kExitOk;
    }
    for (const Chamber& c : chambers(d)) {
      out << "pair (" << c.left + 1 << ',' << c.right + 1 << ") level " << c.level << " set " << c.set.label()
          << " partial-quiver " << partial_quiver_of(c.set).to_string() << '\n';
    }
    return kExitOk;
  }

  int render_cmd(std::ostream& out) const {
    const WiringDiagram d = build_wiring(word());
    if (o_.format == "json") {
      out << io::wiring(d).dump() << '\n';
    } else {
      out << render(d, o_.format == "svg" ? RenderFormat::Svg : RenderFormat::Ascii);
    }
    return kExitOk;
  }

  int cone_cmd(std::ostream& out) const {
    const ConeMatrix m = cone_matrix(word());
    if (json_format()) {
      out << io::cone(m).dump() << '\n';
      return kExitOk;
    }
    for (std::size_t r = 0; r < m.size(); ++r) {
      out << to_string(m.labels()[r]) << ':';
      for (std::int64_t x : m.rows().row(r)) out << ' ' << x;
      out << '\n';
    }
    return kExitOk;
  }

  int spanning_cmd(std::ostream& out) const {
    const ReducedWord w = word();
    const ConeMatrix m = cone_matrix(w);
    const SpanningSet s = invert_unimodular(m);
    const TheoremReport report = verify_theorem(w);
    if (json_format()) {
      json list = json::array();
      for (std::size_t i = 0; i < s.labels.size(); ++i) {
        json entry = {{"label", io::label(s.labels[i])},
                      {"root", io::root_vector(s.vectors[i])},
                      {"position", io::position_vector(s.vectors[i], w)},
                      {"formula_matches", report.verdicts[i].equal}};
        if (report.verdicts[i].partial_quiver) entry["partial_quiver"] = report.verdicts[i].partial_quiver->to_string();
        list.push_back(entry);
      }
      json j = io::word(w);
      j["vectors"] = list;
      out << j.dump() << '\n';
      return kExitOk;
    }
    for (std::size_t i = 0; i < s.labels.size(); ++i) {
      out << to_string(s.labels[i]);
      if (report.verdicts[i].partial_quiver) out << " [" << report.verdicts[i].partial_quiver->to_string() << ']';
      out << ": position (" << join(s.vectors[i].to_positions(m.ordering())) << ") root " << root_list(s.vectors[i])
          << (report.verdicts[i].equal ? "" : "  MISMATCH vs closed form") << '\n';
    }
    return kExitOk;
  }

  int verify_cmd(std::ostream& out) const {
    need(o_.n > 0, "--n");
    VerificationReport report;
    if (!o_.word.empty()) {
      report.n = o_.n;
      report.add(verify_theorem(word()));
    } else if (o_.mode == "exhaustive") {
      report = verify_all(o_.n, Exhaustive{}, o_.jobs);
    } else {
      report = verify_all(o_.n, Sample{o_.count, o_.seed}, o_.jobs);
    }
    if (json_format()) {
      out << io::report(report).dump() << '\n';
    } else {
      out << report.checked << " words, " << report.mismatches.size() << " mismatches";
      if (report.non_unimodular) out << ", " << report.non_unimodular << " non-unimodular";
      out << '\n';
      for (const Mismatch& mm : report.mismatches) {
        out << "  " << mm.word.to_string() << ' ' << to_string(mm.label) << " expected " << root_list(mm.expected)
            << " got " << root_list(mm.got) << '\n';
      }
    }
    return report.ok() ? kExitOk : kExitDomainError;
  }

  RootVector point(const ReducedWord& w) const {
    need(!o_.point.empty(), "--point");
    return RootVector::from_positions(parse_point(o_.point), root_ordering(w));
  }

  int member_cmd(std::ostream& out) const {
    const ReducedWord w = word();
    const RootVector a = point(w);
    const Membership m = membership(cone_matrix(w), a);
    if (json_format()) {
      json violated = json::array();
      for (const auto& l : m.violated_rows) violated.push_back(io::label(l));
      json negative = json::array();
      for (const auto& r : m.negative_coordinates) negative.push_back({r.p, r.q});
      out << json{{"member", m.member},
                  {"root", io::root_vector(a)},
                  {"position", io::position_vector(a, w)},
                  {"violated_rows", violated},
                  {"negative_coordinates", negative}}
                 .dump()
          << '\n';
    } else {
      out << (m.member ? "true" : "false") << '\n';
      out << "root coordinates: " << root_list(a) << '\n';
      for (const auto& l : m.violated_rows) out << "violated row: " << to_string(l) << '\n';
      for (const auto& r : m.negative_coordinates) out << "negative coordinate: a" << to_string(r) << '\n';
    }
    return kExitOk;
  }

  int decompose_cmd(std::ostream& out) const {
    const ReducedWord w = word();
    const RootVector a = point(w);
    const auto coefficients = decompose(w, a);
    if (json_format()) {
      json terms = json::array();
      for (const auto& [label, c] : coefficients) terms.push_back({{"label", io::label(label)}, {"coefficient", c}});
      out << json{{"root", io::root_vector(a)}, {"position", io::position_vector(a, w)}, {"terms", terms}}.dump()
          << '\n';
    } else {
      for (const auto& [label, c] : coefficients) out << to_string(label) << ' ' << c << '\n';
    }
    return kExitOk;
  }

  int enumerate_cmd(std::ostream& out) const {
    need(o_.n > 0, "--n");
    std::vector<ReducedWord> words;
    if (o_.commutation_class) {
      const auto cls = commutation_class(word());
      words.assign(cls.begin(), cls.end());
    } else {
      words = enumerate_reduced_words(o_.n);
    }
    if (json_format()) {
      json list = json::array();
      for (const auto& w : words) list.push_back(io::word(w)["word"]);
      out << json{{"n", o_.n}, {"count", words.size()}, {"words", list}}.dump() << '\n';
    } else {
      for (const auto& w : words) out << w.to_string() << '\n';
    }
    return kExitOk;
  }

  int bfz_cmd(std::ostream& out) const {
    need(!o_.quiver.empty() || o_.n == 1, "--quiver");
    const Quiver q = o_.n > 0 ? Quiver::parse(o_.quiver, o_.n) : Quiver::parse(o_.quiver);
    const ReducedWord w = bfz_word(q);
    const WiringDiagram d = build_wiring(w);
    if (json_format()) {
      json j = io::wiring(d);
      j["quiver"] = q.to_string();
      j["left_edges"] = q.left_edges();
      for (auto& c : j["chambers"]) {
        c["partial_quiver"] = partial_quiver_of(ChamberSet(c["set"].get<std::vector<int>>(), q.n())).to_string();
      }
      out << j.dump() << '\n';
    } else {
      out << w.to_string() << '\n';
      for (const Chamber& c : chambers(d))
        out << "set " << c.set.label() << " partial-quiver " << partial_quiver_of(c.set).to_string() << '\n';
    }
    return kExitOk;
  }

  int pq_cmd(std::ostream& out) const {
    if (!o_.set.empty()) {
      need(o_.n > 0, "--n");
      const ChamberSet s = ChamberSet::parse(o_.set, o_.n);
      return describe(out, partial_quiver_of(s));
    }
    need(!o_.partial_quiver.empty(), "--set or --pq");
    return describe(out, o_.n > 0 ? PartialQuiver::parse(o_.partial_quiver, o_.n)
                                   : PartialQuiver::parse(o_.partial_quiver));
  }

 private:
  int describe(std::ostream& out, const PartialQuiver& p) const {
    const ChamberSet s = chamber_set_of(p);
    const RootVector v = v_partial_quiver(p);
    if (json_format()) {
      json comps = json::array();
      for (const Component& c : components(p))
        comps.push_back({{"type", std::string(1, static_cast<char>(c.type))}, {"a", c.a}, {"b", c.b}});
      out << json{{"n", p.n()},
                  {"partial_quiver", p.to_string()},
                  {"set", io::chamber_set(s)},
                  {"components", comps},
                  {"w", io::root_vector(w_partial_quiver(p))},
                  {"v", io::root_vector(v)}}
                 .dump()
          << '\n';
    } else {
      out << "partial-quiver " << p.to_string() << '\n' << "set " << s.label() << '\n';
      for (const Component& c : components(p))
        out << "component " << static_cast<char>(c.type) << " a=" << c.a << " b=" << c.b << '\n';
      out << "v " << root_list(v) << '\n';
    }
    return kExitOk;
  }

  const Options& o_;
};

void print_error(std::ostream& err, const std::string& kind, const std::string& message) {
  err << json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lusztig cones of type A: reduced words, chamber ansatz, spanning vectors"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_word = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "rank of A_n")->check(CLI::PositiveNumber);
    sub->add_option("--word", o.word, "reduced word, comma separated, e.g. 1,3,2,1,3,2");
  };
  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember(allowed));
    sub->add_option("--out", o.out_file, "write output to FILE instead of stdout");
  };

  struct Command {
    std::string name;
    std::string help;
    std::function<int(const Dispatcher&, std::ostream&)> action;
  };
  const std::vector<Command> commands = {
      {"roots", "positive-root ordering of a word", &Dispatcher::roots},
      {"chambers", "bounded chambers and chamber sets", &Dispatcher::chambers_cmd},
      {"render", "draw the chamber ansatz", &Dispatcher::render_cmd},
      {"cone-matrix", "defining matrix P of the Lusztig cone", &Dispatcher::cone_cmd},
      {"spanning", "spanning vectors (columns of P^-1)", &Dispatcher::spanning_cmd},
      {"verify", "check the closed-form spanning vectors", &Dispatcher::verify_cmd},
      {"member", "cone membership of a point (position coordinates)", &Dispatcher::member_cmd},
      {"decompose", "write a cone point in terms of spanning vectors", &Dispatcher::decompose_cmd},
      {"enumerate", "all reduced words of w0", &Dispatcher::enumerate_cmd},
      {"bfz-word", "quiver-compatible reduced word", &Dispatcher::bfz_cmd},
      {"pq", "partial quiver <-> chamber set", &Dispatcher::pq_cmd},
  };

  std::vector<std::pair<CLI::App*, const Command*>> subs;
  for (const Command& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    add_word(sub);
    subs.emplace_back(sub, &c);
    if (c.name == "render") {
      o.format = "text";
      add_format(sub, {"text", "ascii", "svg", "json"});
    } else {
      add_format(sub, {"text", "json"});
    }
    if (c.name == "verify") {
      sub->add_option("--mode", o.mode, "exhaustive or sample")->check(CLI::IsMember({"exhaustive", "sample"}));
      sub->add_option("--seed", o.seed, "RNG seed for sample mode");
      sub->add_option("--count", o.count, "number of sampled words");
      sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    }
    if (c.name == "member" || c.name == "decompose") sub->add_option("--point", o.point, "point in position coordinates");
    if (c.name == "enumerate") sub->add_flag("--commutation-class", o.commutation_class, "only the class of --word");
    if (c.name == "bfz-word") sub->add_option("--quiver", o.quiver, "quiver symbols, edge n first, e.g. LRL");
    if (c.name == "pq") {
      sub->add_option("--set", o.set, "chamber set, e.g. 1,3,4");
      sub->add_option("--pq", o.partial_quiver, "partial quiver, e.g. -LR-");
    }
  }

  std::vector<std::string> argv_storage{"lusztig"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  const Dispatcher dispatcher(o);
  for (const auto& [sub, command] : subs) {
    if (!sub->parsed()) continue;
    try {
      std::ostringstream buffer;
      const int status = command->action(dispatcher, buffer);
      if (o.out_file.empty()) {
        out << buffer.str();
      } else {
        std::ofstream file(o.out_file, std::ios::binary);
        if (!file) throw InputError("cannot open output file " + o.out_file);
        file << buffer.str();
      }
      return status;
    } catch (const CLI::RequiredError& e) {
      err << "error: " << e.what() << '\n' << sub->help();
      return kExitUsage;
    } catch (const Error& e) {
      print_error(err, e.kind(), e.what());
      return kExitDomainError;
    } catch (const std::exception& e) {
      print_error(err, "internal", e.what());
      return kExitDomainError;
    }
  }
  return kExitUsage;
}

}  // namespace lusztig::cli
