#include "imcm/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include "imcm/engines.hpp"
#include "imcm/gen_words.hpp"
#include "imcm/inverse_tower.hpp"
#include "imcm/partial_injection.hpp"
#include "imcm/relations.hpp"
#include "imcm/small_cases.hpp"
#include "imcm/sphere_nf.hpp"

namespace imcm::cli {

namespace {

using Json = nlohmann::ordered_json;

// Thrown for bad requests; turned into exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Runner {
 public:
  Runner(const Request& r, std::ostream& out) : r_(r), out_(out) {
    if (r_.n < 0) throw UsageError("--n must be >= 0");
    if (r_.format != "text" && r_.format != "json")
      throw UsageError("--format must be text or json");
  }

  int dispatch() {
    const std::string& c = r_.command;
    if (c == "reduce") return reduce();
    if (c == "equal") return equal();
    if (c == "tau") return tau();
    if (c == "abelianize") return abelianize_cmd();
    if (c == "brunnian") return brunnian();
    if (c == "center") return center();
    if (c == "table") return table(false);
    if (c == "enumerate") return table(true);
    if (c == "relcheck") return relcheck();
    throw UsageError("unknown command '" + c + "'");
  }

 private:
  bool json() const { return r_.format == "json"; }

  Flavor flavor(Flavor fallback) const {
    return r_.flavor.empty() ? fallback : parse_flavor(r_.flavor);
  }

  Flavor mcg_only() const {
    const Flavor f = flavor(Flavor::sphere_mcg);
    if (f != Flavor::sphere_mcg)
      throw UsageError("'" + r_.command + "' requires --flavor sphere-mcg");
    return f;
  }

  const std::string& word_arg(std::size_t count) const {
    if (r_.words.size() != count)
      throw UsageError("'" + r_.command + "' expects " + std::to_string(count) + " word argument" +
                       (count == 1 ? "" : "s"));
    return r_.words.front();
  }

  Json header(Flavor f) const {
    Json j;
    j["command"] = r_.command;
    j["n"] = r_.n;
    j["flavor"] = std::string(to_string(f));
    j["seed"] = r_.seed;
    return j;
  }

  static Json element_json(const PartialMCElement& e) {
    Json j;
    j["k"] = e.k();
    j["domain"] = e.domain();
    j["image"] = e.image();
    j["tau"] = to_string(e.tau());
    j["text"] = to_string(e);
    return j;
  }

  void emit(const Json& j) { out_ << j.dump(2) << "\n"; }

  int reduce() {
    const Flavor f = flavor(Flavor::disc);
    if (r_.words.empty()) throw UsageError("'reduce' expects at least one word");
    Json j = header(f);
    j["elements"] = Json::array();
    for (const std::string& text : r_.words) {
      const PartialMCElement e = normalize(parse_word(text, r_.n), f);
      if (json()) {
        Json item = element_json(e);
        item["word"] = text;
        j["elements"].push_back(item);
      } else {
        out_ << to_string(e) << "\n";
      }
    }
    if (json()) emit(j);
    return 0;
  }

  int equal() {
    const Flavor f = flavor(Flavor::disc);
    if (r_.words.size() != 2) throw UsageError("'equal' expects 2 word arguments");
    const Word a = parse_word(r_.words[0], r_.n);
    const Word b = parse_word(r_.words[1], r_.n);
    const bool same = normalize(a, f) == normalize(b, f);
    if (json()) {
      Json j = header(f);
      j["equal"] = same;
      emit(j);
    } else {
      out_ << (same ? "equal" : "distinct") << "\n";
    }
    return same ? 0 : 1;
  }

  int tau() {
    const PartialInjection t = tau_of_word(parse_word(word_arg(1), r_.n));
    if (json()) {
      Json j;
      j["command"] = r_.command;
      j["n"] = r_.n;
      j["tau"] = to_string(t);
      emit(j);
    } else {
      out_ << to_string(t) << "\n";
    }
    return 0;
  }

  int abelianize_cmd() {
    const Flavor f = mcg_only();
    const Abelianization a = abelianize(parse_word(word_arg(1), r_.n));
    if (json()) {
      Json j = header(f);
      j["eps"] = a.eps;
      j["residue"] = a.residue;
      j["modulus"] = a.modulus;
      emit(j);
    } else {
      out_ << to_string(a) << "\n";
    }
    return 0;
  }

  int brunnian() {
    const Flavor f = flavor(Flavor::disc);
    const PartialMCElement e = normalize(parse_word(word_arg(1), r_.n), f);
    Json j = header(f);
    j["per_point"] = Json::array();
    bool all = true;
    for (int i = 1; i <= r_.n; ++i) {
      const bool b = is_brunnian(e, i);
      all = all && b;
      j["per_point"].push_back(b);
      if (!json()) out_ << i << ": " << (b ? "true" : "false") << "\n";
    }
    j["all"] = all;
    if (json()) {
      emit(j);
    } else {
      out_ << "all: " << (all ? "true" : "false") << "\n";
    }
    return 0;
  }

  int center() {
    const Flavor f = mcg_only();
    const PartialMCElement e = normalize(parse_word(word_arg(1), r_.n), f);
    const bool c = in_center(e);
    if (json()) {
      Json j = header(f);
      j["element"] = to_string(e);
      j["central"] = c;
      emit(j);
    } else {
      out_ << (c ? "true" : "false") << "\n";
    }
    return 0;
  }

  MultiplicationTable build_table(Flavor& f) const {
    if (r_.group == "im0n") {
      f = Flavor::sphere_mcg;
      return enumerate_im0n(r_.n).table;
    }
    if (r_.group == "symmetric-inverse") return symmetric_inverse_table(r_.n);
    if (r_.group == "symmetric") return symmetric_group_table(r_.n);
    if (r_.group == "sphere") {
      f = flavor(Flavor::sphere_mcg);
      if (f == Flavor::disc) throw UsageError("--group sphere needs a sphere flavor");
      return enumerate_sphere(r_.n, f == Flavor::sphere_braid ? SphereFlavor::braid
                                                             : SphereFlavor::mcg)
          .table;
    }
    throw UsageError("unknown --group '" + r_.group + "'");
  }

  int table(bool names_only) {
    if (!r_.words.empty()) throw UsageError("'" + r_.command + "' takes no word arguments");
    Flavor f = Flavor::sphere_mcg;
    const MultiplicationTable t = build_table(f);
    if (json()) {
      Json j = header(f);
      j["group"] = r_.group;
      j["size"] = t.size();
      j["elements"] = t.names();
      if (!names_only) {
        Json rows = Json::array();
        for (int a = 0; a < t.size(); ++a) {
          Json row = Json::array();
          for (int b = 0; b < t.size(); ++b) row.push_back(t.product(a, b));
          rows.push_back(row);
        }
        j["products"] = rows;
      }
      emit(j);
    } else if (names_only) {
      for (const auto& name : t.names()) out_ << name << "\n";
      out_ << "count: " << t.size() << "\n";
    } else {
      out_ << t.to_text();
    }
    return 0;
  }

  int relcheck() {
    const Flavor f = flavor(Flavor::disc);
    Presentation p = Presentation::disc_inverse;
    if (!r_.presentation.empty()) {
      p = parse_presentation(r_.presentation);
    } else if (f == Flavor::sphere_braid) {
      p = Presentation::sphere_inverse_braid;
    } else if (f == Flavor::sphere_mcg) {
      p = Presentation::sphere_inverse_mcg;
    }
    if (r_.n < 2) throw UsageError("relcheck needs --n >= 2");
    const RelationReport report = certify(p, r_.n);
    if (json()) {
      Json j = header(f);
      j["presentation"] = std::string(to_string(p));
      j["engine"] = std::string(engine_name(p));
      j["relations"] = Json::array();
      for (const auto& o : report.outcomes) {
        Json item;
        item["family"] = o.family;
        item["lhs"] = o.lhs;
        item["rhs"] = o.rhs;
        item["passed"] = o.passed;
        j["relations"].push_back(item);
      }
      j["failures"] = report.failures();
      emit(j);
    } else {
      for (const auto& o : report.outcomes)
        out_ << (o.passed ? "PASS " : "FAIL ") << o.family << ": " << o.lhs << " = " << o.rhs
             << "\n";
      out_ << to_string(p) << " n=" << r_.n << " via " << engine_name(p) << ": "
           << report.outcomes.size() - report.failures() << "/" << report.outcomes.size()
           << " passed\n";
    }
    return report.all_passed() ? 0 : 1;
  }

  const Request& r_;
  std::ostream& out_;
};

}  // namespace

int run(const Request& request, std::ostream& out, std::ostream& err) {
  try {
    return Runner(request, out).dispatch();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return 2;
}

int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Normal forms and word problems for inverse braid and mapping class monoids"};
  app.require_subcommand(1);
  Request r;
  const std::vector<std::pair<std::string, std::string>> commands{
      {"reduce", "print the canonical element of each word"},
      {"equal", "exit 0 when the two words are equal, 1 otherwise"},
      {"tau", "print the partial injection of a word"},
      {"abelianize", "image in {1,e} x Z/m (sphere-mcg)"},
      {"brunnian", "test eps_i * w == eps_i for every i"},
      {"center", "membership in the center (sphere-mcg)"},
      {"table", "multiplication table of a small monoid"},
      {"enumerate", "elements of a small monoid"},
      {"relcheck", "check the defining relations of a presentation"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--n", r.n, "number of points")->required(name != "table" && name != "enumerate");
    sub->add_option("--flavor", r.flavor, "disc, sphere-braid or sphere-mcg");
    sub->add_option("--format", r.format, "text or json");
    sub->add_option("--seed", r.seed, "seed recorded in structured output");
    sub->add_option("--group", r.group, "im0n, symmetric-inverse, symmetric or sphere");
    sub->add_option("--presentation", r.presentation, "presentation for relcheck");
    sub->add_option("words", r.words, "words in the generator grammar");
    sub->callback([&r, name = name] { r.command = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  return run(r, out, err);
}

}  // namespace imcm::cli
