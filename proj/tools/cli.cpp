#include "cli.hpp"

#include <algorithm>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gp/amalgam.hpp"
#include "gp/conjugacy.hpp"
#include "gp/cyclic.hpp"
#include "gp/error.hpp"
#include "gp/parabolic.hpp"
#include "gp/separability.hpp"
#include "selftest.hpp"

namespace gp::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string group;
  std::vector<std::string> words;
  std::string vertex;
  std::size_t radius = 6;
  std::string mode = "finite";
  bool json = false;
  std::uint64_t seed = 1;
  std::string core;
  std::string conjugator = "1";
  bool brute_force = false;
  std::size_t budget = 100000;
};

struct Result {
  int code = kDecided;
  std::vector<std::string> lines;
  json doc = json::object();
};

json names(const GroupPresentation& pres, VertexSet s) {
  json out = json::array();
  for (VertexId v : s) out.push_back(pres.name(v));
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

class Session {
 public:
  Session(const Options& o) : opts_(o) {
    pres_ = std::make_shared<const GroupPresentation>(load_presentation(o.group));
  }

  Element word(std::size_t i) const { return Element::parse(pres_, opts_.words.at(i)); }
  const GroupPresentation& pres() const { return *pres_; }
  const PresentationPtr& ptr() const { return pres_; }
  const Options& opts() const { return opts_; }

 private:
  const Options& opts_;
  PresentationPtr pres_;
};

Result cmd_normalize(const Session& s) {
  Element e = s.word(0);
  ShapeReport r = shape(e);
  const auto& p = s.pres();
  Result out;
  out.lines = {e.str(), "length: " + std::to_string(r.length), "support: " + p.render_set(r.support),
               "first letters: " + p.render_set(r.first_letters), "last letters: " + p.render_set(r.last_letters)};
  out.doc = {{"normal_form", e.str()},
             {"length", r.length},
             {"support", names(p, r.support)},
             {"first_letters", names(p, r.first_letters)},
             {"last_letters", names(p, r.last_letters)}};
  return out;
}

Result cmd_eq(const Session& s) {
  Result out;
  if (s.opts().brute_force) {
    auto w1 = parse_word(s.pres(), s.opts().words.at(0));
    auto w2 = parse_word(s.pres(), s.opts().words.at(1));
    auto o = brute_force_equal(s.pres(), w1, w2, s.opts().budget);
    out.code = o == EqualityOutcome::equal ? kDecided : o == EqualityOutcome::not_equal ? kNegative : kUnknown;
    out.lines = {to_string(o)};
    out.doc = {{"outcome", to_string(o)}};
    return out;
  }
  bool eq = s.word(0) == s.word(1);
  out.code = eq ? kDecided : kNegative;
  out.lines = {eq ? "equal" : "not equal"};
  out.doc = {{"equal", eq}};
  return out;
}

Result cmd_conj(const Session& s) {
  Element x = s.word(0), y = s.word(1);
  Result out;
  if (s.opts().brute_force) {
    auto r = brute_force_conjugate(x, y, s.opts().radius);
    if (r.conjugator) {
      out.lines = {"conjugate; conjugator: " + r.conjugator->str()};
      out.doc = {{"conjugate", true}, {"conjugator", r.conjugator->str()}};
    } else {
      out.code = kUnknown;
      out.lines = {"exhausted at radius " + std::to_string(s.opts().radius)};
      out.doc = {{"conjugate", nullptr}, {"radius", s.opts().radius}};
    }
    return out;
  }
  auto v = are_conjugate(x, y);
  if (v.conjugate) {
    out.lines = {"conjugate; conjugator: " + v.conjugator->str()};
    out.doc = {{"conjugate", true}, {"conjugator", v.conjugator->str()}};
  } else {
    out.code = kNegative;
    out.lines = {"not conjugate; refutation: " + to_string(*v.refutation)};
    out.doc = {{"conjugate", false}, {"refutation", to_string(*v.refutation)}};
  }
  return out;
}

Result cmd_verify(const Session& s) {
  Element x = s.word(0), y = s.word(1), w = s.word(2);
  bool ok = conjugate(w, x) == y;
  Result out;
  out.code = ok ? kDecided : kNegative;
  out.lines = {ok ? "verified" : "rejected"};
  out.doc = {{"verified", ok}};
  return out;
}

Result cmd_cyc(const Session& s) {
  Element e = s.word(0);
  auto r = cyclically_reduce(e);
  Result out;
  out.lines = {"reduced: " + r.reduced.str(), "conjugator: " + r.conjugator.str(),
               "input cyclically reduced: " + yes_no(is_cyclically_reduced(e))};
  out.doc = {{"reduced", r.reduced.str()},
             {"conjugator", r.conjugator.str()},
             {"input_cyclically_reduced", is_cyclically_reduced(e)}};
  return out;
}

Result cmd_ps(const Session& s) {
  auto d = ps_decompose(s.word(0));
  const auto& p = s.pres();
  Result out;
  out.lines = {"s-part: " + d.s_part.str(), "p-part: " + d.p_part.str(), "S: " + p.render_set(d.s_vertices),
               "P: " + p.render_set(d.p_vertices)};
  out.doc = {{"s_part", d.s_part.str()},
             {"p_part", d.p_part.str()},
             {"s_vertices", names(p, d.s_vertices)},
             {"p_vertices", names(p, d.p_vertices)}};
  return out;
}

AmalgamView view_of(const Session& s) {
  if (s.opts().vertex.empty()) throw InvalidArgument("--vertex is required");
  return decompose_at(s.ptr(), s.opts().vertex);
}

Result cmd_amalgam(const Session& s) {
  AmalgamView view = view_of(s);
  const auto& p = s.pres();
  AmalgamForm f = amalgam_form(view, s.word(0));
  Result out;
  out.lines = {"A: " + p.render_set(view.a_vertices), "H: " + p.render_set(view.h_vertices),
               "C: " + p.render_set(view.c_vertices)};
  std::istringstream rendered(render_form(f));
  for (std::string line; std::getline(rendered, line);) out.lines.push_back(line);
  bool cr = is_amalgam_cyclically_reduced(view, f);
  out.lines.push_back("consonant length: " + std::to_string(f.consonant_length()));
  out.lines.push_back("cyclically reduced: " + yes_no(cr));
  json pieces = json::array(), consonants = json::array();
  for (const auto& x : f.pieces) pieces.push_back(x.str());
  for (const auto& c : f.consonants) consonants.push_back(c.str());
  out.doc = {{"a_vertices", names(p, view.a_vertices)},
             {"h_vertices", names(p, view.h_vertices)},
             {"c_vertices", names(p, view.c_vertices)},
             {"pieces", pieces},
             {"consonants", consonants},
             {"cyclically_reduced", cr}};
  return out;
}

std::string join(const std::vector<Element>& es) {
  std::string out;
  for (const auto& e : es) out += (out.empty() ? "" : ", ") + e.str();
  return out.empty() ? "(none)" : out;
}

Result cmd_centralizer(const Session& s) {
  Result out;
  const std::size_t radius = s.opts().radius;
  json strs = json::array();
  if (s.opts().vertex.empty()) {
    auto r = centralizer_structure_check(s.word(0), radius);
    out.lines = {"closure conjugator: " + r.closure.conjugator.str(),
                 "closure core: " + s.pres().render_set(r.closure.core),
                 "ball: " + std::to_string(r.ball_size) + " elements",
                 "centralizer in ball: " + std::to_string(r.centralizer.size()),
                 "violations: " + std::to_string(r.violations.size()), r.passed() ? "pass" : "fail"};
    out.code = r.passed() ? kDecided : kNegative;
    for (const auto& v : r.violations) strs.push_back(v.str());
    out.doc = {{"ball", r.ball_size},
               {"centralizer_size", r.centralizer.size()},
               {"violations", strs},
               {"passed", r.passed()}};
    return out;
  }
  AmalgamView view = view_of(s);
  auto red = amalgam_cyclically_reduce(view, s.word(0));
  if (red.form.consonant_length() == 0) throw InvalidArgument("element has no consonants after cyclic reduction");
  auto r = centralizer_check(view, red.reduced, radius);
  auto inter = intersection_formula_check(view, view.a_vertices, red.reduced, std::min<std::size_t>(radius, 4));
  out.lines = {"reduced: " + red.reduced.str(), "case: " + std::string(r.direct_product_case ? "direct-product" : "omega")};
  json omega = json::array();
  if (!r.direct_product_case) {
    for (std::size_t i = 0; i < r.omega.prefixes.size(); ++i) {
      const auto& m = r.omega.matched[i];
      out.lines.push_back("prefix " + std::to_string(i) + ": " + r.omega.prefixes[i].str() + " -> " +
                          (m ? "h = " + m->str() : std::string("none")));
    }
    out.lines.push_back("omega: " + join(r.omega.omega));
    out.lines.push_back("unresolved prefixes: " + std::to_string(r.omega.unresolved));
    for (const auto& w : r.omega.omega) omega.push_back(w.str());
  }
  out.lines.push_back("ball: " + std::to_string(r.ball_size) + " elements");
  out.lines.push_back("centralizer in ball: " + join(r.centralizer));
  out.lines.push_back("violations: " + std::to_string(r.violations.size()));
  out.lines.push_back("intersection formula on A-ball: " + std::string(inter.passed() ? "pass" : "fail") + " (" +
                      std::to_string(inter.members) + " of " + std::to_string(inter.ball_size) + " centralize)");
  const bool passed = r.passed() && inter.passed();
  out.lines.push_back(passed ? "pass" : "fail");
  out.code = passed ? kDecided : kNegative;
  for (const auto& c : r.centralizer) strs.push_back(c.str());
  out.doc = {{"reduced", red.reduced.str()},
             {"direct_product_case", r.direct_product_case},
             {"omega", omega},
             {"ball", r.ball_size},
             {"centralizer", strs},
             {"violations", r.violations.size()},
             {"intersection_passed", inter.passed()},
             {"passed", passed}};
  return out;
}

Result cmd_pc(const Session& s) {
  auto pc = parabolic_closure_of_cyclic(s.word(0));
  Result out;
  out.lines = {"conjugator: " + pc.conjugator.str(), "core: " + s.pres().render_set(pc.core)};
  out.doc = {{"conjugator", pc.conjugator.str()}, {"core", names(s.pres(), pc.core)}};
  return out;
}

Result cmd_normalizer(const Session& s) {
  std::vector<std::string> core_names;
  std::stringstream ss(s.opts().core);
  for (std::string n; std::getline(ss, n, ',');)
    if (!n.empty()) core_names.push_back(n);
  ParabolicSubgroup p{Element::parse(s.ptr(), s.opts().conjugator), s.pres().vertex_set(core_names)};
  bool in = normalizer_membership(p, s.word(0));
  Result out;
  out.code = in ? kDecided : kNegative;
  out.lines = {in ? "normalizes" : "does not normalize"};
  out.doc = {{"normalizes", in}};
  return out;
}

Result cmd_witness(const Session& s) {
  ClassMode mode = ClassMode::parse(s.opts().mode);
  Result out;
  if (s.opts().words.size() == 2 && are_conjugate(s.word(0), s.word(1)).conjugate) {
    out.code = kNegative;
    out.lines = {"conjugate; no separation possible"};
    out.doc = {{"conjugate", true}};
    return out;
  }
  try {
    SeparationWitness w = s.opts().words.size() == 1 ? residual_witness(s.word(0), mode)
                                                     : conjugacy_witness(s.word(0), s.word(1), mode);
    if (!verify_witness(w)) throw Error("witness failed to re-verify");
    out.doc = json::parse(witness_json(w));
    out.lines = {witness_json(w)};
  } catch (const ImpossibleFamily& e) {
    out.code = kUnknown;
    out.lines = {std::string("no witness: ") + e.what()};
    out.doc = {{"error", e.what()}};
  }
  return out;
}

void emit(const Result& r, bool as_json, std::ostream& out) {
  if (as_json) {
    out << r.doc.dump(2) << '\n';
    return;
  }
  for (const auto& l : r.lines) out << l << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph products of groups: normal forms, conjugacy, amalgams and separation witnesses", "gp"};
  app.require_subcommand(1);
  Options o;

  struct Command {
    const char* name;
    const char* help;
    int words;  // negative: at least -words
    Result (*fn)(const Session&);
  };
  const Command commands[] = {
      {"normalize", "canonical form and shape of a word", 1, cmd_normalize},
      {"eq", "decide equality of two words", 2, cmd_eq},
      {"conj", "decide conjugacy; prints a conjugator w with w x w^-1 = y", 2, cmd_conj},
      {"verify", "check that W X W^-1 = Y for words X Y W", 3, cmd_verify},
      {"cyc", "cyclic reduction with conjugator", 1, cmd_cyc},
      {"ps", "P-S decomposition", 1, cmd_ps},
      {"amalgam", "amalgam form at --vertex", 1, cmd_amalgam},
      {"centralizer-check", "check centralizer descriptions on a ball", 1, cmd_centralizer},
      {"pc", "parabolic closure of the cyclic subgroup", 1, cmd_pc},
      {"normalizer", "normalizer membership for the parabolic (--conjugator, --core)", 1, cmd_normalizer},
      {"witness", "separation witness: one word (residual) or two (conjugacy)", -1, cmd_witness},
  };

  std::vector<std::pair<CLI::App*, const Command*>> subs;
  for (const auto& command : commands) {
    CLI::App* sub = app.add_subcommand(command.name, command.help);
    sub->add_option("-g,--group", o.group, "presentation file (JSON)")->required();
    auto* words = sub->add_option("words", o.words, "words")->required();
    if (command.words > 0)
      words->expected(command.words);
    else
      words->expected(1, 2);
    sub->add_option("--radius", o.radius, "bound for ball searches")->capture_default_str();
    sub->add_flag("--json", o.json, "JSON output");
    subs.emplace_back(sub, &command);
  }
  for (auto& [sub, command] : subs) {
    std::string name = command->name;
    if (name == "amalgam" || name == "centralizer-check") sub->add_option("--vertex", o.vertex, "apex vertex");
    if (name == "witness") sub->add_option("--mode", o.mode, "finite | p:<prime>")->capture_default_str();
    if (name == "normalizer") {
      sub->add_option("--core", o.core, "comma-separated core vertices")->required();
      sub->add_option("--conjugator", o.conjugator, "conjugator word")->capture_default_str();
    }
    if (name == "eq" || name == "conj") sub->add_flag("--brute-force", o.brute_force, "use the search oracle");
    if (name == "eq") sub->add_option("--budget", o.budget, "oracle state budget")->capture_default_str();
  }
  CLI::App* st = app.add_subcommand("selftest", "run the randomized invariant suites");
  st->add_option("--seed", o.seed, "random seed")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kDecided : kUsage;
  }

  if (st->parsed()) return selftest(o.seed, out) ? kDecided : kNegative;
  try {
    for (auto& [sub, command] : subs) {
      if (!sub->parsed()) continue;
      Session session(o);
      Result r = command->fn(session);
      emit(r, o.json, out);
      return r.code;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace gp::cli
