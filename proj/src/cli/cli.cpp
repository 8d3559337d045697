#include "pairtopo/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pairtopo/difffield.hpp"
#include "pairtopo/errors.hpp"
#include "pairtopo/formulas.hpp"
#include "pairtopo/pairsets.hpp"
#include "pairtopo/ranks.hpp"
#include "pairtopo/translator.hpp"

namespace pairtopo::cli {

namespace {

using nlohmann::ordered_json;
using pairsets::Constructible;
using pairsets::Point;

struct Settings {
  std::string format = "text";
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  std::size_t budgetGroebner = 1'000'000;
  std::size_t budgetCells = 4096;
  unsigned degreeCap = 8;
  std::vector<std::string> params;  // name=value
  std::string vars;                 // comma-separated free variable order
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

/// Split on top-level commas.
std::vector<std::string> splitTop(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
  return out;
}

std::vector<OmegaElement> parseTuple(std::string text) {
  text = trim(text);
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
    int depth = 0;
    bool outer = true;
    for (std::size_t i = 0; i + 1 < text.size(); ++i) {
      if (text[i] == '(') ++depth;
      if (text[i] == ')') --depth;
      if (depth == 0) outer = false;
    }
    if (outer) text = text.substr(1, text.size() - 2);
  }
  std::vector<OmegaElement> out;
  for (const auto& part : splitTop(text)) {
    if (part.empty()) throw ParseError("empty tuple entry", 1, 1);
    out.push_back(formulas::parseOmega(part));
  }
  return out;
}

translator::TranslateOptions translateOptions(const Settings& s) {
  translator::TranslateOptions t;
  t.qe.groebner.stepBudget = s.budgetGroebner;
  t.qe.degreeCap = s.degreeCap;
  t.cellBudget = s.budgetCells;
  return t;
}

pairsets::SampleOptions sampleOptions(const Settings& s) { return {s.seed, s.samples}; }

std::string readAll(std::istream& in) { return std::string(std::istreambuf_iterator<char>(in), {}); }

formulas::BlockTree blocksOf(const std::string& text, const Settings& s) {
  formulas::ParseOptions po;
  std::map<std::string, OmegaElement> sigma;
  for (const auto& kv : s.params) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) {
      po.params.push_back(trim(kv));
    } else {
      po.params.push_back(trim(kv.substr(0, eq)));
      sigma[trim(kv.substr(0, eq))] = formulas::parseOmega(kv.substr(eq + 1));
    }
  }
  auto f = formulas::parse(text, po);
  if (!po.params.empty()) f = formulas::substituteParams(f, sigma, po.params);
  formulas::BlockOptions bo;
  if (!s.vars.empty()) bo.freeVars = splitTop(s.vars);
  return formulas::toBlocks(f, bo);
}

std::string formulaText(const std::string& inline_, std::istream& in) {
  std::string t = inline_.empty() ? readAll(in) : inline_;
  if (trim(t).empty()) throw ParseError("no formula given", 1, 1);
  return t;
}

/// Built-in names, a JSON presentation (inline or a file), or a formula whose
/// translation flattens.
Constructible resolveSet(const std::string& spec, const Settings& s) {
  std::string name = trim(spec);
  auto number = [&](const std::string& digits) -> std::size_t {
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad arity in '" + name + "'", 1, 1);
    return std::stoul(digits);
  };
  if (name == "k") return Constructible::closed(pairsets::mkKn(1));
  if (name.rfind("k^", 0) == 0) return Constructible::closed(pairsets::mkKn(number(name.substr(2))));
  if (name == "Omega") return Constructible::whole(1);
  if (name.rfind("Omega^", 0) == 0) return Constructible::whole(number(name.substr(6)));
  if (name.size() > 1 && name[0] == 'Y' && name.find_first_not_of("0123456789", 1) == std::string::npos)
    return Constructible::closed(pairsets::ClosedSet::of(pairsets::mkYn(number(name.substr(1)))));
  if (name.size() > 1 && name[0] == 'X' && name.find_first_not_of("0123456789", 1) == std::string::npos)
    return pairsets::mkXn(number(name.substr(1)));
  if (name.rfind("span:", 0) == 0) return Constructible::closed(pairsets::mkSpan(parseTuple(name.substr(5))));
  if (!name.empty() && name.front() == '{') return pairsets::deserialize(name);
  if (name.size() > 5 && name.substr(name.size() - 5) == ".json") {
    std::ifstream f(name);
    if (!f) throw ParseError("cannot read '" + name + "'", 1, 1);
    return pairsets::deserialize(readAll(f));
  }
  auto tree = translator::translateCombination(blocksOf(name, s), translateOptions(s));
  if (!tree.flat) throw UnsupportedShape("formula does not flatten to a pair-topology presentation");
  return *tree.flat;
}

ordered_json parsed(const std::string& text) { return ordered_json::parse(text); }

int cmdTranslate(const std::string& formula, const Settings& s, std::istream& in, std::ostream& out) {
  auto tree = translator::translateCombination(blocksOf(formulaText(formula, in), s), translateOptions(s));
  if (s.format == "json") {
    ordered_json j;
    j["certificate"] = parsed(translator::certTreeJson(tree));
    j["flat"] = tree.flat ? parsed(pairsets::serialize(*tree.flat)) : ordered_json(nullptr);
    out << j.dump(2) << "\n";
    return kOk;
  }
  std::size_t leaves = 0, cells = 0;
  std::function<void(const translator::CertTree&)> walk = [&](const translator::CertTree& t) {
    if (t.op == formulas::BlockTree::Op::Leaf) {
      ++leaves;
      cells += t.cert.cells.size();
    }
    for (const auto& c : t.children) walk(c);
  };
  walk(tree);
  out << "blocks: " << leaves << "\ncells: " << cells << "\n";
  if (tree.flat) {
    out << "flat:\n";
    for (const auto& p : tree.flat->pairs) {
      out << "  C:";
      for (const auto& m : p.C.members) out << " [" << pairsets::toString(m) << "]";
      out << "\n  D:";
      if (p.D.members.empty()) out << " empty";
      for (const auto& m : p.D.members) out << " [" << pairsets::toString(m) << "]";
      out << "\n";
    }
  } else {
    out << "flat: none\n";
  }
  return kOk;
}

int cmdMember(const std::string& formula, const std::string& certPath, const std::string& pointText, const Settings& s,
              std::istream& in, std::ostream& out, std::ostream& err) {
  Point p = parseTuple(pointText);
  bool result = false;
  std::vector<std::string> paths;
  if (!certPath.empty()) {
    std::ifstream f(certPath);
    if (!f) throw ParseError("cannot read '" + certPath + "'", 1, 1);
    auto j = ordered_json::parse(readAll(f));
    if (j.contains("certificate")) j = j["certificate"];
    auto tree = translator::certTreeFromJson(j.dump());
    result = translator::memberTree(tree, p);
    paths.push_back("memberCert");
  } else {
    auto blocks = blocksOf(formulaText(formula, in), s);
    auto tree = translator::translateCombination(blocks, translateOptions(s));
    bool a = translator::memberTree(tree, p);
    bool b = translator::decideDirectTree(blocks, p, translateOptions(s).qe);
    if (a != b) {
      err << "dual-path mismatch\n"
          << "formula: " << blocks.toString() << "\n"
          << "point: " << pointText << "\n"
          << "memberCert: " << (a ? "true" : "false") << "\n"
          << "decideDirect: " << (b ? "true" : "false") << "\n"
          << "certificate: " << translator::certTreeJson(tree) << "\n";
      return kMismatch;
    }
    result = a;
    paths = {"memberCert", "decideDirect"};
  }
  if (s.format == "json") {
    ordered_json j;
    j["member"] = result;
    j["paths"] = paths;
    out << j.dump() << "\n";
  } else {
    out << (result ? "true" : "false") << " (";
    for (std::size_t i = 0; i < paths.size(); ++i) out << (i ? ", " : "") << paths[i];
    out << ")\n";
  }
  return kOk;
}

int cmdClosure(const std::string& set, const Settings& s, std::ostream& out) {
  auto x = resolveSet(set, s);
  auto c = pairsets::closure(x, sampleOptions(s));
  std::string tag = c.exact ? "exact" : "upperBound";
  if (s.format == "json") {
    ordered_json j;
    j["tag"] = tag;
    j["set"] = parsed(pairsets::serialize(Constructible::closed(c.set)));
    out << j.dump(2) << "\n";
  } else {
    out << tag << "\n";
    if (c.set.members.empty()) out << "empty\n";
    for (const auto& m : c.set.members) out << pairsets::toString(m) << "\n";
  }
  return kOk;
}

int cmdRanks(const std::string& set, bool mr, const Settings& s, std::ostream& out) {
  auto x = resolveSet(set, s);
  auto sd = ranks::sdim(x, sampleOptions(s));
  auto m = ranks::mrBounds(x, sampleOptions(s));
  if (s.format == "json") {
    out << ranks::reportJson(sd, m, 2) << "\n";
    return kOk;
  }
  if (!mr) {
    if (sd.exact()) {
      out << sd.upper << "\n";
    } else {
      out << "between " << (sd.lower ? std::to_string(*sd.lower) : std::string("?")) << " and " << sd.upper << "\n";
    }
  } else if (m.exact) {
    out << m.exact->toString() << "\n";
  } else {
    out << "at least " << m.lower.toString() << (m.strictUpper ? ", below " : ", at most ") << m.upper.toString()
        << "\n";
  }
  return kOk;
}

int cmdWronskian(const std::string& tuple, bool unitDerivative, const Settings& s, std::istream& in,
                 std::ostream& out) {
  auto elems = parseTuple(formulaText(tuple, in));
  OmegaElement w = difffield::wronskianEval(elems);
  if (unitDerivative && !w.isRational()) {
    // Read t1 as D(t0) = 1 and higher generators as 0.
    std::vector<OmegaElement> vals;
    for (long i = 0; i <= w.order(); ++i)
      vals.push_back(i == 0 ? OmegaElement::generator(0) : OmegaElement(i == 1 ? 1 : 0));
    auto embed = [](const Rat& r) { return OmegaElement(r); };
    OmegaElement num = w.numerator().evaluate<OmegaElement>(vals, embed, OmegaElement(1));
    OmegaElement den = w.denominator().evaluate<OmegaElement>(vals, embed, OmegaElement(1));
    if (den.isZero()) throw DomainError("denominator vanishes under the unit-derivative reading");
    w = num / den;
  }
  if (s.format == "json") {
    ordered_json j;
    j["wronskian"] = w.toString();
    j["zero"] = w.isZero();
    out << j.dump() << "\n";
  } else {
    out << w.toString() << "\n";
  }
  return kOk;
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"pair-topology engine for (Omega, k)", "pairtopo"};
  app.require_subcommand(1);
  Settings s;
  app.add_option("--format", s.format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", s.seed, "random seed");
  app.add_option("--samples", s.samples, "sample count");
  app.add_option("--budget-groebner", s.budgetGroebner, "Groebner reduction budget");
  app.add_option("--budget-kcells", s.budgetCells, "K-cell budget");
  app.add_option("--degree-cap", s.degreeCap, "input degree cap for k-elimination");
  app.add_option("--param", s.params, "parameter name=value");
  app.add_option("--vars", s.vars, "free variable order, comma-separated");

  std::string formula, certPath, point, set, tuple;
  bool unitDerivative = false;
  auto* translate = app.add_subcommand("translate", "translate a formula into a certificate");
  translate->add_option("formula", formula, "formula text (stdin when absent)");
  auto* member = app.add_subcommand("member", "decide membership of a point");
  member->add_option("formula", formula, "formula text (stdin when absent)");
  member->add_option("--cert", certPath, "certificate JSON file instead of a formula");
  member->add_option("--point", point, "point, e.g. \"(2, t0)\"")->required();
  auto* closure = app.add_subcommand("closure", "pair-topology closure");
  closure->add_option("set", set, "built-in name, JSON or formula")->required();
  auto* sdimCmd = app.add_subcommand("sdim", "small dimension");
  sdimCmd->add_option("set", set, "built-in name, JSON or formula")->required();
  auto* mrCmd = app.add_subcommand("mr", "Morley rank");
  mrCmd->add_option("set", set, "built-in name, JSON or formula")->required();
  auto* wr = app.add_subcommand("wronskian", "evaluate the Wronskian of a tuple");
  wr->add_option("tuple", tuple, "comma-separated elements of Omega (stdin when absent)");
  wr->add_flag("--unit-derivative", unitDerivative, "read t1 as 1 and t2, t3, ... as 0");
  for (auto* sub : {translate, member, closure, sdimCmd, mrCmd, wr}) sub->fallthrough();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*translate) return cmdTranslate(formula, s, in, out);
    if (*member) return cmdMember(formula, certPath, point, s, in, out, err);
    if (*closure) return cmdClosure(set, s, out);
    if (*sdimCmd) return cmdRanks(set, false, s, out);
    if (*mrCmd) return cmdRanks(set, true, s, out);
    if (*wr) return cmdWronskian(tuple, unitDerivative, s, in, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const SchemaError& e) {
    err << "schema error: " << e.what() << "\n";
    return kParse;
  } catch (const MissingParameter& e) {
    err << "missing parameter: " << e.what() << "\n";
    return kParse;
  } catch (const DimensionError& e) {
    err << "dimension error: " << e.what() << "\n";
    return kParse;
  } catch (const UnsupportedShape& e) {
    err << e.what() << "\n";
    return kUnsupported;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const InvariantBreach& e) {
    err << "invariant breach: " << e.what() << "\n";
    return kMismatch;
  } catch (const nlohmann::json::exception& e) {
    err << "JSON error: " << e.what() << "\n";
    return kParse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}

}  // namespace pairtopo::cli
