// Acceptance suite: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "pairtopo/acfqe.hpp"
#include "pairtopo/cli.hpp"
#include "pairtopo/difffield.hpp"
#include "pairtopo/formulas.hpp"
#include "pairtopo/pairsets.hpp"
#include "pairtopo/ranks.hpp"
#include "pairtopo/translator.hpp"

using namespace pairtopo;
using pairsets::BasicClosed;
using pairsets::ClosedSet;
using pairsets::Constructible;
using pairsets::Point;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

OmegaElement t(std::size_t i) { return OmegaElement::generator(i); }
OmegaElement q(long a, long b = 1) { return OmegaElement(Rat(a, b)); }

OmegaPoly x(std::size_t i, std::size_t n) {
  return OmegaPoly::variable("x" + std::to_string(i), pairsets::ambientVars(n));
}
OmegaPoly kc(const OmegaElement& c, std::size_t n) { return OmegaPoly::constant(c, pairsets::ambientVars(n)); }
BasicClosed block(std::size_t n, std::vector<OmegaPoly> comps, std::vector<std::size_t> blocks) {
  return {pairsets::PolyMap(n, std::move(comps)), std::move(blocks)};
}
RatPoly rv(const std::string& name) { return RatPoly::variable(name, {name}); }
RatPoly rc(long v) { return RatPoly::constant(Rat(v)); }

std::vector<Point> samplePoints(std::size_t n, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Point> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(pairsets::randomPoint(n, rng));
  return out;
}

// 1 -------------------------------------------------------------------------

// Polynomial of total degree <= 2 in t0..t3 with integer coefficients of
// height <= 10; one element in four is divided by a linear form t_i + c.
OmegaElement randomElement(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-10, 10), idx(0, 3), deg(0, 2), terms(1, 3);
  OmegaElement num;
  int n = terms(rng);
  for (int k = 0; k < n; ++k) num += q(c(rng)) * t(static_cast<std::size_t>(idx(rng))).pow(deg(rng));
  if (rng() % 4 == 0) return num / (t(static_cast<std::size_t>(idx(rng))) + q(c(rng)));
  return num;
}

Outcome criterion1() {
  Outcome o;
  std::mt19937_64 rng(1001);
  std::uniform_int_distribution<int> c(-10, 10);
  auto start = std::chrono::steady_clock::now();
  int dependent = 0;
  for (int i = 0; i < 500; ++i) {
    std::size_t n = 1 + static_cast<std::size_t>(i % 4);
    std::vector<OmegaElement> tuple;
    for (std::size_t j = 0; j < n; ++j) {
      if (j > 0 && rng() % 2 == 0) {
        OmegaElement comb;
        for (const auto& e : tuple) comb += q(c(rng)) * e;
        tuple.push_back(comb);
      } else {
        tuple.push_back(randomElement(rng));
      }
    }
    bool w = difffield::wronskianEval(tuple).isZero();
    auto cert = difffield::kDependent(tuple);
    if (w != cert.has_value()) o.fail("tuple " + std::to_string(i) + ": Wronskian and kDependent disagree");
    if (cert) {
      ++dependent;
      OmegaElement sum;
      for (std::size_t j = 0; j < n; ++j) sum += OmegaElement((*cert)[j]) * tuple[j];
      if (!sum.isZero()) o.fail("tuple " + std::to_string(i) + ": certificate does not recombine to 0");
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 30) o.fail("took " + std::to_string(secs) + " s");
  if (o.ok) {
    std::ostringstream d;
    d << "500 tuples, " << dependent << " dependent, " << secs << " s";
    o.detail = d.str();
  }
  return o;
}

// 2 -------------------------------------------------------------------------

formulas::BasicFormulaBlock blockOf(const std::string& text) {
  auto tree = formulas::toBlocks(formulas::parse(text));
  if (tree.op != formulas::BlockTree::Op::Leaf) throw std::runtime_error("not a single block: " + text);
  return tree.block;
}

Outcome criterion2() {
  Outcome o;
  const char* texts[] = {
      "exists y in U. x2 = y*x1",
      "exists y in U. x1 = y*t0",
      "exists y in U. x1^2 = y and x2 != y",
      "exists y in U. y*x1 + x2 = 1",
      "exists y1, y2 in U. x1 = y1*x2 + y2",
      "exists y in U. x1*x2 = y and y^2 != 1",
      "x1*x2 - x2 = 0 and x1 != t0",
      "exists y in U. x2 = y*x1 and x3 = y^2*x1",
      "exists y in U. x1*y^2 + x2 = 0",
      "exists y1, y2 in U. x1 = y1*x2 and x3 = y2*x2",
      "exists y in U. x1 + t0*y = x2 and y != 1",
      "exists y1, y2 in U. y1*x1 + y2*x2 = x3 and y1*y2 = 1",
  };
  std::size_t blocks = 0, points = 0, trues = 0;
  std::uint64_t seed = 2000;
  for (const char* s : texts) {
    auto b = blockOf(s);
    auto cert = translator::translate(b);
    ++blocks;
    for (const auto& p : samplePoints(b.freeVars.size(), 100, ++seed)) {
      ++points;
      bool direct = translator::decideDirect(b, p);
      trues += direct;
      if (translator::memberCert(cert, p) != direct) {
        std::string pt;
        for (const auto& c : p) pt += c.toString() + " ";
        o.fail(std::string("mismatch on '") + s + "' at " + pt);
      }
    }
  }
  if (o.ok)
    o.detail = std::to_string(blocks) + " blocks, " + std::to_string(points) + " points (" + std::to_string(trues) +
               " inside), 0 mismatches";
  return o;
}

// 3 -------------------------------------------------------------------------

Outcome criterion3() {
  Outcome o;
  auto b = blockOf("exists y in U. x2 = y*x1");
  auto cert = translator::translate(b);
  struct Probe {
    Point p;
    bool expected;
    const char* name;
  };
  std::vector<Probe> probes{{{q(1), q(5)}, true, "(1,5)"},
                            {{t(0), q(3) * t(0)}, true, "(t0,3t0)"},
                            {{q(1), t(0)}, false, "(1,t0)"},
                            {{q(0), q(1)}, false, "(0,1)"},
                            {{q(0), q(0)}, true, "(0,0)"}};
  for (const auto& pr : probes)
    if (translator::memberCert(cert, pr.p) != pr.expected) o.fail(std::string("probe ") + pr.name);
  if (o.ok) o.detail = std::to_string(cert.cells.size()) + " cells, 5 probes match";
  return o;
}

// 4 -------------------------------------------------------------------------

acfqe::KConstructible existsNonzero(const std::vector<std::string>& free, const std::vector<std::string>& bs,
                                    const std::vector<RatPoly>& eqs) {
  std::vector<acfqe::KPiece> pieces;
  for (const auto& b : bs) {
    auto part = acfqe::eliminateExists({bs, free, eqs, RatPoly::variable(b, {b})});
    pieces.insert(pieces.end(), part.pieces.begin(), part.pieces.end());
  }
  return acfqe::normalize(free, pieces);
}

Outcome criterion4() {
  Outcome o;
  auto a1 = rv("x1"), a2 = rv("x2"), b1 = rv("b1"), b2 = rv("b2"), b3 = rv("b3");
  std::vector<std::string> f1{"x1"}, f2{"x1", "x2"}, bb{"b1", "b2"}, bbb{"b1", "b2", "b3"};
  struct Case {
    BasicClosed set;
    acfqe::KConstructible oracle;  // exists b != 0 with M(a) b = 0
  };
  std::vector<Case> cases;
  cases.push_back({block(1, {x(1, 1) + kc(t(0), 1), x(1, 1) * x(1, 1) + kc(q(1), 1)}, {2}),
                   existsNonzero(f1, bb, {b1 * a1 + b2 * (a1 * a1 + rc(1)), b1})});
  cases.push_back({block(1, {x(1, 1), kc(q(1), 1)}, {2}), existsNonzero(f1, bb, {b1 * a1 + b2})});
  cases.push_back({block(1, {x(1, 1), kc(t(0), 1)}, {2}), existsNonzero(f1, bb, {b1 * a1, b2})});
  cases.push_back({block(2, {x(1, 2) + kc(t(0), 2) * x(2, 2), kc(q(1) + t(0), 2)}, {2}),
                   existsNonzero(f2, bb, {b1 * a1 + b2, b1 * a2 + b2})});
  // (x1, x2 + t0 x1, t1): rows for 1, t0, t1 are (a1, a2, 0), (0, a1, 0), (0, 0, 1).
  cases.push_back({block(2, {x(1, 2), x(2, 2) + kc(t(0), 2) * x(1, 2), kc(t(1), 2)}, {3}),
                   existsNonzero(f2, bbb, {b1 * a1 + b2 * a2, b2 * a1, b3})});
  std::mt19937_64 rng(4000);
  std::uniform_int_distribution<int> c(-4, 4);
  std::size_t idx = 0;
  for (const auto& cs : cases) {
    ++idx;
    std::size_t n = cs.set.arity();
    auto polys = pairsets::zariskiRestrictK(cs.set, n);
    for (int s = 0; s < 50; ++s) {
      std::vector<Rat> a;
      Point p;
      for (std::size_t i = 0; i < n; ++i) {
        a.push_back(Rat(c(rng), 1 + static_cast<long>(rng() % 3)));
        p.push_back(OmegaElement(a.back()));
      }
      bool vanish = true;
      for (const auto& f : polys)
        if (!f.evaluate<Rat>(a, [](const Rat& r) { return r; }, Rat(1)).isZero()) vanish = false;
      if (cs.set.member(p) != vanish) o.fail("case " + std::to_string(idx) + ": minors disagree with membership");
      if (cs.oracle.contains(a) != vanish) o.fail("case " + std::to_string(idx) + ": minors disagree with the existential");
    }
    auto vars = pairsets::ambientVars(n);
    auto viaMinors = acfqe::normalize(vars, {{polys, RatPoly::constant(Rat(1), vars)}});
    if (!acfqe::equivalent(viaMinors, cs.oracle)) o.fail("case " + std::to_string(idx) + ": ideals differ");
  }
  auto first = pairsets::zariskiRestrictK(cases[0].set, 1);
  if (first.size() != 1 || first[0].toString() != "x1^2 + 1") o.fail("worked minor example is not <x1^2 + 1>");
  if (o.ok) o.detail = "5 sets x 50 rational points, ideals equivalent";
  return o;
}

// 5 -------------------------------------------------------------------------

RatPoly randomPoly(std::mt19937_64& rng, const std::vector<std::string>& vars, int maxDeg, int terms) {
  std::uniform_int_distribution<int> coef(-3, 3), exp(0, maxDeg);
  std::vector<RatPoly::Term> ts;
  for (int i = 0; i < terms; ++i) {
    Monomial m(vars.size());
    int budget = maxDeg;
    for (auto& e : m) {
      e = static_cast<std::uint32_t>(std::min(exp(rng), budget));
      budget -= static_cast<int>(e);
    }
    ts.push_back({m, Rat(coef(rng))});
  }
  return RatPoly(vars, ts);
}

Outcome criterion5() {
  Outcome o;
  auto a = rv("a"), b = rv("b");
  auto inv = acfqe::eliminateExists({{"b"}, {"a"}, {a * b - rc(1)}});
  if (inv.toString() != "a != 0") o.fail("exists b (ab = 1) gave " + inv.toString());
  auto sq = acfqe::eliminateExists({{"b"}, {"a"}, {b * b - a}});
  if (!sq.isEverything()) o.fail("exists b (b^2 = a) gave " + sq.toString());
  std::mt19937_64 rng(5000);
  std::uniform_int_distribution<int> pt(-3, 3);
  for (int i = 0; i < 10; ++i) {
    acfqe::KSystem s;
    s.freeVars = {"a1", "a2"};
    s.existVars = i % 2 ? std::vector<std::string>{"b1"} : std::vector<std::string>{"b1", "b2"};
    auto vs = s.freeVars;
    vs.insert(vs.end(), s.existVars.begin(), s.existVars.end());
    for (int k = 0; k < 1 + i % 2; ++k) s.equations.push_back(randomPoly(rng, vs, 3, 3));
    if (i % 3 == 0) s.inequation = randomPoly(rng, vs, 2, 2);
    if (s.inequation.isZero()) s.inequation = rc(1);
    auto z = acfqe::eliminateExists(s);
    for (int k = 0; k < 50; ++k) {
      std::vector<Rat> p{Rat(pt(rng)), Rat(pt(rng))};
      if (acfqe::decideAt(s, p) != z.contains(p)) o.fail("system " + std::to_string(i) + " disagrees");
    }
  }
  if (o.ok) o.detail = "classics reproduced, 10 systems x 50 points agree";
  return o;
}

// 6 -------------------------------------------------------------------------

Outcome criterion6() {
  Outcome o;
  for (std::size_t n = 1; n <= 3; ++n) {
    auto w = ranks::sdim(Constructible::whole(n));
    if (!w.exact() || w.upper != n) o.fail("sdim(Omega^" + std::to_string(n) + ")");
    auto kn = ranks::sdim(Constructible::closed(pairsets::mkKn(n)));
    if (!kn.exact() || kn.upper != 0) o.fail("sdim(k^" + std::to_string(n) + ")");
  }
  auto y2 = Constructible::closed(ClosedSet::of(pairsets::mkYn(2)));
  auto sy = ranks::sdim(y2);
  if (!sy.exact() || sy.upper != 1) o.fail("sdim(Y2)");
  std::vector<Constructible> proper{y2, Constructible::closed(ClosedSet::of(pairsets::mkYn(3))),
                                    Constructible::closed(pairsets::mkKn(2)),
                                    Constructible::closed(pairsets::mkSpan({q(1), t(0), t(1)})),
                                    Constructible::closed(ClosedSet::of(pairsets::mkYn(1)))};
  for (const auto& c : proper)
    if (ranks::sdim(c).upper >= c.arity) o.fail("a proper closed catalog set has sdim = n");
  auto mrOf = [](const Constructible& c) -> std::optional<ranks::OrdinalRank> {
    auto id = ranks::recognizeCatalog(c);
    if (!id) return std::nullopt;
    return ranks::mrCatalog(*id);
  };
  if (mrOf(Constructible::closed(pairsets::mkKn(1))) != ranks::OrdinalRank{0, 1}) o.fail("MR(k) != 1");
  if (mrOf(Constructible::whole(1)) != ranks::OrdinalRank{1, 0}) o.fail("MR(Omega) != omega");
  if (mrOf(Constructible::closed(pairsets::mkSpan({q(1), t(0)}))) != ranks::OrdinalRank{0, 2})
    o.fail("MR(k + k t0) != 2");
  auto my = ranks::mrBounds(y2);
  if (my.exact || !my.strictUpper || my.upper != ranks::OrdinalRank{2, 0}) o.fail("MR(Y2) not strictly below omega*2");
  auto open = ranks::mrBounds(pairsets::difference(Constructible::whole(2), y2));
  if (!open.exact || *open.exact != ranks::OrdinalRank{2, 0}) o.fail("MR(Omega^2 \\ Y2) != omega*2");
  if (o.ok) o.detail = "sdim and MR catalog values exact";
  return o;
}

// 7 -------------------------------------------------------------------------

Outcome criterion7() {
  Outcome o;
  auto y2 = ClosedSet::of(pairsets::mkYn(2));
  auto zero1 = ClosedSet::of(pairsets::mkYn(1));
  std::vector<std::pair<std::string, Constructible>> instances{
      {"Omega \\ {0}", {1, {{ClosedSet::whole(1), zero1}}}},
      {"Y2 \\ k^2", {2, {{y2, pairsets::mkKn(2)}}}},
      {"Omega^2 \\ Y2", {2, {{ClosedSet::whole(2), y2}}}},
      {"k^2 \\ {x1 = 0}", {2, {{pairsets::mkKn(2), ClosedSet::of(block(2, {x(1, 2)}, {1}))}}}},
      {"Y2 \\ {x1 = 0}", {2, {{y2, ClosedSet::of(block(2, {x(1, 2)}, {1}))}}}},
      {"span(1, t0) \\ {0}", {1, {{pairsets::mkSpan({q(1), t(0)}), zero1}}}},
  };
  std::size_t exactCount = 0;
  std::uint64_t seed = 7000;
  for (const auto& [name, x] : instances) {
    auto c = pairsets::closure(x);
    if (!c.exact) continue;
    ++exactCount;
    auto closedC = Constructible::closed(c.set);
    auto a = ranks::sdim(x), b = ranks::sdim(closedC);
    if (!a.exact() || !b.exact() || a.upper != b.upper) o.fail("sdim differs on " + name);
    auto again = pairsets::closure(closedC).set;
    for (const auto& p : samplePoints(x.arity, 100, ++seed)) {
      if (x.member(p) && !c.set.member(p)) o.fail("closure not extensive on " + name);
      if (again.member(p) != c.set.member(p)) o.fail("closure not idempotent on " + name);
    }
  }
  if (exactCount < 5) o.fail("only " + std::to_string(exactCount) + " exact instances");
  if (o.ok) o.detail = std::to_string(exactCount) + " exact instances x 100 samples";
  return o;
}

// 8 -------------------------------------------------------------------------

// Direct truth of a formula at a point: atoms are split along a Q-basis of
// their coefficients (with 1 first) into conditions over k, existential
// bodies are put in DNF here and each clause goes to decideExists.
struct KAtom {
  bool isEq;
  RatPoly p;
};
using KClause = std::vector<KAtom>;

OmegaPoly substituteFree(OmegaPoly p, const std::map<std::string, OmegaElement>& env) {
  for (const auto& [name, value] : env)
    if (p.involves(name)) p = p.substitute(name, OmegaPoly::constant(value, p.vars()));
  return p;
}

/// Coordinates of p's coefficients in a Q-basis starting with 1, as
/// polynomials over Q in `bound`.
std::vector<RatPoly> splitAlongBasis(const OmegaPoly& p, const std::vector<std::string>& bound) {
  std::vector<OmegaElement> coeffs{q(1)};
  for (const auto& term : p.terms()) coeffs.push_back(term.coeff);
  auto sb = difffield::spanBasis(coeffs);
  std::vector<std::vector<RatPoly::Term>> parts(sb.basis.size());
  for (std::size_t i = 0; i < p.terms().size(); ++i)
    for (std::size_t l = 0; l < sb.basis.size(); ++l)
      if (!sb.coordinates[i + 1][l].isZero()) parts[l].push_back({p.terms()[i].mono, sb.coordinates[i + 1][l]});
  std::vector<RatPoly> out;
  for (auto& ts : parts) out.push_back(RatPoly(p.vars(), ts).withVars(bound));
  return out;
}

/// DNF over k-atoms of a quantifier-free body with U atoms.
std::vector<KClause> dnf(const formulas::Formula& f, bool negated, const std::map<std::string, OmegaElement>& env,
                         std::vector<std::string>& bound, int& fresh) {
  using formulas::Kind;
  auto conjoin = [](const std::vector<KClause>& a, const std::vector<KClause>& b) {
    std::vector<KClause> out;
    for (const auto& x : a)
      for (const auto& y : b) {
        KClause c = x;
        c.insert(c.end(), y.begin(), y.end());
        out.push_back(c);
      }
    return out;
  };
  switch (f->kind) {
    case Kind::Eq:
    case Kind::Neq: {
      auto parts = splitAlongBasis(substituteFree(f->poly, env), bound);
      bool eqForm = (f->kind == Kind::Eq) != negated;
      if (eqForm) {
        KClause c;
        for (const auto& p : parts) c.push_back({true, p});
        return {c};
      }
      std::vector<KClause> out;
      for (const auto& p : parts) out.push_back({{false, p}});
      return out;
    }
    case Kind::InU: {
      if (negated) throw std::runtime_error("negated U inside an existential");
      // U(q) with fresh z in U: q - z = 0.
      std::string z = "_u" + std::to_string(fresh++);
      bound.push_back(z);
      auto poly = substituteFree(f->poly, env);
      auto vars = poly.vars();
      vars.push_back(z);
      auto shifted = poly.withVars(vars) - OmegaPoly::variable(z, vars);
      auto parts = splitAlongBasis(shifted, bound);
      KClause c;
      for (const auto& p : parts) c.push_back({true, p});
      return {c};
    }
    case Kind::Not:
      return dnf(f->children[0], !negated, env, bound, fresh);
    case Kind::And:
    case Kind::Or: {
      bool conj = (f->kind == Kind::And) != negated;
      std::vector<KClause> acc = conj ? std::vector<KClause>{KClause{}} : std::vector<KClause>{};
      for (const auto& ch : f->children) {
        auto d = dnf(ch, negated, env, bound, fresh);
        if (conj) {
          acc = conjoin(acc, d);
        } else {
          acc.insert(acc.end(), d.begin(), d.end());
        }
      }
      return acc;
    }
    default:
      throw std::runtime_error("nested quantifier in the oracle");
  }
}

bool directTruth(const formulas::Formula& f, const std::map<std::string, OmegaElement>& env) {
  using formulas::Kind;
  switch (f->kind) {
    case Kind::Eq:
    case Kind::Neq:
    case Kind::InU: {
      auto p = substituteFree(f->poly, env);
      if (!p.isConstant() && !p.isZero()) throw std::runtime_error("unbound variable in the oracle");
      OmegaElement v = p.isZero() ? q(0) : p.constantValue();
      if (f->kind == Kind::Eq) return v.isZero();
      if (f->kind == Kind::Neq) return !v.isZero();
      return v.isRational();
    }
    case Kind::Not:
      return !directTruth(f->children[0], env);
    case Kind::And:
      for (const auto& c : f->children)
        if (!directTruth(c, env)) return false;
      return true;
    case Kind::Or:
      for (const auto& c : f->children)
        if (directTruth(c, env)) return true;
      return false;
    case Kind::ExistsU: {
      std::vector<std::string> bound = f->vars;
      int fresh = 0;
      auto clauses = dnf(f->children[0], false, env, bound, fresh);
      for (const auto& cl : clauses) {
        acfqe::KSystem s;
        s.existVars = bound;
        s.inequation = RatPoly::constant(Rat(1), bound);
        for (const auto& a : cl) {
          if (a.isEq) {
            s.equations.push_back(a.p.withVars(bound));
          } else {
            s.inequation = s.inequation * a.p.withVars(bound);
          }
        }
        if (acfqe::decideExists(s)) return true;
      }
      return false;
    }
    default:
      throw std::runtime_error("unsupported quantifier in the oracle");
  }
}

Outcome criterion8() {
  Outcome o;
  const char* corpus[] = {
      "x1 = 0",
      "x1 != 0 and x2 = t0*x1",
      "U(x1)",
      "U(x1) and U(x2)",
      "U(x1 + t0*x2)",
      "not U(x1*x2)",
      "exists y in U. x2 = y*x1",
      "not (exists y in U. x2 = y*x1)",
      "exists y in U. x1 = y*t0",
      "exists y in U. x1^2 = y and x2 != y",
      "exists y in U. y*x1 + x2 = 1",
      "exists y1, y2 in U. x1 = y1*x2 + y2",
      "exists y in U. x1*x2 = y and y^2 != 1",
      "exists y in U. x1*y - 1 != 0 and x1 + y != 0 and y^2 - x1 = 0",
      "exists y in U. x1 - y = 0 or x2 + y = 0",
      "exists y in U. (x2 = y*x1 or x1 != y) and y^2 != 2",
      "exists y in U. U(x1*y) and x2 = y",
      "(exists y in U. x2 = y*x1) and x1 = 1",
      "(exists y in U. x2 = y*x1) or x1 = t0",
      "not (x1 = 0 or x2 = t0) and U(x1*t0 - 1)",
      "x1^2 - t0 = 0 or x2^2 = t1",
      "exists y in U. x1 = y*t0 + y^2 and x2 != 0",
      "exists y1, y2 in U. y1*x1 + y2*x2 = 0 and (y1 != 0 or y2 != 0)",
      "exists y in U. x1 + t0*y = x2 and y != 1",
      "not (exists y in U. x1 = y^2*t1)",
      "x1*x2 - x2 = 0 and x1 != t0",
      "U(x1) or U(x2)",
      "exists y in U. not (x1 = y) and x2 = y*t0",
      "(x1 = 0 and U(x2)) or not (exists y in U. x2 = y*x1)",
      "exists y in U. y^3 = x1 and x2 != y",
  };
  std::size_t count = 0, points = 0, trues = 0;
  std::uint64_t seed = 8000;
  for (const char* text : corpus) {
    ++count;
    formulas::Formula f;
    try {
      f = formulas::parse(text);
    } catch (const std::exception& e) {
      o.fail(std::string("parse '") + text + "': " + e.what());
      continue;
    }
    auto printed = formulas::print(f);
    auto g = formulas::parse(printed);
    if (!formulas::equal(f, g) || formulas::print(g) != printed) o.fail(std::string("round trip '") + text + "'");
    auto tree = formulas::toBlocks(f);
    auto vars = formulas::freeVariables(f);
    for (const auto& p : samplePoints(vars.size(), 100, ++seed)) {
      ++points;
      std::map<std::string, OmegaElement> env;
      for (std::size_t i = 0; i < vars.size(); ++i) env[vars[i]] = p[i];
      bool truth = directTruth(f, env);
      trues += truth;
      if (translator::decideDirectTree(tree, p) != truth) {
        o.fail(std::string("toBlocks changes truth of '") + text + "'");
        break;
      }
    }
  }
  // Shapes: product of inequations, and the existential distributed over a
  // disjunction with one block per disjunct and fresh bound names.
  auto prod = formulas::toBlocks(formulas::parse("exists y in U. x*y - 1 != 0 and x + y != 0 and y^2 - x = 0"));
  {
    auto xv = OmegaPoly::variable("x", {"x"}), yv = OmegaPoly::variable("y", {"y"});
    auto one = OmegaPoly::constant(q(1));
    if (prod.op != formulas::BlockTree::Op::Leaf || prod.block.eqs.size() != 1 ||
        !(prod.block.p0 == (xv * yv - one) * (xv + yv)) || !(prod.block.eqs[0] == yv * yv - xv))
      o.fail("product-of-inequations shape");
  }
  auto dist = formulas::toBlocks(
      formulas::parse("exists y1, y2 in U. (x1 = y1 and x2 != y2) or (x1*y2 = 1 and y1 != 0 and y2 != 1)"));
  if (dist.op != formulas::BlockTree::Op::Or || dist.children.size() != 2) {
    o.fail("existential distribution shape");
  } else {
    const auto& c0 = dist.children[0].block;
    const auto& c1 = dist.children[1].block;
    bool shape = dist.children[0].op == formulas::BlockTree::Op::Leaf &&
                 dist.children[1].op == formulas::BlockTree::Op::Leaf && c0.boundVars.size() == 2 &&
                 c1.boundVars.size() == 2 && c0.boundVars != c1.boundVars && c0.eqs.size() == 1 &&
                 c1.eqs.size() == 1 && c1.p0.totalDegree() == 2;
    if (!shape) o.fail("existential distribution shape");
  }
  if (o.ok)
    o.detail = std::to_string(count) + " formulas round-trip, " + std::to_string(points) + " truth checks (" +
               std::to_string(trues) + " true), shapes ok";
  return o;
}

// 9 -------------------------------------------------------------------------

Outcome criterion9() {
  Outcome o;
  std::vector<std::vector<std::string>> commands{
      {"translate", "exists y in U. x2 = y*x1"},
      {"--format", "json", "translate", "exists y in U. x2 = y*x1 and x1 != t0"},
      {"--format", "json", "translate", "x1 = 0"},
      {"member", "exists y in U. x2 = y*x1", "--point", "(2, 3)"},
      {"--format", "json", "member", "exists y in U. x2 = y*x1", "--point", "(1, t0)"},
      {"closure", "not (exists y in U. x2 = y*x1)"},
      {"--format", "json", "--seed", "7", "closure", "Y2"},
      {"sdim", "Y2"},
      {"--format", "json", "--seed", "3", "--samples", "50", "sdim", "X2"},
      {"mr", "k"},
      {"--format", "json", "mr", "span:1,t0"},
      {"mr", "Y2"},
      {"wronskian", "1, t0, t0^2"},
      {"--format", "json", "wronskian", "t0, t1, t0 + t1"},
  };
  for (const auto& args : commands) {
    std::string joined;
    for (const auto& a : args) joined += a + " ";
    std::string outs[2], errs[2];
    int codes[2];
    for (int r = 0; r < 2; ++r) {
      std::istringstream in;
      std::ostringstream out, err;
      codes[r] = cli::runCli(args, in, out, err);
      outs[r] = out.str();
      errs[r] = err.str();
    }
    if (codes[0] != 0) o.fail("exit " + std::to_string(codes[0]) + " for " + joined + errs[0]);
    if (outs[0] != outs[1] || codes[0] != codes[1]) o.fail("output differs for " + joined);
  }
  if (o.ok) o.detail = std::to_string(commands.size()) + " commands byte-identical across runs";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<std::size_t> only;
  for (int i = 1; i < argc; ++i) only.insert(std::stoul(argv[i]));
  std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                 criterion6, criterion7, criterion8, criterion9};
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (!only.empty() && !only.count(i + 1)) continue;
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.ok;
    std::cout << "criterion " << (i + 1) << ": " << (o.ok ? "PASS" : "FAIL") << "  " << o.detail << " ["
              << static_cast<long>(secs * 1000) << " ms]" << std::endl;
  }
  return all ? 0 : 1;
}
