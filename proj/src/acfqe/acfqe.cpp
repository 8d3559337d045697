#include "pairtopo/acfqe.hpp"

#include <algorithm>
#include <map>

#include "pairtopo/polyalg.hpp"

namespace pairtopo::acfqe {

namespace {

RatPoly clean(const RatPoly& p) {
  if (p.isZero()) return p;
  if (p.isConstant()) return RatPoly::constant(Rat(1), p.vars(), p.order());
  return primitivePart(p);
}

Rat evalAt(const RatPoly& p, const std::vector<Rat>& point) {
  return p.evaluate<Rat>(point, [](const Rat& r) { return r; }, Rat(1));
}

unsigned maxDegree(const KSystem& s) {
  long d = s.inequation.totalDegree();
  for (const auto& e : s.equations) d = std::max(d, e.totalDegree());
  return static_cast<unsigned>(std::max(0L, d));
}

std::vector<std::string> allVars(const KSystem& s) {
  std::vector<std::string> vars = s.freeVars;
  for (const auto& v : s.existVars)
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  return vars;
}

RatPoly place(const RatPoly& p, const std::vector<std::string>& vars) {
  try {
    return p.withVars(vars);
  } catch (const DimensionError&) {
    throw DimensionError("polynomial " + p.toString() + " uses a variable outside the system");
  }
}

class Eliminator {
 public:
  Eliminator(const QEOptions& opts, std::vector<std::string> vars)
      : opts_(opts), vars_(std::move(vars)), guard_(opts.degreeCap * opts.degreeCap) {}

  std::vector<KPiece> run(std::size_t var, const KPiece& piece) {
    std::vector<RatPoly> e0, eb;
    for (const auto& e : piece.E) (e.involves(var) ? eb : e0).push_back(e);
    RatPoly nfree = one(), nb = one();
    (piece.N.involves(var) ? nb : nfree) = piece.N;
    std::vector<KPiece> out;
    elim(var, std::move(e0), std::move(eb), nfree, nb, out);
    return out;
  }

 private:
  RatPoly one() const { return RatPoly::constant(Rat(1), vars_); }

  void guard(const RatPoly& p) const {
    if (p.totalDegree() > static_cast<long>(guard_))
      throw BudgetExceeded("intermediate degree " + std::to_string(p.totalDegree()) + " exceeds the guard " +
                           std::to_string(guard_) + " (degree cap " + std::to_string(opts_.degreeCap) + ")");
  }

  void emit(std::vector<RatPoly> e, RatPoly n, std::vector<KPiece>& out) {
    n = clean(n);
    if (n.isZero()) return;
    std::vector<RatPoly> kept;
    for (auto& p : e) {
      p = clean(p);
      if (p.isZero()) continue;
      if (p.isConstant()) return;
      kept.push_back(std::move(p));
    }
    out.push_back({std::move(kept), std::move(n)});
  }

  void elim(std::size_t var, std::vector<RatPoly> e0, std::vector<RatPoly> eb, RatPoly nfree, RatPoly nb,
            std::vector<KPiece>& out) {
    if (++branches_ > opts_.branchBudget)
      throw BudgetExceeded("elimination exceeded the branch budget of " + std::to_string(opts_.branchBudget));
    // Move b-free equations down; detect trivially inconsistent ones.
    std::vector<RatPoly> rest;
    for (auto& p : eb) {
      if (p.isZero()) continue;
      guard(p);
      if (p.involves(var)) {
        rest.push_back(clean(p));
      } else {
        if (p.isConstant()) return;
        e0.push_back(clean(p));
      }
    }
    eb = std::move(rest);
    nfree = clean(nfree);
    guard(nfree);

    if (eb.empty()) {
      if (!nb.involves(var)) return emit(e0, nfree * nb, out);
      for (const auto& [d, c] : nb.coefficientsIn(var)) emit(e0, nfree * c, out);
      return;
    }

    std::size_t pick = 0;
    for (std::size_t i = 1; i < eb.size(); ++i) {
      auto di = eb[i].degreeIn(var), dp = eb[pick].degreeIn(var);
      if (di < dp || (di == dp && eb[i].size() < eb[pick].size())) pick = i;
    }
    const RatPoly p = eb[pick];
    std::uint32_t deg = p.degreeIn(var);
    auto parts = p.coefficientsIn(var);
    RatPoly lc = parts.rbegin()->second;

    // Branch lc = 0 first.
    if (!lc.isConstant()) {
      std::vector<RatPoly> e0z = e0;
      e0z.push_back(lc);
      if (saturateDecide(e0z, nfree, opts_.groebner)) {
        Monomial top(vars_.size(), 0);
        top[var] = deg;
        std::vector<RatPoly> ebz = eb;
        ebz[pick] = p - lc.mulTerm(top, Rat(1));
        elim(var, std::move(e0z), std::move(ebz), nfree, nb, out);
      }
    }

    // Branch lc != 0.
    RatPoly nfreeLc = lc.isConstant() ? nfree : nfree * lc;
    std::vector<RatPoly> reduced{p};
    for (std::size_t i = 0; i < eb.size(); ++i)
      if (i != pick) reduced.push_back(pseudoRemainder(eb[i], p, var));
    bool single = std::count_if(reduced.begin(), reduced.end(),
                                [&](const RatPoly& q) { return q.involves(var); }) == 1;
    if (!single) return elim(var, std::move(e0), std::move(reduced), nfreeLc, nb, out);
    for (std::size_t i = 1; i < reduced.size(); ++i) {
      if (reduced[i].isZero()) continue;
      if (reduced[i].isConstant()) return;
      e0.push_back(clean(reduced[i]));
    }

    // A single equation of degree deg >= 1 with nonzero leading coefficient:
    // some root avoids Nb iff p does not divide Nb^deg.
    if (!nb.involves(var)) return emit(e0, nfreeLc * nb, out);
    RatPoly r = pseudoRemainder(nb, p, var);
    if (r.isZero()) return;
    RatPoly acc = r;
    for (std::uint32_t i = 1; i < deg && !acc.isZero(); ++i) {
      acc = pseudoRemainder(acc * r, p, var);
      guard(acc);
    }
    if (acc.isZero()) return;
    if (!acc.involves(var)) return emit(e0, nfreeLc * acc, out);
    for (const auto& [d, c] : acc.coefficientsIn(var)) emit(e0, nfreeLc * c, out);
  }

  const QEOptions& opts_;
  std::vector<std::string> vars_;
  unsigned guard_;
  std::size_t branches_ = 0;
};

std::string polyKey(const RatPoly& p) { return p.toString(); }

// p / gcd(p, dp/dx_1, ..., dp/dx_n): same zero set, no repeated factors.
RatPoly squarefree(const RatPoly& p) {
  if (p.isConstant()) return p;
  RatPoly g = p;
  for (std::size_t i = 0; i < p.vars().size() && !g.isConstant(); ++i)
    if (p.involves(i)) g = gcd(g, p.derivative(i));
  if (g.isConstant()) return p;
  return primitivePart(*divideExact(p, g));
}

bool samePolys(const std::vector<RatPoly>& a, const std::vector<RatPoly>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

// Reduced basis of an ideal with the same zero set: generators replaced by
// squarefree parts until stable.
std::vector<RatPoly> zeroSetBasis(std::vector<RatPoly> gens, const std::vector<std::string>& vars,
                                  const QEOptions& options) {
  if (gens.empty()) return gens;
  std::vector<RatPoly> basis;
  for (int round = 0; round < 4; ++round) {
    basis = groebner(gens, TermOrder::GrevLex, vars, options.groebner);
    if (basis[0].isConstant()) return basis;
    bool changed = false;
    for (auto& b : basis) {
      RatPoly sq = squarefree(clean(b)).withVars(vars);
      if (!(sq == b)) changed = true;
      b = sq;
    }
    if (!changed) break;
    gens = basis;
  }
  for (auto& b : basis) b = makeMonic(b).withVars(vars);
  std::sort(basis.begin(), basis.end(), [](const RatPoly& a, const RatPoly& b) {
    return compareMonomials(a.leadingMonomial(), b.leadingMonomial(), a.order()) < 0;
  });
  for (auto& b : basis) b = clean(b);
  return basis;
}

}  // namespace

bool KConstructible::isEverything() const {
  return pieces.size() == 1 && pieces[0].E.empty() && pieces[0].N.isConstant() && !pieces[0].N.isZero();
}

bool KConstructible::contains(const std::vector<Rat>& point) const {
  if (point.size() != vars.size()) throw DimensionError("point arity does not match the constructible set");
  for (const auto& pc : pieces) {
    bool ok = std::all_of(pc.E.begin(), pc.E.end(), [&](const RatPoly& e) { return evalAt(e, point).isZero(); });
    if (ok && !evalAt(pc.N, point).isZero()) return true;
  }
  return false;
}

std::string KConstructible::toString() const {
  if (pieces.empty()) return "false";
  std::string out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    std::vector<std::string> lits;
    for (const auto& e : pieces[i].E) lits.push_back(e.toString() + " = 0");
    if (!pieces[i].N.isConstant()) lits.push_back(pieces[i].N.toString() + " != 0");
    std::string s;
    for (std::size_t k = 0; k < lits.size(); ++k) s += (k ? " and " : "") + lits[k];
    if (s.empty()) s = "true";
    out += (i ? " or " : "") + (pieces.size() > 1 && lits.size() > 1 ? "(" + s + ")" : s);
  }
  return out;
}

KConstructible normalize(std::vector<std::string> vars, std::vector<KPiece> pieces, const QEOptions& options) {
  std::map<std::string, KPiece> canon;
  for (auto& pc : pieces) {
    std::vector<RatPoly> gens;
    for (const auto& e : pc.E) gens.push_back(place(e, vars));
    RatPoly n = place(pc.N, vars);
    std::vector<RatPoly> basis = zeroSetBasis(gens, vars, options);
    if (!basis.empty() && basis[0].isConstant()) continue;
    if (!basis.empty()) n = normalForm(n, groebner(basis, TermOrder::GrevLex, vars, options.groebner));
    n = squarefree(clean(n));
    if (n.isZero()) continue;
    if (!n.isConstant() && !saturateDecide(basis, n, options.groebner)) continue;
    for (auto& b : basis) b = clean(b).withVars(vars);
    n = n.withVars(vars);
    KPiece out{std::move(basis), n};
    std::string key;
    for (const auto& b : out.E) key += polyKey(b) + ";";
    key += "|" + polyKey(out.N);
    if (out.E.empty() && out.N.isConstant()) {
      // Everything: the union collapses.
      KConstructible all{vars, {}};
      all.pieces.push_back(std::move(out));
      return all;
    }
    canon.emplace(std::move(key), std::move(out));
  }
  std::vector<KPiece> list;
  for (auto& [k, pc] : canon) list.push_back(std::move(pc));

  // (E, N) with (E + N, 1) is (E, 1); pieces inside another piece go.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < list.size() && !changed; ++i) {
      if (list[i].N.isConstant()) continue;
      auto gens = list[i].E;
      gens.push_back(list[i].N);
      auto basis = zeroSetBasis(gens, vars, options);
      for (std::size_t j = 0; j < list.size(); ++j) {
        if (j == i || !list[j].N.isConstant() || !samePolys(list[j].E, basis)) continue;
        list[i].N = RatPoly::constant(Rat(1), vars);
        list.erase(list.begin() + static_cast<std::ptrdiff_t>(j));
        changed = true;
        break;
      }
    }
    for (std::size_t i = 0; i < list.size() && !changed; ++i) {
      for (std::size_t j = 0; j < list.size() && !changed; ++j) {
        if (i == j) continue;
        KConstructible a{vars, {list[i]}}, b{vars, {list[j]}};
        if (subset(a, b, options)) {
          list.erase(list.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
        }
      }
    }
  }
  return KConstructible{vars, std::move(list)};
}

bool decideExists(const KSystem& s, const QEOptions& options) {
  if (!s.freeVars.empty()) throw DomainError("decideExists needs a system without free variables");
  auto vars = allVars(s);
  std::vector<RatPoly> eqs;
  for (const auto& e : s.equations) eqs.push_back(place(e, vars));
  return saturateDecide(eqs, place(s.inequation, vars), options.groebner);
}

KConstructible eliminateExists(const KSystem& s, const QEOptions& options) {
  if (maxDegree(s) > options.degreeCap)
    throw BudgetExceeded("input degree " + std::to_string(maxDegree(s)) + " exceeds the degree cap " +
                         std::to_string(options.degreeCap));
  auto vars = allVars(s);
  KPiece start;
  for (const auto& e : s.equations) start.E.push_back(place(e, vars));
  start.N = place(s.inequation, vars);
  std::vector<KPiece> pieces{start};
  Eliminator elim(options, vars);
  for (auto it = s.existVars.rbegin(); it != s.existVars.rend(); ++it) {
    std::size_t var = static_cast<std::size_t>(std::find(vars.begin(), vars.end(), *it) - vars.begin());
    std::vector<KPiece> next;
    for (const auto& pc : pieces) {
      auto sub = elim.run(var, pc);
      next.insert(next.end(), sub.begin(), sub.end());
    }
    pieces = normalize(vars, std::move(next), options).pieces;
  }
  for (auto& pc : pieces) {
    for (auto& e : pc.E) e = e.withVars(s.freeVars);
    pc.N = pc.N.withVars(s.freeVars);
  }
  return normalize(s.freeVars, std::move(pieces), options);
}

bool decideAt(const KSystem& s, const std::vector<Rat>& values, const QEOptions& options) {
  if (values.size() != s.freeVars.size()) throw DimensionError("decideAt needs one value per free variable");
  auto vars = allVars(s);
  auto subst = [&](const RatPoly& p) {
    RatPoly q = place(p, vars);
    for (std::size_t i = 0; i < s.freeVars.size(); ++i)
      q = q.substitute(s.freeVars[i], RatPoly::constant(values[i], vars));
    return q.withVars(s.existVars);
  };
  KSystem g;
  g.existVars = s.existVars;
  for (const auto& e : s.equations) g.equations.push_back(subst(e));
  g.inequation = subst(s.inequation);
  return decideExists(g, options);
}

bool subset(const KConstructible& a, const KConstructible& b, const QEOptions& options) {
  if (a.vars != b.vars) throw DimensionError("subset test needs a common variable list");
  const std::size_t cap = 100000;
  for (const auto& pa : a.pieces) {
    // a-piece minus b is a union over one literal choice per b-piece of the
    // complement (some e != 0, or N = 0).
    std::vector<std::size_t> choice(b.pieces.size(), 0);
    std::size_t visited = 0;
    bool vacuous = std::any_of(b.pieces.begin(), b.pieces.end(),
                               [](const KPiece& pb) { return pb.E.empty() && pb.N.isConstant(); });
    if (vacuous) continue;
    while (true) {
      if (++visited > cap) throw BudgetExceeded("subset test exceeded its enumeration budget");
      std::vector<RatPoly> eqs = pa.E;
      RatPoly neq = pa.N;
      for (std::size_t j = 0; j < b.pieces.size(); ++j) {
        const auto& pb = b.pieces[j];
        if (choice[j] < pb.E.size()) {
          neq = neq * pb.E[choice[j]];
        } else {
          eqs.push_back(pb.N);
        }
      }
      if (saturateDecide(eqs, neq, options.groebner)) return false;
      std::size_t j = 0;
      for (; j < choice.size(); ++j) {
        bool hasN = !b.pieces[j].N.isConstant();
        std::size_t options_j = b.pieces[j].E.size() + (hasN ? 1 : 0);
        if (++choice[j] < options_j) break;
        choice[j] = 0;
      }
      if (j == choice.size()) break;
    }
  }
  return true;
}

}  // namespace pairtopo::acfqe
