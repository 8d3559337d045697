#include "pairtopo/pairsets.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"
#include "pairtopo/difffield.hpp"
#include "pairtopo/formulas.hpp"
#include "pairtopo/linalg.hpp"

namespace pairtopo::pairsets {

using difffield::kDependent;
using difffield::spanBasis;

std::vector<std::string> ambientVars(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

namespace {

OmegaPoly xVar(std::size_t i, std::size_t n) { return OmegaPoly::variable("x" + std::to_string(i), ambientVars(n)); }

OmegaPoly omegaConst(const OmegaElement& c, std::size_t n) { return OmegaPoly::constant(c, ambientVars(n)); }

OmegaElement evalAt(const OmegaPoly& p, const Point& pt) {
  return p.evaluate<OmegaElement>(pt, [](const OmegaElement& c) { return c; }, OmegaElement(1));
}

bool dependent(const std::vector<OmegaElement>& vals) {
  if (vals.size() == 1) return vals[0].isZero();
  for (const auto& v : vals)
    if (v.isZero()) return true;
  return kDependent(vals).has_value();
}

/// Columns are the components; rows are (monomial, basis element) pairs of
/// the coefficient expansion over a Q-basis of all coefficients.
RatMatrix coefficientMatrix(const std::vector<OmegaPoly>& comps) {
  std::vector<OmegaElement> coeffs;
  for (const auto& g : comps)
    for (const auto& t : g.terms()) coeffs.push_back(t.coeff);
  auto sb = spanBasis(coeffs);
  std::size_t p = sb.basis.size();
  std::map<Monomial, std::size_t> rowOf;
  for (const auto& g : comps)
    for (const auto& t : g.terms()) rowOf.emplace(t.mono, 0);
  std::size_t r = 0;
  for (auto& [m, idx] : rowOf) idx = r++;
  RatMatrix mat(rowOf.size() * p, comps.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (const auto& t : comps[i].terms()) {
      const auto& coord = sb.coordinates[k++];
      std::size_t base = rowOf[t.mono] * p;
      for (std::size_t l = 0; l < p; ++l) mat.at(base + l, i) += coord[l];
    }
  }
  return mat;
}

bool polynomiallyDependent(const std::vector<OmegaPoly>& comps) {
  for (const auto& g : comps)
    if (g.isZero()) return true;
  RatMatrix m = coefficientMatrix(comps);
  return rowReduce(m).pivots.size() < comps.size();
}

bool allConstant(const std::vector<OmegaPoly>& comps) {
  return std::all_of(comps.begin(), comps.end(), [](const OmegaPoly& g) { return g.isConstant(); });
}

std::vector<std::vector<OmegaPoly>> splitBlocks(const BasicClosed& b) {
  std::vector<std::vector<OmegaPoly>> out;
  std::size_t off = 0;
  for (std::size_t k : b.blocks) {
    out.emplace_back(b.map.components.begin() + static_cast<std::ptrdiff_t>(off),
                     b.map.components.begin() + static_cast<std::ptrdiff_t>(off + k));
    off += k;
  }
  return out;
}

BasicClosed joinBlocks(std::size_t n, const std::vector<std::vector<OmegaPoly>>& groups) {
  BasicClosed b;
  b.map.arityIn = n;
  for (const auto& g : groups) {
    b.blocks.push_back(g.size());
    b.map.components.insert(b.map.components.end(), g.begin(), g.end());
  }
  return b;
}

std::string blockKey(const std::vector<OmegaPoly>& g) {
  std::string s = std::to_string(g.size()) + ":";
  for (const auto& p : g) s += p.toString() + ";";
  return s;
}

std::string closedKey(const BasicClosed& b) {
  std::string s;
  for (const auto& g : splitBlocks(b)) s += blockKey(g) + "|";
  return s;
}

std::string closedSetKey(const ClosedSet& c) {
  std::string s = "{";
  for (const auto& m : c.members) s += closedKey(m) + ",";
  return s + "}";
}

bool isEmptyForm(const BasicClosed& b) {
  return b.blocks.size() == 1 && b.blocks[0] == 1 && b.map.components[0].isConstant() &&
         !b.map.components[0].isZero();
}

/// Nonzero linear form with rational coefficients and no constant term.
bool isRationalLinearForm(const OmegaPoly& g) {
  if (g.isZero()) return false;
  for (const auto& t : g.terms()) {
    if (monomialDegree(t.mono) != 1 || !t.coeff.isRational()) return false;
  }
  return true;
}

bool isNonzeroRational(const OmegaPoly& g) { return g.isConstant() && !g.isZero() && g.constantValue().isRational(); }

}  // namespace

PolyMap::PolyMap(std::size_t n, std::vector<OmegaPoly> comps) : arityIn(n) {
  auto vars = ambientVars(n);
  for (auto& c : comps) components.push_back(c.withVars(vars));
}

PolyMap PolyMap::identity(std::size_t n) {
  std::vector<OmegaPoly> comps;
  for (std::size_t i = 1; i <= n; ++i) comps.push_back(xVar(i, n));
  return PolyMap(n, std::move(comps));
}

Point PolyMap::apply(const Point& p) const {
  if (p.size() != arityIn) throw DimensionError("point arity mismatch");
  Point out;
  out.reserve(components.size());
  for (const auto& c : components) out.push_back(evalAt(c, p));
  return out;
}

bool BasicClosed::member(const Point& p) const {
  Point vals = map.apply(p);
  std::size_t off = 0;
  for (std::size_t k : blocks) {
    std::vector<OmegaElement> part(vals.begin() + static_cast<std::ptrdiff_t>(off),
                                   vals.begin() + static_cast<std::ptrdiff_t>(off + k));
    if (!dependent(part)) return false;
    off += k;
  }
  return true;
}

BasicClosed BasicClosed::whole(std::size_t n) { return {PolyMap(n, {}), {}}; }

BasicClosed BasicClosed::emptySet(std::size_t n) { return {PolyMap(n, {omegaConst(OmegaElement(1), n)}), {1}}; }

bool ClosedSet::member(const Point& p) const {
  return std::any_of(members.begin(), members.end(), [&](const BasicClosed& b) { return b.member(p); });
}

ClosedSet ClosedSet::of(BasicClosed b) {
  std::size_t n = b.arity();
  return {n, {std::move(b)}};
}

bool Constructible::member(const Point& p) const {
  return std::any_of(pairs.begin(), pairs.end(), [&](const Pair& q) { return q.C.member(p) && !q.D.member(p); });
}

Constructible Constructible::closed(ClosedSet c) {
  std::size_t n = c.arity;
  return canonical(Constructible{n, {{std::move(c), ClosedSet::empty(n)}}});
}

BasicClosed mkYn(std::size_t n) {
  if (n == 0) throw DimensionError("Y_n needs n >= 1");
  return {PolyMap::identity(n), {n}};
}

ClosedSet mkKn(std::size_t n) {
  if (n == 0) throw DimensionError("k^n needs n >= 1");
  std::vector<OmegaPoly> comps;
  for (std::size_t i = 1; i <= n; ++i) {
    comps.push_back(xVar(i, n));
    comps.push_back(omegaConst(OmegaElement(1), n));
  }
  return ClosedSet::of({PolyMap(n, std::move(comps)), std::vector<std::size_t>(n, 2)});
}

ClosedSet mkSpan(const std::vector<OmegaElement>& alpha) {
  if (alpha.empty()) throw DimensionError("span of an empty tuple");
  auto sb = spanBasis(alpha);
  std::vector<OmegaPoly> comps;
  for (std::size_t i : sb.basis)
    if (!alpha[i].isZero()) comps.push_back(omegaConst(alpha[i], 1));
  comps.push_back(xVar(1, 1));
  std::size_t k = comps.size();
  return ClosedSet::of({PolyMap(1, std::move(comps)), {k}});
}

Constructible mkXn(std::size_t n) {
  if (n == 0) throw DimensionError("X_n needs n >= 1");
  BasicClosed c = mkYn(n + 1);
  std::vector<OmegaPoly> comps;
  for (std::size_t i = 1; i <= n; ++i) comps.push_back(xVar(i, n + 1));
  BasicClosed d{PolyMap(n + 1, std::move(comps)), {n}};
  return Constructible{n + 1, {{ClosedSet::of(c), ClosedSet::of(d)}}};
}

ClosedSet mkFiberFni(std::size_t n, std::size_t i, const KScalar& a) {
  if (i < 1 || i > n) throw DomainError("fiber index out of range");
  std::vector<OmegaPoly> comps;
  for (std::size_t j = 1; j <= n; ++j) {
    if (j == i) {
      comps.push_back(xVar(j, n + 1).scaled(OmegaElement(a.value)) - xVar(n + 1, n + 1));
    } else {
      comps.push_back(xVar(j, n + 1));
    }
  }
  return ClosedSet::of({PolyMap(n + 1, std::move(comps)), {n}});
}

BasicClosed simplify(const BasicClosed& b) {
  std::size_t n = b.arity();
  std::vector<std::vector<OmegaPoly>> kept;
  std::set<std::string> seen;
  std::vector<std::pair<std::string, std::vector<OmegaPoly>>> keyed;
  for (auto& g : splitBlocks(b)) {
    if (polynomiallyDependent(g)) continue;
    if (allConstant(g)) return BasicClosed::emptySet(n);
    std::string key = blockKey(g);
    if (seen.insert(key).second) keyed.emplace_back(std::move(key), std::move(g));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (auto& [k, g] : keyed) kept.push_back(std::move(g));
  return joinBlocks(n, kept);
}

bool isFullAmbient(const BasicClosed& c) { return simplify(c).blocks.empty(); }

bool isTriviallyEmpty(const BasicClosed& c) { return isEmptyForm(simplify(c)); }

ClosedSet canonical(ClosedSet c) {
  std::map<std::string, BasicClosed> byKey;
  for (const auto& m : c.members) {
    BasicClosed s = simplify(m);
    if (isEmptyForm(s)) continue;
    if (s.blocks.empty()) return ClosedSet::whole(c.arity);
    byKey.emplace(closedKey(s), std::move(s));
  }
  ClosedSet out{c.arity, {}};
  for (auto& [k, m] : byKey) out.members.push_back(std::move(m));
  return out;
}

Constructible canonical(Constructible x) {
  std::map<std::string, Constructible::Pair> byKey;
  for (auto& p : x.pairs) {
    ClosedSet c = canonical(std::move(p.C));
    ClosedSet d = canonical(std::move(p.D));
    if (c.members.empty()) continue;
    if (!d.members.empty() && d.members[0].blocks.empty()) continue;
    std::string key = closedSetKey(c) + "\\" + closedSetKey(d);
    byKey.emplace(std::move(key), Constructible::Pair{std::move(c), std::move(d)});
  }
  Constructible out{x.arity, {}};
  for (auto& [k, p] : byKey) out.pairs.push_back(std::move(p));
  return out;
}

BasicClosed intersect(const BasicClosed& a, const BasicClosed& b) {
  if (a.arity() != b.arity()) throw DimensionError("intersection of sets of different arity");
  BasicClosed out = a;
  out.map.components.insert(out.map.components.end(), b.map.components.begin(), b.map.components.end());
  out.blocks.insert(out.blocks.end(), b.blocks.begin(), b.blocks.end());
  return simplify(out);
}

ClosedSet intersect(const ClosedSet& a, const ClosedSet& b) {
  if (a.arity != b.arity) throw DimensionError("intersection of sets of different arity");
  ClosedSet out{a.arity, {}};
  for (const auto& x : a.members)
    for (const auto& y : b.members) out.members.push_back(intersect(x, y));
  return canonical(std::move(out));
}

ClosedSet unite(const ClosedSet& a, const ClosedSet& b) {
  if (a.arity != b.arity) throw DimensionError("union of sets of different arity");
  ClosedSet out = a;
  out.members.insert(out.members.end(), b.members.begin(), b.members.end());
  return canonical(std::move(out));
}

ClosedSet productSet(const ClosedSet& a, const ClosedSet& b) {
  std::size_t n = a.arity, m = b.arity, total = n + m;
  auto vars = ambientVars(total);
  std::vector<std::string> shifted;
  for (std::size_t j = 1; j <= m; ++j) shifted.push_back("x" + std::to_string(n + j));
  ClosedSet out{total, {}};
  for (const auto& x : a.members) {
    for (const auto& y : b.members) {
      BasicClosed z;
      z.map.arityIn = total;
      for (const auto& c : x.map.components) z.map.components.push_back(c.withVars(vars));
      for (const auto& c : y.map.components)
        z.map.components.push_back(OmegaPoly(shifted, c.terms(), c.order()).withVars(vars));
      z.blocks = x.blocks;
      z.blocks.insert(z.blocks.end(), y.blocks.begin(), y.blocks.end());
      out.members.push_back(std::move(z));
    }
  }
  return canonical(std::move(out));
}

Constructible complementToConstructible(const ClosedSet& c) {
  return canonical(Constructible{c.arity, {{ClosedSet::whole(c.arity), c}}});
}

Constructible unite(const Constructible& a, const Constructible& b) {
  if (a.arity != b.arity) throw DimensionError("union of sets of different arity");
  Constructible out = a;
  out.pairs.insert(out.pairs.end(), b.pairs.begin(), b.pairs.end());
  return canonical(std::move(out));
}

Constructible intersect(const Constructible& a, const Constructible& b) {
  if (a.arity != b.arity) throw DimensionError("intersection of sets of different arity");
  Constructible out{a.arity, {}};
  for (const auto& p : a.pairs)
    for (const auto& q : b.pairs) out.pairs.push_back({intersect(p.C, q.C), unite(p.D, q.D)});
  return canonical(std::move(out));
}

Constructible complement(const Constructible& a) {
  // Omega \ (C \ D) = (Omega \ C) or D.
  Constructible out = Constructible::whole(a.arity);
  for (const auto& p : a.pairs) {
    Constructible piece = complementToConstructible(p.C);
    if (!p.D.members.empty()) piece = unite(piece, Constructible::closed(p.D));
    out = intersect(out, piece);
  }
  return out;
}

Constructible difference(const Constructible& a, const Constructible& b) { return intersect(a, complement(b)); }

bool certifiedIrreducible(const BasicClosed& c) {
  BasicClosed s = simplify(c);
  std::size_t n = s.arity();
  if (s.blocks.empty()) return true;
  if (isEmptyForm(s)) return false;
  auto groups = splitBlocks(s);
  if (groups.size() == 1) {
    const auto& g = groups[0];
    // Independent rational linear forms: a linear image of Y_k x Omega^(n-k).
    if (std::all_of(g.begin(), g.end(), isRationalLinearForm)) return !polynomiallyDependent(g);
    // Span: independent constants followed by one linear form.
    std::vector<OmegaPoly> head(g.begin(), g.end() - 1);
    if (allConstant(head) && isRationalLinearForm(g.back()) && !polynomiallyDependent(head)) return true;
  }
  // k^n: one block (x_i, r) per coordinate.
  if (groups.size() != n) return false;
  std::set<std::string> coords;
  for (const auto& g : groups) {
    if (g.size() != 2) return false;
    const OmegaPoly* lin = isNonzeroRational(g[1]) ? &g[0] : isNonzeroRational(g[0]) ? &g[1] : nullptr;
    if (!lin || lin->size() != 1 || !isRationalLinearForm(*lin)) return false;
    coords.insert(lin->monomialText(lin->leadingMonomial()));
  }
  return coords.size() == n;
}

Point randomPoint(std::size_t n, std::mt19937_64& rng) {
  auto t = [](std::size_t i) { return OmegaElement::generator(i); };
  const std::vector<OmegaElement> atoms = {
      OmegaElement(1), t(0), t(1), t(0) * t(0), t(0) * t(1), (t(0) + OmegaElement(1)).inverse(), t(0) + t(2), t(3)};
  std::uniform_int_distribution<int> mode(0, 9), small(-4, 4), den(1, 3), atom(0, static_cast<int>(atoms.size()) - 1);
  auto rat = [&] { return OmegaElement(Rat(small(rng), den(rng))); };
  Point p(n);
  int m = mode(rng);
  if (m < 2) {
    for (auto& c : p) c = rat();
  } else if (m < 4) {
    for (std::size_t i = 0; i < n; ++i) p[i] = rat() + OmegaElement(Rat(small(rng) | 1)) * atoms[1 + (atom(rng) + i) % (atoms.size() - 1)];
  } else if (m < 8) {
    // Coordinates inside a span of one or two atoms.
    std::size_t b = 1 + static_cast<std::size_t>(rng() % 2);
    std::vector<OmegaElement> basis;
    for (std::size_t j = 0; j < b; ++j) basis.push_back(atoms[static_cast<std::size_t>(atom(rng))]);
    for (auto& c : p)
      for (const auto& e : basis) c += OmegaElement(Rat(small(rng))) * e;
  } else {
    for (auto& c : p) {
      int k = small(rng);
      if (k < -2) {
        c = OmegaElement(0);
      } else if (k < 1) {
        c = rat();
      } else {
        c = rat() * atoms[static_cast<std::size_t>(atom(rng))];
      }
    }
  }
  return p;
}

std::optional<Point> findWitness(const ClosedSet& c, const ClosedSet& d, const SampleOptions& options) {
  std::size_t n = c.arity;
  auto ok = [&](const Point& p) { return c.member(p) && !d.member(p); };
  std::vector<Point> fixed{Point(n, OmegaElement(0)), Point(n, OmegaElement(1))};
  Point generic;
  for (std::size_t i = 0; i < n; ++i) generic.push_back(OmegaElement::generator(i));
  fixed.push_back(generic);
  for (const auto& p : fixed)
    if (ok(p)) return p;
  std::mt19937_64 rng(options.seed);
  for (std::size_t s = 0; s < options.samples; ++s) {
    Point p = randomPoint(n, rng);
    if (ok(p)) return p;
  }
  return std::nullopt;
}

ClosureResult closure(const Constructible& x, const SampleOptions& options) {
  Constructible cx = canonical(x);
  ClosureResult out{ClosedSet::empty(cx.arity), true};
  for (const auto& p : cx.pairs) {
    if (p.D.members.empty()) {
      out.set = unite(out.set, p.C);
      continue;
    }
    bool whole = p.C.members.size() == 1 && p.C.members[0].blocks.empty();
    bool nonempty = findWitness(p.C, p.D, options).has_value();
    // A nonempty open subset of Omega^n is dense.
    if (whole && nonempty) return {ClosedSet::whole(cx.arity), true};
    if (!nonempty || p.C.members.size() != 1 || !certifiedIrreducible(p.C.members[0])) out.exact = false;
    out.set = unite(out.set, p.C);
  }
  return out;
}

std::vector<RatPoly> zariskiRestrictK(const BasicClosed& c, std::size_t n) {
  if (c.arity() != n) throw DimensionError("arity mismatch in zariskiRestrictK");
  auto vars = ambientVars(n);
  BasicClosed s = simplify(c);
  if (isEmptyForm(s)) return {RatPoly::constant(Rat(1), vars)};
  std::set<std::string> seen;
  std::vector<RatPoly> out;
  for (const auto& g : splitBlocks(s)) {
    std::vector<OmegaElement> coeffs;
    for (const auto& comp : g)
      for (const auto& t : comp.terms()) coeffs.push_back(t.coeff);
    auto sb = spanBasis(coeffs);
    std::size_t p = sb.basis.size(), m = g.size();
    if (p < m) continue;
    // Row l, column i: the coordinate-l part of component i, a polynomial over Q.
    std::vector<std::vector<std::vector<RatPoly::Term>>> parts(p, std::vector<std::vector<RatPoly::Term>>(m));
    std::size_t k = 0;
    for (std::size_t i = 0; i < m; ++i) {
      for (const auto& t : g[i].terms()) {
        const auto& coord = sb.coordinates[k++];
        for (std::size_t l = 0; l < p; ++l)
          if (!coord[l].isZero()) parts[l][i].push_back({t.mono, coord[l]});
      }
    }
    PolyMatrix full(p, std::vector<RatPoly>(m));
    for (std::size_t l = 0; l < p; ++l)
      for (std::size_t i = 0; i < m; ++i) full[l][i] = RatPoly(vars, parts[l][i]);
    std::vector<bool> pick(p, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(m), true);
    do {
      PolyMatrix sq;
      for (std::size_t l = 0; l < p; ++l)
        if (pick[l]) sq.push_back(full[l]);
      RatPoly minor = polyDeterminant(sq);
      if (minor.isZero()) continue;
      minor = primitivePart(minor).withVars(vars);
      if (seen.insert(minor.toString()).second) out.push_back(minor);
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return out;
}

std::vector<RatPoly> zariskiRestrictK(const ClosedSet& c, std::size_t n) {
  auto vars = ambientVars(n);
  std::vector<RatPoly> acc{RatPoly::constant(Rat(1), vars)};
  for (const auto& m : c.members) {
    auto fam = zariskiRestrictK(m, n);
    if (fam.empty()) return {};
    std::vector<RatPoly> next;
    std::set<std::string> seen;
    for (const auto& a : acc) {
      for (const auto& f : fam) {
        RatPoly prod = primitivePart(a * f).withVars(vars);
        if (seen.insert(prod.toString()).second) next.push_back(prod);
      }
    }
    acc = std::move(next);
  }
  return acc;
}

namespace {

using nlohmann::ordered_json;

ordered_json closedToJson(const ClosedSet& c) {
  ordered_json arr = ordered_json::array();
  for (const auto& m : c.members) {
    ordered_json o;
    ordered_json comps = ordered_json::array();
    for (const auto& p : m.map.components) comps.push_back(p.toString());
    o["map"] = comps;
    o["blocks"] = m.blocks;
    arr.push_back(o);
  }
  return arr;
}

ClosedSet closedFromJson(const ordered_json& arr, std::size_t n) {
  if (!arr.is_array()) throw SchemaError("closed set must be an array");
  ClosedSet out{n, {}};
  formulas::ParseOptions po;
  po.freeVars = ambientVars(n);
  for (const auto& o : arr) {
    if (!o.is_object() || !o.contains("map") || !o.contains("blocks")) throw SchemaError("basic closed set needs map and blocks");
    const auto& mp = o["map"];
    const auto& bl = o["blocks"];
    if (!mp.is_array() || !bl.is_array()) throw SchemaError("map and blocks must be arrays");
    BasicClosed b;
    std::vector<OmegaPoly> comps;
    for (const auto& s : mp) {
      if (!s.is_string()) throw SchemaError("map entries must be polynomial strings");
      try {
        comps.push_back(formulas::parsePoly(s.get<std::string>(), po));
      } catch (const ParseError& e) {
        throw SchemaError(std::string("bad polynomial in map: ") + e.what());
      }
    }
    std::size_t total = 0;
    for (const auto& k : bl) {
      if (!k.is_number_unsigned() || k.get<std::size_t>() == 0) throw SchemaError("blocks must be positive integers");
      b.blocks.push_back(k.get<std::size_t>());
      total += b.blocks.back();
    }
    if (total != comps.size()) throw SchemaError("block sizes do not sum to the map length");
    b.map = PolyMap(n, std::move(comps));
    out.members.push_back(std::move(b));
  }
  return out;
}

}  // namespace

std::string serialize(const Constructible& x) {
  ordered_json j;
  j["arity"] = x.arity;
  ordered_json pairs = ordered_json::array();
  for (const auto& p : x.pairs) {
    ordered_json o;
    o["C"] = closedToJson(p.C);
    o["D"] = closedToJson(p.D);
    pairs.push_back(o);
  }
  j["pairs"] = pairs;
  return j.dump();
}

Constructible deserialize(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("arity") || !j.contains("pairs")) throw SchemaError("expected arity and pairs");
  if (!j["arity"].is_number_unsigned()) throw SchemaError("arity must be a natural number");
  std::size_t n = j["arity"].get<std::size_t>();
  if (!j["pairs"].is_array()) throw SchemaError("pairs must be an array");
  Constructible x{n, {}};
  for (const auto& p : j["pairs"]) {
    if (!p.is_object() || !p.contains("C") || !p.contains("D")) throw SchemaError("pair needs C and D");
    x.pairs.push_back({closedFromJson(p["C"], n), closedFromJson(p["D"], n)});
  }
  return x;
}

std::string toString(const BasicClosed& b) {
  if (b.blocks.empty()) return "Omega^" + std::to_string(b.arity());
  if (isEmptyForm(b)) return "empty";
  std::string s;
  for (const auto& g : splitBlocks(b)) {
    if (!s.empty()) s += " and ";
    s += "Y" + std::to_string(g.size()) + "(";
    for (std::size_t i = 0; i < g.size(); ++i) s += (i ? ", " : "") + g[i].toString();
    s += ")";
  }
  return s;
}

}  // namespace pairtopo::pairsets
