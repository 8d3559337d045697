#include "pairtopo/translator.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"
#include "pairtopo/difffield.hpp"

namespace pairtopo::translator {

using pairsets::ambientVars;
using pairsets::BasicClosed;
using pairsets::ClosedSet;
using pairsets::Constructible;

namespace {

OmegaElement evalAt(const OmegaPoly& p, const Point& pt) {
  return p.evaluate<OmegaElement>(pt, [](const OmegaElement& c) { return c; }, OmegaElement(1));
}

OmegaPoly monomialValue(const Monomial& iota, const OmegaElement& tau, std::size_t n) {
  return OmegaPoly(ambientVars(n), {{iota, tau}});
}

std::vector<std::string> allVars(const BasicFormulaBlock& b) {
  auto all = b.freeVars;
  all.insert(all.end(), b.boundVars.begin(), b.boundVars.end());
  return all;
}

std::vector<OmegaPoly> blockPolys(const BasicFormulaBlock& b) {
  auto all = allVars(b);
  std::vector<OmegaPoly> out{b.p0.withVars(all)};
  for (const auto& e : b.eqs) out.push_back(e.withVars(all));
  return out;
}

/// Subsets of {0..L-1} by size, then lexicographically.
std::vector<std::vector<std::size_t>> orderedSubsets(std::size_t L, bool nonempty) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = nonempty ? 1 : 0; s <= L; ++s) {
    std::vector<bool> pick(L, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(s), true);
    do {
      std::vector<std::size_t> sub;
      for (std::size_t i = 0; i < L; ++i)
        if (pick[i]) sub.push_back(i);
      out.push_back(std::move(sub));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return out;
}

std::string coordName(std::size_t j, std::size_t k, std::size_t idx) {
  return "A" + std::to_string(j) + "_" + std::to_string(k) + "_" + std::to_string(idx + 1);
}

}  // namespace

OmegaPoly SupportData::reconstruct(std::size_t j) const {
  std::vector<std::string> all = freeVars;
  all.insert(all.end(), boundVars.begin(), boundVars.end());
  OmegaPoly out(all);
  for (const auto& term : I[j]) {
    OmegaPoly v = OmegaPoly(freeVars, term.value.terms(), term.value.order()).withVars(all);
    out += v * embedRational(term.coeff).withVars(all);
  }
  return out;
}

SupportData support(const BasicFormulaBlock& block) {
  SupportData sd;
  sd.freeVars = block.freeVars;
  sd.boundVars = block.boundVars;
  std::size_t n = block.freeVars.size();
  auto polys = blockPolys(block);
  std::vector<OmegaElement> coeffs{OmegaElement(1)};
  for (const auto& p : polys)
    for (const auto& t : p.terms()) coeffs.push_back(t.coeff);
  auto sb = difffield::spanBasis(coeffs);
  for (std::size_t i : sb.basis) sd.tau.push_back(coeffs[i]);
  std::size_t idx = 1;
  for (const auto& p : polys) {
    std::map<std::pair<Monomial, std::size_t>, std::vector<RatPoly::Term>> buckets;
    for (const auto& t : p.terms()) {
      const auto& coord = sb.coordinates[idx++];
      Monomial iota(t.mono.begin(), t.mono.begin() + static_cast<std::ptrdiff_t>(n));
      Monomial lambda(t.mono.begin() + static_cast<std::ptrdiff_t>(n), t.mono.end());
      for (std::size_t l = 0; l < coord.size(); ++l)
        if (!coord[l].isZero()) buckets[{iota, l}].push_back({lambda, coord[l]});
    }
    std::vector<SupportTerm> terms;
    for (auto& [key, ts] : buckets) {
      RatPoly c(block.boundVars, std::move(ts));
      if (c.isZero()) continue;
      terms.push_back({key.first, key.second, monomialValue(key.first, sd.tau[key.second], n), std::move(c)});
    }
    sd.I.push_back(std::move(terms));
  }
  return sd;
}

PairCertificate translate(const BasicFormulaBlock& block, const TranslateOptions& options) {
  SupportData sd = support(block);
  std::size_t n = block.freeVars.size();
  std::size_t s = sd.I.size();
  PairCertificate cert;
  cert.arity = n;
  cert.freeVars = block.freeVars;
  if (sd.I[0].empty()) return cert;

  std::vector<std::vector<std::vector<std::size_t>>> choices(s);
  std::size_t total = 1;
  for (std::size_t j = 0; j < s; ++j) {
    bool hasConstant = std::any_of(sd.I[j].begin(), sd.I[j].end(),
                                   [](const SupportTerm& t) { return monomialDegree(t.iota) == 0; });
    choices[j] = orderedSubsets(sd.I[j].size(), j == 0 || hasConstant);
    total *= choices[j].size();
    if (total > options.cellBudget)
      throw BudgetExceeded("K-cell enumeration exceeds the budget of " + std::to_string(options.cellBudget));
  }

  std::vector<std::size_t> counter(s, 0);
  for (std::size_t cellNo = 0; cellNo < total; ++cellNo) {
    Cell cell;
    for (std::size_t j = 0; j < s; ++j) cell.K.push_back(choices[j][counter[j]]);
    // Advance the mixed-radix counter, last row fastest.
    for (std::size_t j = s; j-- > 0;) {
      if (++counter[j] < choices[j].size()) break;
      counter[j] = 0;
    }

    BasicClosed c;
    c.map.arityIn = n;
    ClosedSet d{n, {}};
    std::vector<std::string> aVars;
    std::vector<RatPoly> eqs;
    std::vector<RatPoly> ineqs;
    for (std::size_t j = 0; j < s; ++j) {
      const auto& Kj = cell.K[j];
      std::vector<OmegaPoly> basis;
      std::vector<std::vector<std::uint32_t>> kidx;
      for (std::size_t i : Kj) {
        basis.push_back(sd.I[j][i].value);
        std::vector<std::uint32_t> mi(sd.I[j][i].iota.begin(), sd.I[j][i].iota.end());
        if (sd.tau.size() > 1) mi.push_back(static_cast<std::uint32_t>(sd.I[j][i].tau));
        kidx.push_back(std::move(mi));
      }
      cell.Kindices.push_back(std::move(kidx));
      for (std::size_t i = 0; i < sd.I[j].size(); ++i) {
        if (std::find(Kj.begin(), Kj.end(), i) != Kj.end()) continue;
        auto comps = basis;
        comps.push_back(sd.I[j][i].value);
        c.map.components.insert(c.map.components.end(), comps.begin(), comps.end());
        c.blocks.push_back(comps.size());
      }
      if (!basis.empty()) d.members.push_back({pairsets::PolyMap(n, basis), {basis.size()}});
      cell.bases.push_back(basis);

      for (std::size_t k = 1; k <= Kj.size(); ++k) {
        std::vector<std::pair<std::size_t, std::string>> row;
        for (std::size_t i = 0; i < sd.I[j].size(); ++i) {
          if (std::find(Kj.begin(), Kj.end(), i) != Kj.end()) continue;
          std::string name = coordName(j, k, i);
          aVars.push_back(name);
          cell.coords.push_back({name, j, k, sd.I[j][i].value});
          row.emplace_back(i, name);
        }
        // sum over iota of p_{j iota}(y) A_{j,k,iota}, with A = delta on K_j.
        RatPoly lin = sd.I[j][Kj[k - 1]].coeff;
        for (const auto& [i, name] : row) lin = lin + sd.I[j][i].coeff * RatPoly::variable(name, {name});
        (j == 0 ? ineqs : eqs).push_back(lin);
      }
    }
    Constructible sk = pairsets::canonical(Constructible{n, {{ClosedSet::of(c), d}}});
    if (sk.pairs.empty()) continue;

    std::vector<acfqe::KPiece> pieces;
    for (const auto& q : ineqs) {
      acfqe::KSystem sys{block.boundVars, aVars, eqs, q};
      auto part = acfqe::eliminateExists(sys, options.qe);
      pieces.insert(pieces.end(), part.pieces.begin(), part.pieces.end());
    }
    cell.z = acfqe::normalize(aVars, pieces, options.qe);
    if (cell.z.isEmpty()) continue;
    cell.sk = std::move(sk);
    cert.cells.push_back(std::move(cell));
  }
  return cert;
}

bool memberCert(const PairCertificate& cert, const Point& p) {
  if (p.size() != cert.arity) throw DimensionError("point arity mismatch");
  for (const auto& cell : cert.cells) {
    if (!cell.sk.member(p)) continue;
    std::vector<std::vector<OmegaElement>> basisVals;
    for (const auto& b : cell.bases) {
      std::vector<OmegaElement> vals;
      for (const auto& e : b) vals.push_back(evalAt(e, p));
      basisVals.push_back(std::move(vals));
    }
    std::vector<Rat> a;
    std::map<std::pair<std::size_t, std::string>, RatVector> cache;
    for (const auto& cv : cell.coords) {
      auto key = std::make_pair(cv.j, cv.value.toString());
      auto it = cache.find(key);
      if (it == cache.end()) {
        try {
          it = cache.emplace(key, difffield::coordinatesIn(basisVals[cv.j], evalAt(cv.value, p))).first;
        } catch (const DomainError& e) {
          throw InvariantBreach(std::string("coordinate undefined on a point of S_K: ") + e.what());
        }
      }
      a.push_back(it->second[cv.k - 1]);
    }
    std::vector<Rat> ordered;
    for (const auto& v : cell.z.vars) {
      auto pos = std::find_if(cell.coords.begin(), cell.coords.end(), [&](const CoordVar& c) { return c.name == v; });
      if (pos == cell.coords.end()) throw InvariantBreach("z uses an unknown coordinate " + v);
      ordered.push_back(a[static_cast<std::size_t>(pos - cell.coords.begin())]);
    }
    if (cell.z.contains(ordered)) return true;
  }
  return false;
}

bool decideDirect(const BasicFormulaBlock& block, const Point& p, const acfqe::QEOptions& options) {
  std::size_t n = block.freeVars.size();
  if (p.size() != n) throw DimensionError("point arity mismatch");
  auto polys = blockPolys(block);
  // p_j(p, y) split along a Q-basis of its coefficient values.
  auto split = [&](const OmegaPoly& poly) {
    std::map<Monomial, OmegaElement> byLambda;
    for (const auto& t : poly.terms()) {
      OmegaElement v = t.coeff;
      for (std::size_t i = 0; i < n; ++i)
        if (t.mono[i]) v *= p[i].pow(t.mono[i]);
      Monomial lambda(t.mono.begin() + static_cast<std::ptrdiff_t>(n), t.mono.end());
      byLambda[lambda] += v;
    }
    std::vector<Monomial> lambdas;
    std::vector<OmegaElement> values;
    for (auto& [l, v] : byLambda) {
      if (v.isZero()) continue;
      lambdas.push_back(l);
      values.push_back(v);
    }
    auto sb = difffield::spanBasis(values);
    std::vector<RatPoly> out;
    for (std::size_t b = 0; b < sb.basis.size(); ++b) {
      std::vector<RatPoly::Term> ts;
      for (std::size_t i = 0; i < values.size(); ++i)
        if (!sb.coordinates[i][b].isZero()) ts.push_back({lambdas[i], sb.coordinates[i][b]});
      out.push_back(RatPoly(block.boundVars, std::move(ts)));
    }
    return out;
  };
  std::vector<RatPoly> eqs;
  for (std::size_t j = 1; j < polys.size(); ++j) {
    auto parts = split(polys[j]);
    eqs.insert(eqs.end(), parts.begin(), parts.end());
  }
  for (const auto& g : split(polys[0])) {
    if (acfqe::decideExists({block.boundVars, {}, eqs, g}, options)) return true;
  }
  return false;
}

FlatResult flattenLinear(const PairCertificate& cert) {
  std::size_t n = cert.arity;
  Constructible out = Constructible::empty(n);
  for (const auto& cell : cert.cells) {
    std::map<std::string, const CoordVar*> byName;
    for (const auto& cv : cell.coords) byName[cv.name] = &cv;
    // Fiber set of one linear condition sum c_v A_v + c0 = 0.
    auto fiber = [&](const RatPoly& lin) -> std::variant<BasicClosed, NotFlattenable> {
      if (lin.totalDegree() > 1) return NotFlattenable{lin.toString()};
      const CoordVar* group = nullptr;
      OmegaPoly beta = OmegaPoly::constant(OmegaElement(0), ambientVars(n));
      Rat c0;
      for (const auto& t : lin.terms()) {
        std::size_t v = 0;
        while (v < t.mono.size() && t.mono[v] == 0) ++v;
        if (v == t.mono.size()) {
          c0 = t.coeff;
          continue;
        }
        const CoordVar* cv = byName.at(lin.vars()[v]);
        if (group && (group->j != cv->j || group->k != cv->k))
          return NotFlattenable{lin.toString() + " (mixes coordinates of different basis positions)"};
        group = cv;
        beta = beta + cv->value.scaled(OmegaElement(t.coeff));
      }
      const auto& basis = cell.bases[group->j];
      std::vector<OmegaPoly> comps = basis;
      comps[group->k - 1] = basis[group->k - 1].scaled(OmegaElement(-c0)) - beta;
      return BasicClosed{pairsets::PolyMap(n, comps), {comps.size()}};
    };
    for (const auto& piece : cell.z.pieces) {
      ClosedSet extra = ClosedSet::whole(n);
      for (const auto& e : piece.E) {
        if (e.isConstant()) {
          if (!e.isZero()) extra = ClosedSet::empty(n);
          continue;
        }
        auto f = fiber(e);
        if (auto* bad = std::get_if<NotFlattenable>(&f)) return *bad;
        extra = pairsets::intersect(extra, ClosedSet::of(std::get<BasicClosed>(f)));
      }
      ClosedSet removed = ClosedSet::empty(n);
      if (piece.N.isZero()) continue;
      if (!piece.N.isConstant()) {
        auto f = fiber(piece.N);
        if (auto* bad = std::get_if<NotFlattenable>(&f)) return *bad;
        removed = ClosedSet::of(std::get<BasicClosed>(f));
      }
      for (const auto& pr : cell.sk.pairs) {
        Constructible part{n, {{pairsets::intersect(pr.C, extra), pairsets::unite(pr.D, removed)}}};
        out = pairsets::unite(out, part);
      }
    }
  }
  return pairsets::canonical(out);
}

namespace {

std::size_t treeArity(const BlockTree& tree) {
  auto leaves = tree.leaves();
  return leaves.empty() ? 0 : leaves[0]->freeVars.size();
}

CertTree combine(const BlockTree& tree, std::size_t n, const TranslateOptions& options) {
  CertTree out;
  out.op = tree.op;
  out.cert.arity = n;
  if (tree.op == BlockTree::Op::Leaf) {
    out.cert = translate(tree.block, options);
    auto flat = flattenLinear(out.cert);
    if (auto* c = std::get_if<Constructible>(&flat)) out.flat = *c;
    return out;
  }
  bool allFlat = true;
  for (const auto& c : tree.children) {
    out.children.push_back(combine(c, n, options));
    allFlat = allFlat && out.children.back().flat.has_value();
  }
  if (!allFlat) return out;
  switch (tree.op) {
    case BlockTree::Op::And: {
      Constructible acc = Constructible::whole(n);
      for (const auto& c : out.children) acc = pairsets::intersect(acc, *c.flat);
      out.flat = acc;
      break;
    }
    case BlockTree::Op::Or: {
      Constructible acc = Constructible::empty(n);
      for (const auto& c : out.children) acc = pairsets::unite(acc, *c.flat);
      out.flat = acc;
      break;
    }
    case BlockTree::Op::Not:
      out.flat = pairsets::complement(*out.children[0].flat);
      break;
    case BlockTree::Op::Leaf:
      break;
  }
  return out;
}

}  // namespace

CertTree translateCombination(const BlockTree& tree, const TranslateOptions& options) {
  return combine(tree, treeArity(tree), options);
}

bool memberTree(const CertTree& tree, const Point& p) {
  switch (tree.op) {
    case BlockTree::Op::Leaf:
      return memberCert(tree.cert, p);
    case BlockTree::Op::And:
      return std::all_of(tree.children.begin(), tree.children.end(), [&](const CertTree& c) { return memberTree(c, p); });
    case BlockTree::Op::Or:
      return std::any_of(tree.children.begin(), tree.children.end(), [&](const CertTree& c) { return memberTree(c, p); });
    case BlockTree::Op::Not:
      return !memberTree(tree.children[0], p);
  }
  return false;
}

bool decideDirectTree(const BlockTree& tree, const Point& p, const acfqe::QEOptions& options) {
  switch (tree.op) {
    case BlockTree::Op::Leaf:
      return decideDirect(tree.block, p, options);
    case BlockTree::Op::And:
      return std::all_of(tree.children.begin(), tree.children.end(),
                         [&](const BlockTree& c) { return decideDirectTree(c, p, options); });
    case BlockTree::Op::Or:
      return std::any_of(tree.children.begin(), tree.children.end(),
                         [&](const BlockTree& c) { return decideDirectTree(c, p, options); });
    case BlockTree::Op::Not:
      return !decideDirectTree(tree.children[0], p, options);
  }
  return false;
}

namespace {

using nlohmann::ordered_json;

const char* opName(BlockTree::Op op) {
  switch (op) {
    case BlockTree::Op::Leaf:
      return "leaf";
    case BlockTree::Op::And:
      return "and";
    case BlockTree::Op::Or:
      return "or";
    case BlockTree::Op::Not:
      return "not";
  }
  return "leaf";
}

BlockTree::Op opFromName(const std::string& s) {
  if (s == "leaf") return BlockTree::Op::Leaf;
  if (s == "and") return BlockTree::Op::And;
  if (s == "or") return BlockTree::Op::Or;
  if (s == "not") return BlockTree::Op::Not;
  throw SchemaError("unknown tree op '" + s + "'");
}

ordered_json certToJson(const PairCertificate& cert) {
  ordered_json j;
  j["arity"] = cert.arity;
  j["freeVars"] = cert.freeVars;
  ordered_json cells = ordered_json::array();
  for (const auto& cell : cert.cells) {
    ordered_json c;
    c["K"] = cell.Kindices;
    c["sk"] = ordered_json::parse(pairsets::serialize(cell.sk));
    ordered_json bases = ordered_json::array();
    for (const auto& b : cell.bases) {
      ordered_json row = ordered_json::array();
      for (const auto& e : b) row.push_back(e.toString());
      bases.push_back(row);
    }
    c["bases"] = bases;
    ordered_json coords = ordered_json::array();
    for (const auto& cv : cell.coords) {
      ordered_json o;
      o["var"] = cv.name;
      o["j"] = cv.j;
      o["k"] = cv.k;
      o["value"] = cv.value.toString();
      coords.push_back(o);
    }
    c["coordMap"] = coords;
    ordered_json z;
    z["vars"] = cell.z.vars;
    ordered_json pieces = ordered_json::array();
    for (const auto& pc : cell.z.pieces) {
      ordered_json o;
      ordered_json es = ordered_json::array();
      for (const auto& e : pc.E) es.push_back(e.toString());
      o["E"] = es;
      o["N"] = pc.N.toString();
      pieces.push_back(o);
    }
    z["pieces"] = pieces;
    c["z"] = z;
    cells.push_back(c);
  }
  j["cells"] = cells;
  return j;
}

const ordered_json& field(const ordered_json& o, const char* name) {
  if (!o.is_object() || !o.contains(name)) throw SchemaError(std::string("missing field '") + name + "'");
  return o[name];
}

std::vector<std::string> stringList(const ordered_json& a) {
  if (!a.is_array()) throw SchemaError("expected an array of strings");
  std::vector<std::string> out;
  for (const auto& s : a) {
    if (!s.is_string()) throw SchemaError("expected an array of strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

std::size_t natural(const ordered_json& v) {
  if (!v.is_number_unsigned()) throw SchemaError("expected a natural number");
  return v.get<std::size_t>();
}

OmegaPoly omegaPoly(const std::string& s, const std::vector<std::string>& vars) {
  formulas::ParseOptions po;
  po.freeVars = vars;
  try {
    return formulas::parsePoly(s, po).withVars(vars);
  } catch (const ParseError& e) {
    throw SchemaError(std::string("bad polynomial: ") + e.what());
  }
}

RatPoly ratPoly(const std::string& s, const std::vector<std::string>& vars) {
  OmegaPoly p = omegaPoly(s, vars);
  for (const auto& t : p.terms())
    if (!t.coeff.isRational()) throw SchemaError("z polynomial with a non-rational coefficient: " + s);
  return p.mapCoefficients<Rat>([](const OmegaElement& c) { return c.rationalValue(); });
}

PairCertificate certFromJson(const ordered_json& j) {
  PairCertificate cert;
  cert.arity = natural(field(j, "arity"));
  cert.freeVars = stringList(field(j, "freeVars"));
  auto amb = ambientVars(cert.arity);
  const auto& cells = field(j, "cells");
  if (!cells.is_array()) throw SchemaError("cells must be an array");
  for (const auto& c : cells) {
    Cell cell;
    try {
      cell.Kindices = field(c, "K").get<std::vector<std::vector<std::vector<std::uint32_t>>>>();
    } catch (const nlohmann::json::exception&) {
      throw SchemaError("K must be nested arrays of multi-indices");
    }
    cell.sk = pairsets::deserialize(field(c, "sk").dump());
    const auto& bases = field(c, "bases");
    if (!bases.is_array()) throw SchemaError("bases must be an array");
    for (const auto& row : bases) {
      std::vector<OmegaPoly> b;
      for (const auto& s : stringList(row)) b.push_back(omegaPoly(s, amb));
      cell.bases.push_back(std::move(b));
    }
    const auto& coords = field(c, "coordMap");
    if (!coords.is_array()) throw SchemaError("coordMap must be an array");
    for (const auto& o : coords) {
      CoordVar cv;
      if (!field(o, "var").is_string() || !field(o, "value").is_string()) throw SchemaError("bad coordMap entry");
      cv.name = o["var"].get<std::string>();
      cv.j = natural(field(o, "j"));
      cv.k = natural(field(o, "k"));
      if (cv.j >= cell.bases.size() || cv.k < 1 || cv.k > cell.bases[cv.j].size())
        throw SchemaError("coordMap entry outside the bases");
      cv.value = omegaPoly(o["value"].get<std::string>(), amb);
      cell.coords.push_back(std::move(cv));
    }
    const auto& z = field(c, "z");
    cell.z.vars = stringList(field(z, "vars"));
    const auto& pieces = field(z, "pieces");
    if (!pieces.is_array()) throw SchemaError("z pieces must be an array");
    for (const auto& pc : pieces) {
      acfqe::KPiece piece;
      for (const auto& s : stringList(field(pc, "E"))) piece.E.push_back(ratPoly(s, cell.z.vars));
      if (!field(pc, "N").is_string()) throw SchemaError("N must be a polynomial string");
      piece.N = ratPoly(pc["N"].get<std::string>(), cell.z.vars);
      cell.z.pieces.push_back(std::move(piece));
    }
    cert.cells.push_back(std::move(cell));
  }
  return cert;
}

ordered_json treeToJson(const CertTree& t) {
  ordered_json j;
  j["op"] = opName(t.op);
  if (t.op == BlockTree::Op::Leaf) {
    j["certificate"] = certToJson(t.cert);
  } else {
    j["arity"] = t.cert.arity;
    ordered_json kids = ordered_json::array();
    for (const auto& c : t.children) kids.push_back(treeToJson(c));
    j["children"] = kids;
  }
  if (t.flat) j["flat"] = ordered_json::parse(pairsets::serialize(*t.flat));
  return j;
}

CertTree treeFromJson(const ordered_json& j) {
  CertTree t;
  if (!field(j, "op").is_string()) throw SchemaError("op must be a string");
  t.op = opFromName(j["op"].get<std::string>());
  if (t.op == BlockTree::Op::Leaf) {
    t.cert = certFromJson(field(j, "certificate"));
  } else {
    t.cert.arity = natural(field(j, "arity"));
    const auto& kids = field(j, "children");
    if (!kids.is_array()) throw SchemaError("children must be an array");
    for (const auto& k : kids) t.children.push_back(treeFromJson(k));
    if (t.op == BlockTree::Op::Not && t.children.size() != 1) throw SchemaError("not takes one child");
  }
  if (j.contains("flat")) t.flat = pairsets::deserialize(j["flat"].dump());
  return t;
}

ordered_json parseJson(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

std::string certificateJson(const PairCertificate& cert, int indent) { return certToJson(cert).dump(indent); }

PairCertificate certificateFromJson(const std::string& text) { return certFromJson(parseJson(text)); }

std::string certTreeJson(const CertTree& tree, int indent) { return treeToJson(tree).dump(indent); }

CertTree certTreeFromJson(const std::string& text) { return treeFromJson(parseJson(text)); }

}  // namespace pairtopo::translator
