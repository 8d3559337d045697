#include "pairtopo/ranks.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"
#include "pairtopo/difffield.hpp"

namespace pairtopo::ranks {

using pairsets::BasicClosed;
using pairsets::ClosedSet;

std::string OrdinalRank::toString() const {
  if (omegaCoeff == 0) return std::to_string(finitePart);
  std::string w = omegaCoeff == 1 ? "omega" : "omega*" + std::to_string(omegaCoeff);
  if (finitePart == 0) return w;
  return w + " + " + std::to_string(finitePart);
}

std::size_t smallRank(const std::vector<OmegaElement>& a, const std::vector<OmegaElement>& A) {
  std::vector<OmegaElement> cur = A;
  std::size_t rank = 0;
  for (const auto& x : a) {
    if (difffield::inScl(x, cur)) continue;
    ++rank;
    cur.push_back(x);
  }
  return rank;
}

OrdinalRank pointMR(const std::vector<OmegaElement>& a, const std::vector<OmegaElement>& A) {
  std::vector<OmegaElement> both = A;
  both.insert(both.end(), a.begin(), a.end());
  std::size_t inc = difffield::trdegRank(both) - difffield::trdegRank(A);
  return {smallRank(a, A), inc};
}

namespace {

bool isWhole(const ClosedSet& c) { return c.members.size() == 1 && c.members[0].blocks.empty(); }

std::vector<std::vector<OmegaPoly>> blocksOf(const BasicClosed& b) {
  std::vector<std::vector<OmegaPoly>> out;
  std::size_t off = 0;
  for (std::size_t k : b.blocks) {
    out.emplace_back(b.map.components.begin() + static_cast<std::ptrdiff_t>(off),
                     b.map.components.begin() + static_cast<std::ptrdiff_t>(off + k));
    off += k;
  }
  return out;
}

std::vector<OmegaElement> parameters(const Constructible& x) {
  std::vector<OmegaElement> out;
  auto add = [&](const ClosedSet& c) {
    for (const auto& m : c.members)
      for (const auto& comp : m.map.components)
        for (const auto& t : comp.terms())
          if (!t.coeff.isRational() && std::find(out.begin(), out.end(), t.coeff) == out.end()) out.push_back(t.coeff);
  };
  for (const auto& p : x.pairs) {
    add(p.C);
    add(p.D);
  }
  return out;
}

long maxOrder(const std::vector<OmegaElement>& params) {
  long m = -1;
  for (const auto& p : params) m = std::max(m, p.order());
  return m;
}

/// Coordinates confined, on every point of b, to a proper closed subset of
/// Omega: some non-vacuous block uses that coordinate alone.
std::set<std::size_t> confinedCoordinates(const BasicClosed& b) {
  std::set<std::size_t> out;
  BasicClosed s = pairsets::simplify(b);
  for (const auto& g : blocksOf(s)) {
    std::set<std::size_t> used;
    for (const auto& comp : g)
      for (std::size_t v = 0; v < comp.vars().size(); ++v)
        if (comp.involves(v)) used.insert(v);
    if (used.size() == 1) out.insert(*used.begin());
  }
  return out;
}

bool closureProper(const Constructible& x) {
  return std::none_of(x.pairs.begin(), x.pairs.end(), [](const Constructible::Pair& p) { return isWhole(p.C); });
}

/// Points mixing fresh generators, zeros, rationals and rational multiples of
/// earlier coordinates.
Point structuredPoint(std::size_t n, long firstFresh, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 5), small(-3, 3);
  Point p;
  for (std::size_t i = 0; i < n; ++i) {
    OmegaElement fresh = OmegaElement::generator(static_cast<std::size_t>(firstFresh) + i);
    int c = pick(rng);
    if (c <= 1 || (c == 4 && i == 0)) {
      p.push_back(fresh);
    } else if (c == 2) {
      p.push_back(OmegaElement(0));
    } else if (c == 3) {
      p.push_back(OmegaElement(Rat(small(rng))));
    } else if (c == 4) {
      p.push_back(OmegaElement(Rat(small(rng) | 1)) * p[static_cast<std::size_t>(rng() % i)]);
    } else {
      p.push_back(OmegaElement(Rat(small(rng))) + fresh);
    }
  }
  return p;
}

OmegaElement evalAt(const OmegaPoly& f, const Point& p) { return pairsets::PolyMap(p.size(), {f}).apply(p)[0]; }

/// Points of b obtained by giving free coordinates fresh generators and
/// solving each single equation for a coordinate it contains linearly.
std::optional<Point> solvedPoint(const BasicClosed& member, long firstFresh) {
  BasicClosed b = pairsets::simplify(member);
  std::size_t n = b.arity();
  auto groups = blocksOf(b);
  if (groups.empty()) return std::nullopt;
  std::vector<std::size_t> chosen;
  for (std::size_t j = 0; j < groups.size(); ++j) {
    if (groups[j].size() != 1) return std::nullopt;
    const OmegaPoly& e = groups[j][0];
    std::optional<std::size_t> pick;
    for (std::size_t v = n; v-- > 0;) {
      if (e.degreeIn(v) != 1 || std::find(chosen.begin(), chosen.end(), v) != chosen.end()) continue;
      bool earlier = false;
      for (std::size_t l = 0; l < j; ++l) earlier = earlier || groups[l][0].involves(v);
      if (!earlier) {
        pick = v;
        break;
      }
    }
    if (!pick) return std::nullopt;
    chosen.push_back(*pick);
  }
  Point p(n, OmegaElement(0));
  for (std::size_t i = 0; i < n; ++i)
    if (std::find(chosen.begin(), chosen.end(), i) == chosen.end())
      p[i] = OmegaElement::generator(static_cast<std::size_t>(firstFresh) + i);
  for (std::size_t j = 0; j < groups.size(); ++j) {
    std::size_t v = chosen[j];
    auto parts = groups[j][0].coefficientsIn(v);
    OmegaElement c1 = parts.count(1) ? evalAt(parts.at(1), p) : OmegaElement(0);
    OmegaElement c0 = parts.count(0) ? evalAt(parts.at(0), p) : OmegaElement(0);
    if (c1.isZero()) return std::nullopt;
    p[v] = -(c0 * c1.inverse());
  }
  return p;
}

}  // namespace

InteriorResult hasNonemptyInterior(const Constructible& x, const pairsets::SampleOptions& options) {
  Constructible cx = pairsets::canonical(x);
  InteriorResult out;
  bool sawWhole = false;
  for (const auto& p : cx.pairs) {
    if (!isWhole(p.C)) continue;
    sawWhole = true;
    if (auto w = pairsets::findWitness(p.C, p.D, options)) {
      out.answer = Tri::True;
      out.witness = *w;
      out.reason = "a pair has C = Omega^n and its D is proper";
      return out;
    }
  }
  if (!sawWhole) {
    out.answer = Tri::False;
    out.reason = "contained in the proper closed set given by the union of the C-parts";
    return out;
  }
  out.reason = "no witness found outside D";
  return out;
}

OrdinalRank mrCatalog(const CatalogId& id) {
  switch (id.kind) {
    case CatalogId::Kind::KPower:
      return {0, id.n};
    case CatalogId::Kind::OmegaPower:
      return {id.n, 0};
    case CatalogId::Kind::Span:
      return {0, id.n};
    case CatalogId::Kind::FiniteSet:
      return {0, 0};
    case CatalogId::Kind::KPlusKAlpha:
      return {0, 2};
  }
  throw DomainError("not in the catalog");
}

std::optional<CatalogId> recognizeCatalog(const Constructible& x) {
  Constructible cx = pairsets::canonical(x);
  std::size_t n = cx.arity;
  if (cx.pairs.size() != 1 || !cx.pairs[0].D.members.empty() || cx.pairs[0].C.members.size() != 1) return std::nullopt;
  const BasicClosed& b = cx.pairs[0].C.members[0];
  if (b.blocks.empty()) return CatalogId{CatalogId::Kind::OmegaPower, n};
  auto groups = blocksOf(b);
  // k^n: blocks (x_i, r) covering every coordinate.
  if (groups.size() == n && pairsets::certifiedIrreducible(b) &&
      std::all_of(groups.begin(), groups.end(), [](const auto& g) { return g.size() == 2; })) {
    bool allPairs = true;
    for (const auto& g : groups) {
      bool constFirst = g[0].isConstant(), constSecond = g[1].isConstant();
      const OmegaPoly& c = constFirst ? g[0] : g[1];
      if (constFirst == constSecond || !c.constantValue().isRational()) allPairs = false;
    }
    if (allPairs) return CatalogId{CatalogId::Kind::KPower, n};
  }
  if (n != 1 || groups.size() != 1) return std::nullopt;
  const auto& g = groups[0];
  if (g.size() == 1 && !g[0].isConstant()) {
    return CatalogId{CatalogId::Kind::FiniteSet, static_cast<std::size_t>(g[0].totalDegree())};
  }
  if (!pairsets::certifiedIrreducible(b) || g.back().isConstant()) return std::nullopt;
  std::vector<OmegaElement> consts;
  for (std::size_t i = 0; i + 1 < g.size(); ++i) {
    if (!g[i].isConstant()) return std::nullopt;
    consts.push_back(g[i].constantValue());
  }
  if (consts.size() == 1 && consts[0].isRational()) return CatalogId{CatalogId::Kind::KPower, 1};
  if (consts.size() == 2) {
    std::vector<OmegaElement> withOne = consts;
    withOne.push_back(OmegaElement(1));
    if (difffield::kDependent(withOne)) return CatalogId{CatalogId::Kind::KPlusKAlpha, 2};
  }
  return CatalogId{CatalogId::Kind::Span, consts.size()};
}

SdimReport sdim(const Constructible& x, const pairsets::SampleOptions& options) {
  Constructible cx = pairsets::canonical(x);
  std::size_t n = cx.arity;
  SdimReport r;
  r.upper = n;
  if (cx.pairs.empty()) {
    r.upper = 0;
    r.notes.push_back("empty set");
    return r;
  }
  if (closureProper(cx) && n > 0) {
    r.upper = n - 1;
    r.notes.push_back("contained in a proper closed set");
  }
  std::optional<std::set<std::size_t>> confined;
  for (const auto& p : cx.pairs) {
    std::optional<std::set<std::size_t>> pairConfined;
    for (const auto& m : p.C.members) {
      auto s = confinedCoordinates(m);
      if (!pairConfined) {
        pairConfined = s;
      } else {
        std::set<std::size_t> both;
        std::set_intersection(pairConfined->begin(), pairConfined->end(), s.begin(), s.end(),
                              std::inserter(both, both.begin()));
        pairConfined = both;
      }
    }
    if (!confined) {
      confined = pairConfined;
    } else {
      std::set<std::size_t> both;
      std::set_intersection(confined->begin(), confined->end(), pairConfined->begin(), pairConfined->end(),
                            std::inserter(both, both.begin()));
      confined = both;
    }
  }
  if (confined && !confined->empty() && n - confined->size() < r.upper) {
    r.upper = n - confined->size();
    r.notes.push_back(std::to_string(confined->size()) + " coordinates confined to proper closed subsets of Omega");
  }

  auto params = parameters(cx);
  long fresh = std::max<long>(maxOrder(params) + 1, 4);
  std::mt19937_64 rng(options.seed);
  auto consider = [&](const Point& p) {
    if (!cx.member(p)) return false;
    std::size_t k = smallRank(p, params);
    if (!r.lower || k > *r.lower) {
      r.lower = k;
      r.witness = p;
    }
    return *r.lower == r.upper;
  };
  Point generic;
  for (std::size_t i = 0; i < n; ++i) generic.push_back(OmegaElement::generator(static_cast<std::size_t>(fresh) + i));
  bool done = consider(generic);
  for (const auto& pr : cx.pairs)
    for (const auto& m : pr.C.members)
      if (!done)
        if (auto p = solvedPoint(m, fresh)) done = consider(*p);
  for (std::size_t s = 0; !done && s < options.samples; ++s) done = consider(structuredPoint(n, fresh, rng));
  for (std::size_t s = 0; !done && s < options.samples; ++s) done = consider(pairsets::randomPoint(n, rng));
  if (r.witness) {
    std::vector<OmegaElement> cur = params;
    for (std::size_t i = 0; i < n; ++i) {
      if (difffield::inScl((*r.witness)[i], cur)) continue;
      r.projection.push_back(i + 1);
      cur.push_back((*r.witness)[i]);
    }
  } else {
    r.notes.push_back("no point of the set found by sampling");
  }
  return r;
}

MrReport mrBounds(const Constructible& x, const pairsets::SampleOptions& options) {
  Constructible cx = pairsets::canonical(x);
  std::size_t n = cx.arity;
  MrReport m;
  m.upper = {n, 0};
  if (auto id = recognizeCatalog(cx)) {
    m.exact = mrCatalog(*id);
    m.lower = m.upper = *m.exact;
    m.reason = "catalog";
    return m;
  }
  auto interior = hasNonemptyInterior(cx, options);
  if (interior.answer == Tri::True) {
    m.exact = OrdinalRank{n, 0};
    m.lower = m.upper = *m.exact;
    m.reason = "nonempty interior";
    return m;
  }
  if (closureProper(cx)) {
    m.strictUpper = true;
    m.reason = "contained in a proper closed set";
  }
  auto s = sdim(cx, options);
  if (s.lower) m.lower = {*s.lower, 0};
  return m;
}

std::string reportJson(const SdimReport& s, const MrReport& m, int indent) {
  using nlohmann::ordered_json;
  ordered_json j;
  if (s.exact()) {
    j["sdim"] = s.upper;
  } else {
    j["sdim"] = "unknown";
  }
  ordered_json sb;
  sb["lower"] = s.lower ? ordered_json(*s.lower) : ordered_json(nullptr);
  sb["upper"] = s.upper;
  j["sdimBounds"] = sb;
  auto ord = [](const OrdinalRank& r) {
    ordered_json o;
    o["omega"] = r.omegaCoeff;
    o["finite"] = r.finitePart;
    return o;
  };
  if (m.exact) {
    ordered_json o = ord(*m.exact);
    o["strictUpper"] = false;
    j["mr"] = o;
  } else {
    ordered_json o;
    o["lower"] = ord(m.lower);
    o["upper"] = ord(m.upper);
    o["strictUpper"] = m.strictUpper;
    j["mr"] = o;
  }
  ordered_json cert;
  if (s.witness) {
    ordered_json w = ordered_json::array();
    for (const auto& c : *s.witness) w.push_back(c.toString());
    cert["witness"] = w;
  }
  cert["projection"] = s.projection;
  cert["notes"] = s.notes;
  cert["mrReason"] = m.reason;
  j["certificates"] = cert;
  return j.dump(indent);
}

}  // namespace pairtopo::ranks
