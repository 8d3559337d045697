#include <algorithm>
#include <random>

#include "doctest.h"
#include "pairtopo/acfqe.hpp"
#include "pairtopo/difffield.hpp"
#include "pairtopo/pairsets.hpp"

using namespace pairtopo;
using namespace pairtopo::pairsets;

namespace {

OmegaElement t(std::size_t i) { return OmegaElement::generator(i); }
OmegaElement q(long a, long b = 1) { return OmegaElement(Rat(a, b)); }

OmegaPoly x(std::size_t i, std::size_t n) {
  return OmegaPoly::variable("x" + std::to_string(i), ambientVars(n));
}
OmegaPoly k(const OmegaElement& c, std::size_t n) { return OmegaPoly::constant(c, ambientVars(n)); }

BasicClosed block(std::size_t n, std::vector<OmegaPoly> comps, std::vector<std::size_t> blocks) {
  return {PolyMap(n, std::move(comps)), std::move(blocks)};
}

std::vector<Point> samplePoints(std::size_t n, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Point> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(randomPoint(n, rng));
  return out;
}

bool allRational(const Point& p) {
  for (const auto& c : p)
    if (!c.isRational()) return false;
  return true;
}

}  // namespace

TEST_CASE("mkYn examples") {
  auto y1 = mkYn(1);
  CHECK(y1.member({q(0)}));
  CHECK_FALSE(y1.member({q(1)}));
  auto y2 = mkYn(2);
  CHECK(y2.member({t(0), q(3) * t(0)}));
  CHECK_FALSE(y2.member({q(1), t(0)}));
}

TEST_CASE("Y_n membership is the vanishing of the Wronskian") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto y = mkYn(n);
    for (const auto& p : samplePoints(n, 60, 100 + n)) {
      bool w = difffield::wronskianEval(p).isZero();
      CHECK(y.member(p) == w);
    }
  }
}

TEST_CASE("mkKn examples and coordinate constancy") {
  auto k2 = mkKn(2);
  CHECK(k2.member({q(3, 2), q(-7)}));
  CHECK_FALSE(k2.member({t(0), q(1)}));
  auto k1 = mkKn(1);
  for (const auto& p : samplePoints(1, 40, 7)) {
    std::vector<OmegaElement> pair{p[0], q(1)};
    CHECK(k1.member(p) == difffield::wronskianEval(pair).isZero());
  }
  for (const auto& p : samplePoints(3, 80, 8)) CHECK(mkKn(3).member(p) == allRational(p));
}

TEST_CASE("mkSpan examples") {
  auto s = mkSpan({q(1), t(0)});
  CHECK(s.member({q(2) - q(5) * t(0)}));
  CHECK_FALSE(s.member({t(0) * t(0)}));
  auto r = mkSpan({t(0), q(2) * t(0)});
  REQUIRE(r.members.size() == 1);
  CHECK(r.members[0].blocks == std::vector<std::size_t>{2});
  CHECK(r.members[0].map.components[0] == k(t(0), 1));
  auto zero = mkSpan({q(0)});
  CHECK(zero.member({q(0)}));
  CHECK_FALSE(zero.member({q(1)}));
}

TEST_CASE("mkXn examples") {
  auto x2 = mkXn(2);
  CHECK(x2.member({q(1), t(0), q(5) + q(7) * t(0)}));
  CHECK_FALSE(x2.member({t(0), q(2) * t(0), q(1)}));
  CHECK_FALSE(x2.member({q(1), t(0), t(0) * t(0)}));
}

TEST_CASE("mkFiberFni examples agree with fni") {
  auto f = mkFiberFni(2, 1, KScalar{Rat(5)});
  CHECK(f.member({q(1), t(0), q(5) + q(7) * t(0)}));
  CHECK_FALSE(f.member({q(1), t(0), q(4) + q(7) * t(0)}));
  auto f0 = mkFiberFni(2, 1, KScalar{Rat(0)});
  CHECK(f0.member({q(1), t(0), q(7) * t(0)}));
  CHECK_FALSE(f0.member({q(1), t(0), q(1) + t(0)}));
  // Oracle: on X_2, membership in the fiber over a is fni(...) = a.
  auto x2 = mkXn(2);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int s = 0; s < 40; ++s) {
    Point p{q(c(rng)) + t(1), q(c(rng)) * t(0) + q(1), OmegaElement()};
    p[2] = q(c(rng)) * p[0] + q(c(rng)) * p[1];
    if (!x2.member(p)) continue;
    std::size_t i = 1 + static_cast<std::size_t>(s % 2);
    Rat a = c(rng);
    std::vector<OmegaElement> alpha{p[0], p[1]};
    bool expected = difffield::fni(alpha, p[2], i).value == a;
    CHECK(mkFiberFni(2, i, KScalar{a}).member(p) == expected);
  }
}

TEST_CASE("membership of differences, intersections, unions and products") {
  auto y2 = ClosedSet::of(mkYn(2));
  auto k2 = mkKn(2);
  CHECK(intersect(y2, k2).member({q(1), q(1)}));
  CHECK_FALSE(intersect(y2, k2).member({t(0), q(3) * t(0)}));
  CHECK(mkYn(2).member({q(0), q(0)}));
  CHECK_FALSE(mkKn(1).member({t(0)}));

  auto whole = ClosedSet::whole(2);
  auto a = canonical(y2);
  auto both = intersect(a, whole);
  REQUIRE(both.members.size() == 1);
  CHECK(toString(both.members[0]) == toString(a.members[0]));

  auto span = ClosedSet::of(block(2, {k(t(0), 2), x(1, 2) - x(2, 2)}, {2}));
  Constructible diff{2, {{y2, k2}}};
  for (const auto& p : samplePoints(2, 100, 11)) {
    CHECK(diff.member(p) == (y2.member(p) && !k2.member(p)));
    CHECK(intersect(y2, span).member(p) == (y2.member(p) && span.member(p)));
    CHECK(unite(k2, span).member(p) == (k2.member(p) || span.member(p)));
  }
  auto prod = productSet(ClosedSet::of(mkYn(2)), mkKn(1));
  REQUIRE(prod.arity == 3);
  auto pts2 = samplePoints(2, 40, 12);
  auto pts1 = samplePoints(1, 40, 13);
  for (std::size_t i = 0; i < pts2.size(); ++i) {
    Point pq = pts2[i];
    pq.push_back(pts1[i][0]);
    CHECK(prod.member(pq) == (mkYn(2).member(pts2[i]) && mkKn(1).member(pts1[i])));
  }
}

TEST_CASE("complement and boolean algebra") {
  auto none = ClosedSet::empty(2);
  auto c = complementToConstructible(none);
  REQUIRE(c.pairs.size() == 1);
  CHECK(c.pairs[0].C.members[0].blocks.empty());
  CHECK(c.pairs[0].D.members.empty());

  auto y2 = ClosedSet::of(mkYn(2));
  auto k2 = mkKn(2);
  auto span = ClosedSet::of(block(2, {k(q(1) + t(0), 2), x(1, 2)}, {2}));
  auto cc = complement(complementToConstructible(y2));
  Constructible ab{2, {{y2, k2}}};
  Constructible cd{2, {{span, ClosedSet::of(mkYn(2))}}};
  auto inter = intersect(ab, cd);
  auto diff = difference(ab, cd);
  auto uni = unite(ab, cd);
  for (const auto& p : samplePoints(2, 100, 17)) {
    CHECK(cc.member(p) == y2.member(p));
    CHECK(inter.member(p) == (ab.member(p) && cd.member(p)));
    CHECK(diff.member(p) == (ab.member(p) && !cd.member(p)));
    CHECK(uni.member(p) == (ab.member(p) || cd.member(p)));
    CHECK(complement(ab).member(p) == !ab.member(p));
  }
}

TEST_CASE("isFullAmbient examples") {
  CHECK(isFullAmbient(block(2, {x(1, 2), k(q(2), 2) * x(1, 2)}, {2})));
  CHECK_FALSE(isFullAmbient(block(2, {x(1, 2), x(2, 2)}, {2})));
  for (std::size_t n = 1; n <= 4; ++n) CHECK_FALSE(isFullAmbient(mkYn(n)));
  CHECK(isFullAmbient(BasicClosed::whole(3)));
  CHECK(isFullAmbient(block(1, {k(t(0), 1) * x(1, 1), k(q(3) * t(0), 1) * x(1, 1)}, {2})));
  CHECK_FALSE(isFullAmbient(block(1, {k(t(0), 1) * x(1, 1), x(1, 1)}, {2})));
  CHECK(isTriviallyEmpty(BasicClosed::emptySet(2)));
  CHECK(isTriviallyEmpty(block(1, {k(q(1), 1), k(t(0), 1)}, {2})));
}

TEST_CASE("closure examples") {
  // Omega minus {0}.
  Constructible punctured{1, {{ClosedSet::whole(1), ClosedSet::of(mkYn(1))}}};
  auto c1 = closure(punctured);
  CHECK(c1.exact);
  REQUIRE(c1.set.members.size() == 1);
  CHECK(c1.set.members[0].blocks.empty());

  Constructible y2k{2, {{ClosedSet::of(mkYn(2)), mkKn(2)}}};
  auto c2 = closure(y2k);
  CHECK(c2.exact);
  CHECK(c2.set.member({t(0), q(3) * t(0)}));
  CHECK(c2.set.member({q(1), q(1)}));

  auto closed = Constructible::closed(unite(mkKn(2), ClosedSet::of(mkYn(2))));
  auto c3 = closure(closed);
  CHECK(c3.exact);
  CHECK(canonical(closed).pairs[0].C.members.size() == c3.set.members.size());

  for (const auto& x : {punctured, y2k, closed}) {
    auto cl = closure(x).set;
    auto again = closure(Constructible::closed(cl)).set;
    for (const auto& p : samplePoints(x.arity, 100, 19)) {
      if (x.member(p)) CHECK(cl.member(p));
      CHECK(again.member(p) == cl.member(p));
    }
  }

  // Two-member C with a puncture: only an upper bound.
  Constructible two{2, {{unite(mkKn(2), ClosedSet::of(mkYn(2))), ClosedSet::of(block(2, {x(1, 2)}, {1}))}}};
  CHECK_FALSE(closure(two).exact);
}

TEST_CASE("certified irreducible shapes") {
  CHECK(certifiedIrreducible(mkYn(3)));
  CHECK(certifiedIrreducible(mkKn(2).members[0]));
  CHECK(certifiedIrreducible(mkSpan({q(1), t(0)}).members[0]));
  CHECK(certifiedIrreducible(mkFiberFni(2, 1, KScalar{Rat(5)}).members[0]));
  CHECK(certifiedIrreducible(BasicClosed::whole(2)));
  CHECK_FALSE(certifiedIrreducible(block(1, {x(1, 1) * x(1, 1) - k(t(0), 1)}, {1})));
  CHECK_FALSE(certifiedIrreducible(intersect(mkYn(2), block(2, {x(1, 2), k(t(0), 2)}, {2}))));
}

namespace {

struct ZariskiCase {
  BasicClosed set;
  std::vector<std::string> expected;  // printed generators, or empty for all of k^n
  acfqe::KConstructible existential;  // exists b != 0 with M(a) b = 0, hand-built
};

acfqe::KConstructible exists(const std::vector<std::string>& free, const std::vector<std::string>& bs,
                             const std::vector<RatPoly>& eqs) {
  acfqe::KConstructible out{free, {}};
  for (const auto& b : bs) {
    acfqe::KSystem s{bs, free, eqs, RatPoly::variable(b, {b})};
    auto part = acfqe::eliminateExists(s);
    out.pieces.insert(out.pieces.end(), part.pieces.begin(), part.pieces.end());
  }
  return acfqe::normalize(free, out.pieces);
}

RatPoly rv(const std::string& name) { return RatPoly::variable(name, {name}); }
RatPoly rc(long v) { return RatPoly::constant(Rat(v)); }

std::vector<ZariskiCase> zariskiCases() {
  auto a1 = rv("x1"), a2 = rv("x2"), b1 = rv("b1"), b2 = rv("b2");
  std::vector<std::string> f1{"x1"}, f2{"x1", "x2"}, bb{"b1", "b2"};
  std::vector<ZariskiCase> cs;
  // (x + t0, x^2 + 1): rows for 1 and t0 are (a, a^2 + 1) and (1, 0).
  cs.push_back({block(1, {x(1, 1) + k(t(0), 1), x(1, 1) * x(1, 1) + k(q(1), 1)}, {2}),
                {"x1^2 + 1"},
                exists(f1, bb, {b1 * a1 + b2 * (a1 * a1 + rc(1)), b1})});
  // (x, 1) is k itself.
  cs.push_back({block(1, {x(1, 1), k(q(1), 1)}, {2}), {}, exists(f1, bb, {b1 * a1 + b2})});
  // (x, t0): only 0.
  cs.push_back({block(1, {x(1, 1), k(t(0), 1)}, {2}), {"x1"}, exists(f1, bb, {b1 * a1, b2})});
  // (x1 + t0 x2, 1 + t0): x1 = x2.
  cs.push_back({block(2, {x(1, 2) + k(t(0), 2) * x(2, 2), k(q(1) + t(0), 2)}, {2}),
                {"x1 - x2"},
                exists(f2, bb, {b1 * a1 + b2, b1 * a2 + b2})});
  // Two blocks: (x1, t0) and (x1 + t0 x2, x2 + t0 x1): the origin.
  {
    auto c1 = rv("c1"), c2 = rv("c2");
    acfqe::KConstructible first = exists(f2, bb, {b1 * a1, b2});
    acfqe::KConstructible second = exists(f2, {"c1", "c2"}, {c1 * a1 + c2 * a2, c1 * a2 + c2 * a1});
    // Intersection of the two, piecewise.
    std::vector<acfqe::KPiece> pieces;
    for (const auto& p : first.pieces) {
      for (const auto& r : second.pieces) {
        auto e = p.E;
        e.insert(e.end(), r.E.begin(), r.E.end());
        pieces.push_back({e, p.N * r.N});
      }
    }
    cs.push_back({block(2, {x(1, 2), k(t(0), 2), x(1, 2) + k(t(0), 2) * x(2, 2), x(2, 2) + k(t(0), 2) * x(1, 2)},
                        {2, 2}),
                  {"x1", "x1^2 - x2^2"},
                  acfqe::normalize(f2, pieces)});
  }
  return cs;
}

}  // namespace

TEST_CASE("zariskiRestrictK examples and agreement with membership") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> c(-3, 3);
  for (const auto& zc : zariskiCases()) {
    std::size_t n = zc.set.arity();
    auto polys = zariskiRestrictK(zc.set, n);
    std::vector<std::string> printed;
    for (const auto& p : polys) printed.push_back(p.toString());
    auto expected = zc.expected;
    std::sort(printed.begin(), printed.end());
    std::sort(expected.begin(), expected.end());
    CHECK(printed == expected);
    for (int s = 0; s < 50; ++s) {
      std::vector<Rat> a;
      Point p;
      for (std::size_t i = 0; i < n; ++i) {
        a.push_back(Rat(c(rng)));
        p.push_back(OmegaElement(a.back()));
      }
      bool vanish = true;
      for (const auto& f : polys)
        if (!f.evaluate<Rat>(a, [](const Rat& r) { return r; }, Rat(1)).isZero()) vanish = false;
      CHECK(zc.set.member(p) == vanish);
    }
    acfqe::KConstructible viaMinors{ambientVars(n), {{polys, RatPoly::constant(Rat(1), ambientVars(n))}}};
    CHECK_MESSAGE(acfqe::equivalent(acfqe::normalize(ambientVars(n), viaMinors.pieces), zc.existential),
                  zc.existential.toString());
  }
}

TEST_CASE("zariskiRestrictK of unions multiplies families") {
  auto u = unite(ClosedSet::of(block(1, {x(1, 1), k(t(0), 1)}, {2})),
                 ClosedSet::of(block(1, {x(1, 1) + k(t(0), 1), x(1, 1) * x(1, 1) + k(q(1), 1)}, {2})));
  auto polys = zariskiRestrictK(u, 1);
  REQUIRE(polys.size() == 1);
  CHECK(polys[0].toString() == "x1^3 + x1");
  CHECK(zariskiRestrictK(ClosedSet::empty(1), 1).size() == 1);
  CHECK(zariskiRestrictK(mkKn(1), 1).empty());
}

TEST_CASE("serialization round trip") {
  auto x2 = mkXn(2);
  auto text = serialize(x2);
  auto back = deserialize(text);
  CHECK(serialize(back) == text);
  Constructible mixed = difference(Constructible::closed(unite(mkKn(2), mkFiberFni(1, 1, KScalar{Rat(3, 2)}))),
                                   Constructible::closed(ClosedSet::of(block(2, {x(1, 2) - k(t(1) / t(0), 2)}, {1}))));
  auto mtext = serialize(mixed);
  auto mback = deserialize(mtext);
  CHECK(serialize(mback) == mtext);
  for (const auto& p : samplePoints(2, 60, 29)) CHECK(mback.member(p) == mixed.member(p));
  for (const auto& p : samplePoints(3, 60, 31)) CHECK(back.member(p) == x2.member(p));
  CHECK_THROWS_AS(deserialize(R"({"arity": 1, "pairs": [{"C": [{"map": ["x1"], "blocks": [2]}], "D": []}]})"),
                  SchemaError);
  CHECK_THROWS_AS(deserialize(R"({"arity": 1, "pairs": [{"C": [{"map": ["x1"], "blocks": "1"}], "D": []}]})"),
                  SchemaError);
  CHECK_THROWS_AS(deserialize(R"({"arity": 1, "pairs": [{"C": [{"map": ["x2"], "blocks": [1]}], "D": []}]})"),
                  SchemaError);
  CHECK_THROWS_AS(deserialize("not json"), SchemaError);
}
