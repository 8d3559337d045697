#include "pairtopo/polyalg.hpp"

#include <cstdint>

namespace pairtopo {

std::pair<RatPoly, RatPoly> divide(const RatPoly& a0, const RatPoly& b0) {
  if (b0.isZero()) throw DomainError("polynomial division by zero");
  auto [a, b] = RatPoly::unify(a0, b0);
  RatPoly q(a.vars(), a.order()), r(a.vars(), a.order());
  const auto& lb = b.leadingTerm();
  std::vector<RatPoly::Term> rem;
  RatPoly p = a;
  while (!p.isZero()) {
    const auto& lt = p.leadingTerm();
    if (monomialDivides(lb.mono, lt.mono)) {
      Monomial m = monomialQuotient(lt.mono, lb.mono);
      Rat c = lt.coeff / lb.coeff;
      q = q + RatPoly(a.vars(), {{m, c}}, a.order());
      p = p - b.mulTerm(m, c);
    } else {
      rem.push_back(lt);
      p = p - RatPoly(a.vars(), {lt}, a.order());
    }
  }
  return {q, RatPoly(a.vars(), std::move(rem), a.order())};
}

std::optional<RatPoly> divideExact(const RatPoly& a0, const RatPoly& b0) {
  if (b0.isZero()) throw DomainError("polynomial division by zero");
  auto [a, b] = RatPoly::unify(a0, b0);
  if (b.isConstant()) return a.scaled(b.constantValue().inverse());
  const auto& lb = b.leadingTerm();
  std::vector<RatPoly::Term> quot;
  RatPoly p = a;
  while (!p.isZero()) {
    const auto& lt = p.leadingTerm();
    if (!monomialDivides(lb.mono, lt.mono)) return std::nullopt;
    Monomial m = monomialQuotient(lt.mono, lb.mono);
    Rat c = lt.coeff / lb.coeff;
    p = p - b.mulTerm(m, c);
    quot.push_back({std::move(m), std::move(c)});
  }
  return RatPoly(a.vars(), std::move(quot), a.order());
}

RatPoly pseudoRemainder(const RatPoly& a0, const RatPoly& b0, std::size_t var) {
  if (b0.isZero()) throw DomainError("pseudo-remainder by zero");
  auto [a, b] = RatPoly::unify(a0, b0);
  std::uint32_t db = b.degreeIn(var);
  auto bParts = b.coefficientsIn(var);
  RatPoly lcb = bParts.rbegin()->second;
  RatPoly r = a;
  while (!r.isZero()) {
    std::uint32_t dr = r.degreeIn(var);
    if (dr < db) break;
    RatPoly lcr = r.coefficientsIn(var).rbegin()->second;
    Monomial shift(a.vars().size(), 0);
    shift[var] = dr - db;
    r = lcb * r - (lcr * b).mulTerm(shift, Rat(1));
    r = primitivePart(r);
  }
  return r;
}

RatPoly contentIn(const RatPoly& p, std::size_t var) {
  RatPoly g(p.vars(), p.order());
  for (const auto& [d, c] : p.coefficientsIn(var)) {
    g = gcd(g, c);
    if (g.isConstant() && !g.isZero()) break;
  }
  return g;
}

namespace {

RatPoly exactQuotient(const RatPoly& a, const RatPoly& b) {
  auto q = divideExact(a, b);
  if (!q) throw InvariantBreach("inexact division inside gcd");
  return *q;
}

RatPoly primitiveIn(const RatPoly& p, std::size_t var) {
  if (p.isZero()) return p;
  return exactQuotient(p, contentIn(p, var));
}

RatPoly leadingCoeffIn(const RatPoly& p, std::size_t var) { return p.coefficientsIn(var).rbegin()->second; }

// lc(b)^(deg a - deg b + 1) * a mod b in `var`, exactly (no scaling).
RatPoly fullPseudoRemainder(const RatPoly& a, const RatPoly& b, std::size_t var) {
  std::uint32_t db = b.degreeIn(var);
  std::uint32_t da = a.degreeIn(var);
  RatPoly lcb = leadingCoeffIn(b, var);
  RatPoly r = a;
  std::uint32_t steps = 0;
  while (!r.isZero() && r.degreeIn(var) >= db) {
    std::uint32_t dr = r.degreeIn(var);
    RatPoly lcr = leadingCoeffIn(r, var);
    Monomial shift(a.vars().size(), 0);
    shift[var] = dr - db;
    r = lcb * r - (lcr * b).mulTerm(shift, Rat(1));
    ++steps;
  }
  std::uint32_t e = da - db + 1;
  if (steps < e) r = r * lcb.pow(e - steps);
  return r;
}

// Univariate image of p in `var` with the other variables set to `point`.
std::vector<Rat> univariateImage(const RatPoly& p, std::size_t var, const std::vector<Rat>& point) {
  std::vector<Rat> out(p.degreeIn(var) + 1u);
  for (const auto& t : p.terms()) {
    Rat v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i)
      if (i != var && t.mono[i] != 0) v *= point[i].pow(static_cast<long>(t.mono[i]));
    out[t.mono[var]] += v;
  }
  while (!out.empty() && out.back().isZero()) out.pop_back();
  return out;
}

std::size_t univariateGcdDegree(std::vector<Rat> a, std::vector<Rat> b) {
  while (!b.empty()) {
    while (a.size() >= b.size() && !a.empty()) {
      Rat c = a.back() / b.back();
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
      a.pop_back();
      while (!a.empty() && a.back().isZero()) a.pop_back();
    }
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

// Certificate that gcd(a, b) is constant: at a point where both leading
// coefficients in `var` survive, the image gcd has degree >= deg_var gcd.
bool coprimeByImages(const RatPoly& a, const RatPoly& b) {
  static const long kPoints[][4] = {{2, 3, 5, 7}, {-3, 4, 11, -2}, {5, -7, 2, 13}};
  std::size_t n = a.vars().size();
  for (std::size_t var = 0; var < n; ++var) {
    if (!a.involves(var) || !b.involves(var)) continue;
    bool certified = false;
    for (const auto& row : kPoints) {
      std::vector<Rat> point(n);
      for (std::size_t i = 0; i < n; ++i) point[i] = Rat(row[i % 4] + static_cast<long>(i / 4) * 17);
      auto ia = univariateImage(a, var, point), ib = univariateImage(b, var, point);
      if (ia.size() != a.degreeIn(var) + 1u || ib.size() != b.degreeIn(var) + 1u) continue;
      if (univariateGcdDegree(ia, ib) == 0) {
        certified = true;
        break;
      }
    }
    if (!certified) return false;
  }
  return true;
}

}  // namespace

RatPoly gcd(const RatPoly& a0, const RatPoly& b0) {
  if (a0.isZero()) return makeMonic(b0);
  if (b0.isZero()) return makeMonic(a0);
  auto [a, b] = RatPoly::unify(a0, b0);
  RatPoly one = RatPoly::constant(Rat(1), a.vars(), a.order());
  if (a.isConstant() || b.isConstant()) return one;

  // A variable present in only one argument: the gcd lies in its content.
  for (std::size_t v = 0; v < a.vars().size(); ++v) {
    if (a.involves(v) == b.involves(v)) continue;
    const RatPoly& with = a.involves(v) ? a : b;
    RatPoly g = a.involves(v) ? b : a;
    for (const auto& [d, c] : with.coefficientsIn(v)) {
      g = gcd(g, c);
      if (g.isConstant()) return one;
    }
    return makeMonic(g);
  }
  if (coprimeByImages(a, b)) return one;
  if (auto q = divideExact(a, b)) return makeMonic(b);
  if (auto q = divideExact(b, a)) return makeMonic(a);

  // Main variable: smallest positive degree.
  std::size_t var = 0;
  std::uint32_t best = UINT32_MAX;
  for (std::size_t v = 0; v < a.vars().size(); ++v) {
    if (!a.involves(v)) continue;
    std::uint32_t d = std::min(a.degreeIn(v), b.degreeIn(v));
    if (d < best) best = d, var = v;
  }

  RatPoly ca = contentIn(a, var);
  RatPoly cb = contentIn(b, var);
  RatPoly c = gcd(ca, cb);
  RatPoly pa = primitivePart(exactQuotient(a, ca));
  RatPoly pb = primitivePart(exactQuotient(b, cb));
  if (pa.degreeIn(var) < pb.degreeIn(var)) std::swap(pa, pb);

  // Subresultant PRS.
  RatPoly g = one, h = one;
  while (true) {
    std::uint32_t d = pa.degreeIn(var) - pb.degreeIn(var);
    RatPoly r = fullPseudoRemainder(pa, pb, var);
    if (r.isZero()) break;
    if (r.degreeIn(var) == 0) return makeMonic(c);
    pa = std::move(pb);
    pb = exactQuotient(r, g * h.pow(d));
    g = leadingCoeffIn(pa, var);
    if (d == 1) {
      h = g;
    } else if (d > 1) {
      h = exactQuotient(g.pow(d), h.pow(d - 1));
    }
    pb = primitivePart(pb);
  }
  return makeMonic(c * primitiveIn(pb, var));
}

RatPoly lcm(const RatPoly& a, const RatPoly& b) {
  if (a.isZero() || b.isZero()) return RatPoly::unify(a, b).first.scaled(Rat(0));
  return makeMonic(exactQuotient(a * b, gcd(a, b)));
}

}  // namespace pairtopo
