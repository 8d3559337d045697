#include "pairtopo/difffield.hpp"

#include <map>

#include "pairtopo/polyalg.hpp"

namespace pairtopo::difffield {

namespace {

RatPoly derivePoly(const RatPoly& p) {
  if (p.isConstant()) return RatPoly();
  std::size_t m = p.vars().size();
  auto vars = tVars(m + 1);
  RatPoly q = p.withVars(vars);
  RatPoly out(vars, q.order());
  for (std::size_t i = 0; i < m; ++i) {
    if (!q.involves(i)) continue;
    out += q.derivative(i) * RatPoly::variable(vars[i + 1], vars);
  }
  return out;
}

// Polynomials P_i with P_i / L = elems_i for a common denominator L.
std::vector<RatPoly> clearDenominators(std::span<const OmegaElement> elems) {
  RatPoly l = RatPoly::constant(Rat(1));
  for (const auto& e : elems)
    if (!e.isPolynomial()) l = lcm(l, e.denominator());
  std::vector<RatPoly> out;
  out.reserve(elems.size());
  for (const auto& e : elems) {
    if (e.isPolynomial()) {
      out.push_back(e.numerator().scaled(e.denominator().constantValue().inverse()) * l);
    } else {
      auto q = divideExact(l, e.denominator());
      if (!q) throw InvariantBreach("denominator does not divide lcm");
      out.push_back(e.numerator() * *q);
    }
  }
  return out;
}

// Coefficient matrix: one row per t-monomial, one column per element.
RatMatrix coefficientMatrix(std::span<const OmegaElement> elems) {
  auto polys = clearDenominators(elems);
  std::vector<std::string> vars;
  for (const auto& p : polys)
    if (p.vars().size() > vars.size()) vars = p.vars();
  std::map<Monomial, std::size_t> rowOf;
  for (auto& p : polys) {
    p = p.withVars(vars);
    for (const auto& t : p.terms()) rowOf.emplace(t.mono, 0);
  }
  std::size_t r = 0;
  for (auto& [m, idx] : rowOf) idx = r++;
  RatMatrix mat(rowOf.size(), polys.size());
  for (std::size_t j = 0; j < polys.size(); ++j)
    for (const auto& t : polys[j].terms()) mat.at(rowOf.at(t.mono), j) = t.coeff;
  return mat;
}

RatVector primitiveIntegerVector(RatVector v) {
  mpz_class l = 1, g = 0;
  for (const auto& c : v) {
    mpz_class d = c.denominator(), n = c.numerator();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  if (g == 0) return v;
  Rat scale(l, g);
  for (auto& c : v) c *= scale;
  return v;
}

}  // namespace

OmegaElement derive(const OmegaElement& a, unsigned n) {
  OmegaElement cur = a;
  for (unsigned k = 0; k < n; ++k) {
    if (cur.isRational()) return OmegaElement();
    const RatPoly& num = cur.numerator();
    const RatPoly& den = cur.denominator();
    if (cur.isPolynomial()) {
      cur = OmegaElement::polynomial(derivePoly(num).scaled(den.constantValue().inverse()));
    } else {
      cur = OmegaElement::fraction(derivePoly(num) * den - num * derivePoly(den), den * den);
    }
  }
  return cur;
}

OmegaElement partial(const OmegaElement& a, std::size_t index) {
  if (static_cast<long>(index) > a.order()) return OmegaElement();
  const RatPoly& num = a.numerator();
  const RatPoly& den = a.denominator();
  if (a.isPolynomial()) return OmegaElement::polynomial(num.derivative(index).scaled(den.constantValue().inverse()));
  return OmegaElement::fraction(num.derivative(index) * den - num * den.derivative(index), den * den);
}

WronskianSymbolic wronskianSym(std::size_t n) {
  if (n == 0) throw DomainError("Wronskian arity must be at least 1");
  WronskianSymbolic w;
  std::vector<std::string> vars;
  w.symbols.assign(n, std::vector<std::string>(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      w.symbols[i][j] = "x" + std::to_string(j + 1) + std::string(i, '\'');
      vars.push_back(w.symbols[i][j]);
    }
  }
  PolyMatrix m(n, std::vector<RatPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = RatPoly::variable(w.symbols[i][j], vars);
  w.expansion = polyDeterminant(std::move(m)).withVars(vars);
  return w;
}

OmegaElement wronskianEval(std::span<const OmegaElement> elems) {
  std::size_t n = elems.size();
  if (n == 0) throw DomainError("Wronskian of an empty tuple");
  // Column j holds the derivatives of elems[j]; scale each column by the lcm
  // of its denominators so the determinant runs over polynomials.
  PolyMatrix m(n, std::vector<RatPoly>(n));
  RatPoly scale = RatPoly::constant(Rat(1));
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<OmegaElement> column;
    OmegaElement cur = elems[j];
    for (std::size_t i = 0; i < n; ++i) {
      column.push_back(cur);
      if (i + 1 < n) cur = derive(cur);
    }
    RatPoly l = RatPoly::constant(Rat(1));
    for (const auto& e : column)
      if (!e.isPolynomial()) l = lcm(l, e.denominator());
    for (std::size_t i = 0; i < n; ++i) {
      const auto& e = column[i];
      if (e.isPolynomial()) {
        m[i][j] = e.numerator().scaled(e.denominator().constantValue().inverse()) * l;
      } else {
        m[i][j] = e.numerator() * *divideExact(l, e.denominator());
      }
    }
    scale = scale * l;
  }
  return OmegaElement::fraction(polyDeterminant(std::move(m)), scale);
}

std::optional<RatVector> kDependent(std::span<const OmegaElement> elems) {
  if (elems.empty()) return std::nullopt;
  auto ker = nullspace(coefficientMatrix(elems));
  if (ker.empty()) return std::nullopt;
  return primitiveIntegerVector(ker.front());
}

SpanBasis spanBasis(std::span<const OmegaElement> elems) {
  SpanBasis out;
  if (elems.empty()) return out;
  auto ech = rowReduce(coefficientMatrix(elems));
  out.basis = ech.pivots;
  out.coordinates.resize(elems.size());
  for (std::size_t c = 0; c < elems.size(); ++c) {
    RatVector v(out.basis.size());
    for (std::size_t r = 0; r < out.basis.size(); ++r) v[r] = ech.reduced.at(r, c);
    out.coordinates[c] = std::move(v);
  }
  return out;
}

RatVector coordinatesIn(std::span<const OmegaElement> alpha, const OmegaElement& beta) {
  std::vector<OmegaElement> all(alpha.begin(), alpha.end());
  all.push_back(beta);
  auto sb = spanBasis(all);
  if (sb.basis.size() < alpha.size() || (!sb.basis.empty() && sb.basis.back() != alpha.size() - 1) ||
      (alpha.empty() && !sb.basis.empty()))
    throw DomainError("basis is linearly dependent over k");
  if (sb.basis.size() > alpha.size()) throw DomainError("element lies outside the k-span of the basis");
  return sb.coordinates.back();
}

KScalar fni(std::span<const OmegaElement> alpha, const OmegaElement& beta, std::size_t i) {
  if (i < 1 || i > alpha.size())
    throw DomainError("coordinate index " + std::to_string(i) + " outside 1.." + std::to_string(alpha.size()));
  return KScalar{coordinatesIn(alpha, beta)[i - 1]};
}

std::size_t trdegRank(std::span<const OmegaElement> elems) {
  long order = -1;
  for (const auto& e : elems) order = std::max(order, e.order());
  if (order < 0) return 0;
  auto vars = tVars(static_cast<std::size_t>(order) + 1);
  PolyMatrix jac;
  for (const auto& e : elems) {
    if (e.isRational()) continue;
    RatPoly num = e.numerator().withVars(vars), den = e.denominator().withVars(vars);
    std::vector<RatPoly> row;
    for (std::size_t j = 0; j < vars.size(); ++j) {
      // d(num/den)/dt_j scaled by den^2.
      row.push_back(num.derivative(j) * den - num * den.derivative(j));
    }
    jac.push_back(std::move(row));
  }
  return polyMatrixRank(std::move(jac));
}

bool inScl(const OmegaElement& a, std::span<const OmegaElement> set) {
  std::vector<OmegaElement> all(set.begin(), set.end());
  std::size_t base = trdegRank(all);
  all.push_back(a);
  return trdegRank(all) == base;
}

}  // namespace pairtopo::difffield
