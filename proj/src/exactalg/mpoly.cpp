#include "pairtopo/mpoly.hpp"

#include <cctype>

namespace pairtopo {

int compareMonomials(const Monomial& a, const Monomial& b, TermOrder order) {
  if (order == TermOrder::Lex) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
  }
  std::uint64_t da = monomialDegree(a), db = monomialDegree(b);
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

std::uint64_t monomialDegree(const Monomial& m) {
  std::uint64_t d = 0;
  for (auto e : m) d += e;
  return d;
}

bool monomialDivides(const Monomial& divisor, const Monomial& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    if (divisor[i] > m[i]) return false;
  return true;
}

Monomial monomialLcm(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
  return m;
}

Monomial monomialQuotient(const Monomial& m, const Monomial& divisor) {
  Monomial q(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) q[i] = m[i] - divisor[i];
  return q;
}

bool monomialsCoprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

bool naturalLess(const std::string& a, const std::string& b) {
  auto split = [](const std::string& s) {
    std::size_t k = s.size();
    while (k > 0 && std::isdigit(static_cast<unsigned char>(s[k - 1]))) --k;
    return std::pair<std::string, std::string>(s.substr(0, k), s.substr(k));
  };
  auto [pa, na] = split(a);
  auto [pb, nb] = split(b);
  if (pa != pb) return pa < pb;
  if (na.size() != nb.size()) return na.size() < nb.size();
  return na < nb;
}

std::string coeffText(const Rat& c) { return c.toString(); }

RatPoly primitivePart(const RatPoly& p) {
  if (p.isZero()) return p;
  mpz_class g = 0, l = 1;
  for (const auto& t : p.terms()) {
    mpz_class n = t.coeff.numerator();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    mpz_class d = t.coeff.denominator();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  Rat scale(l, g);
  if (p.leadingCoeff().sign() < 0) scale = -scale;
  return p.scaled(scale);
}

RatPoly makeMonic(const RatPoly& p) {
  if (p.isZero()) return p;
  return p.scaled(p.leadingCoeff().inverse());
}

}  // namespace pairtopo
