#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pairtopo/errors.hpp"
#include "pairtopo/rat.hpp"

namespace pairtopo {

using Monomial = std::vector<std::uint32_t>;

enum class TermOrder { Lex, GrevLex };

/// Three-way comparison of exponent vectors of equal length under `order`.
/// Variable 0 is the most significant.
int compareMonomials(const Monomial& a, const Monomial& b, TermOrder order);
std::uint64_t monomialDegree(const Monomial& m);
bool monomialDivides(const Monomial& divisor, const Monomial& m);
Monomial monomialLcm(const Monomial& a, const Monomial& b);
Monomial monomialQuotient(const Monomial& m, const Monomial& divisor);
bool monomialsCoprime(const Monomial& a, const Monomial& b);

/// "x2" < "x10" < "y1": alphabetic prefix first, then numeric suffix.
bool naturalLess(const std::string& a, const std::string& b);

std::string coeffText(const Rat& c);

/// Sparse multivariate polynomial over a field C with named variables.
/// Terms are kept sorted in descending term order with no zero coefficients.
template <class C>
class MPoly {
 public:
  struct Term {
    Monomial mono;
    C coeff;
  };

  MPoly() = default;
  explicit MPoly(std::vector<std::string> vars, TermOrder order = TermOrder::GrevLex)
      : vars_(std::move(vars)), order_(order) {}
  MPoly(std::vector<std::string> vars, std::vector<Term> terms, TermOrder order = TermOrder::GrevLex)
      : vars_(std::move(vars)), order_(order), terms_(std::move(terms)) {
    for (const auto& t : terms_)
      if (t.mono.size() != vars_.size()) throw DimensionError("exponent vector length mismatch");
    normalize();
  }

  static MPoly constant(const C& c, std::vector<std::string> vars = {},
                        TermOrder order = TermOrder::GrevLex) {
    MPoly p(std::move(vars), order);
    if (!c.isZero()) p.terms_.push_back({Monomial(p.vars_.size(), 0), c});
    return p;
  }

  static MPoly variable(const std::string& name, std::vector<std::string> vars = {},
                        TermOrder order = TermOrder::GrevLex) {
    auto it = std::find(vars.begin(), vars.end(), name);
    std::size_t idx = static_cast<std::size_t>(it - vars.begin());
    if (it == vars.end()) vars.push_back(name);
    MPoly p(std::move(vars), order);
    Monomial m(p.vars_.size(), 0);
    m[idx] = 1;
    p.terms_.push_back({std::move(m), C(1)});
    return p;
  }

  const std::vector<std::string>& vars() const { return vars_; }
  TermOrder order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool isZero() const { return terms_.empty(); }

  bool isConstant() const {
    return terms_.empty() || (terms_.size() == 1 && monomialDegree(terms_[0].mono) == 0);
  }

  C constantValue() const {
    for (const auto& t : terms_)
      if (monomialDegree(t.mono) == 0) return t.coeff;
    return C();
  }

  std::optional<std::size_t> varIndex(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vars_.begin());
  }

  /// -1 for the zero polynomial.
  long totalDegree() const {
    long d = -1;
    for (const auto& t : terms_) d = std::max<long>(d, static_cast<long>(monomialDegree(t.mono)));
    return d;
  }

  std::uint32_t degreeIn(std::size_t var) const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono[var]);
    return d;
  }

  bool involves(std::size_t var) const { return degreeIn(var) > 0; }

  bool involves(const std::string& name) const {
    auto i = varIndex(name);
    return i && involves(*i);
  }

  std::vector<std::string> usedVars() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (involves(i)) out.push_back(vars_[i]);
    return out;
  }

  const Term& leadingTerm() const {
    if (terms_.empty()) throw DomainError("leading term of zero polynomial");
    return terms_.front();
  }
  const Monomial& leadingMonomial() const { return leadingTerm().mono; }
  const C& leadingCoeff() const { return leadingTerm().coeff; }

  /// Re-express over `newVars`; every used variable must be present.
  MPoly withVars(std::vector<std::string> newVars) const {
    if (newVars == vars_) return *this;
    std::vector<std::ptrdiff_t> pos(vars_.size(), -1);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      auto it = std::find(newVars.begin(), newVars.end(), vars_[i]);
      if (it != newVars.end()) pos[i] = it - newVars.begin();
    }
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m(newVars.size(), 0);
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (t.mono[i] == 0) continue;
        if (pos[i] < 0) throw DimensionError("variable '" + vars_[i] + "' missing from target ring");
        m[static_cast<std::size_t>(pos[i])] = t.mono[i];
      }
      out.push_back({std::move(m), t.coeff});
    }
    return MPoly(std::move(newVars), std::move(out), order_);
  }

  MPoly withOrder(TermOrder order) const {
    if (order == order_) return *this;
    return MPoly(vars_, terms_, order);
  }

  /// Drops variables that do not occur; remaining variables in natural order.
  MPoly canonicalVars() const {
    auto used = usedVars();
    std::sort(used.begin(), used.end(), naturalLess);
    return withVars(std::move(used));
  }

  MPoly operator-() const {
    MPoly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  MPoly scaled(const C& c) const {
    if (c.isZero()) return MPoly(vars_, order_);
    MPoly r = *this;
    for (auto& t : r.terms_) t.coeff = t.coeff * c;
    return r;
  }

  MPoly mulTerm(const Monomial& m, const C& c) const {
    if (c.isZero()) return MPoly(vars_, order_);
    MPoly r = *this;
    for (auto& t : r.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) t.mono[i] += m[i];
      t.coeff = t.coeff * c;
    }
    return r;
  }

  friend MPoly operator+(const MPoly& a, const MPoly& b) {
    if (!a.compatible(b)) {
      auto [ua, ub] = unify(a, b);
      return ua + ub;
    }
    return merge(a, b, false);
  }

  friend MPoly operator-(const MPoly& a, const MPoly& b) {
    if (!a.compatible(b)) {
      auto [ua, ub] = unify(a, b);
      return ua - ub;
    }
    return merge(a, b, true);
  }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    if (!a.compatible(b)) {
      auto [ua, ub] = unify(a, b);
      return ua * ub;
    }
    if (a.isZero() || b.isZero()) return MPoly(a.vars_, a.order_);
    if (b.terms_.size() == 1) return a.mulTerm(b.terms_[0].mono, b.terms_[0].coeff);
    if (a.terms_.size() == 1) return b.mulTerm(a.terms_[0].mono, a.terms_[0].coeff);
    std::vector<Term> prods;
    prods.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_) {
      for (const auto& t : b.terms_) {
        Monomial m = s.mono;
        for (std::size_t i = 0; i < m.size(); ++i) m[i] += t.mono[i];
        prods.push_back({std::move(m), s.coeff * t.coeff});
      }
    }
    return MPoly(a.vars_, std::move(prods), a.order_);
  }

  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

  MPoly pow(unsigned e) const {
    MPoly result = constant(C(1), vars_, order_);
    MPoly base = *this;
    while (e > 0) {
      if (e & 1U) result *= base;
      e >>= 1U;
      if (e) base *= base;
    }
    return result;
  }

  MPoly derivative(std::size_t var) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
      if (t.mono[var] == 0) continue;
      Monomial m = t.mono;
      C factor(static_cast<long>(m[var]));
      --m[var];
      out.push_back({std::move(m), t.coeff * factor});
    }
    return MPoly(vars_, std::move(out), order_);
  }

  /// Splits as sum over d of coeff_d * var^d. Coefficients keep this ring.
  std::map<std::uint32_t, MPoly> coefficientsIn(std::size_t var) const {
    std::map<std::uint32_t, std::vector<Term>> buckets;
    for (const auto& t : terms_) {
      Monomial m = t.mono;
      std::uint32_t d = m[var];
      m[var] = 0;
      buckets[d].push_back({std::move(m), t.coeff});
    }
    std::map<std::uint32_t, MPoly> out;
    for (auto& [d, ts] : buckets) out.emplace(d, MPoly(vars_, std::move(ts), order_));
    return out;
  }

  /// Substitutes `value` (same ring after unification) for variable `var`.
  MPoly substitute(std::size_t var, const MPoly& value) const {
    auto parts = coefficientsIn(var);
    MPoly result(vars_, order_);
    MPoly power = constant(C(1), vars_, order_);
    std::uint32_t cur = 0;
    for (const auto& [d, c] : parts) {
      while (cur < d) {
        power = power * value;
        ++cur;
      }
      result = result + c * power;
    }
    return result;
  }

  MPoly substitute(const std::string& name, const MPoly& value) const {
    auto i = varIndex(name);
    if (!i) return *this;
    return substitute(*i, value);
  }

  /// Evaluates with `point[i]` for variable i; `embed` maps coefficients into V.
  template <class V, class Embed>
  V evaluate(const std::vector<V>& point, Embed embed, const V& one) const {
    if (point.size() != vars_.size()) throw DimensionError("evaluation point arity mismatch");
    std::vector<std::vector<V>> powers(vars_.size());
    auto powerOf = [&](std::size_t i, std::uint32_t e) -> const V& {
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(one);
      while (cache.size() <= e) cache.push_back(cache.back() * point[i]);
      return cache[e];
    };
    V acc = V();
    for (const auto& t : terms_) {
      V term = embed(t.coeff);
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (t.mono[i]) term = term * powerOf(i, t.mono[i]);
      acc = acc + term;
    }
    return acc;
  }

  template <class D, class F>
  MPoly<D> mapCoefficients(F f) const {
    std::vector<typename MPoly<D>::Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({t.mono, f(t.coeff)});
    return MPoly<D>(vars_, std::move(out), order_);
  }

  friend bool operator==(const MPoly& a, const MPoly& b) {
    if (a.compatible(b)) {
      if (a.terms_.size() != b.terms_.size()) return false;
      for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].mono != b.terms_[i].mono || !(a.terms_[i].coeff == b.terms_[i].coeff))
          return false;
      return true;
    }
    return (a - b).isZero();
  }

  std::string toString() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
      std::string mono = monomialText(t.mono);
      std::string text;
      if (mono.empty()) {
        text = coeffText(t.coeff);
      } else if (t.coeff == C(1)) {
        text = mono;
      } else if (t.coeff == C(-1)) {
        text = "-" + mono;
      } else {
        text = coeffText(t.coeff) + "*" + mono;
      }
      if (first) {
        out = text;
        first = false;
      } else if (!text.empty() && text[0] == '-') {
        out += " - " + text.substr(1);
      } else {
        out += " + " + text;
      }
    }
    return out;
  }

  std::string monomialText(const Monomial& m) const {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += vars_[i];
      if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
  }

  bool compatible(const MPoly& o) const { return order_ == o.order_ && vars_ == o.vars_; }

  static std::pair<MPoly, MPoly> unify(const MPoly& a, const MPoly& b) {
    std::vector<std::string> vars = a.vars_;
    for (const auto& v : b.vars_)
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    TermOrder order = a.vars_.empty() && a.isZero() ? b.order_ : a.order_;
    return {a.withVars(vars).withOrder(order), b.withVars(vars).withOrder(order)};
  }

 private:
  void normalize() {
    std::sort(terms_.begin(), terms_.end(), [this](const Term& x, const Term& y) {
      return compareMonomials(x.mono, y.mono, order_) > 0;
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coeff = out.back().coeff + t.coeff;
      } else {
        if (!out.empty() && out.back().coeff.isZero()) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && out.back().coeff.isZero()) out.pop_back();
    terms_ = std::move(out);
  }

  static MPoly merge(const MPoly& a, const MPoly& b, bool subtract) {
    std::vector<Term> out;
    out.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      int c;
      if (i == a.terms_.size()) {
        c = -1;
      } else if (j == b.terms_.size()) {
        c = 1;
      } else {
        c = compareMonomials(a.terms_[i].mono, b.terms_[j].mono, a.order_);
      }
      if (c > 0) {
        out.push_back(a.terms_[i++]);
      } else if (c < 0) {
        const auto& t = b.terms_[j++];
        out.push_back({t.mono, subtract ? -t.coeff : t.coeff});
      } else {
        C s = subtract ? a.terms_[i].coeff - b.terms_[j].coeff : a.terms_[i].coeff + b.terms_[j].coeff;
        if (!s.isZero()) out.push_back({a.terms_[i].mono, std::move(s)});
        ++i;
        ++j;
      }
    }
    MPoly r(a.vars_, a.order_);
    r.terms_ = std::move(out);
    return r;
  }

  std::vector<std::string> vars_;
  TermOrder order_ = TermOrder::GrevLex;
  std::vector<Term> terms_;
};

using RatPoly = MPoly<Rat>;

/// Divides out the rational content and makes the leading coefficient
/// positive; the zero set is unchanged.
RatPoly primitivePart(const RatPoly& p);

/// Monic in the polynomial's own term order.
RatPoly makeMonic(const RatPoly& p);

}  // namespace pairtopo
