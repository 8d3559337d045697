#include "pairtopo/omega.hpp"

#include <cctype>

#include "pairtopo/polyalg.hpp"

namespace pairtopo {

std::string tVarName(std::size_t index) { return "t" + std::to_string(index); }

std::vector<std::string> tVars(std::size_t count) {
  std::vector<std::string> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(tVarName(i));
  return out;
}

long tVarIndex(const std::string& name) {
  if (name.size() < 2 || name[0] != 't') return -1;
  for (std::size_t i = 1; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return -1;
  if (name.size() > 2 && name[1] == '0') return -1;
  if (name.size() > 9) return -1;
  return std::stol(name.substr(1));
}

namespace {

std::size_t generatorCount(const RatPoly& p) {
  std::size_t n = 0;
  for (const auto& v : p.usedVars()) {
    long i = tVarIndex(v);
    if (i < 0) throw DomainError("'" + v + "' is not a generator t<i>");
    n = std::max(n, static_cast<std::size_t>(i) + 1);
  }
  return n;
}

}  // namespace

OmegaElement::OmegaElement(RatPoly num, RatPoly den, bool reduce)
    : num_(std::move(num)), den_(std::move(den)) {
  canonicalize(reduce);
}

OmegaElement OmegaElement::generator(std::size_t index) {
  auto vars = tVars(index + 1);
  return OmegaElement(RatPoly::variable(tVarName(index), vars), RatPoly::constant(Rat(1), vars), false);
}

OmegaElement OmegaElement::fraction(const RatPoly& num, const RatPoly& den) {
  if (den.isZero()) throw DomainError("zero denominator in Omega element");
  return OmegaElement(num, den, true);
}

void OmegaElement::canonicalize(bool reduce) {
  if (num_.isZero()) {
    num_ = RatPoly();
    den_ = RatPoly::constant(Rat(1));
    return;
  }
  auto vars = tVars(std::max(generatorCount(num_), generatorCount(den_)));
  num_ = num_.withVars(vars).withOrder(TermOrder::GrevLex);
  den_ = den_.withVars(vars).withOrder(TermOrder::GrevLex);
  if (reduce && !den_.isConstant()) {
    RatPoly g = gcd(num_, den_);
    if (!g.isConstant()) {
      num_ = *divideExact(num_, g);
      den_ = *divideExact(den_, g);
      // Cancellation can shrink the generator set.
      auto trimmed = tVars(std::max(generatorCount(num_), generatorCount(den_)));
      num_ = num_.withVars(trimmed);
      den_ = den_.withVars(trimmed);
    }
  }
  Rat lc = den_.leadingCoeff();
  if (!lc.isOne()) {
    Rat inv = lc.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

Rat OmegaElement::rationalValue() const {
  if (!isRational()) throw DomainError("Omega element " + toString() + " is not a constant");
  return num_.constantValue() / den_.constantValue();
}

OmegaElement OmegaElement::inverse() const {
  if (isZero()) throw DomainError("inverse of zero Omega element");
  return OmegaElement(den_, num_, false);
}

OmegaElement OmegaElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  return OmegaElement(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)), false);
}

OmegaElement operator+(const OmegaElement& a, const OmegaElement& b) {
  if (a.isZero()) return b;
  if (b.isZero()) return a;
  if (a.den_ == b.den_) return OmegaElement(a.num_ + b.num_, a.den_, !a.isPolynomial());
  return OmegaElement(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, true);
}

OmegaElement operator-(const OmegaElement& a) { return OmegaElement(-a.num_, a.den_, false); }

OmegaElement operator-(const OmegaElement& a, const OmegaElement& b) { return a + (-b); }

OmegaElement operator*(const OmegaElement& a, const OmegaElement& b) {
  if (a.isZero() || b.isZero()) return OmegaElement();
  bool poly = a.isPolynomial() && b.isPolynomial();
  return OmegaElement(a.num_ * b.num_, a.den_ * b.den_, !poly);
}

OmegaElement operator/(const OmegaElement& a, const OmegaElement& b) {
  if (b.isZero()) throw DomainError("division by zero Omega element");
  if (b.isRational()) return a * OmegaElement(b.rationalValue().inverse());
  return OmegaElement(a.num_ * b.den_, a.den_ * b.num_, true);
}

std::string OmegaElement::toString() const {
  if (isRational()) return rationalValue().toString();
  if (isPolynomial()) return num_.toString();
  auto wrap = [](const RatPoly& p) {
    if (p.size() == 1 && p.leadingCoeff().isOne()) return p.toString();
    return "(" + p.toString() + ")";
  };
  return wrap(num_) + "/" + wrap(den_);
}

std::string coeffText(const OmegaElement& c) {
  if (c.isRational()) return c.rationalValue().toString();
  if (c.isPolynomial() && c.numerator().size() == 1 && c.numerator().leadingCoeff().isOne())
    return c.toString();
  return "(" + c.toString() + ")";
}

OmegaPoly embedRational(const RatPoly& p) {
  return p.mapCoefficients<OmegaElement>([](const Rat& r) { return OmegaElement(r); });
}

}  // namespace pairtopo
