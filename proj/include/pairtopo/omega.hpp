#pragma once

#include <string>
#include <vector>

#include "pairtopo/mpoly.hpp"

namespace pairtopo {

std::string tVarName(std::size_t index);
std::vector<std::string> tVars(std::size_t count);
/// Index of a generator name "t<digits>", or -1.
long tVarIndex(const std::string& name);

/// Element of Q(t0, t1, ...): the concrete model of Omega. Constants (zero
/// derivative) are exactly Q, which stands in for k.
///
/// Stored as num/den with gcd removed and den monic under grevlex, both over
/// t0..tM where M is the largest index used, so equality is syntactic.
class OmegaElement {
 public:
  OmegaElement() : num_(), den_(RatPoly::constant(Rat(1))) {}
  OmegaElement(long v) : OmegaElement(Rat(v)) {}  // NOLINT(google-explicit-constructor)
  OmegaElement(const Rat& v)                     // NOLINT(google-explicit-constructor)
      : num_(RatPoly::constant(v)), den_(RatPoly::constant(Rat(1))) {}

  /// The differential generator t_i.
  static OmegaElement generator(std::size_t index);

  /// num/den over t-variables; den must be nonzero.
  static OmegaElement fraction(const RatPoly& num, const RatPoly& den);
  static OmegaElement polynomial(const RatPoly& num) { return fraction(num, RatPoly::constant(Rat(1))); }

  const RatPoly& numerator() const { return num_; }
  const RatPoly& denominator() const { return den_; }

  /// Largest generator index used, -1 for constants.
  long order() const { return static_cast<long>(num_.vars().size()) - 1; }

  bool isZero() const { return num_.isZero(); }
  bool isRational() const { return num_.isConstant() && den_.isConstant(); }
  bool isPolynomial() const { return den_.isConstant(); }
  Rat rationalValue() const;

  OmegaElement inverse() const;
  OmegaElement pow(long e) const;

  std::string toString() const;

  friend OmegaElement operator+(const OmegaElement& a, const OmegaElement& b);
  friend OmegaElement operator-(const OmegaElement& a, const OmegaElement& b);
  friend OmegaElement operator*(const OmegaElement& a, const OmegaElement& b);
  friend OmegaElement operator/(const OmegaElement& a, const OmegaElement& b);
  friend OmegaElement operator-(const OmegaElement& a);
  OmegaElement& operator+=(const OmegaElement& o) { return *this = *this + o; }
  OmegaElement& operator-=(const OmegaElement& o) { return *this = *this - o; }
  OmegaElement& operator*=(const OmegaElement& o) { return *this = *this * o; }

  friend bool operator==(const OmegaElement& a, const OmegaElement& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  OmegaElement(RatPoly num, RatPoly den, bool reduce);
  void canonicalize(bool reduce);

  RatPoly num_;
  RatPoly den_;
};

std::string coeffText(const OmegaElement& c);

/// Polynomials with Omega coefficients: maps of the pair topology.
using OmegaPoly = MPoly<OmegaElement>;

OmegaPoly embedRational(const RatPoly& p);

/// An element of k (constant field); in the model always rational.
struct KScalar {
  Rat value;
  friend bool operator==(const KScalar&, const KScalar&) = default;
};

}  // namespace pairtopo
