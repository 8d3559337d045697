#pragma once

#include <optional>
#include <utility>

#include "pairtopo/mpoly.hpp"

namespace pairtopo {

/// Multivariate division by a single divisor: a = q*b + r, no term of r
/// divisible by lt(b).
std::pair<RatPoly, RatPoly> divide(const RatPoly& a, const RatPoly& b);

/// q with a = q*b, or nullopt when b does not divide a.
std::optional<RatPoly> divideExact(const RatPoly& a, const RatPoly& b);

/// Sparse pseudo-remainder of a by b with respect to variable `var`:
/// lc(b)^e * a = q*b + r with deg_var(r) < deg_var(b) for some e >= 0.
RatPoly pseudoRemainder(const RatPoly& a, const RatPoly& b, std::size_t var);

/// Greatest common divisor over Q, monic in the first argument's term order.
/// gcd(0, 0) = 0.
RatPoly gcd(const RatPoly& a, const RatPoly& b);

RatPoly lcm(const RatPoly& a, const RatPoly& b);

/// gcd of the coefficients of p viewed as a polynomial in `var`.
RatPoly contentIn(const RatPoly& p, std::size_t var);

}  // namespace pairtopo
