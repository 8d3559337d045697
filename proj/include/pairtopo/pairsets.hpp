#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pairtopo/omega.hpp"

namespace pairtopo::pairsets {

using Point = std::vector<OmegaElement>;

/// Coordinate names x1..xn of the ambient space.
std::vector<std::string> ambientVars(std::size_t n);

/// Polynomial map Omega^n -> Omega^N; components live in x1..xn.
struct PolyMap {
  std::size_t arityIn = 0;
  std::vector<OmegaPoly> components;

  PolyMap() = default;
  PolyMap(std::size_t n, std::vector<OmegaPoly> comps);

  static PolyMap identity(std::size_t n);
  std::size_t arityOut() const { return components.size(); }
  Point apply(const Point& p) const;
};

/// f^-1(Y_{k1} x ... x Y_{km}). No blocks is Omega^n.
struct BasicClosed {
  PolyMap map;
  std::vector<std::size_t> blocks;

  std::size_t arity() const { return map.arityIn; }
  bool member(const Point& p) const;

  static BasicClosed whole(std::size_t n);
  /// Block [1] over the constant 1.
  static BasicClosed emptySet(std::size_t n);
};

/// Finite union; no members is the empty set.
struct ClosedSet {
  std::size_t arity = 0;
  std::vector<BasicClosed> members;

  bool member(const Point& p) const;

  static ClosedSet empty(std::size_t n) { return {n, {}}; }
  static ClosedSet whole(std::size_t n) { return {n, {BasicClosed::whole(n)}}; }
  static ClosedSet of(BasicClosed b);
};

/// Union of C \ D over the pairs.
struct Constructible {
  struct Pair {
    ClosedSet C;
    ClosedSet D;
  };
  std::size_t arity = 0;
  std::vector<Pair> pairs;

  bool member(const Point& p) const;

  static Constructible empty(std::size_t n) { return {n, {}}; }
  static Constructible whole(std::size_t n) { return {n, {{ClosedSet::whole(n), ClosedSet::empty(n)}}}; }
  static Constructible closed(ClosedSet c);
};

// Catalog.
BasicClosed mkYn(std::size_t n);
ClosedSet mkKn(std::size_t n);
ClosedSet mkSpan(const std::vector<OmegaElement>& alpha);
Constructible mkXn(std::size_t n);
/// {(alpha, beta) : coordinate i of beta in the basis alpha equals a}, before
/// intersecting with X_n.
ClosedSet mkFiberFni(std::size_t n, std::size_t i, const KScalar& a);

// Algebra. Results are canonical: members sorted and deduplicated, empty and
// vacuous parts removed.
BasicClosed simplify(const BasicClosed& b);
ClosedSet canonical(ClosedSet c);
Constructible canonical(Constructible x);

BasicClosed intersect(const BasicClosed& a, const BasicClosed& b);
ClosedSet intersect(const ClosedSet& a, const ClosedSet& b);
ClosedSet unite(const ClosedSet& a, const ClosedSet& b);
ClosedSet productSet(const ClosedSet& a, const ClosedSet& b);

Constructible complementToConstructible(const ClosedSet& c);
Constructible unite(const Constructible& a, const Constructible& b);
Constructible intersect(const Constructible& a, const Constructible& b);
Constructible complement(const Constructible& a);
Constructible difference(const Constructible& a, const Constructible& b);

/// C = Omega^n, decided at a generic point: each block's components must be
/// linearly dependent over Q as polynomials with Omega coefficients.
bool isFullAmbient(const BasicClosed& c);
/// Empty by inspection (some block of constants is independent).
bool isTriviallyEmpty(const BasicClosed& c);

/// Only shapes from the catalog (Omega^n, Y on coordinates, k^n, spans,
/// fibers) are certified irreducible.
bool certifiedIrreducible(const BasicClosed& c);

struct SampleOptions {
  std::uint64_t seed = 1;
  std::size_t samples = 200;
};

/// Random points of Omega^n: rationals, generators, proportional tuples and
/// tuples inside small spans.
Point randomPoint(std::size_t n, std::mt19937_64& rng);

struct ClosureResult {
  ClosedSet set;
  bool exact = false;
};

/// Union of the C-parts of the pairs not certified empty. Exact when every
/// kept pair has D empty, or C is a certified-irreducible single member and
/// C \ D has a witness.
ClosureResult closure(const Constructible& x, const SampleOptions& options = {});

/// A point of C \ D found by sampling, if any.
std::optional<Point> findWitness(const ClosedSet& c, const ClosedSet& d, const SampleOptions& options);

/// Polynomials over Q in x1..xn whose common zeros in k^n are C intersected
/// with k^n.
std::vector<RatPoly> zariskiRestrictK(const BasicClosed& c, std::size_t n);
/// Union: products of the member families.
std::vector<RatPoly> zariskiRestrictK(const ClosedSet& c, std::size_t n);

std::string serialize(const Constructible& x);
Constructible deserialize(const std::string& text);
std::string toString(const BasicClosed& b);

}  // namespace pairtopo::pairsets
