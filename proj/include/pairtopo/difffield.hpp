#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pairtopo/linalg.hpp"
#include "pairtopo/omega.hpp"

namespace pairtopo::difffield {

/// n-fold derivation with D(t_i) = t_{i+1}.
OmegaElement derive(const OmegaElement& a, unsigned n = 1);

/// d/dt_index of a rational function (ordinary partial derivative).
OmegaElement partial(const OmegaElement& a, std::size_t index);

/// The Wronskian as a differential polynomial: symbol matrix with entry
/// (i, j) = x_{j+1}^{(i)}, and its expansion over the derivative symbols
/// "x1", "x1'", "x1''", ...
struct WronskianSymbolic {
  std::vector<std::vector<std::string>> symbols;
  RatPoly expansion;
};

WronskianSymbolic wronskianSym(std::size_t n);

/// Exact determinant of the Wronskian matrix of `elems`.
OmegaElement wronskianEval(std::span<const OmegaElement> elems);

/// Nonzero primitive integer vector c with sum c_i elems_i = 0, or nullopt
/// when the elements are linearly independent over Q.
std::optional<RatVector> kDependent(std::span<const OmegaElement> elems);

/// Greedy maximal Q-independent subsequence and the coordinates of every
/// element in it.
struct SpanBasis {
  std::vector<std::size_t> basis;        // indices into the input, increasing
  std::vector<RatVector> coordinates;    // coordinates[i] has basis.size() entries
};

SpanBasis spanBasis(std::span<const OmegaElement> elems);

/// Coordinate i (1-based) of beta in the basis alpha. Throws DomainError when
/// alpha is dependent or beta lies outside its span.
KScalar fni(std::span<const OmegaElement> alpha, const OmegaElement& beta, std::size_t i);

/// All coordinates of beta in the independent basis alpha (same domain rule).
RatVector coordinatesIn(std::span<const OmegaElement> alpha, const OmegaElement& beta);

/// Transcendence degree over Q of Q(A), via the Jacobian rank.
std::size_t trdegRank(std::span<const OmegaElement> elems);

/// a in scl(A): adjoining a does not raise the transcendence degree.
bool inScl(const OmegaElement& a, std::span<const OmegaElement> set);

/// Is D(a) = 0, i.e. a in k.
inline bool isConstant(const OmegaElement& a) { return a.isRational(); }

}  // namespace pairtopo::difffield
