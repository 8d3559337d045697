#pragma once

#include <string>
#include <vector>

#include "pairtopo/groebner.hpp"

namespace pairtopo::acfqe {

/// exists existVars . equations = 0 and inequation != 0, over the algebraic
/// closure of Q.
struct KSystem {
  std::vector<std::string> existVars;
  std::vector<std::string> freeVars;
  std::vector<RatPoly> equations;
  RatPoly inequation = RatPoly::constant(Rat(1));
};

/// V(E) minus V(N).
struct KPiece {
  std::vector<RatPoly> E;
  RatPoly N;
};

/// Finite union of pieces over `vars`. No pieces means the empty set.
struct KConstructible {
  std::vector<std::string> vars;
  std::vector<KPiece> pieces;

  bool isEmpty() const { return pieces.empty(); }
  /// True for the single piece (no equations, N = 1).
  bool isEverything() const;
  bool contains(const std::vector<Rat>& point) const;
  std::string toString() const;
};

struct QEOptions {
  GroebnerOptions groebner;
  /// Maximal total degree of input polynomials; intermediates may reach the
  /// square of it.
  unsigned degreeCap = 8;
  std::size_t branchBudget = 20000;
};

bool decideExists(const KSystem& s, const QEOptions& options = {});

/// Project out existVars by case analysis on leading coefficients.
KConstructible eliminateExists(const KSystem& s, const QEOptions& options = {});

/// Substitute `values` (one per free variable) and decide.
bool decideAt(const KSystem& s, const std::vector<Rat>& values, const QEOptions& options = {});

/// Normal form of a piece list: primitive polynomials, sorted, deduplicated,
/// unsatisfiable pieces removed.
KConstructible normalize(std::vector<std::string> vars, std::vector<KPiece> pieces,
                         const QEOptions& options = {});

/// a is contained in b over the algebraic closure (ideal-theoretic check).
bool subset(const KConstructible& a, const KConstructible& b, const QEOptions& options = {});
inline bool equivalent(const KConstructible& a, const KConstructible& b, const QEOptions& options = {}) {
  return subset(a, b, options) && subset(b, a, options);
}

}  // namespace pairtopo::acfqe
