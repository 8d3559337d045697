#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "pairtopo/mpoly.hpp"

namespace pairtopo {

struct GroebnerOptions {
  /// Maximum number of S-polynomial reductions before BudgetExceeded.
  std::size_t stepBudget = 1'000'000;
};

/// Reduced Groebner basis of the ideal generated by `gens`, monic, sorted by
/// ascending leading monomial. Variables are the union of the generators'
/// variables unless `vars` is given, in which case it fixes the variable
/// order (variable 0 is most significant).
std::vector<RatPoly> groebner(const std::vector<RatPoly>& gens, TermOrder order,
                              const std::vector<std::string>& vars = {},
                              const GroebnerOptions& options = {});

/// Fully reduced normal form of p modulo a Groebner basis.
RatPoly normalForm(const RatPoly& p, const std::vector<RatPoly>& basis);

/// Ideal over Q with a lazily computed, internally synchronized basis cache.
class Ideal {
 public:
  Ideal() : cache_(std::make_shared<Cache>()) {}
  explicit Ideal(std::vector<RatPoly> generators);

  const std::vector<RatPoly>& generators() const { return gens_; }

  /// The reduced basis under `order`; cached for the most recent order.
  std::vector<RatPoly> groebnerBasis(TermOrder order = TermOrder::GrevLex,
                                     const GroebnerOptions& options = {}) const;

  bool isUnit(const GroebnerOptions& options = {}) const;
  bool contains(const RatPoly& p, const GroebnerOptions& options = {}) const;
  bool isZero() const;

 private:
  struct Cache {
    std::mutex mu;
    std::optional<TermOrder> order;
    std::vector<RatPoly> basis;
  };
  std::vector<RatPoly> gens_;
  std::shared_ptr<Cache> cache_;
};

/// I ∩ Q[keep], computed from a lex basis with the eliminated variables
/// ranked highest. The zero ideal has no generators.
Ideal elimIdeal(const Ideal& ideal, const std::vector<std::string>& keep,
                const GroebnerOptions& options = {});

/// True iff {eqs = 0, neq != 0} has a solution over the algebraic closure of
/// Q (Rabinowitsch trick: 1 not in <eqs, z*neq - 1>).
bool saturateDecide(const std::vector<RatPoly>& eqs, const RatPoly& neq,
                    const GroebnerOptions& options = {});

}  // namespace pairtopo
