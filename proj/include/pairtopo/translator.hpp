#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pairtopo/acfqe.hpp"
#include "pairtopo/formulas.hpp"
#include "pairtopo/pairsets.hpp"

namespace pairtopo::translator {

using formulas::BasicFormulaBlock;
using formulas::BlockTree;
using pairsets::Point;

/// One element of I_j: the x-monomial iota scaled by tau_l, where tau is a
/// Q-basis of the block's coefficients with tau_0 = 1. Blocks over Q only use
/// l = 0.
struct SupportTerm {
  Monomial iota;
  std::size_t tau = 0;
  OmegaPoly value;  // tau_l * x^iota, in the free variables
  RatPoly coeff;    // p_{j,iota,l}(y), in the bound variables
};

struct SupportData {
  std::vector<std::string> freeVars;
  std::vector<std::string> boundVars;
  std::vector<OmegaElement> tau;
  /// I[0] for p0, I[j] for the j-th equation; empty when p_j = 0.
  std::vector<std::vector<SupportTerm>> I;

  /// sum over I[j] of coeff * value, as a polynomial in free and bound vars.
  OmegaPoly reconstruct(std::size_t j) const;
};

SupportData support(const BasicFormulaBlock& block);

/// A_{j,k,iota}: coordinate k of value(iota) in the basis of cell row j.
struct CoordVar {
  std::string name;
  std::size_t j = 0;
  std::size_t k = 0;  // 1-based
  OmegaPoly value;
};

struct Cell {
  /// Indices into I[j], per j.
  std::vector<std::vector<std::size_t>> K;
  /// Same data as multi-indices (exponents, then the tau index when the block
  /// has non-rational coefficients).
  std::vector<std::vector<std::vector<std::uint32_t>>> Kindices;
  pairsets::Constructible sk;
  std::vector<std::vector<OmegaPoly>> bases;  // values of K_j
  std::vector<CoordVar> coords;
  acfqe::KConstructible z;  // over the coordinate names
};

struct PairCertificate {
  std::size_t arity = 0;
  std::vector<std::string> freeVars;
  std::vector<Cell> cells;
};

struct TranslateOptions {
  acfqe::QEOptions qe;
  std::size_t cellBudget = 4096;
};

PairCertificate translate(const BasicFormulaBlock& block, const TranslateOptions& options = {});

/// S_K membership, coordinates by fni, then z. Throws InvariantBreach when a
/// coordinate is undefined on a point of S_K.
bool memberCert(const PairCertificate& cert, const Point& p);

/// Independent path: split p_j(p, y) along a Q-basis of its coefficient values
/// and decide the resulting system over k.
bool decideDirect(const BasicFormulaBlock& block, const Point& p, const acfqe::QEOptions& options = {});

struct NotFlattenable {
  std::string reason;
};

using FlatResult = std::variant<pairsets::Constructible, NotFlattenable>;

/// Pure pair-topology presentation when every z-condition is linear in the
/// coordinates of a single (j, k) group.
FlatResult flattenLinear(const PairCertificate& cert);

struct CertTree {
  BlockTree::Op op = BlockTree::Op::Leaf;
  PairCertificate cert;
  std::vector<CertTree> children;
  /// Flattened form of the whole subtree when every leaf flattens.
  std::optional<pairsets::Constructible> flat;
};

CertTree translateCombination(const BlockTree& tree, const TranslateOptions& options = {});
bool memberTree(const CertTree& tree, const Point& p);
bool decideDirectTree(const BlockTree& tree, const Point& p, const acfqe::QEOptions& options = {});

std::string certificateJson(const PairCertificate& cert, int indent = -1);
PairCertificate certificateFromJson(const std::string& text);
std::string certTreeJson(const CertTree& tree, int indent = -1);
CertTree certTreeFromJson(const std::string& text);

}  // namespace pairtopo::translator
