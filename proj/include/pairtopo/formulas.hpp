#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pairtopo/errors.hpp"
#include "pairtopo/omega.hpp"

namespace pairtopo::formulas {

struct SourcePos {
  int line = 0;
  int column = 0;
};

enum class Kind { Eq, Neq, InU, And, Or, Not, ExistsU, Exists, Forall };

struct Node;
using Formula = std::shared_ptr<const Node>;

/// Immutable formula node. Atoms carry one polynomial (p = 0, p != 0, U(p));
/// quantifiers carry their bound names and a single child.
struct Node {
  Kind kind;
  OmegaPoly poly;
  std::vector<Formula> children;
  std::vector<std::string> vars;
  SourcePos pos;
};

Formula eq(OmegaPoly p, SourcePos pos = {});
Formula neq(OmegaPoly p, SourcePos pos = {});
Formula inU(OmegaPoly p, SourcePos pos = {});
Formula conj(std::vector<Formula> parts, SourcePos pos = {});
Formula disj(std::vector<Formula> parts, SourcePos pos = {});
Formula negate(Formula f, SourcePos pos = {});
Formula existsU(std::vector<std::string> vars, Formula body, SourcePos pos = {});

/// Structural equality (positions ignored).
bool equal(const Formula& a, const Formula& b);

struct ParseOptions {
  /// When set, any identifier that is neither declared here, bound, nor a
  /// parameter is an unbound-variable error.
  std::optional<std::vector<std::string>> freeVars;
  std::vector<std::string> params;
};

/// Parse a formula. Polynomials use + - * / ^ over rational constants, the
/// generators t0, t1, ... (coefficients) and identifiers (variables).
Formula parse(const std::string& text, const ParseOptions& options = {});

/// Parse a single polynomial expression with the same term syntax.
OmegaPoly parsePoly(const std::string& text, const ParseOptions& options = {});

/// Parse an Omega literal: a rational function in t0, t1, ...
OmegaElement parseOmega(const std::string& text);

std::string print(const Formula& f);

/// Free variables in natural order (x2 before x10).
std::vector<std::string> freeVariables(const Formula& f);

/// Replace parameter symbols by Omega values. Every name in `params` that
/// occurs in f must be covered by sigma (MissingParameter otherwise); with an
/// empty `params`, exactly the names in sigma are substituted.
Formula substituteParams(const Formula& f, const std::map<std::string, OmegaElement>& sigma,
                         const std::vector<std::string>& params = {});

/// One basic formula: exists y in U^m . p0 != 0 and p1 = 0 and ... and ps = 0,
/// all polynomials in (freeVars, boundVars).
struct BasicFormulaBlock {
  std::vector<std::string> freeVars;
  std::vector<std::string> boundVars;
  OmegaPoly p0;
  std::vector<OmegaPoly> eqs;

  std::string toString() const;
};

struct BlockTree {
  enum class Op { Leaf, And, Or, Not };
  Op op = Op::Leaf;
  BasicFormulaBlock block;
  std::vector<BlockTree> children;

  static BlockTree leaf(BasicFormulaBlock b);
  static BlockTree node(Op op, std::vector<BlockTree> children);
  /// Empty Or (false) and empty And (true).
  bool isFalse() const { return op == Op::Or && children.empty(); }
  bool isTrue() const { return op == Op::And && children.empty(); }

  std::vector<const BasicFormulaBlock*> leaves() const;
  std::string toString() const;
};

struct BlockOptions {
  /// Free variable order; defaults to freeVariables(f).
  std::optional<std::vector<std::string>> freeVars;
  std::size_t clauseBudget = 512;
};

/// Normalize a Keisler-normal-form formula into a boolean combination of
/// basic blocks. Throws UnsupportedShape (with the offending subtree) and
/// BudgetExceeded when the DNF outgrows the clause budget.
BlockTree toBlocks(const Formula& f, const BlockOptions& options = {});

}  // namespace pairtopo::formulas
