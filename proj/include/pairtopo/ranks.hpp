#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pairtopo/pairsets.hpp"

namespace pairtopo::ranks {

using pairsets::Constructible;
using pairsets::Point;

/// omega * omegaCoeff + finitePart.
struct OrdinalRank {
  unsigned long omegaCoeff = 0;
  unsigned long finitePart = 0;

  friend auto operator<=>(const OrdinalRank&, const OrdinalRank&) = default;
  std::string toString() const;
};

/// Pregeometry dimension of a over A for the small closure.
std::size_t smallRank(const std::vector<OmegaElement>& a, const std::vector<OmegaElement>& A = {});

/// omega * rk(a/A) + trdeg increment, exactly as the stated formula.
OrdinalRank pointMR(const std::vector<OmegaElement>& a, const std::vector<OmegaElement>& A = {});

enum class Tri { False, True, Unknown };

struct InteriorResult {
  Tri answer = Tri::Unknown;
  std::optional<Point> witness;
  std::string reason;
};

InteriorResult hasNonemptyInterior(const Constructible& x, const pairsets::SampleOptions& options = {});

struct CatalogId {
  enum class Kind { KPower, OmegaPower, Span, FiniteSet, KPlusKAlpha };
  Kind kind = Kind::KPower;
  std::size_t n = 1;
};

OrdinalRank mrCatalog(const CatalogId& id);

/// Catalog shape of x, if recognised.
std::optional<CatalogId> recognizeCatalog(const Constructible& x);

struct SdimReport {
  std::optional<std::size_t> lower;  // none when no point of x was found
  std::size_t upper = 0;
  std::optional<Point> witness;       // point of x realising the lower bound
  std::vector<std::size_t> projection;  // 1-based coordinates independent at the witness
  std::vector<std::string> notes;

  bool exact() const { return lower && *lower == upper; }
};

/// Lower bound: small rank of a sampled point of x over x's parameters, whose
/// independent coordinates give a projection with a generic image point.
/// Upper bounds: n; n - 1 when x lies in a proper closed set; n - |S| when
/// every point has the coordinates in S inside proper closed subsets of Omega.
SdimReport sdim(const Constructible& x, const pairsets::SampleOptions& options = {});

struct MrReport {
  std::optional<OrdinalRank> exact;
  OrdinalRank lower;
  OrdinalRank upper;
  bool strictUpper = false;  // upper is not attained: MR < upper
  std::string reason;
};

MrReport mrBounds(const Constructible& x, const pairsets::SampleOptions& options = {});

/// RankReport JSON.
std::string reportJson(const SdimReport& s, const MrReport& m, int indent = -1);

}  // namespace pairtopo::ranks
