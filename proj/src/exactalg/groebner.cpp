#include "pairtopo/groebner.hpp"

#include <algorithm>
#include <set>

namespace pairtopo {

namespace {

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::uint64_t sugar;
};

std::vector<std::string> unionVars(const std::vector<RatPoly>& gens) {
  std::vector<std::string> vars;
  for (const auto& g : gens)
    for (const auto& v : g.usedVars())
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  return vars;
}

RatPoly sPolynomial(const RatPoly& f, const RatPoly& g, const Monomial& lcm) {
  const auto& lf = f.leadingTerm();
  const auto& lg = g.leadingTerm();
  return f.mulTerm(monomialQuotient(lcm, lf.mono), lf.coeff.inverse()) -
         g.mulTerm(monomialQuotient(lcm, lg.mono), lg.coeff.inverse());
}

class Buchberger {
 public:
  Buchberger(TermOrder order, std::vector<std::string> vars, const GroebnerOptions& options)
      : order_(order), vars_(std::move(vars)), options_(options) {}

  std::vector<RatPoly> run(const std::vector<RatPoly>& gens) {
    for (const auto& g : gens) {
      RatPoly p = g.withVars(vars_).withOrder(order_);
      if (p.isZero()) continue;
      if (p.isConstant()) return {unit()};
      add(makeMonic(p), static_cast<std::uint64_t>(p.totalDegree()));
    }
    while (!queue_.empty()) {
      auto it = std::min_element(queue_.begin(), queue_.end(), [this](const auto& a, const auto& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        int c = compareMonomials(a.lcm, b.lcm, order_);
        if (c != 0) return c < 0;
        return std::pair(a.i, a.j) < std::pair(b.i, b.j);
      });
      CriticalPair cp = *it;
      queue_.erase(it);
      inQueue_.erase({cp.i, cp.j});

      const auto& f = basis_[cp.i];
      const auto& g = basis_[cp.j];
      if (monomialsCoprime(f.leadingMonomial(), g.leadingMonomial())) continue;
      if (chainCriterion(cp)) continue;

      if (++steps_ > options_.stepBudget)
        throw BudgetExceeded("Groebner step budget of " + std::to_string(options_.stepBudget) +
                             " S-polynomial reductions exceeded");
      RatPoly h = normalForm(sPolynomial(f, g, cp.lcm), basis_);
      if (h.isZero()) continue;
      if (h.isConstant()) return {unit()};
      add(makeMonic(h), cp.sugar);
    }
    return reduce();
  }

 private:
  RatPoly unit() const { return RatPoly::constant(Rat(1), vars_, order_); }

  void add(RatPoly p, std::uint64_t sugar) {
    std::size_t k = basis_.size();
    for (std::size_t i = 0; i < k; ++i) {
      Monomial l = monomialLcm(basis_[i].leadingMonomial(), p.leadingMonomial());
      std::uint64_t dl = monomialDegree(l);
      std::uint64_t s = std::max(sugar_[i] + dl - monomialDegree(basis_[i].leadingMonomial()),
                                 sugar + dl - monomialDegree(p.leadingMonomial()));
      queue_.push_back({i, k, std::move(l), s});
      inQueue_.insert({i, k});
    }
    basis_.push_back(std::move(p));
    sugar_.push_back(sugar);
  }

  bool pending(std::size_t a, std::size_t b) const {
    return inQueue_.count({std::min(a, b), std::max(a, b)}) > 0;
  }

  // Buchberger's second criterion: some lt(g_k) divides lcm and both
  // companion pairs have already been treated.
  bool chainCriterion(const CriticalPair& cp) const {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (k == cp.i || k == cp.j) continue;
      if (!monomialDivides(basis_[k].leadingMonomial(), cp.lcm)) continue;
      if (!pending(cp.i, k) && !pending(cp.j, k)) return true;
    }
    return false;
  }

  std::vector<RatPoly> reduce() const {
    std::vector<RatPoly> minimal;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
        if (i == j) continue;
        const auto& mi = basis_[i].leadingMonomial();
        const auto& mj = basis_[j].leadingMonomial();
        if (monomialDivides(mj, mi) && (mi != mj || j < i)) redundant = true;
      }
      if (!redundant) minimal.push_back(basis_[i]);
    }
    std::vector<RatPoly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<RatPoly> others;
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      reduced.push_back(makeMonic(normalForm(minimal[i], others)));
    }
    std::sort(reduced.begin(), reduced.end(), [this](const RatPoly& a, const RatPoly& b) {
      return compareMonomials(a.leadingMonomial(), b.leadingMonomial(), order_) < 0;
    });
    return reduced;
  }

  TermOrder order_;
  std::vector<std::string> vars_;
  GroebnerOptions options_;
  std::vector<RatPoly> basis_;
  std::vector<std::uint64_t> sugar_;
  std::vector<CriticalPair> queue_;
  std::set<std::pair<std::size_t, std::size_t>> inQueue_;
  std::size_t steps_ = 0;
};

}  // namespace

RatPoly normalForm(const RatPoly& p0, const std::vector<RatPoly>& basis) {
  if (basis.empty() || p0.isZero()) return p0;
  RatPoly p = p0.withVars(basis.front().vars()).withOrder(basis.front().order());
  std::vector<RatPoly::Term> rem;
  while (!p.isZero()) {
    const auto lt = p.leadingTerm();
    const RatPoly* div = nullptr;
    for (const auto& g : basis) {
      if (!g.isZero() && monomialDivides(g.leadingMonomial(), lt.mono)) {
        div = &g;
        break;
      }
    }
    if (div) {
      p = p - div->mulTerm(monomialQuotient(lt.mono, div->leadingMonomial()),
                           lt.coeff / div->leadingCoeff());
    } else {
      rem.push_back(lt);
      p = p - RatPoly(p.vars(), {lt}, p.order());
    }
  }
  return RatPoly(p.vars(), std::move(rem), p.order());
}

std::vector<RatPoly> groebner(const std::vector<RatPoly>& gens, TermOrder order,
                              const std::vector<std::string>& vars, const GroebnerOptions& options) {
  std::vector<std::string> v = vars.empty() ? unionVars(gens) : vars;
  return Buchberger(order, std::move(v), options).run(gens);
}

Ideal::Ideal(std::vector<RatPoly> generators)
    : gens_(std::move(generators)), cache_(std::make_shared<Cache>()) {}

std::vector<RatPoly> Ideal::groebnerBasis(TermOrder order, const GroebnerOptions& options) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (cache_->order != order) {
    cache_->basis = groebner(gens_, order, {}, options);
    cache_->order = order;
  }
  return cache_->basis;
}

bool Ideal::isUnit(const GroebnerOptions& options) const {
  auto gb = groebnerBasis(TermOrder::GrevLex, options);
  return gb.size() == 1 && gb[0].isConstant() && !gb[0].isZero();
}

bool Ideal::contains(const RatPoly& p, const GroebnerOptions& options) const {
  if (p.isZero()) return true;
  std::vector<RatPoly> gens = gens_;
  // The basis ring must include p's variables for the reduction to be valid.
  RatPoly probe = p;
  for (auto& g : gens) std::tie(g, probe) = RatPoly::unify(g, probe);
  auto gb = groebner(gens, TermOrder::GrevLex, probe.vars(), options);
  if (gb.empty()) return false;
  return normalForm(probe, gb).isZero();
}

bool Ideal::isZero() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const RatPoly& g) { return g.isZero(); });
}

Ideal elimIdeal(const Ideal& ideal, const std::vector<std::string>& keep, const GroebnerOptions& options) {
  std::vector<std::string> vars = unionVars(ideal.generators());
  std::vector<std::string> ordered;
  for (const auto& v : vars)
    if (std::find(keep.begin(), keep.end(), v) == keep.end()) ordered.push_back(v);
  std::size_t eliminated = ordered.size();
  for (const auto& v : keep) ordered.push_back(v);
  auto gb = groebner(ideal.generators(), TermOrder::Lex, ordered, options);
  std::vector<RatPoly> out;
  for (const auto& g : gb) {
    bool free = true;
    for (std::size_t i = 0; i < eliminated && free; ++i) free = !g.involves(i);
    if (free) out.push_back(g.withVars(keep).withOrder(TermOrder::GrevLex));
  }
  return Ideal(std::move(out));
}

bool saturateDecide(const std::vector<RatPoly>& eqs, const RatPoly& neq, const GroebnerOptions& options) {
  if (neq.isZero()) return false;
  std::vector<RatPoly> gens = eqs;
  gens.push_back(neq);
  std::vector<std::string> vars = unionVars(gens);
  std::string fresh = "_z";
  while (std::find(vars.begin(), vars.end(), fresh) != vars.end()) fresh += "_";
  vars.push_back(fresh);
  gens.back() = RatPoly::variable(fresh, vars) * neq.withVars(vars) - RatPoly::constant(Rat(1), vars);
  auto gb = groebner(gens, TermOrder::GrevLex, vars, options);
  return !(gb.size() == 1 && gb[0].isConstant());
}

}  // namespace pairtopo
