#pragma once

#include <unordered_map>
#include <vector>

#include "kat/semantics.hpp"
#include "kat/syntax.hpp"

namespace kat {

/// Canonical finite set of expressions: duplicate-free, sorted by
/// canonical_compare. Denotes the sum of its elements; one such set is one
/// state of the nondeterministic derivative structure.
class ExprSet {
 public:
  ExprSet() = default;

  static ExprSet singleton(ExprPtr e);
  static ExprSet of(std::vector<ExprPtr> elems);

  const std::vector<ExprPtr>& elems() const { return elems_; }
  bool empty() const { return elems_.empty(); }
  std::size_t size() const { return elems_.size(); }
  std::size_t hash() const { return hash_; }

  ExprSet union_with(const ExprSet& other) const;
  /// {x·y | x in this}, built with mk_dot and re-canonicalised.
  ExprSet then(const ExprPtr& y) const;

  friend bool operator==(const ExprSet& a, const ExprSet& b);

 private:
  std::vector<ExprPtr> elems_;
  std::size_t hash_ = 0x6b5e3;
};

/// Whether `x` accepts the single-atom string `alpha`.
bool epsilon(Atom alpha, const ExprPtr& x);

/// Full derivative: what remains of `x` after reading atom `alpha` and
/// letter `p`, as a single expression built with the smart constructors.
ExprPtr delta(Atom alpha, std::size_t p, const ExprPtr& x);

/// Partial derivative: the residuals of `x` after (alpha, p), as a set.
ExprSet pderiv(Atom alpha, std::size_t p, const ExprPtr& x);

ExprSet pderiv_set(Atom alpha, std::size_t p, const ExprSet& xs);
bool epsilon_set(Atom alpha, const ExprSet& xs);

/// Memoising wrapper around epsilon/pderiv, keyed on node identity. One
/// instance serves one decision run; it owns nothing shared.
class DerivCache {
 public:
  bool epsilon(Atom alpha, const ExprPtr& x);
  ExprSet pderiv(Atom alpha, std::size_t p, const ExprPtr& x);
  ExprSet pderiv_set(Atom alpha, std::size_t p, const ExprSet& xs);
  bool epsilon_set(Atom alpha, const ExprSet& xs);

 private:
  struct EpsKey {
    const KatExpr* node;
    std::uint32_t atom;
    friend bool operator==(const EpsKey&, const EpsKey&) = default;
  };
  struct DerKey {
    const KatExpr* node;
    std::uint32_t atom;
    std::uint32_t letter;
    friend bool operator==(const DerKey&, const DerKey&) = default;
  };
  struct EpsKeyHash {
    std::size_t operator()(const EpsKey& k) const;
  };
  struct DerKeyHash {
    std::size_t operator()(const DerKey& k) const;
  };

  std::unordered_map<EpsKey, bool, EpsKeyHash> eps_;
  std::unordered_map<DerKey, ExprSet, DerKeyHash> der_;
  std::vector<ExprPtr> retained_;  // keeps key nodes alive
};

}  // namespace kat
