#include "kat/deriv.hpp"

#include <algorithm>

namespace kat {

namespace {

std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

bool expr_less(const ExprPtr& a, const ExprPtr& b) {
  return canonical_compare(*a, *b) < 0;
}

}  // namespace

ExprSet ExprSet::singleton(ExprPtr e) {
  ExprSet s;
  s.hash_ = hash_combine(s.hash_, e->hash);
  s.elems_.push_back(std::move(e));
  return s;
}

ExprSet ExprSet::of(std::vector<ExprPtr> elems) {
  std::sort(elems.begin(), elems.end(), expr_less);
  elems.erase(std::unique(elems.begin(), elems.end(),
                          [](const ExprPtr& a, const ExprPtr& b) {
                            return equal(*a, *b);
                          }),
              elems.end());
  ExprSet s;
  for (const auto& e : elems) s.hash_ = hash_combine(s.hash_, e->hash);
  s.elems_ = std::move(elems);
  return s;
}

ExprSet ExprSet::union_with(const ExprSet& other) const {
  if (empty()) return other;
  if (other.empty()) return *this;
  std::vector<ExprPtr> merged;
  merged.reserve(size() + other.size());
  merged.insert(merged.end(), elems_.begin(), elems_.end());
  merged.insert(merged.end(), other.elems_.begin(), other.elems_.end());
  return of(std::move(merged));
}

ExprSet ExprSet::then(const ExprPtr& y) const {
  std::vector<ExprPtr> mapped;
  mapped.reserve(size());
  for (const auto& e : elems_) mapped.push_back(mk_dot(e, y));
  return of(std::move(mapped));
}

bool operator==(const ExprSet& a, const ExprSet& b) {
  if (a.hash_ != b.hash_ || a.elems_.size() != b.elems_.size()) return false;
  for (std::size_t i = 0; i < a.elems_.size(); ++i)
    if (!equal(*a.elems_[i], *b.elems_[i])) return false;
  return true;
}

bool epsilon(Atom alpha, const ExprPtr& x) {
  switch (x->kind) {
    case KatExpr::Kind::Letter:
      return false;
    case KatExpr::Kind::Test:
      return atom_satisfies(alpha, *x->test);
    case KatExpr::Kind::Dot:
      return epsilon(alpha, x->left) && epsilon(alpha, x->right);
    case KatExpr::Kind::Plus:
      return epsilon(alpha, x->left) || epsilon(alpha, x->right);
    case KatExpr::Kind::Star:
    case KatExpr::Kind::One:
      return true;
    case KatExpr::Kind::Zero:
      return false;
  }
  return false;
}

ExprPtr delta(Atom alpha, std::size_t p, const ExprPtr& x) {
  switch (x->kind) {
    case KatExpr::Kind::Letter:
      return x->letter == p ? mk_one() : mk_zero();
    case KatExpr::Kind::Test:
    case KatExpr::Kind::One:
    case KatExpr::Kind::Zero:
      return mk_zero();
    case KatExpr::Kind::Plus:
      return mk_plus(delta(alpha, p, x->left), delta(alpha, p, x->right));
    case KatExpr::Kind::Dot: {
      ExprPtr head = mk_dot(delta(alpha, p, x->left), x->right);
      if (epsilon(alpha, x->left))
        return mk_plus(std::move(head), delta(alpha, p, x->right));
      return head;
    }
    case KatExpr::Kind::Star:
      return mk_dot(delta(alpha, p, x->left), x);
  }
  return mk_zero();
}

ExprSet pderiv(Atom alpha, std::size_t p, const ExprPtr& x) {
  DerivCache cache;
  return cache.pderiv(alpha, p, x);
}

ExprSet pderiv_set(Atom alpha, std::size_t p, const ExprSet& xs) {
  DerivCache cache;
  return cache.pderiv_set(alpha, p, xs);
}

bool epsilon_set(Atom alpha, const ExprSet& xs) {
  for (const auto& e : xs.elems())
    if (epsilon(alpha, e)) return true;
  return false;
}

std::size_t DerivCache::EpsKeyHash::operator()(const EpsKey& k) const {
  return hash_combine(reinterpret_cast<std::size_t>(k.node), k.atom);
}

std::size_t DerivCache::DerKeyHash::operator()(const DerKey& k) const {
  return hash_combine(hash_combine(reinterpret_cast<std::size_t>(k.node), k.atom),
                      k.letter);
}

bool DerivCache::epsilon(Atom alpha, const ExprPtr& x) {
  switch (x->kind) {
    case KatExpr::Kind::Letter:
    case KatExpr::Kind::Zero:
      return false;
    case KatExpr::Kind::Star:
    case KatExpr::Kind::One:
      return true;
    default:
      break;
  }
  EpsKey key{x.get(), alpha.value};
  if (auto it = eps_.find(key); it != eps_.end()) return it->second;
  bool result;
  switch (x->kind) {
    case KatExpr::Kind::Test:
      result = atom_satisfies(alpha, *x->test);
      break;
    case KatExpr::Kind::Dot:
      result = epsilon(alpha, x->left) && epsilon(alpha, x->right);
      break;
    case KatExpr::Kind::Plus:
      result = epsilon(alpha, x->left) || epsilon(alpha, x->right);
      break;
    default:
      result = false;
      break;
  }
  retained_.push_back(x);
  eps_.emplace(key, result);
  return result;
}

ExprSet DerivCache::pderiv(Atom alpha, std::size_t p, const ExprPtr& x) {
  DerKey key{x.get(), alpha.value, static_cast<std::uint32_t>(p)};
  if (auto it = der_.find(key); it != der_.end()) return it->second;
  ExprSet result;
  switch (x->kind) {
    case KatExpr::Kind::Letter:
      if (x->letter == p) result = ExprSet::singleton(mk_one());
      break;
    case KatExpr::Kind::Test:
    case KatExpr::Kind::One:
    case KatExpr::Kind::Zero:
      break;
    case KatExpr::Kind::Plus:
      result = pderiv(alpha, p, x->left).union_with(pderiv(alpha, p, x->right));
      break;
    case KatExpr::Kind::Dot: {
      result = pderiv(alpha, p, x->left).then(x->right);
      if (epsilon(alpha, x->left))
        result = result.union_with(pderiv(alpha, p, x->right));
      break;
    }
    case KatExpr::Kind::Star:
      result = pderiv(alpha, p, x->left).then(x);
      break;
  }
  retained_.push_back(x);
  der_.emplace(key, result);
  return result;
}

ExprSet DerivCache::pderiv_set(Atom alpha, std::size_t p, const ExprSet& xs) {
  ExprSet out;
  for (const auto& e : xs.elems()) out = out.union_with(pderiv(alpha, p, e));
  return out;
}

bool DerivCache::epsilon_set(Atom alpha, const ExprSet& xs) {
  for (const auto& e : xs.elems())
    if (epsilon(alpha, e)) return true;
  return false;
}

}  // namespace kat
