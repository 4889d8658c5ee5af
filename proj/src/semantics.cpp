#include "kat/semantics.hpp"

#include <algorithm>
#include <stdexcept>

namespace kat {

namespace {

std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

std::size_t GuardedString::hash() const {
  std::size_t h = 0x65a1f;
  for (const auto& s : body_) {
    h = hash_combine(h, s.atom.value);
    h = hash_combine(h, s.letter);
  }
  return hash_combine(h, last_.value);
}

bool atom_satisfies(Atom alpha, const BoolExpr& a) {
  switch (a.kind) {
    case BoolExpr::Kind::Prim:
      return alpha.bit(a.prim);
    case BoolExpr::Kind::And:
      return atom_satisfies(alpha, *a.left) && atom_satisfies(alpha, *a.right);
    case BoolExpr::Kind::Or:
      return atom_satisfies(alpha, *a.left) || atom_satisfies(alpha, *a.right);
    case BoolExpr::Kind::Not:
      return !atom_satisfies(alpha, *a.left);
    case BoolExpr::Kind::Top:
      return true;
    case BoolExpr::Kind::Bot:
      return false;
  }
  return false;
}

std::optional<GuardedString> gs_fuse(const GuardedString& u,
                                     const GuardedString& v) {
  if (u.last() != v.first()) return std::nullopt;
  std::vector<GsStep> body;
  body.reserve(u.body().size() + v.body().size());
  body.insert(body.end(), u.body().begin(), u.body().end());
  body.insert(body.end(), v.body().begin(), v.body().end());
  return GuardedString(std::move(body), v.last());
}

namespace {

using Set = BoundedLanguage::Set;

// Strings bucketed by first atom, each bucket sorted by letter count, so
// fusion partners within a length budget are a contiguous prefix.
struct GsIndex {
  std::vector<std::vector<const GuardedString*>> by_first;

  GsIndex(const Set& strings, std::size_t atom_count) : by_first(atom_count) {
    for (const auto& g : strings) by_first[g.first().value].push_back(&g);
    for (auto& bucket : by_first)
      std::sort(bucket.begin(), bucket.end(),
                [](const GuardedString* a, const GuardedString* b) {
                  return a->letter_count() < b->letter_count();
                });
  }
};

void fuse_against(const GuardedString& u, const GsIndex& idx,
                  std::size_t bound, Set& out) {
  const auto& bucket = idx.by_first[u.last().value];
  for (const GuardedString* v : bucket) {
    if (u.letter_count() + v->letter_count() > bound) break;
    out.insert(*gs_fuse(u, *v));
  }
}

Set all_atoms(const Signature& sig) {
  Set out;
  for (std::uint32_t a = 0; a < sig.atom_count(); ++a)
    out.insert(GuardedString(Atom{a}));
  return out;
}

Set language_set(const Signature& sig, const ExprPtr& x, std::size_t bound) {
  switch (x->kind) {
    case KatExpr::Kind::Zero:
      return {};
    case KatExpr::Kind::One:
      return all_atoms(sig);
    case KatExpr::Kind::Test: {
      Set out;
      for (std::uint32_t a = 0; a < sig.atom_count(); ++a)
        if (atom_satisfies(Atom{a}, *x->test)) out.insert(GuardedString(Atom{a}));
      return out;
    }
    case KatExpr::Kind::Letter: {
      Set out;
      if (bound >= 1)
        for (std::uint32_t a = 0; a < sig.atom_count(); ++a)
          for (std::uint32_t b = 0; b < sig.atom_count(); ++b)
            out.insert(GuardedString({GsStep{Atom{a}, x->letter}}, Atom{b}));
      return out;
    }
    case KatExpr::Kind::Plus: {
      Set out = language_set(sig, x->left, bound);
      Set r = language_set(sig, x->right, bound);
      out.insert(r.begin(), r.end());
      return out;
    }
    case KatExpr::Kind::Dot: {
      Set l = language_set(sig, x->left, bound);
      if (l.empty()) return {};
      Set r = language_set(sig, x->right, bound);
      if (r.empty()) return {};
      GsIndex idx(r, sig.atom_count());
      Set out;
      for (const auto& u : l) fuse_against(u, idx, bound, out);
      return out;
    }
    case KatExpr::Kind::Star: {
      Set base = language_set(sig, x->left, bound);
      GsIndex idx(base, sig.atom_count());
      Set out = all_atoms(sig);
      std::vector<GuardedString> frontier(out.begin(), out.end());
      while (!frontier.empty()) {
        Set produced;
        for (const auto& u : frontier) fuse_against(u, idx, bound, produced);
        frontier.clear();
        for (auto& w : produced)
          if (out.insert(w).second) frontier.push_back(w);
      }
      return out;
    }
  }
  return {};
}

}  // namespace

BoundedLanguage bounded_language(const Signature& sig, const ExprPtr& x,
                                 std::size_t bound) {
  return BoundedLanguage(language_set(sig, x, bound), bound);
}

bool gs_member(const Signature& sig, const GuardedString& u, const ExprPtr& x) {
  return bounded_language(sig, x, u.letter_count()).contains(u);
}

Relation::Relation(std::size_t m) : rows_(m, 0) {
  if (m == 0 || m > 32)
    throw std::invalid_argument("relation state count must be in [1, 32]");
}

Relation Relation::identity(std::size_t m) {
  Relation r(m);
  for (std::size_t i = 0; i < m; ++i) r.set(i, i);
  return r;
}

Relation Relation::compose(const Relation& other) const {
  Relation out(states());
  for (std::size_t i = 0; i < states(); ++i) {
    std::uint32_t row = rows_[i];
    std::uint32_t acc = 0;
    for (std::size_t j = 0; j < states(); ++j)
      if ((row >> j) & 1u) acc |= other.rows_[j];
    out.rows_[i] = acc;
  }
  return out;
}

Relation Relation::unite(const Relation& other) const {
  Relation out(states());
  for (std::size_t i = 0; i < states(); ++i)
    out.rows_[i] = rows_[i] | other.rows_[i];
  return out;
}

Relation Relation::star() const {
  Relation t = unite(identity(states()));
  for (;;) {
    Relation next = t.compose(t);
    if (next == t) return t;
    t = next;
  }
}

namespace {

std::uint32_t eval_bool(const BoolExpr& a, const RelInterp& interp) {
  const std::uint32_t mask =
      interp.state_count == 32 ? ~0u : ((1u << interp.state_count) - 1);
  switch (a.kind) {
    case BoolExpr::Kind::Prim:
      return interp.test_sets.at(a.prim) & mask;
    case BoolExpr::Kind::And:
      return eval_bool(*a.left, interp) & eval_bool(*a.right, interp);
    case BoolExpr::Kind::Or:
      return eval_bool(*a.left, interp) | eval_bool(*a.right, interp);
    case BoolExpr::Kind::Not:
      return ~eval_bool(*a.left, interp) & mask;
    case BoolExpr::Kind::Top:
      return mask;
    case BoolExpr::Kind::Bot:
      return 0;
  }
  return 0;
}

Relation diagonal(std::uint32_t states_mask, std::size_t m) {
  Relation r(m);
  for (std::size_t i = 0; i < m; ++i)
    if ((states_mask >> i) & 1u) r.set(i, i);
  return r;
}

}  // namespace

Relation rel_eval(const ExprPtr& x, const RelInterp& interp) {
  const std::size_t m = interp.state_count;
  switch (x->kind) {
    case KatExpr::Kind::Letter:
      return interp.letter_rels.at(x->letter);
    case KatExpr::Kind::Test:
      return diagonal(eval_bool(*x->test, interp), m);
    case KatExpr::Kind::Dot:
      return rel_eval(x->left, interp).compose(rel_eval(x->right, interp));
    case KatExpr::Kind::Plus:
      return rel_eval(x->left, interp).unite(rel_eval(x->right, interp));
    case KatExpr::Kind::Star:
      return rel_eval(x->left, interp).star();
    case KatExpr::Kind::One:
      return Relation::identity(m);
    case KatExpr::Kind::Zero:
      return Relation(m);
  }
  return Relation(m);
}

}  // namespace kat
