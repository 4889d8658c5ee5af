#include "kat/syntax.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace kat {

namespace {

std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Signature::Signature(std::vector<std::string> tests,
                     std::vector<std::string> letters, std::size_t atom_limit)
    : tests_(std::move(tests)), letters_(std::move(letters)) {
  if (tests_.size() > atom_limit)
    throw std::invalid_argument("signature declares " +
                                std::to_string(tests_.size()) +
                                " tests, exceeding the atom limit of " +
                                std::to_string(atom_limit));
  std::unordered_set<std::string_view> seen;
  for (const auto& n : tests_)
    if (n.empty() || !seen.insert(n).second)
      throw std::invalid_argument("duplicate or empty identifier '" + n +
                                  "' in signature");
  for (const auto& n : letters_)
    if (n.empty() || !seen.insert(n).second)
      throw std::invalid_argument("duplicate or empty identifier '" + n +
                                  "' in signature");
}

std::optional<std::size_t> Signature::find_test(std::string_view name) const {
  for (std::size_t i = 0; i < tests_.size(); ++i)
    if (tests_[i] == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> Signature::find_letter(std::string_view name) const {
  for (std::size_t i = 0; i < letters_.size(); ++i)
    if (letters_[i] == name) return i;
  return std::nullopt;
}

namespace {

BoolPtr make_bool(BoolExpr::Kind kind, std::size_t prim, BoolPtr l, BoolPtr r) {
  auto node = std::make_shared<BoolExpr>();
  node->kind = kind;
  node->prim = prim;
  node->left = std::move(l);
  node->right = std::move(r);
  std::size_t h = hash_combine(0x5b001, static_cast<std::size_t>(kind));
  h = hash_combine(h, prim);
  if (node->left) h = hash_combine(h, node->left->hash);
  if (node->right) h = hash_combine(h, node->right->hash);
  node->hash = h;
  return node;
}

}  // namespace

BoolPtr mk_prim(std::size_t index) {
  return make_bool(BoolExpr::Kind::Prim, index, nullptr, nullptr);
}
BoolPtr mk_and(BoolPtr a, BoolPtr b) {
  return make_bool(BoolExpr::Kind::And, 0, std::move(a), std::move(b));
}
BoolPtr mk_or(BoolPtr a, BoolPtr b) {
  return make_bool(BoolExpr::Kind::Or, 0, std::move(a), std::move(b));
}
BoolPtr mk_not(BoolPtr a) {
  return make_bool(BoolExpr::Kind::Not, 0, std::move(a), nullptr);
}
BoolPtr mk_top() {
  static const BoolPtr top = make_bool(BoolExpr::Kind::Top, 0, nullptr, nullptr);
  return top;
}
BoolPtr mk_bot() {
  static const BoolPtr bot = make_bool(BoolExpr::Kind::Bot, 0, nullptr, nullptr);
  return bot;
}

std::strong_ordering canonical_compare(const BoolExpr& a, const BoolExpr& b) {
  if (&a == &b) return std::strong_ordering::equal;
  if (a.kind != b.kind) return a.kind <=> b.kind;
  switch (a.kind) {
    case BoolExpr::Kind::Prim:
      return a.prim <=> b.prim;
    case BoolExpr::Kind::And:
    case BoolExpr::Kind::Or: {
      auto c = canonical_compare(*a.left, *b.left);
      return c != 0 ? c : canonical_compare(*a.right, *b.right);
    }
    case BoolExpr::Kind::Not:
      return canonical_compare(*a.left, *b.left);
    case BoolExpr::Kind::Top:
    case BoolExpr::Kind::Bot:
      return std::strong_ordering::equal;
  }
  return std::strong_ordering::equal;
}

bool equal(const BoolExpr& a, const BoolExpr& b) {
  if (&a == &b) return true;
  if (a.hash != b.hash) return false;
  return canonical_compare(a, b) == 0;
}

namespace {

ExprPtr make_expr(KatExpr::Kind kind, std::size_t letter, BoolPtr test,
                  ExprPtr l, ExprPtr r) {
  auto node = std::make_shared<KatExpr>();
  node->kind = kind;
  node->letter = letter;
  node->test = std::move(test);
  node->left = std::move(l);
  node->right = std::move(r);
  std::size_t h = hash_combine(0x7ca70, static_cast<std::size_t>(kind));
  h = hash_combine(h, letter);
  if (node->test) h = hash_combine(h, node->test->hash);
  if (node->left) h = hash_combine(h, node->left->hash);
  if (node->right) h = hash_combine(h, node->right->hash);
  node->hash = h;
  return node;
}

}  // namespace

ExprPtr mk_letter(std::size_t index) {
  return make_expr(KatExpr::Kind::Letter, index, nullptr, nullptr, nullptr);
}

ExprPtr mk_test(BoolPtr a) {
  return make_expr(KatExpr::Kind::Test, 0, std::move(a), nullptr, nullptr);
}

ExprPtr mk_one() {
  static const ExprPtr one =
      make_expr(KatExpr::Kind::One, 0, nullptr, nullptr, nullptr);
  return one;
}

ExprPtr mk_zero() {
  static const ExprPtr zero =
      make_expr(KatExpr::Kind::Zero, 0, nullptr, nullptr, nullptr);
  return zero;
}

ExprPtr mk_dot(ExprPtr x, ExprPtr y) {
  if (x->kind == KatExpr::Kind::Zero || y->kind == KatExpr::Kind::Zero)
    return mk_zero();
  if (x->kind == KatExpr::Kind::One) return y;
  if (y->kind == KatExpr::Kind::One) return x;
  if (x->kind == KatExpr::Kind::Dot)
    return mk_dot(x->left, mk_dot(x->right, std::move(y)));
  return make_expr(KatExpr::Kind::Dot, 0, nullptr, std::move(x), std::move(y));
}

ExprPtr mk_plus(ExprPtr x, ExprPtr y) {
  if (x->kind == KatExpr::Kind::Zero) return y;
  if (y->kind == KatExpr::Kind::Zero) return x;
  if (x->kind == KatExpr::Kind::Plus)
    return mk_plus(x->left, mk_plus(x->right, std::move(y)));
  return make_expr(KatExpr::Kind::Plus, 0, nullptr, std::move(x), std::move(y));
}

ExprPtr mk_star(ExprPtr x) {
  if (x->kind == KatExpr::Kind::Zero || x->kind == KatExpr::Kind::One)
    return mk_one();
  return make_expr(KatExpr::Kind::Star, 0, nullptr, std::move(x), nullptr);
}

std::strong_ordering canonical_compare(const KatExpr& a, const KatExpr& b) {
  if (&a == &b) return std::strong_ordering::equal;
  if (a.kind != b.kind) return a.kind <=> b.kind;
  switch (a.kind) {
    case KatExpr::Kind::Letter:
      return a.letter <=> b.letter;
    case KatExpr::Kind::Test:
      return canonical_compare(*a.test, *b.test);
    case KatExpr::Kind::Dot:
    case KatExpr::Kind::Plus: {
      auto c = canonical_compare(*a.left, *b.left);
      return c != 0 ? c : canonical_compare(*a.right, *b.right);
    }
    case KatExpr::Kind::Star:
      return canonical_compare(*a.left, *b.left);
    case KatExpr::Kind::One:
    case KatExpr::Kind::Zero:
      return std::strong_ordering::equal;
  }
  return std::strong_ordering::equal;
}

bool equal(const KatExpr& a, const KatExpr& b) {
  if (&a == &b) return true;
  if (a.hash != b.hash) return false;
  return canonical_compare(a, b) == 0;
}

bool well_formed(const BoolExpr& a, const Signature& sig) {
  switch (a.kind) {
    case BoolExpr::Kind::Prim:
      return a.prim < sig.test_count();
    case BoolExpr::Kind::And:
    case BoolExpr::Kind::Or:
      return well_formed(*a.left, sig) && well_formed(*a.right, sig);
    case BoolExpr::Kind::Not:
      return well_formed(*a.left, sig);
    default:
      return true;
  }
}

bool well_formed(const KatExpr& e, const Signature& sig) {
  switch (e.kind) {
    case KatExpr::Kind::Letter:
      return e.letter < sig.letter_count();
    case KatExpr::Kind::Test:
      return well_formed(*e.test, sig);
    case KatExpr::Kind::Dot:
    case KatExpr::Kind::Plus:
      return well_formed(*e.left, sig) && well_formed(*e.right, sig);
    case KatExpr::Kind::Star:
      return well_formed(*e.left, sig);
    default:
      return true;
  }
}

}  // namespace kat
