#include "kat/whilelang.hpp"

namespace kat {

namespace {

ProgPtr make_prog(Prog::Kind kind, std::size_t letter, BoolPtr cond, ProgPtr l,
                  ProgPtr r) {
  auto node = std::make_shared<Prog>();
  node->kind = kind;
  node->letter = letter;
  node->cond = std::move(cond);
  node->left = std::move(l);
  node->right = std::move(r);
  return node;
}

}  // namespace

ProgPtr p_skip() {
  static const ProgPtr skp =
      make_prog(Prog::Kind::Skp, 0, nullptr, nullptr, nullptr);
  return skp;
}
ProgPtr p_act(std::size_t letter) {
  return make_prog(Prog::Kind::Act, letter, nullptr, nullptr, nullptr);
}
ProgPtr p_seq(ProgPtr a, ProgPtr b) {
  return make_prog(Prog::Kind::Seq, 0, nullptr, std::move(a), std::move(b));
}
ProgPtr p_ite(BoolPtr cond, ProgPtr then_branch, ProgPtr else_branch) {
  return make_prog(Prog::Kind::Ite, 0, std::move(cond), std::move(then_branch),
                   std::move(else_branch));
}
ProgPtr p_whl(BoolPtr cond, ProgPtr body) {
  return make_prog(Prog::Kind::Whl, 0, std::move(cond), std::move(body),
                   nullptr);
}

bool prog_equal(const Prog& a, const Prog& b) {
  if (&a == &b) return true;
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Prog::Kind::Skp:
      return true;
    case Prog::Kind::Act:
      return a.letter == b.letter;
    case Prog::Kind::Seq:
      return prog_equal(*a.left, *b.left) && prog_equal(*a.right, *b.right);
    case Prog::Kind::Ite:
      return equal(*a.cond, *b.cond) && prog_equal(*a.left, *b.left) &&
             prog_equal(*a.right, *b.right);
    case Prog::Kind::Whl:
      return equal(*a.cond, *b.cond) && prog_equal(*a.left, *b.left);
  }
  return false;
}

ExprPtr embed(const ProgPtr& p) {
  switch (p->kind) {
    case Prog::Kind::Skp:
      return mk_one();
    case Prog::Kind::Act:
      return mk_letter(p->letter);
    case Prog::Kind::Seq:
      return mk_dot(embed(p->left), embed(p->right));
    case Prog::Kind::Ite:
      return mk_plus(mk_dot(mk_test(p->cond), embed(p->left)),
                     mk_dot(mk_test(mk_not(p->cond)), embed(p->right)));
    case Prog::Kind::Whl:
      return mk_dot(mk_star(mk_dot(mk_test(p->cond), embed(p->left))),
                    mk_test(mk_not(p->cond)));
  }
  return mk_zero();
}

HkatResult prog_equiv(const Signature& sig, const ProgPtr& p, const ProgPtr& q,
                      std::span<const Equation> hyps,
                      const CheckOptions& opts) {
  return hkat_check(sig, Equation{embed(p), embed(q), EqRel::Eq}, hyps, opts);
}

Equation hoare_encode(const HoareTriple& t) {
  ExprPtr lhs = mk_dot(mk_test(t.pre),
                       mk_dot(embed(t.prog), mk_test(mk_not(t.post))));
  return {std::move(lhs), mk_zero(), EqRel::Eq};
}

HkatResult hoare_check(const Signature& sig,
                       std::span<const HoareTriple> premises,
                       std::span<const Equation> extra_hyps,
                       const HoareTriple& goal, const CheckOptions& opts) {
  std::vector<Equation> hyps;
  hyps.reserve(premises.size() + extra_hyps.size());
  for (const auto& t : premises) hyps.push_back(hoare_encode(t));
  hyps.insert(hyps.end(), extra_hyps.begin(), extra_hyps.end());
  return hkat_check(sig, hoare_encode(goal), hyps, opts);
}

}  // namespace kat
