#include "kat/hyp.hpp"

#include <optional>
#include <stdexcept>

namespace kat {

namespace {

bool is_zero(const ExprPtr& e) { return e->kind == KatExpr::Kind::Zero; }

// Test embedding, widened: 1 and 0 read as the constant tests.
std::optional<BoolPtr> as_test(const ExprPtr& e) {
  switch (e->kind) {
    case KatExpr::Kind::Test:
      return e->test;
    case KatExpr::Kind::One:
      return mk_top();
    case KatExpr::Kind::Zero:
      return mk_bot();
    default:
      return std::nullopt;
  }
}

// Factors of the right-nested product spine; 1 has no factors.
std::vector<ExprPtr> dot_factors(const ExprPtr& e) {
  std::vector<ExprPtr> out;
  if (e->kind == KatExpr::Kind::One) return out;
  ExprPtr cur = e;
  while (cur->kind == KatExpr::Kind::Dot) {
    out.push_back(cur->left);
    cur = cur->right;
  }
  out.push_back(cur);
  return out;
}

ExprPtr dot_of(std::span<const ExprPtr> factors) {
  ExprPtr acc = mk_one();
  for (auto it = factors.rbegin(); it != factors.rend(); ++it)
    acc = mk_dot(*it, acc);
  return acc;
}

// [a]x with x nonempty: (guard, x).
std::optional<std::pair<BoolPtr, ExprPtr>> split_leading_test(const ExprPtr& e) {
  auto fs = dot_factors(e);
  if (fs.size() < 2 || fs.front()->kind != KatExpr::Kind::Test)
    return std::nullopt;
  return std::pair{fs.front()->test,
                   dot_of(std::span(fs).subspan(1))};
}

// x[b] with x nonempty: (x, guard).
std::optional<std::pair<ExprPtr, BoolPtr>> split_trailing_test(const ExprPtr& e) {
  auto fs = dot_factors(e);
  if (fs.size() < 2 || fs.back()->kind != KatExpr::Kind::Test)
    return std::nullopt;
  return std::pair{dot_of(std::span(fs).first(fs.size() - 1)),
                   fs.back()->test};
}

std::optional<LetterAbsorb> match_letter_absorb(const ExprPtr& l,
                                                const ExprPtr& r) {
  auto guard = as_test(r);
  if (!guard) return std::nullopt;
  auto fs = dot_factors(l);
  if (fs.size() != 2) return std::nullopt;
  if (fs[0]->kind == KatExpr::Kind::Test &&
      fs[1]->kind == KatExpr::Kind::Letter && equal(*fs[0]->test, **guard))
    return LetterAbsorb{*guard, fs[1]->letter, AbsorbSide::Left};
  if (fs[0]->kind == KatExpr::Kind::Letter &&
      fs[1]->kind == KatExpr::Kind::Test && equal(*fs[1]->test, **guard))
    return LetterAbsorb{*guard, fs[0]->letter, AbsorbSide::Right};
  return std::nullopt;
}

std::optional<GuardCommute> match_guard_commute(const ExprPtr& l,
                                                const ExprPtr& r,
                                                CommuteVariant variant) {
  auto lead = split_leading_test(l);
  auto trail = split_trailing_test(r);
  if (!lead || !trail || !equal(*lead->second, *trail->first))
    return std::nullopt;
  return GuardCommute{lead->first, lead->second, trail->second, variant};
}

}  // namespace

Hypothesis classify(const Equation& e) {
  if (e.rel == EqRel::Eq) {
    if (is_zero(e.rhs)) return HoareZero{e.lhs};
    if (is_zero(e.lhs)) return HoareZero{e.rhs};
    auto ta = as_test(e.lhs);
    auto tb = as_test(e.rhs);
    if (ta && tb) return BoolRel{*ta, *tb, BoolVariant::Eq};
    if (auto la = match_letter_absorb(e.lhs, e.rhs)) return *la;
    if (auto la = match_letter_absorb(e.rhs, e.lhs)) return *la;
    if (auto gc = match_guard_commute(e.lhs, e.rhs, CommuteVariant::Eq))
      return *gc;
    if (auto gc = match_guard_commute(e.rhs, e.lhs, CommuteVariant::Eq))
      return *gc;
    return Unsupported{e};
  }

  // lhs <= rhs
  if (is_zero(e.rhs)) return HoareZero{e.lhs};
  auto ta = as_test(e.lhs);
  auto tb = as_test(e.rhs);
  if (ta && tb) return BoolRel{*ta, *tb, BoolVariant::Le};
  if (auto gc = match_guard_commute(e.lhs, e.rhs, CommuteVariant::Le))
    return *gc;
  if (auto gc = match_guard_commute(e.rhs, e.lhs, CommuteVariant::Ge))
    return *gc;
  if (auto lead = split_leading_test(e.rhs))
    if (equal(*lead->second, *e.lhs))
      return GuardAbsorb{e.lhs, lead->first, AbsorbSide::Left};
  if (auto trail = split_trailing_test(e.rhs))
    if (equal(*trail->first, *e.lhs))
      return GuardAbsorb{e.lhs, trail->second, AbsorbSide::Right};
  return Unsupported{e};
}

Equation render(const Hypothesis& h) {
  struct Renderer {
    Equation operator()(const HoareZero& s) const {
      return {s.z, mk_zero(), EqRel::Eq};
    }
    Equation operator()(const GuardCommute& s) const {
      ExprPtr ax = mk_dot(mk_test(s.a), s.x);
      ExprPtr xb = mk_dot(s.x, mk_test(s.b));
      switch (s.variant) {
        case CommuteVariant::Eq:
          return {ax, xb, EqRel::Eq};
        case CommuteVariant::Le:
          return {ax, xb, EqRel::Le};
        case CommuteVariant::Ge:
          return {xb, ax, EqRel::Le};
      }
      return {ax, xb, EqRel::Eq};
    }
    Equation operator()(const GuardAbsorb& s) const {
      ExprPtr guarded = s.side == AbsorbSide::Left
                            ? mk_dot(mk_test(s.a), s.x)
                            : mk_dot(s.x, mk_test(s.a));
      return {s.x, guarded, EqRel::Le};
    }
    Equation operator()(const BoolRel& s) const {
      return {mk_test(s.a), mk_test(s.b),
              s.variant == BoolVariant::Eq ? EqRel::Eq : EqRel::Le};
    }
    Equation operator()(const LetterAbsorb& s) const {
      ExprPtr p = mk_letter(s.letter);
      ExprPtr guarded = s.side == AbsorbSide::Left
                            ? mk_dot(mk_test(s.a), p)
                            : mk_dot(p, mk_test(s.a));
      return {guarded, mk_test(s.a), EqRel::Eq};
    }
    Equation operator()(const Unsupported& s) const { return s.original; }
  };
  return std::visit(Renderer{}, h);
}

std::vector<ExprPtr> to_hoare(const Hypothesis& h) {
  struct ToHoare {
    std::vector<ExprPtr> operator()(const HoareZero& s) const { return {s.z}; }
    std::vector<ExprPtr> operator()(const GuardCommute& s) const {
      ExprPtr fwd = mk_dot(mk_test(s.a), mk_dot(s.x, mk_test(mk_not(s.b))));
      ExprPtr bwd = mk_dot(mk_test(mk_not(s.a)), mk_dot(s.x, mk_test(s.b)));
      switch (s.variant) {
        case CommuteVariant::Le:
          return {fwd};
        case CommuteVariant::Ge:
          return {bwd};
        case CommuteVariant::Eq:
          return {fwd, bwd};
      }
      return {};
    }
    std::vector<ExprPtr> operator()(const GuardAbsorb& s) const {
      if (s.side == AbsorbSide::Left)
        return {mk_dot(mk_test(mk_not(s.a)), s.x)};
      return {mk_dot(s.x, mk_test(mk_not(s.a)))};
    }
    std::vector<ExprPtr> operator()(const BoolRel& s) const {
      ExprPtr fwd = mk_dot(mk_test(s.a), mk_test(mk_not(s.b)));
      if (s.variant == BoolVariant::Le) return {fwd};
      return {fwd, mk_dot(mk_test(mk_not(s.a)), mk_test(s.b))};
    }
    std::vector<ExprPtr> operator()(const LetterAbsorb&) const {
      throw std::invalid_argument(
          "letter-absorption hypotheses are handled by substitution, not "
          "Hoare elimination");
    }
    std::vector<ExprPtr> operator()(const Unsupported&) const {
      throw std::invalid_argument("unsupported hypothesis has no Hoare form");
    }
  };
  return std::visit(ToHoare{}, h);
}

ExprPtr aggregate(std::span<const ExprPtr> zs) {
  ExprPtr acc = mk_zero();
  for (const auto& z : zs) acc = mk_plus(acc, z);
  return acc;
}

ExprPtr universal(const Signature& sig) {
  ExprPtr sum = mk_zero();
  for (std::size_t p = 0; p < sig.letter_count(); ++p)
    sum = mk_plus(sum, mk_letter(p));
  return mk_star(sum);
}

Equation eliminate_hoare(const Signature& sig, Equation goal,
                         const ExprPtr& z) {
  if (goal.rel == EqRel::Le)
    goal = {mk_plus(goal.lhs, goal.rhs), goal.rhs, EqRel::Eq};
  ExprPtr u = universal(sig);
  ExprPtr uzu = mk_dot(u, mk_dot(z, u));
  return {mk_plus(goal.lhs, uzu), mk_plus(goal.rhs, uzu), EqRel::Eq};
}

ExprPtr substitute_letter(const ExprPtr& e, const LetterAbsorb& h) {
  switch (e->kind) {
    case KatExpr::Kind::Letter: {
      if (e->letter != h.letter) return e;
      ExprPtr p = mk_letter(h.letter);
      ExprPtr guarded = h.side == AbsorbSide::Left
                            ? mk_dot(mk_test(mk_not(h.a)), p)
                            : mk_dot(p, mk_test(mk_not(h.a)));
      return mk_plus(std::move(guarded), mk_test(h.a));
    }
    case KatExpr::Kind::Dot:
      return mk_dot(substitute_letter(e->left, h), substitute_letter(e->right, h));
    case KatExpr::Kind::Plus:
      return mk_plus(substitute_letter(e->left, h),
                     substitute_letter(e->right, h));
    case KatExpr::Kind::Star:
      return mk_star(substitute_letter(e->left, h));
    default:
      return e;
  }
}

HkatPreprocessed hkat_preprocess(const Signature& sig, Equation goal,
                                 std::span<const Equation> hyps) {
  std::vector<LetterAbsorb> substitutions;
  std::vector<Hypothesis> hoareable;
  std::vector<Equation> unsupported;
  for (const auto& h : hyps) {
    Hypothesis c = classify(h);
    if (auto* la = std::get_if<LetterAbsorb>(&c))
      substitutions.push_back(*la);
    else if (std::holds_alternative<Unsupported>(c))
      unsupported.push_back(h);
    else
      hoareable.push_back(std::move(c));
  }

  for (const auto& s : substitutions) {
    goal.lhs = substitute_letter(goal.lhs, s);
    goal.rhs = substitute_letter(goal.rhs, s);
    for (auto& h : hoareable) {
      if (auto* hz = std::get_if<HoareZero>(&h))
        hz->z = substitute_letter(hz->z, s);
      else if (auto* gc = std::get_if<GuardCommute>(&h))
        gc->x = substitute_letter(gc->x, s);
      else if (auto* ga = std::get_if<GuardAbsorb>(&h))
        ga->x = substitute_letter(ga->x, s);
    }
  }

  std::vector<ExprPtr> zero_terms;
  for (const auto& h : hoareable)
    for (auto& z : to_hoare(h)) zero_terms.push_back(std::move(z));
  ExprPtr z = aggregate(zero_terms);

  return {eliminate_hoare(sig, std::move(goal), z), std::move(unsupported)};
}

HkatResult hkat_check(const Signature& sig, const Equation& goal,
                      std::span<const Equation> hyps,
                      const CheckOptions& opts) {
  HkatPreprocessed pre = hkat_preprocess(sig, goal, hyps);
  Verdict v = equivalent(sig, pre.transformed.lhs, pre.transformed.rhs, opts);
  return {std::move(v), std::move(pre.unsupported), std::move(pre.transformed)};
}

}  // namespace kat
