#include <doctest.h>

#include "kat/parse.hpp"
#include "kat/whilelang.hpp"
#include "testutil.hpp"

using namespace kat;
using testutil::Gen;

namespace {

BoolPtr a() { return mk_prim(0); }
BoolPtr b() { return mk_prim(1); }

ProgPtr gen_prog(Gen& gen, const Signature& sig, int size) {
  if (size <= 1)
    return gen.chance(0.2) ? p_skip() : p_act(gen.pick(sig.letter_count()));
  switch (gen.pick(4)) {
    case 0:  // right-nested sequence
      return p_seq(gen_prog(gen, sig, 1), gen_prog(gen, sig, size - 1));
    case 1:
      return p_ite(gen.gen_bool(sig, 2), gen_prog(gen, sig, size / 2),
                   gen_prog(gen, sig, size / 2));
    case 2:
      return p_whl(gen.gen_bool(sig, 2), gen_prog(gen, sig, size - 1));
    default:
      return p_act(gen.pick(sig.letter_count()));
  }
}

}  // namespace

TEST_CASE("embed clause by clause") {
  ExprPtr P = mk_letter(0);
  CHECK(equal(*embed(p_skip()), *mk_one()));
  CHECK(equal(*embed(p_act(0)), *P));
  CHECK(equal(*embed(p_seq(p_act(0), p_act(1))),
              *mk_dot(P, mk_letter(1))));
  CHECK(equal(*embed(p_ite(b(), p_act(0), p_act(1))),
              *mk_plus(mk_dot(mk_test(b()), P),
                       mk_dot(mk_test(mk_not(b())), mk_letter(1)))));
  CHECK(equal(*embed(p_whl(b(), p_act(0))),
              *mk_dot(mk_star(mk_dot(mk_test(b()), P)),
                      mk_test(mk_not(b())))));
}

TEST_CASE("embed is compositional on sequences") {
  Signature sig = testutil::small_sig();
  Gen gen(73);
  for (int i = 0; i < 40; ++i) {
    ProgPtr x = gen_prog(gen, sig, 4);
    ProgPtr y = gen_prog(gen, sig, 4);
    CHECK(equal(*embed(p_seq(x, y)), *mk_dot(embed(x), embed(y))));
  }
}

TEST_CASE("loop lemmas hold without hypotheses") {
  Signature sig({"a", "b"}, {"p", "q", "r"});
  ProgPtr P = p_act(0), Q = p_act(1), R = p_act(2);

  // Nested loop collapses.
  CHECK(prog_equiv(sig, p_whl(b(), p_whl(b(), P)), p_whl(b(), P))
            .verdict.is_equal());

  // Unfolded body folds back.
  CHECK(prog_equiv(sig, p_whl(b(), p_seq(P, p_ite(b(), P, p_skip()))),
                   p_whl(b(), P))
            .verdict.is_equal());

  // Branch after the loop is dead when its guard implies the loop guard.
  BoolPtr ab = mk_or(a(), b());
  CHECK(prog_equiv(sig, p_seq(p_whl(ab, P), p_ite(b(), Q, R)),
                   p_seq(p_whl(ab, P), R))
            .verdict.is_equal());

  // Sanity: a genuinely different pair is rejected.
  CHECK(!prog_equiv(sig, p_whl(b(), P), p_whl(b(), Q)).verdict.is_equal());
}

TEST_CASE("delayed assignment needs its commutation hypothesis") {
  // u stands for the update, s for the substituted condition.
  Signature sig({"b", "s"}, {"u", "p", "q"});
  ProgPtr U = p_act(0), P = p_act(1), Q = p_act(2);
  BoolPtr cond = mk_prim(0), subst = mk_prim(1);

  ProgPtr lhs = p_seq(U, p_ite(cond, P, Q));
  ProgPtr rhs = p_ite(subst, p_seq(U, P), p_seq(U, Q));

  std::vector<Equation> hyp{parse_equation(sig, "u;[b] == [s];u")};
  CHECK(prog_equiv(sig, lhs, rhs, hyp).verdict.is_equal());
  CHECK(!prog_equiv(sig, lhs, rhs).verdict.is_equal());
}

TEST_CASE("prog_equiv is an equivalence relation") {
  Signature sig = testutil::small_sig();
  Gen gen(79);
  std::vector<ProgPtr> ps;
  for (int i = 0; i < 12; ++i) ps.push_back(gen_prog(gen, sig, 4));
  for (const auto& x : ps) CHECK(prog_equiv(sig, x, x).verdict.is_equal());
  for (const auto& x : ps)
    for (const auto& y : ps) {
      bool xy = prog_equiv(sig, x, y).verdict.is_equal();
      CHECK(xy == prog_equiv(sig, y, x).verdict.is_equal());
      if (!xy) continue;
      for (const auto& z : ps)
        if (prog_equiv(sig, y, z).verdict.is_equal())
          CHECK(prog_equiv(sig, x, z).verdict.is_equal());
    }
}

TEST_CASE("hoare_encode") {
  Signature sig({"A", "B"}, {"p"});
  BoolPtr A = mk_prim(0), B = mk_prim(1);
  Equation skip_eq = hoare_encode({A, p_skip(), A});
  CHECK(equal(*skip_eq.lhs, *mk_dot(mk_test(A), mk_test(mk_not(A)))));
  CHECK(skip_eq.rhs->kind == KatExpr::Kind::Zero);

  Equation full = hoare_encode({A, p_act(0), B});
  CHECK(equal(*full.lhs,
              *mk_dot(mk_test(A), mk_dot(mk_letter(0), mk_test(mk_not(B))))));
}

TEST_CASE("hoare_check rules") {
  Signature sig({"A", "B", "C", "b"}, {"p", "q"});
  BoolPtr A = mk_prim(0), B = mk_prim(1), C = mk_prim(2), cond = mk_prim(3);
  ProgPtr P = p_act(0), Q = p_act(1);

  // Skip: {A} skip {A}, no premises.
  CHECK(hoare_check(sig, {}, {}, {A, p_skip(), A}).verdict.is_equal());

  // While: {A&b} p {A}  entails  {A} while b do p od {A&!b}.
  std::vector<HoareTriple> whl_prem{{mk_and(A, cond), P, A}};
  CHECK(hoare_check(sig, whl_prem, {},
                    {A, p_whl(cond, P), mk_and(A, mk_not(cond))})
            .verdict.is_equal());

  // Sequencing: {A} p {C} and {C} q {B} entail {A} p;;q {B}.
  std::vector<HoareTriple> seq_prem{{A, P, C}, {C, Q, B}};
  CHECK(hoare_check(sig, seq_prem, {}, {A, p_seq(P, Q), B})
            .verdict.is_equal());

  // Conditional.
  std::vector<HoareTriple> ite_prem{{mk_and(A, cond), P, B},
                                    {mk_and(A, mk_not(cond)), Q, B}};
  CHECK(hoare_check(sig, ite_prem, {}, {A, p_ite(cond, P, Q), B})
            .verdict.is_equal());

  // Consequence: strengthen the pre-condition, weaken the post-condition.
  std::vector<HoareTriple> conseq_prem{{A, P, B}};
  std::vector<Equation> side{parse_equation(sig, "[C] <= [A]"),
                             parse_equation(sig, "[B] <= [B|C]")};
  CHECK(hoare_check(sig, conseq_prem, side,
                    {C, P, mk_or(B, C)})
            .verdict.is_equal());

  // A false premise-free triple is rejected.
  CHECK(!hoare_check(sig, {}, {}, {A, P, B}).verdict.is_equal());

  // Vacuous pre-condition always holds.
  CHECK(hoare_check(sig, {}, {}, {mk_bot(), P, B}).verdict.is_equal());
}
