#include <doctest.h>

#include "kat/semantics.hpp"
#include "kat/syntax.hpp"
#include "testutil.hpp"

using namespace kat;
using testutil::Gen;

namespace {

GuardedString single(std::uint32_t a) { return GuardedString(Atom{a}); }

GuardedString gs(std::initializer_list<std::pair<std::uint32_t, std::size_t>>
                     steps,
                 std::uint32_t last) {
  std::vector<GsStep> body;
  for (auto [a, p] : steps) body.push_back(GsStep{Atom{a}, p});
  return GuardedString(std::move(body), Atom{last});
}

}  // namespace

TEST_CASE("atom_satisfies") {
  // Theta = {a, b}: bit 0 is a, bit 1 is b.
  BoolPtr a = mk_prim(0), b = mk_prim(1);
  CHECK(atom_satisfies(Atom{0}, *mk_top()));
  CHECK(atom_satisfies(Atom{3}, *mk_top()));
  CHECK(!atom_satisfies(Atom{3}, *mk_bot()));
  CHECK(atom_satisfies(Atom{1}, *a));
  CHECK(!atom_satisfies(Atom{2}, *a));

  // a & (!a | b) holds exactly at the atom {a,b}.
  BoolPtr f = mk_and(a, mk_or(mk_not(a), b));
  std::vector<std::uint32_t> sat;
  for (std::uint32_t v = 0; v < 4; ++v)
    if (atom_satisfies(Atom{v}, *f)) sat.push_back(v);
  CHECK(sat == std::vector<std::uint32_t>{3});
}

TEST_CASE("gs_fuse basic cases") {
  CHECK(gs_fuse(single(2), single(2)) == single(2));
  CHECK(!gs_fuse(single(2), single(1)).has_value());

  GuardedString u = gs({{0, 0}}, 1);             // alpha p beta
  GuardedString v = gs({{1, 1}}, 2);             // beta q gamma
  GuardedString w = gs({{3, 1}}, 2);             // gamma' q delta
  CHECK(gs_fuse(u, v) == gs({{0, 0}, {1, 1}}, 2));
  CHECK(!gs_fuse(u, w).has_value());
}

TEST_CASE("gs_fuse associativity on random strings") {
  Signature sig = testutil::small_sig();
  Gen gen(11);
  for (int i = 0; i < 300; ++i) {
    GuardedString u = gen.gen_gs(sig, 3);
    GuardedString v = gen.gen_gs(sig, 3);
    GuardedString w = gen.gen_gs(sig, 3);
    auto uv = gs_fuse(u, v);
    auto vw = gs_fuse(v, w);
    std::optional<GuardedString> l, r;
    if (uv) l = gs_fuse(*uv, w);
    if (vw) r = gs_fuse(u, *vw);
    CHECK(l.has_value() == r.has_value());
    if (l) CHECK(*l == *r);
  }
}

TEST_CASE("bounded_language base cases") {
  Signature sig = testutil::small_sig();
  // 1 at bound 0: the four single-atom strings.
  BoundedLanguage one = bounded_language(sig, mk_one(), 0);
  CHECK(one.size() == 4);
  CHECK(one.contains(single(0)));
  CHECK(one.contains(single(3)));

  // A letter: all 16 strings alpha p beta.
  BoundedLanguage lp = bounded_language(sig, mk_letter(0), 2);
  CHECK(lp.size() == 16);
  CHECK(lp.contains(gs({{0, 0}}, 3)));
  CHECK(!lp.contains(gs({{0, 1}}, 3)));

  // [a];p;[b] at bound 1: alpha must satisfy a, beta must satisfy b.
  ExprPtr guarded = mk_dot(mk_test(mk_prim(0)),
                           mk_dot(mk_letter(0), mk_test(mk_prim(1))));
  BoundedLanguage lg = bounded_language(sig, guarded, 1);
  CHECK(lg.size() == 4);
  for (std::uint32_t alpha : {1u, 3u})
    for (std::uint32_t beta : {2u, 3u})
      CHECK(lg.contains(gs({{alpha, 0}}, beta)));

  CHECK(bounded_language(sig, mk_zero(), 4).size() == 0);
}

TEST_CASE("bounded_language star closure") {
  Signature sig = testutil::small_sig();
  ExprPtr pstar = mk_star(mk_letter(0));
  BoundedLanguage l = bounded_language(sig, pstar, 2);
  // 4 atoms + 16 one-letter + 64 two-letter strings.
  CHECK(l.size() == 4 + 16 + 64);
  CHECK(l.contains(gs({{1, 0}, {2, 0}}, 0)));
}

TEST_CASE("bounded_language monotone in the bound") {
  Signature sig = testutil::small_sig();
  Gen gen(13);
  for (int i = 0; i < 30; ++i) {
    ExprPtr x = gen.gen_expr(sig, 6);
    for (std::size_t k = 0; k < 3; ++k) {
      BoundedLanguage lo = bounded_language(sig, x, k);
      BoundedLanguage hi = bounded_language(sig, x, k + 1);
      for (const auto& u : lo.strings()) CHECK(hi.contains(u));
    }
  }
}

TEST_CASE("gs_member") {
  Signature sig = testutil::small_sig();
  CHECK(gs_member(sig, single(1), mk_one()));
  CHECK(!gs_member(sig, gs({{0, 0}}, 0), mk_letter(1)));
  // alpha p beta p gamma is in p*.
  CHECK(gs_member(sig, gs({{0, 0}, {1, 0}}, 2), mk_star(mk_letter(0))));
}

TEST_CASE("rel_eval identities") {
  Signature sig = testutil::small_sig();
  Gen gen(17);
  for (int i = 0; i < 20; ++i) {
    RelInterp interp = gen.gen_interp(sig, 4);
    Relation id = Relation::identity(interp.state_count);
    CHECK(rel_eval(mk_one(), interp) == id);
    // [a | !a] = 1.
    CHECK(rel_eval(mk_test(mk_or(mk_prim(0), mk_not(mk_prim(0)))), interp) ==
          id);
    CHECK(rel_eval(mk_star(mk_zero()), interp) == id);
  }
}

TEST_CASE("rel_eval composes and stars") {
  Signature sig({"a"}, {"p"});
  RelInterp interp;
  interp.state_count = 3;
  Relation step(3);
  step.set(0, 1);
  step.set(1, 2);
  interp.letter_rels.push_back(step);
  interp.test_sets.push_back(0b011);

  Relation pp = rel_eval(mk_dot(mk_letter(0), mk_letter(0)), interp);
  CHECK(pp.at(0, 2));
  CHECK(!pp.at(0, 1));

  Relation st = rel_eval(mk_star(mk_letter(0)), interp);
  CHECK(st.at(0, 0));
  CHECK(st.at(0, 1));
  CHECK(st.at(0, 2));
  CHECK(!st.at(2, 0));

  // [a];p keeps only transitions leaving a state that satisfies a.
  Relation guarded = rel_eval(mk_dot(mk_test(mk_prim(0)), mk_letter(0)), interp);
  CHECK(guarded.at(0, 1));
  CHECK(guarded.at(1, 2));
  Relation blocked = rel_eval(
      mk_dot(mk_test(mk_not(mk_prim(0))), mk_letter(0)), interp);
  CHECK(!blocked.at(0, 1));
}
