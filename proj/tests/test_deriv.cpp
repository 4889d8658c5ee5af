#include <doctest.h>

#include "kat/deriv.hpp"
#include "kat/parse.hpp"
#include "kat/semantics.hpp"
#include "kat/syntax.hpp"
#include "testutil.hpp"

using namespace kat;
using testutil::Gen;

namespace {

ExprPtr p() { return mk_letter(0); }
ExprPtr q() { return mk_letter(1); }
BoolPtr a() { return mk_prim(0); }
BoolPtr b() { return mk_prim(1); }

bool set_is(const ExprSet& s, std::initializer_list<ExprPtr> elems) {
  std::vector<ExprPtr> v(elems);
  return s == ExprSet::of(std::move(v));
}

}  // namespace

TEST_CASE("ExprSet canonicalisation") {
  ExprSet s = ExprSet::of({q(), p(), p()});
  CHECK(s.size() == 2);
  CHECK(s.elems()[0]->letter == 0);
  CHECK(s.elems()[1]->letter == 1);
  CHECK(s == ExprSet::of({p(), q()}));
  CHECK(s.hash() == ExprSet::of({p(), q()}).hash());
  CHECK(ExprSet().empty());

  // {1, p} . q collapses 1·q to q.
  ExprSet t = ExprSet::of({mk_one(), p()}).then(q());
  CHECK(set_is(t, {q(), mk_dot(p(), q())}));
}

TEST_CASE("epsilon per shape") {
  // Atoms over {a, b}: value 3 = ab.
  CHECK(epsilon(Atom{0}, mk_star(p())));
  CHECK(!epsilon(Atom{0}, p()));
  CHECK(epsilon(Atom{3}, mk_dot(mk_test(a()), mk_test(b()))));
  CHECK(!epsilon(Atom{1}, mk_dot(mk_test(a()), mk_test(b()))));
  CHECK(epsilon(Atom{0}, mk_one()));
  CHECK(!epsilon(Atom{0}, mk_zero()));
  CHECK(epsilon(Atom{2}, mk_plus(p(), mk_test(b()))));
}

TEST_CASE("delta per shape") {
  CHECK(equal(*delta(Atom{0}, 0, p()), *mk_one()));
  CHECK(equal(*delta(Atom{0}, 0, q()), *mk_zero()));
  CHECK(equal(*delta(Atom{0}, 0, mk_test(a())), *mk_zero()));
  // d(x y) = d(x) y + eps(x) d(y) on [a]·p with alpha satisfying a.
  ExprPtr e = mk_dot(mk_test(a()), p());
  CHECK(equal(*delta(Atom{1}, 0, e), *mk_one()));
  CHECK(equal(*delta(Atom{0}, 0, e), *mk_zero()));
}

TEST_CASE("pderiv per shape") {
  CHECK(set_is(pderiv(Atom{0}, 0, p()), {mk_one()}));
  CHECK(pderiv(Atom{0}, 1, p()).empty());
  CHECK(pderiv(Atom{0}, 0, mk_test(a())).empty());
  CHECK(pderiv(Atom{0}, 0, mk_one()).empty());
  CHECK(pderiv(Atom{0}, 0, mk_zero()).empty());

  // ab, p, [a]·p·q -> {q}.
  ExprPtr e = mk_dot(mk_test(a()), mk_dot(p(), q()));
  CHECK(set_is(pderiv(Atom{3}, 0, e), {q()}));
  CHECK(pderiv(Atom{2}, 0, e).empty());  // atom refutes the guard

  // alpha, p, (p·q)* -> {q·(p·q)*}.
  ExprPtr loop = mk_star(mk_dot(p(), q()));
  CHECK(set_is(pderiv(Atom{0}, 0, loop), {mk_dot(q(), loop)}));
}

TEST_CASE("pderiv_set and epsilon_set") {
  CHECK(pderiv_set(Atom{0}, 0, ExprSet()).empty());
  CHECK(set_is(pderiv_set(Atom{0}, 0, ExprSet::of({p(), q()})), {mk_one()}));
  ExprSet single = ExprSet::singleton(mk_star(p()));
  CHECK(pderiv_set(Atom{0}, 0, single) == pderiv(Atom{0}, 0, mk_star(p())));

  CHECK(!epsilon_set(Atom{0}, ExprSet()));
  CHECK(epsilon_set(Atom{0}, ExprSet::singleton(mk_one())));
  CHECK(epsilon_set(Atom{0}, ExprSet::of({p(), mk_star(q())})));
}

TEST_CASE("coalgebraic characterisation on random expressions") {
  Signature sig = testutil::small_sig();
  Gen gen(23);
  for (int i = 0; i < 200; ++i) {
    ExprPtr x = gen.gen_expr(sig, 7);
    Atom alpha = gen.gen_atom(sig);
    CHECK(gs_member(sig, GuardedString(alpha), x) == epsilon(alpha, x));

    GuardedString full = gen.gen_gs(sig, 3);
    if (full.letter_count() == 0) continue;
    Atom head = full.body().front().atom;
    std::size_t letter = full.body().front().letter;
    GuardedString tail(
        std::vector<GsStep>(full.body().begin() + 1, full.body().end()),
        full.last());
    bool direct = gs_member(sig, full, x);
    bool via_deriv = false;
    for (const auto& e : pderiv(head, letter, x).elems())
      if (gs_member(sig, tail, e)) {
        via_deriv = true;
        break;
      }
    CHECK(direct == via_deriv);
  }
}

TEST_CASE("delta and pderiv denote the same language") {
  Signature sig = testutil::small_sig();
  Gen gen(29);
  for (int i = 0; i < 120; ++i) {
    ExprPtr x = gen.gen_expr(sig, 6);
    Atom alpha = gen.gen_atom(sig);
    std::size_t letter = gen.pick(sig.letter_count());
    const std::size_t k = 3;
    BoundedLanguage full = bounded_language(sig, delta(alpha, letter, x), k);
    BoundedLanguage parts(k);
    for (const auto& e : pderiv(alpha, letter, x).elems())
      for (const auto& u : bounded_language(sig, e, k).strings())
        parts.insert(u);
    CHECK(full == parts);
  }
}

TEST_CASE("reachable derivative sets stay finite on the stress corpus") {
  Signature sig = testutil::paterson_sig();
  // Well under the default 1e5 ceiling for both schemes.
  std::size_t n_a = testutil::count_reachable_sets(
      sig, parse_expr(sig, testutil::kS6A), 100000);
  std::size_t n_e = testutil::count_reachable_sets(
      sig, parse_expr(sig, testutil::kS6E), 100000);
  CHECK(n_a <= 100000);
  CHECK(n_e <= 100000);
  CHECK(n_a > 1);
  CHECK(n_e > 1);
}
