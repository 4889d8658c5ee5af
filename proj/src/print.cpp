#include "kat/print.hpp"

namespace kat {

namespace {

// Precedence levels: | 0, & 1, ! 2, leaf 3.
int bool_prec(const BoolExpr& a) {
  switch (a.kind) {
    case BoolExpr::Kind::Or:
      return 0;
    case BoolExpr::Kind::And:
      return 1;
    case BoolExpr::Kind::Not:
      return 2;
    default:
      return 3;
  }
}

void pb(std::string& out, const Signature& sig, const BoolExpr& a,
        int min_prec) {
  const bool paren = bool_prec(a) < min_prec;
  if (paren) out += '(';
  switch (a.kind) {
    case BoolExpr::Kind::Prim:
      out += sig.test_name(a.prim);
      break;
    case BoolExpr::Kind::Or:
      pb(out, sig, *a.left, 1);
      out += '|';
      pb(out, sig, *a.right, 0);
      break;
    case BoolExpr::Kind::And:
      pb(out, sig, *a.left, 2);
      out += '&';
      pb(out, sig, *a.right, 1);
      break;
    case BoolExpr::Kind::Not:
      out += '!';
      pb(out, sig, *a.left, 3);
      break;
    case BoolExpr::Kind::Top:
      out += 'T';
      break;
    case BoolExpr::Kind::Bot:
      out += 'F';
      break;
  }
  if (paren) out += ')';
}

// Precedence levels: + 0, ; 1, * 2, leaf 3.
int expr_prec(const KatExpr& e) {
  switch (e.kind) {
    case KatExpr::Kind::Plus:
      return 0;
    case KatExpr::Kind::Dot:
      return 1;
    case KatExpr::Kind::Star:
      return 2;
    default:
      return 3;
  }
}

void pe(std::string& out, const Signature& sig, const KatExpr& e,
        int min_prec) {
  const bool paren = expr_prec(e) < min_prec;
  if (paren) out += '(';
  switch (e.kind) {
    case KatExpr::Kind::Letter:
      out += sig.letter_name(e.letter);
      break;
    case KatExpr::Kind::Test:
      out += '[';
      pb(out, sig, *e.test, 0);
      out += ']';
      break;
    case KatExpr::Kind::Dot:
      pe(out, sig, *e.left, 2);
      out += ';';
      pe(out, sig, *e.right, 1);
      break;
    case KatExpr::Kind::Plus:
      pe(out, sig, *e.left, 1);
      out += '+';
      pe(out, sig, *e.right, 0);
      break;
    case KatExpr::Kind::Star:
      pe(out, sig, *e.left, 3);
      out += '*';
      break;
    case KatExpr::Kind::One:
      out += '1';
      break;
    case KatExpr::Kind::Zero:
      out += '0';
      break;
  }
  if (paren) out += ')';
}

void pp(std::string& out, const Signature& sig, const Prog& p) {
  switch (p.kind) {
    case Prog::Kind::Skp:
      out += "skip";
      break;
    case Prog::Kind::Act:
      out += sig.letter_name(p.letter);
      break;
    case Prog::Kind::Seq:
      pp(out, sig, *p.left);
      out += " ;; ";
      pp(out, sig, *p.right);
      break;
    case Prog::Kind::Ite:
      out += "if ";
      pb(out, sig, *p.cond, 0);
      out += " then ";
      pp(out, sig, *p.left);
      out += " else ";
      pp(out, sig, *p.right);
      out += " fi";
      break;
    case Prog::Kind::Whl:
      out += "while ";
      pb(out, sig, *p.cond, 0);
      out += " do ";
      pp(out, sig, *p.left);
      out += " od";
      break;
  }
}

void patom(std::string& out, const Signature& sig, Atom a) {
  out += '{';
  for (std::size_t i = 0; i < sig.test_count(); ++i) {
    if (i > 0) out += ',';
    if (!a.bit(i)) out += '!';
    out += sig.test_name(i);
  }
  out += '}';
}

}  // namespace

std::string print_bool(const Signature& sig, const BoolExpr& a) {
  std::string out;
  pb(out, sig, a, 0);
  return out;
}

std::string print_expr(const Signature& sig, const KatExpr& e) {
  std::string out;
  pe(out, sig, e, 0);
  return out;
}

std::string print_prog(const Signature& sig, const Prog& p) {
  std::string out;
  pp(out, sig, p);
  return out;
}

std::string print_equation(const Signature& sig, const Equation& e) {
  std::string out = print_expr(sig, *e.lhs);
  out += e.rel == EqRel::Eq ? " == " : " <= ";
  out += print_expr(sig, *e.rhs);
  return out;
}

std::string print_hypothesis(const Signature& sig, const Hypothesis& h) {
  return print_equation(sig, render(h));
}

std::string print_guarded_string(const Signature& sig, const GuardedString& u) {
  std::string out;
  for (const auto& step : u.body()) {
    patom(out, sig, step.atom);
    out += ' ';
    out += sig.letter_name(step.letter);
    out += ' ';
  }
  patom(out, sig, u.last());
  return out;
}

}  // namespace kat
