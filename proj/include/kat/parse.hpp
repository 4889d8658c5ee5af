#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "kat/hyp.hpp"
#include "kat/semantics.hpp"
#include "kat/syntax.hpp"
#include "kat/whilelang.hpp"

namespace kat {

class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& msg, std::size_t line, std::size_t col)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) +
                           ": " + msg),
        line_(line),
        col_(col) {}
  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }

 private:
  std::size_t line_, col_;
};

struct ProgPair {
  ProgPtr left, right;
};

/// One parsed goal file: a signature, assumptions, and a single claim to
/// check (an equation, a program equivalence, or a Hoare triple).
struct GoalFile {
  Signature sig;
  std::vector<Equation> assumes;
  std::variant<Equation, ProgPair, HoareTriple> show;
};

/// Grammar:
///   goal  := 'tests' ident+ ';' 'actions' ident+ ';'
///            ('assume' eqn)* 'show' (eqn | prog '~' prog | triple)
///   eqn   := expr ('==' | '<=') expr
///   expr  := term ('+' term)* ; term := factor (';' factor)*
///   factor:= base '*'* ; base := action | '[' bool ']' | '0' | '1' | '(' expr ')'
///   bool  := bt ('|' bt)* ; bt := bf ('&' bf)*
///   bf    := '!' bf | test | 'T' | 'F' | '(' bool ')'
///   prog  := patom (';;' patom)*
///   patom := 'skip' | action | 'if' bool 'then' prog 'else' prog 'fi'
///          | 'while' bool 'do' prog 'od'
///   triple:= '{' bool '}' prog '{' bool '}'
/// '#' starts a comment running to end of line.
GoalFile parse_goal(std::string_view text,
                    std::size_t atom_limit = kDefaultAtomLimit);

ExprPtr parse_expr(const Signature& sig, std::string_view text);
BoolPtr parse_bool(const Signature& sig, std::string_view text);
ProgPtr parse_prog(const Signature& sig, std::string_view text);
Equation parse_equation(const Signature& sig, std::string_view text);

/// Inverse of print_guarded_string.
GuardedString parse_guarded_string(const Signature& sig, std::string_view text);

}  // namespace kat
