#pragma once

#include <string>

#include "kat/hyp.hpp"
#include "kat/semantics.hpp"
#include "kat/syntax.hpp"
#include "kat/whilelang.hpp"

namespace kat {

/// Printers emit the concrete goal-file grammar; print/parse round-trips
/// are identities on smart-constructor normal forms.
std::string print_bool(const Signature& sig, const BoolExpr& a);
std::string print_expr(const Signature& sig, const KatExpr& e);
std::string print_prog(const Signature& sig, const Prog& p);
std::string print_equation(const Signature& sig, const Equation& e);
std::string print_hypothesis(const Signature& sig, const Hypothesis& h);

/// Atoms render in test declaration order, negated entries prefixed with
/// '!', e.g. `{a,!b} p {!a,!b}`.
std::string print_guarded_string(const Signature& sig, const GuardedString& u);

}  // namespace kat
