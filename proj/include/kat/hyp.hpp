#pragma once

#include <span>
#include <variant>
#include <vector>

#include "kat/equiv.hpp"
#include "kat/syntax.hpp"

namespace kat {

enum class EqRel { Eq, Le };

/// An equation or inequation between two expressions over one signature.
struct Equation {
  ExprPtr lhs, rhs;
  EqRel rel = EqRel::Eq;
};

/// Eliminable hypothesis shapes. Anything else is Unsupported and only ever
/// reported, never used.
struct HoareZero {  // z = 0
  ExprPtr z;
};

enum class CommuteVariant { Eq, Le, Ge };
struct GuardCommute {  // [a]x = x[b] / [a]x <= x[b] / x[b] <= [a]x
  BoolPtr a;
  ExprPtr x;
  BoolPtr b;
  CommuteVariant variant;
};

enum class AbsorbSide { Left, Right };
struct GuardAbsorb {  // x <= [a]x (Left) or x <= x[a] (Right)
  ExprPtr x;
  BoolPtr a;
  AbsorbSide side;
};

enum class BoolVariant { Eq, Le };
struct BoolRel {  // a = b or a <= b
  BoolPtr a, b;
  BoolVariant variant;
};

struct LetterAbsorb {  // [a]p = [a] (Left) or p[a] = [a] (Right), p a letter
  BoolPtr a;
  std::size_t letter;
  AbsorbSide side;
};

struct Unsupported {
  Equation original;
};

using Hypothesis = std::variant<HoareZero, GuardCommute, GuardAbsorb, BoolRel,
                                LetterAbsorb, Unsupported>;

/// Syntactic pattern match against the five shapes, modulo the test
/// embedding and smart-constructor normal form.
Hypothesis classify(const Equation& e);

/// Writes a classified hypothesis back as an equation.
Equation render(const Hypothesis& h);

/// Terms asserted equal to zero, for the four Hoare-reducible shapes.
/// Rejects LetterAbsorb and Unsupported with std::invalid_argument.
std::vector<ExprPtr> to_hoare(const Hypothesis& h);

/// Sum of the given zero-terms; the empty list aggregates to 0.
ExprPtr aggregate(std::span<const ExprPtr> zs);

/// The universal expression: star of the sum of all letters.
ExprPtr universal(const Signature& sig);

/// Augments both sides of the goal with u·z·u for u universal; an
/// inequation goal is first turned into the equation lhs+rhs = rhs.
Equation eliminate_hoare(const Signature& sig, Equation goal, const ExprPtr& z);

/// Replaces every occurrence of the hypothesis letter p by
/// [!a]p + [a] (Left) or p[!a] + [a] (Right).
ExprPtr substitute_letter(const ExprPtr& e, const LetterAbsorb& h);

struct HkatPreprocessed {
  Equation transformed;
  std::vector<Equation> unsupported;
};

/// Runs the elimination pipeline without deciding: classify, substitute
/// letter-absorption facts into the goal and the remaining hypotheses,
/// aggregate the Hoare terms, and augment the goal.
HkatPreprocessed hkat_preprocess(const Signature& sig, Equation goal,
                                 std::span<const Equation> hyps);

struct HkatResult {
  Verdict verdict;
  std::vector<Equation> unsupported;
  Equation transformed;  // the hypothesis-free equation actually decided
};

/// Decides the goal under the given hypotheses: preprocess, then run the
/// bisimulation check on the transformed goal. A NotEqual verdict under
/// hypotheses means "not provable this way", not falsity.
HkatResult hkat_check(const Signature& sig, const Equation& goal,
                      std::span<const Equation> hyps,
                      const CheckOptions& opts = {});

}  // namespace kat
