#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kat {

/// Default cap on the number of primitive tests. Observation and derivative
/// computation iterate over all 2^n atoms, so n is kept small by default.
inline constexpr std::size_t kDefaultAtomLimit = 12;

/// Declares the primitive tests and the actions (letters) an expression may
/// mention. Expressions store indices; names exist for parsing and printing.
class Signature {
 public:
  Signature(std::vector<std::string> tests, std::vector<std::string> letters,
            std::size_t atom_limit = kDefaultAtomLimit);

  std::size_t test_count() const { return tests_.size(); }
  std::size_t letter_count() const { return letters_.size(); }
  std::size_t atom_count() const { return std::size_t{1} << tests_.size(); }

  const std::string& test_name(std::size_t i) const { return tests_.at(i); }
  const std::string& letter_name(std::size_t i) const { return letters_.at(i); }
  const std::vector<std::string>& tests() const { return tests_; }
  const std::vector<std::string>& letters() const { return letters_; }

  std::optional<std::size_t> find_test(std::string_view name) const;
  std::optional<std::size_t> find_letter(std::string_view name) const;

 private:
  std::vector<std::string> tests_;
  std::vector<std::string> letters_;
};

struct BoolExpr;
using BoolPtr = std::shared_ptr<const BoolExpr>;

/// Boolean expressions over the primitive tests. Immutable; shared freely.
struct BoolExpr {
  enum class Kind { Prim, And, Or, Not, Top, Bot };
  Kind kind;
  std::size_t prim = 0;        // Prim
  BoolPtr left, right;         // And/Or; Not uses left only
  std::size_t hash = 0;
};

BoolPtr mk_prim(std::size_t index);
BoolPtr mk_and(BoolPtr a, BoolPtr b);
BoolPtr mk_or(BoolPtr a, BoolPtr b);
BoolPtr mk_not(BoolPtr a);
BoolPtr mk_top();
BoolPtr mk_bot();

std::strong_ordering canonical_compare(const BoolExpr& a, const BoolExpr& b);
bool equal(const BoolExpr& a, const BoolExpr& b);

struct KatExpr;
using ExprPtr = std::shared_ptr<const KatExpr>;

/// Expressions of the Kleene sort. Only the mk_* constructors below build
/// nodes, so every KatExpr in the program is in smart-constructor normal
/// form: no unit or zero inside products and sums, products and sums
/// right-nested, star of 0 or 1 collapsed to 1.
struct KatExpr {
  enum class Kind { Letter, Test, Dot, Plus, Star, One, Zero };
  Kind kind;
  std::size_t letter = 0;      // Letter
  BoolPtr test;                // Test
  ExprPtr left, right;         // Dot/Plus; Star uses left only
  std::size_t hash = 0;
};

ExprPtr mk_letter(std::size_t index);
ExprPtr mk_test(BoolPtr a);
ExprPtr mk_dot(ExprPtr x, ExprPtr y);
ExprPtr mk_plus(ExprPtr x, ExprPtr y);
ExprPtr mk_star(ExprPtr x);
ExprPtr mk_one();
ExprPtr mk_zero();

/// Total structural order; kinds ordered as declared, then fields.
std::strong_ordering canonical_compare(const KatExpr& a, const KatExpr& b);
bool equal(const KatExpr& a, const KatExpr& b);

/// True when every test and letter index is in range for `sig`.
bool well_formed(const BoolExpr& a, const Signature& sig);
bool well_formed(const KatExpr& e, const Signature& sig);

}  // namespace kat
