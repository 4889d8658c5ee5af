#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "kat/syntax.hpp"

namespace kat {

/// One complete truth assignment to the primitive tests, packed into an
/// integer: bit i holds the value of test i.
struct Atom {
  std::uint32_t value = 0;
  bool bit(std::size_t i) const { return (value >> i) & 1u; }
  friend auto operator<=>(const Atom&, const Atom&) = default;
};

struct GsStep {
  Atom atom;
  std::size_t letter = 0;
  friend auto operator<=>(const GsStep&, const GsStep&) = default;
};

/// Alternating atom/letter sequence that starts and ends with an atom.
/// `body` holds the (atom, letter) pairs; `last` closes the string.
class GuardedString {
 public:
  explicit GuardedString(Atom only) : last_(only) {}
  GuardedString(std::vector<GsStep> body, Atom last)
      : body_(std::move(body)), last_(last) {}

  const std::vector<GsStep>& body() const { return body_; }
  Atom last() const { return last_; }
  Atom first() const { return body_.empty() ? last_ : body_.front().atom; }
  std::size_t letter_count() const { return body_.size(); }

  std::size_t hash() const;

  friend auto operator<=>(const GuardedString&, const GuardedString&) = default;

 private:
  std::vector<GsStep> body_;
  Atom last_;
};

struct GsHash {
  std::size_t operator()(const GuardedString& g) const { return g.hash(); }
};

/// All guarded strings of a language with at most `bound` letters.
class BoundedLanguage {
 public:
  using Set = std::unordered_set<GuardedString, GsHash>;

  explicit BoundedLanguage(std::size_t bound) : bound_(bound) {}
  BoundedLanguage(Set strings, std::size_t bound)
      : strings_(std::move(strings)), bound_(bound) {}

  std::size_t bound() const { return bound_; }
  const Set& strings() const { return strings_; }
  std::size_t size() const { return strings_.size(); }
  bool contains(const GuardedString& g) const { return strings_.count(g) > 0; }
  void insert(GuardedString g) { strings_.insert(std::move(g)); }

  friend bool operator==(const BoundedLanguage& a, const BoundedLanguage& b) {
    return a.bound_ == b.bound_ && a.strings_ == b.strings_;
  }

 private:
  Set strings_;
  std::size_t bound_;
};

bool atom_satisfies(Atom alpha, const BoolExpr& a);

/// Fusion product: defined only when the last atom of `u` equals the first
/// atom of `v`; the shared atom is merged.
std::optional<GuardedString> gs_fuse(const GuardedString& u,
                                     const GuardedString& v);

/// Brute-force language oracle: every guarded string of G(x) with at most
/// `bound` letters, computed by structural recursion with a fixpoint for
/// star. Independent of the derivative machinery by construction.
BoundedLanguage bounded_language(const Signature& sig, const ExprPtr& x,
                                 std::size_t bound);

bool gs_member(const Signature& sig, const GuardedString& u, const ExprPtr& x);

/// Binary relation over a small state space, rows as bitmasks.
class Relation {
 public:
  explicit Relation(std::size_t m);
  static Relation identity(std::size_t m);

  std::size_t states() const { return rows_.size(); }
  bool at(std::size_t i, std::size_t j) const { return (rows_[i] >> j) & 1u; }
  void set(std::size_t i, std::size_t j) { rows_[i] |= (1u << j); }

  Relation compose(const Relation& other) const;
  Relation unite(const Relation& other) const;
  Relation star() const;  // reflexive-transitive closure

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::vector<std::uint32_t> rows_;
};

/// Finite relational interpretation: one relation per letter, one state
/// subset (bitmask) per primitive test.
struct RelInterp {
  std::size_t state_count = 1;
  std::vector<Relation> letter_rels;
  std::vector<std::uint32_t> test_sets;
};

Relation rel_eval(const ExprPtr& x, const RelInterp& interp);

}  // namespace kat
