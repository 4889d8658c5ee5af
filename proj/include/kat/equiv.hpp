#pragma once

#include <optional>
#include <stdexcept>

#include "kat/deriv.hpp"
#include "kat/semantics.hpp"
#include "kat/syntax.hpp"

namespace kat {

/// Which side of a failed check accepts the witness.
enum class Side { LeftOnly, RightOnly };

/// Outcome of an equivalence or inclusion check. A NotEqual verdict carries
/// a guarded string accepted by exactly one side, shortest in letter count.
class Verdict {
 public:
  static Verdict equal() { return Verdict(); }
  static Verdict not_equal(GuardedString witness, Side side) {
    Verdict v;
    v.witness_ = std::move(witness);
    v.side_ = side;
    return v;
  }

  bool is_equal() const { return !witness_.has_value(); }
  const GuardedString& witness() const { return *witness_; }
  Side side() const { return side_; }

 private:
  Verdict() = default;
  std::optional<GuardedString> witness_;
  Side side_ = Side::LeftOnly;
};

struct CheckOptions {
  std::size_t max_states = 100000;
};

/// Thrown when the bisimulation exceeds its pair-state ceiling; distinct
/// from a NotEqual verdict.
class state_limit_error : public std::runtime_error {
 public:
  explicit state_limit_error(std::size_t limit)
      : std::runtime_error("state ceiling of " + std::to_string(limit) +
                           " pair states exceeded"),
        limit_(limit) {}
  std::size_t limit() const { return limit_; }

 private:
  std::size_t limit_;
};

/// Decides G(x) = G(y) by breadth-first bisimulation over pairs of
/// derivative-state sets. NotEqual comes with a shortest witness.
Verdict equivalent(const Signature& sig, const ExprPtr& x, const ExprPtr& y,
                   const CheckOptions& opts = {});

/// Decides x <= y, i.e. equivalence of x+y and y. A witness lies in
/// G(x) \ G(y) and is reported as LeftOnly.
Verdict included(const Signature& sig, const ExprPtr& x, const ExprPtr& y,
                 const CheckOptions& opts = {});

}  // namespace kat
