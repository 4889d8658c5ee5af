#pragma once

#include <memory>
#include <span>

#include "kat/hyp.hpp"
#include "kat/syntax.hpp"

namespace kat {

struct Prog;
using ProgPtr = std::shared_ptr<const Prog>;

/// While-program syntax. Actions are uninterpreted letters; facts about
/// specific actions enter checks as hypotheses.
struct Prog {
  enum class Kind { Skp, Act, Seq, Ite, Whl };
  Kind kind;
  std::size_t letter = 0;  // Act
  BoolPtr cond;            // Ite/Whl
  ProgPtr left, right;     // Seq; Ite branches; Whl body in left
};

ProgPtr p_skip();
ProgPtr p_act(std::size_t letter);
ProgPtr p_seq(ProgPtr a, ProgPtr b);
ProgPtr p_ite(BoolPtr cond, ProgPtr then_branch, ProgPtr else_branch);
ProgPtr p_whl(BoolPtr cond, ProgPtr body);

bool prog_equal(const Prog& a, const Prog& b);

/// The big-step embedding: skip to 1, actions to letters, sequencing to
/// product, branching to guarded sum, loops to ([b]·body)*·[!b].
ExprPtr embed(const ProgPtr& p);

/// Program equivalence through the embedding, under optional hypotheses.
HkatResult prog_equiv(const Signature& sig, const ProgPtr& p, const ProgPtr& q,
                      std::span<const Equation> hyps = {},
                      const CheckOptions& opts = {});

struct HoareTriple {
  BoolPtr pre;
  ProgPtr prog;
  BoolPtr post;
};

/// Partial-correctness encoding: [pre]·prog·[!post] = 0.
Equation hoare_encode(const HoareTriple& t);

/// Checks a triple from premise triples plus extra equational hypotheses.
HkatResult hoare_check(const Signature& sig,
                       std::span<const HoareTriple> premises,
                       std::span<const Equation> extra_hyps,
                       const HoareTriple& goal, const CheckOptions& opts = {});

}  // namespace kat
