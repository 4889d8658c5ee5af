#include "kat/cli.hpp"

#include <algorithm>

#include "kat/equiv.hpp"
#include "kat/hyp.hpp"
#include "kat/parse.hpp"
#include "kat/print.hpp"
#include "kat/semantics.hpp"
#include "kat/whilelang.hpp"

namespace kat {

namespace {

Equation goal_equation(const GoalFile& gf) {
  if (const auto* eq = std::get_if<Equation>(&gf.show)) return *eq;
  if (const auto* pp = std::get_if<ProgPair>(&gf.show))
    return Equation{embed(pp->left), embed(pp->right), EqRel::Eq};
  return hoare_encode(std::get<HoareTriple>(gf.show));
}

// Fewest letters first, then lexicographic: deterministic counterexamples.
bool gs_less(const GuardedString& a, const GuardedString& b) {
  if (a.letter_count() != b.letter_count())
    return a.letter_count() < b.letter_count();
  return a < b;
}

std::optional<GuardedString> min_difference(const BoundedLanguage& l,
                                            const BoundedLanguage& r) {
  std::optional<GuardedString> best;
  auto consider = [&](const GuardedString& g) {
    if (!best || gs_less(g, *best)) best = g;
  };
  for (const auto& g : l.strings())
    if (!r.contains(g)) consider(g);
  for (const auto& g : r.strings())
    if (!l.contains(g)) consider(g);
  return best;
}

const char* side_text(Side s) {
  return s == Side::LeftOnly ? "left-hand side only" : "right-hand side only";
}

}  // namespace

RunReport run_goal_text(std::string_view text, const RunOptions& opts) {
  RunReport rep;
  try {
    GoalFile gf = parse_goal(text, opts.atom_limit);
    std::vector<Equation> hyps = gf.assumes;
    for (const auto& h : opts.hypotheses)
      hyps.push_back(parse_equation(gf.sig, h));
    const bool with_hyps = !hyps.empty();

    HkatPreprocessed pre = hkat_preprocess(gf.sig, goal_equation(gf), hyps);
    for (const auto& u : pre.unsupported)
      rep.warnings.push_back("unsupported hypothesis ignored: " +
                             print_equation(gf.sig, u));

    if (opts.oracle_bound) {
      const std::size_t k = *opts.oracle_bound;
      BoundedLanguage l = bounded_language(gf.sig, pre.transformed.lhs, k);
      BoundedLanguage r = bounded_language(gf.sig, pre.transformed.rhs, k);
      if (l == r) {
        rep.output = "equal up to " + std::to_string(k) + " letters (oracle)\n";
        rep.exit_code = 0;
      } else {
        rep.output = "not equal within " + std::to_string(k) +
                     " letters (oracle)\n";
        if (!with_hyps) {
          auto w = min_difference(l, r);
          rep.output +=
              "counterexample: " + print_guarded_string(gf.sig, *w) + "\n";
        } else {
          rep.output +=
              "counterexample suppressed: hypotheses were eliminated, so any "
              "witness refers to the transformed goal\n";
        }
        rep.exit_code = 1;
      }
      return rep;
    }

    Verdict v = equivalent(gf.sig, pre.transformed.lhs, pre.transformed.rhs,
                           CheckOptions{opts.max_states});
    if (v.is_equal()) {
      rep.output = "proved\n";
      rep.exit_code = 0;
    } else {
      rep.exit_code = 1;
      if (!with_hyps) {
        rep.output = "not proved\n";
        rep.output += "counterexample (" +
                      std::string(side_text(v.side())) +
                      "): " + print_guarded_string(gf.sig, v.witness()) + "\n";
      } else {
        rep.output = "not proved by hypothesis elimination\n";
        rep.output +=
            "counterexample suppressed: hypotheses were eliminated, so any "
            "witness refers to the transformed goal\n";
      }
    }
  } catch (const parse_error& e) {
    rep.exit_code = 2;
    rep.warnings.push_back(std::string("error: ") + e.what());
  } catch (const state_limit_error& e) {
    rep.exit_code = 3;
    rep.warnings.push_back(std::string("error: ") + e.what());
  } catch (const std::invalid_argument& e) {
    rep.exit_code = 2;
    rep.warnings.push_back(std::string("error: ") + e.what());
  }
  return rep;
}

}  // namespace kat
