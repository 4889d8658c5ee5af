#include "kat/equiv.hpp"

#include <cassert>
#include <queue>
#include <unordered_map>
#include <utility>
#include <vector>

namespace kat {

namespace {

std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

struct SetPair {
  ExprSet left, right;
  friend bool operator==(const SetPair& a, const SetPair& b) {
    return a.left == b.left && a.right == b.right;
  }
};

struct SetPairHash {
  std::size_t operator()(const SetPair& p) const {
    return hash_combine(p.left.hash(), p.right.hash());
  }
};

constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);

struct Provenance {
  std::size_t parent = kNoParent;
  std::uint32_t atom = 0;
  std::uint32_t letter = 0;
};

}  // namespace

Verdict equivalent(const Signature& sig, const ExprPtr& x, const ExprPtr& y,
                   const CheckOptions& opts) {
  DerivCache cache;
  const std::size_t atom_count = sig.atom_count();
  const std::size_t letter_count = sig.letter_count();

  std::vector<SetPair> states;
  std::vector<Provenance> provs;
  std::unordered_map<SetPair, std::size_t, SetPairHash> seen;
  std::queue<std::size_t> work;

  auto visit = [&](SetPair pair, Provenance prov) -> bool {
    auto [it, inserted] = seen.emplace(pair, states.size());
    if (!inserted) return false;
    states.push_back(std::move(pair));
    provs.push_back(prov);
    if (states.size() > opts.max_states) throw state_limit_error(opts.max_states);
    work.push(states.size() - 1);
    return true;
  };

  auto witness_at = [&](std::size_t idx, std::uint32_t alpha) -> GuardedString {
    std::vector<GsStep> body;
    for (std::size_t i = idx; provs[i].parent != kNoParent; i = provs[i].parent)
      body.push_back(GsStep{Atom{provs[i].atom}, provs[i].letter});
    std::reverse(body.begin(), body.end());
    return GuardedString(std::move(body), Atom{alpha});
  };

  visit(SetPair{ExprSet::singleton(x), ExprSet::singleton(y)}, Provenance{});

  while (!work.empty()) {
    const std::size_t idx = work.front();
    work.pop();
    // Expansion may grow `states`; keep stable copies of the two sets.
    const ExprSet left = states[idx].left;
    const ExprSet right = states[idx].right;

    for (std::uint32_t alpha = 0; alpha < atom_count; ++alpha) {
      const bool el = cache.epsilon_set(Atom{alpha}, left);
      const bool er = cache.epsilon_set(Atom{alpha}, right);
      if (el != er)
        return Verdict::not_equal(witness_at(idx, alpha),
                                  el ? Side::LeftOnly : Side::RightOnly);
    }
    for (std::uint32_t alpha = 0; alpha < atom_count; ++alpha) {
      for (std::uint32_t p = 0; p < letter_count; ++p) {
        ExprSet dl = cache.pderiv_set(Atom{alpha}, p, left);
        ExprSet dr = cache.pderiv_set(Atom{alpha}, p, right);
        if (dl.empty() && dr.empty()) continue;
        visit(SetPair{std::move(dl), std::move(dr)}, Provenance{idx, alpha, p});
      }
    }
  }
  return Verdict::equal();
}

Verdict included(const Signature& sig, const ExprPtr& x, const ExprPtr& y,
                 const CheckOptions& opts) {
  Verdict v = equivalent(sig, mk_plus(x, y), y, opts);
  // G(y) is a subset of G(x+y), so any witness is left-only.
  assert(v.is_equal() || v.side() == Side::LeftOnly);
  return v;
}

}  // namespace kat
