#include "blackwell/random_facet.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "blackwell/rng.hpp"
#include "blackwell/symbolic_eval.hpp"

namespace blackwell {

PairSet full_pair_set(const Mdp& m) {
  PairSet out;
  for (std::size_t s = 0; s < m.n(); ++s)
    for (std::size_t a = 0; a < m.num_actions(s); ++a) out.push_back({s, a});
  return out;
}

namespace {

bool contains(const PairSet& M, const StateAction& p) { return std::binary_search(M.begin(), M.end(), p); }

class Solver {
 public:
  Solver(const Mdp& m, const FacetOptions& options) : m_(m), options_(options) {}

  FacetResult run(PairSet M, Policy pi) {
    FacetResult result;
    std::vector<Frame> stack;
    std::uint64_t key = options_.seed;
    for (;;) {
      // Enter a call on (M, pi, key).
      if (options_.check_invariants) check_entry(M, pi);
      if (first_improving(M, pi) != nullptr) {
        std::vector<StateAction> candidates;
        for (const auto& p : M) {
          if (pi[p.state] != p.action) candidates.push_back(p);
        }
        if (candidates.empty()) throw std::logic_error("improving pair inside the current policy");
        std::mt19937_64 rng(mix(key, 0));
        const StateAction picked = candidates[uniform_index(rng, candidates.size())];
        record(result, FacetEvent::Kind::Pick, stack.size(), picked, pi);
        PairSet reduced;
        reduced.reserve(M.size() - 1);
        for (const auto& p : M) {
          if (p != picked) reduced.push_back(p);
        }
        stack.push_back({std::move(M), picked, key});
        M = std::move(reduced);
        key = mix(key, 1);
        continue;
      }

      // pi is optimal within M: return it up the stack.
      record(result, FacetEvent::Kind::Return, stack.size(), {}, pi);
      for (;;) {
        if (stack.empty()) {
          result.policy = std::move(pi);
          return result;
        }
        Frame frame = std::move(stack.back());
        stack.pop_back();
        if (options_.check_invariants) check_restricted_optimum(frame.M, frame.picked, pi);
        if (is_improving(pi, frame.picked)) {
          pi = switch_pair(frame.picked, std::move(pi));
          ++result.switches;
          record(result, FacetEvent::Kind::Switch, stack.size(), frame.picked, pi);
          // Second call replaces the frame.
          M = std::move(frame.M);
          key = mix(frame.key, 2);
          break;
        }
      }
    }
  }

 private:
  struct Frame {
    PairSet M;
    StateAction picked;
    std::uint64_t key;
  };

  const SymbolicValue& value(const Policy& pi) {
    auto it = cache_.find(pi);
    if (it == cache_.end()) it = cache_.emplace(pi, policy_evaluate_symbolic(m_, pi)).first;
    return it->second;
  }

  int det_sign(const Policy& pi) {
    const SymbolicValue& v = value(pi);
    return sign_near_one(v.det);
  }

  bool is_improving(const Policy& pi, const StateAction& p) {
    if (pi[p.state] == p.action) return false;
    return sign_near_one(advantage_numerator(m_, value(pi), p.state, p.action)) * det_sign(pi) > 0;
  }

  const StateAction* first_improving(const PairSet& M, const Policy& pi) {
    for (const auto& p : M) {
      if (is_improving(pi, p)) return &p;
    }
    return nullptr;
  }

  void check_entry(const PairSet& M, const Policy& pi) const {
    std::vector<bool> covered(m_.n(), false);
    for (const auto& p : M) covered[p.state] = true;
    for (std::size_t s = 0; s < m_.n(); ++s) {
      if (!covered[s]) throw std::logic_error("pair set lost every action of a state");
      if (!contains(M, {s, pi[s]})) throw std::logic_error("policy pair missing from the pair set");
    }
  }

  void check_restricted_optimum(const PairSet& M, const StateAction& removed, const Policy& pi) {
    for (const auto& p : M) {
      if (p != removed && is_improving(pi, p)) throw std::logic_error("first call returned a non-optimal policy");
    }
  }

  void record(FacetResult& result, FacetEvent::Kind kind, std::size_t depth, StateAction pair, const Policy& pi) const {
    if (options_.record_transcript) result.transcript.push_back({kind, depth, pair, pi});
  }

  const Mdp& m_;
  FacetOptions options_;
  std::map<Policy, SymbolicValue> cache_;
};

}  // namespace

FacetResult random_facet_blackwell(const Mdp& m, const PairSet& M, const Policy& pi, const FacetOptions& options) {
  require_valid_policy(m, pi);
  PairSet sorted = M;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<bool> covered(m.n(), false);
  for (const auto& p : sorted) {
    if (p.state >= m.n() || p.action >= m.num_actions(p.state)) throw std::invalid_argument("pair set names an invalid pair");
    covered[p.state] = true;
  }
  for (std::size_t s = 0; s < m.n(); ++s) {
    if (!covered[s]) throw std::invalid_argument("pair set has no action for state " + std::to_string(s));
    if (!contains(sorted, {s, pi[s]})) throw std::invalid_argument("policy action at state " + std::to_string(s) + " is not in the pair set");
  }
  return Solver(m, options).run(std::move(sorted), pi);
}

FacetResult random_facet_blackwell(const Mdp& m, const Policy& pi, const FacetOptions& options) {
  return random_facet_blackwell(m, full_pair_set(m), pi, options);
}

}  // namespace blackwell
