#include "blackwell/oracle.hpp"

#include <algorithm>
#include <set>

namespace blackwell {
namespace {

struct PolyLess {
  bool operator()(const Polynomial& a, const Polynomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const auto& ca = a.coefficients();
    const auto& cb = b.coefficients();
    for (std::size_t i = ca.size(); i-- > 0;) {
      const int c = cmp(ca[i], cb[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }
};

void check_budget(const Mdp& m, std::size_t budget) {
  const std::size_t count = m.policy_count();
  if (count > budget) {
    throw BudgetExceeded("MDP has " + std::to_string(count) + " policies, enumeration budget is " +
                         std::to_string(budget) + "; use the deviation threshold mode instead");
  }
}

std::vector<Policy> all_policies(const Mdp& m) {
  std::vector<Policy> out;
  Policy pi = first_action_policy(m);
  do {
    out.push_back(pi);
  } while (next_policy(m, pi));
  return out;
}

// Indices of the policies whose values are maximal at every state near 1.
std::vector<std::size_t> dominant(const std::vector<std::vector<RationalFunction>>& values) {
  const std::size_t n = values.front().size();
  std::vector<RationalFunction> best = values.front();
  std::vector<std::size_t> members{0};
  for (std::size_t p = 1; p < values.size(); ++p) {
    bool raised = false;
    bool attains = true;
    for (std::size_t s = 0; s < n; ++s) {
      switch (mu_compare(values[p][s], best[s])) {
        case MuOrdering::Greater:
          best[s] = values[p][s];
          raised = true;
          break;
        case MuOrdering::Less: attains = false; break;
        case MuOrdering::Equal: break;
      }
    }
    if (raised) members.clear();
    if (attains) members.push_back(p);
  }
  return members;
}

// Same at a fixed discount factor with exact values.
std::vector<std::size_t> dominant_at(const std::vector<std::vector<Rational>>& values) {
  const std::size_t n = values.front().size();
  std::vector<Rational> best = values.front();
  for (const auto& v : values)
    for (std::size_t s = 0; s < n; ++s)
      if (v[s] > best[s]) best[s] = v[s];
  std::vector<std::size_t> members;
  for (std::size_t p = 0; p < values.size(); ++p) {
    if (values[p] == best) members.push_back(p);
  }
  return members;
}

bool overlaps(const RootInterval& a, const RootInterval& b) { return !(a.hi < b.lo || b.hi < a.lo); }

// Whether the roots isolated by (pa, a) and (pb, b) coincide. Requires the
// intervals to overlap.
bool same_root(const Polynomial& pa, const RootInterval& a, const Polynomial& pb, const RootInterval& b) {
  if (a.exact() && b.exact()) return a.lo == b.lo;
  if (a.exact()) return b.lo < a.lo && a.lo < b.hi && pb.sign_at(a.lo) == 0;
  if (b.exact()) return a.lo < b.lo && b.lo < a.hi && pa.sign_at(b.lo) == 0;
  const Rational lo = std::max(a.lo, b.lo);
  const Rational hi = std::min(a.hi, b.hi);
  if (!(lo < hi)) return false;
  const Polynomial g = gcd(pa, pb);
  if (g.degree() < 1) return false;
  // g divides both, so it is nonzero at lo and hi.
  return count_roots(sturm_sequence(g), lo, hi) > 0;
}

struct RootGroup {
  const Polynomial* poly;
  RootInterval iv;
};

}  // namespace

BoResult brute_force_bo_set(const Mdp& m, std::size_t budget) {
  require_valid(m);
  check_budget(m, budget);
  const auto policies = all_policies(m);
  std::vector<std::vector<RationalFunction>> values;
  values.reserve(policies.size());
  for (const auto& pi : policies) values.push_back(policy_evaluate_symbolic(m, pi).values());
  BoResult result;
  for (std::size_t i : dominant(values)) result.bo_set.push_back(policies[i]);
  if (result.bo_set.empty()) throw std::logic_error("no policy dominates all others");
  result.values = values[dominant(values).front()];
  return result;
}

ThresholdInterval deviation_threshold(const Mdp& m, const Policy& pi, const Precision& precision) {
  const SymbolicValue v = policy_evaluate_symbolic(m, pi);
  std::set<Polynomial, PolyLess> seen;
  ThresholdInterval best;
  bool found = false;
  for (std::size_t s = 0; s < m.n(); ++s) {
    for (std::size_t a = 0; a < m.num_actions(s); ++a) {
      if (a == pi[s]) continue;
      const Polynomial num = advantage_numerator(m, v, s, a);
      if (num.is_zero()) continue;
      Polynomial odd = primitive_part(odd_multiplicity_part(num));
      if (odd.degree() < 1 || !seen.insert(odd).second) continue;
      const auto iv = largest_root_below_one(odd, precision);
      if (!iv) continue;
      if (!found || iv->hi > best.hi) best.witness = StateAction{s, a};
      if (!found) {
        best.lo = iv->lo;
        best.hi = iv->hi;
        found = true;
      } else {
        best.lo = std::max(best.lo, iv->lo);
        best.hi = std::max(best.hi, iv->hi);
      }
    }
  }
  return best;
}

GammaBwResult gamma_bw_exact(const Mdp& m, const Precision& precision, std::size_t budget) {
  require_valid(m);
  check_budget(m, budget);
  const auto policies = all_policies(m);
  std::vector<SymbolicValue> sv;
  std::vector<std::vector<RationalFunction>> values;
  for (const auto& pi : policies) {
    sv.push_back(policy_evaluate_symbolic(m, pi));
    values.push_back(sv.back().values());
  }
  const std::vector<std::size_t> bo = dominant(values);
  GammaBwResult result;
  for (std::size_t i : bo) result.bo_set.push_back(policies[i]);

  // Odd-multiplicity parts of every pairwise difference numerator.
  std::set<Polynomial, PolyLess> raw;
  for (std::size_t i = 0; i < sv.size(); ++i) {
    for (std::size_t j = i + 1; j < sv.size(); ++j) {
      for (std::size_t s = 0; s < m.n(); ++s) {
        Polynomial eta = sv[i].numerators[s] * sv[j].det - sv[j].numerators[s] * sv[i].det;
        if (eta.degree() >= 1) raw.insert(primitive_part(eta));
      }
    }
  }
  std::set<Polynomial, PolyLess> candidates;
  for (const auto& p : raw) {
    Polynomial odd = primitive_part(odd_multiplicity_part(p));
    if (odd.degree() >= 1) candidates.insert(std::move(odd));
  }
  result.candidate_polynomials = candidates.size();

  // Distinct candidate roots in [0, 1), with pairwise disjoint intervals.
  const Precision coarse{Rational(1, 1024), std::nullopt};
  std::vector<RootGroup> groups;
  for (const auto& q : candidates) {
    for (RootInterval iv : isolate_roots(q, Rational(0), Rational(1), coarse)) {
      ++result.candidate_roots;
      bool merged = false;
      for (auto& g : groups) {
        while (overlaps(g.iv, iv)) {
          if (same_root(*g.poly, g.iv, q, iv)) {
            merged = true;
            break;
          }
          bisect(g.iv, *g.poly);
          bisect(iv, q);
        }
        if (merged) break;
      }
      if (!merged) groups.push_back({&q, iv});
    }
  }
  std::sort(groups.begin(), groups.end(), [](const RootGroup& a, const RootGroup& b) { return a.iv.lo > b.iv.lo; });

  // Between consecutive candidate roots the optimal set is constant; above
  // the largest it is the Blackwell-optimal set.
  for (std::size_t k = 0; k < groups.size(); ++k) {
    RootGroup& g = groups[k];
    Rational t;
    if (k + 1 < groups.size()) {
      t = (groups[k + 1].iv.hi + g.iv.lo) / 2;
    } else if (g.iv.lo > 0) {
      t = g.iv.lo / 2;
    } else if (!g.iv.exact()) {
      t = 0;
    } else {
      break;  // root at 0: nothing below it in [0, 1)
    }
    std::vector<std::vector<Rational>> at_t;
    at_t.reserve(sv.size());
    for (const auto& v : sv) at_t.push_back(v.evaluate(t));
    if (dominant_at(at_t) != bo) {
      refine(g.iv, *g.poly, precision);
      result.interval.lo = g.iv.lo;
      result.interval.hi = g.iv.hi;
      return result;
    }
  }
  return result;
}

}  // namespace blackwell
