#include "blackwell/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace blackwell {
namespace {

Polynomial positive_rescale(const Polynomial& p) {
  Polynomial q = primitive_part(p);
  return sgn(p.leading()) < 0 ? -q : q;
}

double log_gap(const Rational& x) { return digits_below_one(x); }

// Split point strictly inside (lo, hi). In log mode the split halves the
// interval in u = -log10(1 - x); the double is converted exactly.
Rational split_point(const Rational& lo, const Rational& hi, bool log_scale) {
  if (log_scale && lo < 1) {
    const double ulo = log_gap(lo);
    const double uhi = log_gap(hi);
    const double umid = std::isinf(uhi) ? std::max(2 * ulo, ulo + 1) : (ulo + uhi) / 2;
    const double gap = std::pow(10.0, -umid);
    if (gap > 0 && std::isfinite(gap)) {
      Rational mid = 1 - Rational(gap);
      if (lo < mid && mid < hi) return mid;
    }
  }
  Rational mid = (lo + hi) / 2;
  return mid;
}

bool precise_enough(const RootInterval& iv, const Precision& precision) {
  if (iv.exact()) return true;
  if (iv.width() > precision.width) return false;
  if (precision.log_width) {
    const double du = log_gap(iv.hi) - log_gap(iv.lo);
    if (!(du <= *precision.log_width)) return false;
  }
  return true;
}

bool sign_change_at(const Polynomial& p, const RootInterval& iv) {
  if (iv.exact()) return root_multiplicity(p, iv.lo) % 2 == 1;
  return p.sign_at(iv.lo) != p.sign_at(iv.hi);
}

// Sturm-based counting on a squarefree polynomial.
class Isolator {
 public:
  explicit Isolator(const Polynomial& p) : w_(squarefree_part(p)), sturm_(sturm_sequence(w_)) {}

  const Polynomial& squarefree() const { return w_; }
  bool is_root(const Rational& x) const { return w_.sign_at(x) == 0; }

  // Distinct roots in the open interval (lo, hi).
  int count_open(const Rational& lo, const Rational& hi) const {
    return count_roots(sturm_, lo, hi) - (is_root(hi) ? 1 : 0);
  }

  // (lo, hi) holds exactly one root; move roots off the endpoints, or
  // collapse onto the root if a split point hits it.
  void clear_endpoints(RootInterval& iv, bool log_scale) const {
    while (!iv.exact() && (is_root(iv.lo) || is_root(iv.hi))) {
      Rational mid = split_point(iv.lo, iv.hi, log_scale);
      if (is_root(mid)) {
        iv.lo = iv.hi = mid;
      } else if (count_open(iv.lo, mid) == 1) {
        iv.hi = mid;
      } else {
        iv.lo = mid;
      }
    }
  }

 private:
  Polynomial w_;
  std::vector<Polynomial> sturm_;
};

}  // namespace

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
  std::vector<Polynomial> seq;
  if (p.is_zero()) return seq;
  seq.push_back(positive_rescale(p));
  Polynomial dp = p.derivative();
  if (dp.is_zero()) return seq;
  seq.push_back(positive_rescale(dp));
  while (seq.back().degree() > 0) {
    Polynomial r = divmod(seq[seq.size() - 2], seq.back()).remainder;
    if (r.is_zero()) break;
    seq.push_back(positive_rescale(-r));
  }
  return seq;
}

int sign_variations(const std::vector<Polynomial>& sturm, const Rational& x) {
  int variations = 0;
  int last = 0;
  for (const auto& q : sturm) {
    const int s = q.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

int count_roots(const std::vector<Polynomial>& sturm, const Rational& a, const Rational& b) {
  return sign_variations(sturm, a) - sign_variations(sturm, b);
}

void bisect(RootInterval& iv, const Polynomial& p, bool log_scale) {
  if (iv.exact()) return;
  const int slo = p.sign_at(iv.lo);
  const int shi = p.sign_at(iv.hi);
  if (slo == 0 || shi == 0 || slo == shi) {
    throw std::logic_error("bisect: interval does not bracket a simple root");
  }
  Rational mid = split_point(iv.lo, iv.hi, log_scale);
  const int smid = p.sign_at(mid);
  if (smid == 0) {
    iv.lo = iv.hi = mid;
  } else if (smid == slo) {
    iv.lo = std::move(mid);
  } else {
    iv.hi = std::move(mid);
  }
}

void refine(RootInterval& iv, const Polynomial& p, const Precision& precision) {
  const bool log_scale = precision.log_width.has_value();
  while (!precise_enough(iv, precision)) bisect(iv, p, log_scale);
}

std::vector<RootInterval> isolate_roots(const Polynomial& p, const Rational& a, const Rational& b,
                                        const Precision& precision) {
  if (p.is_zero()) throw std::domain_error("isolate_roots: zero polynomial");
  if (!(a < b)) throw std::domain_error("isolate_roots: empty interval");
  std::vector<RootInterval> out;
  if (p.degree() == 0) return out;

  const Isolator iso(p);
  const bool log_scale = precision.log_width.has_value();
  if (iso.is_root(a)) out.push_back({a, a, false});

  std::vector<std::pair<Rational, Rational>> stack{{a, b}};
  while (!stack.empty()) {
    auto [lo, hi] = std::move(stack.back());
    stack.pop_back();
    const int count = iso.count_open(lo, hi);
    if (count == 0) continue;
    if (count == 1) {
      RootInterval iv{lo, hi, false};
      iso.clear_endpoints(iv, log_scale);
      refine(iv, iso.squarefree(), precision);
      out.push_back(std::move(iv));
      continue;
    }
    Rational mid = split_point(lo, hi, log_scale);
    if (iso.is_root(mid)) out.push_back({mid, mid, false});
    stack.emplace_back(lo, mid);
    stack.emplace_back(std::move(mid), std::move(hi));
  }
  for (auto& iv : out) iv.sign_change = sign_change_at(p, iv);
  std::sort(out.begin(), out.end(), [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
  return out;
}

std::optional<RootInterval> largest_root_below_one(const Polynomial& p, const Precision& precision) {
  if (p.is_zero()) throw std::domain_error("largest_root_below_one: zero polynomial");
  if (p.degree() == 0) return std::nullopt;

  const Isolator iso(p);
  const bool log_scale = precision.log_width.has_value();
  RootInterval iv{Rational(0), Rational(1), false};
  if (iso.count_open(iv.lo, iv.hi) == 0) {
    if (!iso.is_root(0)) return std::nullopt;
    iv.hi = 0;
  }
  // Invariant: (lo, hi) holds a root and [hi, 1) holds none.
  while (!iv.exact() && iso.count_open(iv.lo, iv.hi) > 1) {
    Rational mid = split_point(iv.lo, iv.hi, log_scale);
    if (iso.count_open(mid, iv.hi) >= 1) {
      iv.lo = std::move(mid);
    } else if (iso.is_root(mid)) {
      iv.lo = mid;
      iv.hi = std::move(mid);
    } else {
      iv.hi = std::move(mid);
    }
  }
  iso.clear_endpoints(iv, log_scale);
  refine(iv, iso.squarefree(), precision);
  iv.sign_change = sign_change_at(p, iv);
  return iv;
}

std::optional<RootInterval> largest_sign_changing_root_below_one(const Polynomial& p,
                                                                 const Precision& precision) {
  if (p.is_zero()) throw std::domain_error("largest_sign_changing_root_below_one: zero polynomial");
  auto iv = largest_root_below_one(odd_multiplicity_part(p), precision);
  if (iv) iv->sign_change = true;
  return iv;
}

}  // namespace blackwell
