#include "blackwell/ratfun.hpp"

#include <stdexcept>

namespace blackwell {

RationalFunction::RationalFunction(const Rational& c)
    : num_(Polynomial::constant(c)), den_(Polynomial::constant(1)) {}

RationalFunction::RationalFunction(const Polynomial& p) : num_(p), den_(Polynomial::constant(1)) {
  canonicalize();
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  canonicalize();
}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(1);
    return;
  }
  OneMinusXSplit n = split_at_one(num_);
  OneMinusXSplit d = split_at_one(den_);
  const std::size_t common = std::min(n.multiplicity, d.multiplicity);
  if (common > 0) {
    const Polynomial f = Polynomial::one_minus_x();
    num_ = n.cofactor * pow(f, n.multiplicity - common);
    den_ = d.cofactor * pow(f, d.multiplicity - common);
  }
  Polynomial prim = primitive_part(den_);
  // den = prim * (den.leading / prim.leading); move that scalar into num.
  const Rational scale = prim.leading() / den_.leading();
  num_ *= scale;
  den_ = std::move(prim);
}

Rational RationalFunction::operator()(const Rational& x) const {
  const Rational d = den_(x);
  if (sgn(d) == 0) throw std::domain_error("rational function evaluated at a pole");
  return num_(x) / d;
}

RationalFunction RationalFunction::reduced() const {
  if (num_.is_zero()) return *this;
  const Polynomial g = gcd(num_, den_);
  return RationalFunction(exact_quotient(num_, g), exact_quotient(den_, g));
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) {
  if (den_ == rhs.den_) {
    num_ -= rhs.num_;
  } else {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by the zero rational function");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  canonicalize();
  return *this;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string RationalFunction::to_string(std::string_view var) const {
  if (den_.degree() == 0 && den_.leading() == 1) return num_.to_string(var);
  return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

int sign_near_one(const Polynomial& p) {
  if (p.is_zero()) return 0;
  return sgn(split_at_one(p).cofactor(Rational(1)));
}

int sign_near_one(const RationalFunction& r) { return sign_near_one(r.num()) * sign_near_one(r.den()); }

MuOrdering mu_compare(const RationalFunction& r1, const RationalFunction& r2) {
  // tau = eta / delta with eta = p1 q2 - p2 q1 and delta = q1 q2.
  const Polynomial eta = r1.num() * r2.den() - r2.num() * r1.den();
  const int s = sign_near_one(eta) * sign_near_one(r1.den()) * sign_near_one(r2.den());
  if (s > 0) return MuOrdering::Greater;
  if (s < 0) return MuOrdering::Less;
  return MuOrdering::Equal;
}

const char* to_string(MuOrdering o) {
  switch (o) {
    case MuOrdering::Less: return "Less";
    case MuOrdering::Equal: return "Equal";
    case MuOrdering::Greater: return "Greater";
  }
  return "?";
}

}  // namespace blackwell
