#include "parreg/angle.hpp"

#include "parreg/errors.hpp"

namespace parreg {

RationalAngle::RationalAngle(Int numerator, Int denominator) {
  if (denominator == 0) throw Error("angle denominator must be nonzero");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  numerator = floor_mod(numerator, denominator);  // wrap into [0, 1) turns
  Int g;
  mpz_gcd(g.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
  if (g == 0) g = 1;
  num_ = numerator / g;
  den_ = denominator / g;
}

RationalAngle RationalAngle::distance_to_zero() const {
  // min(q, 1 - q); both sides already reduced over the same denominator
  if (2 * num_ <= den_) return *this;
  return RationalAngle(den_ - num_, den_);
}

RationalAngle RationalAngle::circle_distance(const RationalAngle& a, const RationalAngle& b) {
  RationalAngle diff(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  return diff.distance_to_zero();
}

bool RationalAngle::operator==(const RationalAngle& other) const {
  return num_ == other.num_ && den_ == other.den_;
}

bool RationalAngle::operator<(const RationalAngle& other) const {
  return num_ * other.den_ < other.num_ * den_;
}

std::string RationalAngle::str() const { return num_.get_str() + "/" + den_.get_str(); }

Int interval_colour(const RationalAngle& q, const Int& buckets) {
  if (buckets < 1) throw Error("bucket count must be at least 1");
  return floor_div(q.numerator() * buckets, q.denominator());
}

Int required_d(std::size_t n, const RationalAngle& delta) {
  if (delta.is_zero()) throw ZeroDistance("circle distance must be positive");
  const RationalAngle dist = delta.distance_to_zero();
  // smallest d with n/d < dist, i.e. d > n * den / num
  Int d = floor_div(Int(static_cast<unsigned long>(n)) * dist.denominator(),
                    dist.numerator()) +
          1;
  return d;
}

}  // namespace parreg
