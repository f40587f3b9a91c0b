#pragma once

#include <string>

#include "parreg/int_matrix.hpp"

namespace parreg {

/// Point on the circle with rational argument, stored as a reduced fraction
/// of a full turn in [0, 1).
class RationalAngle {
public:
  RationalAngle() : num_(0), den_(1) {}
  /// Wraps into [0, 1) and reduces. denominator must be nonzero.
  RationalAngle(Int numerator, Int denominator);

  const Int& numerator() const { return num_; }
  const Int& denominator() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  /// Circle distance to zero, min(q, 1-q), as a fraction of a turn.
  RationalAngle distance_to_zero() const;
  /// Circle distance between two angles.
  static RationalAngle circle_distance(const RationalAngle& a, const RationalAngle& b);

  bool operator==(const RationalAngle& other) const;
  bool operator<(const RationalAngle& other) const;

  std::string str() const;

private:
  Int num_;
  Int den_;
};

/// Index of the half-open bucket [j/d, (j+1)/d) containing q; exact.
Int interval_colour(const RationalAngle& q, const Int& buckets);

/// Smallest d with n/d < min(delta, 1 - delta), where delta is a circle
/// distance in (0, 1). With this many buckets, two angles sharing a bucket
/// differ by less than 1/d turn, so n such signed differences cannot sum to
/// an angle at distance delta from zero. Throws ZeroDistance when delta = 0.
Int required_d(std::size_t n, const RationalAngle& delta);

}  // namespace parreg
