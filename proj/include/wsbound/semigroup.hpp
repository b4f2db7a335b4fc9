#ifndef WSBOUND_SEMIGROUP_HPP
#define WSBOUND_SEMIGROUP_HPP

#include <vector>

#include "wsbound/types.hpp"

namespace wsbound {

/// Apery set of a numerical semigroup relative to a member e: the e smallest
/// members, one per residue class mod e. elements[r] is the smallest member
/// congruent to r mod e; elements[0] == 0.
struct AperySet {
  Int base = 0;
  std::vector<Int> elements;
};

/// A co-finite additive submonoid of the nonnegative integers, described by a
/// finite generating set with gcd 1. Immutable after construction; safe to
/// share across threads.
class NumericalSemigroup {
 public:
  static NumericalSemigroup from_generators(std::vector<Int> generators);

  /// Membership test; false for all negatives, true for everything at or
  /// beyond the conductor.
  bool contains(Int x) const {
    if (x < 0) return false;
    if (x >= static_cast<Int>(member_.size())) return true;
    return member_[static_cast<std::size_t>(x)];
  }

  const std::vector<Int>& generators() const { return generators_; }

  /// Smallest nonzero member.
  Int multiplicity() const { return multiplicity_; }

  /// Least c with [c, infinity) contained in the semigroup.
  Int conductor() const { return conductor_; }

  /// Number of gaps.
  Int genus() const { return genus_; }

  /// The complement in the nonnegative integers, sorted ascending. Every gap
  /// is below the conductor.
  std::vector<Int> gaps() const;

  /// Apery set relative to e; requires e to be a member.
  AperySet apery_set(Int e) const;

  /// The finite set H \ (eH* + H), sorted ascending, where
  /// eH* + H = { e*a + b : a, b members, a != 0 }. Every element is below
  /// e * multiplicity + conductor. Requires e >= 1.
  std::vector<Int> shifted_sum_complement(Int e) const;

 private:
  NumericalSemigroup() = default;

  std::vector<Int> generators_;
  Int multiplicity_ = 0;
  Int conductor_ = 0;
  Int genus_ = 0;
  std::vector<bool> member_;  // membership table on [0, size)
};

/// #(H \ (qH* + H)) + 1. Requires q >= 2.
Int geil_matsumoto_bound(const NumericalSemigroup& h, Int q);

/// q * multiplicity + 1. Requires q >= 2.
Int lewittes_bound(const NumericalSemigroup& h, Int q);

/// #(H \ ((q-1)H* + H)). Bounds only the count of places where all coordinate
/// functions are nonzero; callers add the excluded places. Requires q >= 2.
Int single_point_t_bound(const NumericalSemigroup& h, Int q);

/// q + 1 + floor(2g sqrt(q)), computed exactly in integers.
Int hasse_weil_bound(Int genus, Int q);

}  // namespace wsbound

#endif  // WSBOUND_SEMIGROUP_HPP
