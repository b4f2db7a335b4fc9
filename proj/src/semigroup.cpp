#include "wsbound/semigroup.hpp"

#include <algorithm>
#include <numeric>

namespace wsbound {

namespace {

constexpr Int kClosureWindowCap = Int{1} << 27;

// Additive-closure table of the generators on [0, window].
std::vector<bool> closure_table(const std::vector<Int>& gens, Int window) {
  std::vector<bool> member(static_cast<std::size_t>(window) + 1, false);
  member[0] = true;
  for (Int x = 1; x <= window; ++x) {
    for (Int g : gens) {
      if (g <= x && member[static_cast<std::size_t>(x - g)]) {
        member[static_cast<std::size_t>(x)] = true;
        break;
      }
    }
  }
  return member;
}

}  // namespace

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<Int> generators) {
  if (generators.empty()) throw EmptyGenerators("generator list is empty");
  for (Int g : generators) {
    if (g <= 0) throw Error("generators must be positive");
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

  Int g = 0;
  for (Int v : generators) g = std::gcd(g, v);
  if (g != 1) throw NonCoprimeGenerators("gcd of generators is not 1");

  NumericalSemigroup h;
  h.generators_ = generators;
  h.multiplicity_ = generators.front();

  // Grow the closure window until it contains a run of `multiplicity`
  // consecutive members; everything beyond such a run is a member.
  Int window = std::min(kClosureWindowCap, std::max<Int>(64, checked_mul(2, generators.back())));
  for (;;) {
    std::vector<bool> member = closure_table(generators, window);
    Int run = 0;
    Int run_end = -1;
    for (Int x = 0; x <= window; ++x) {
      run = member[static_cast<std::size_t>(x)] ? run + 1 : 0;
      if (run >= h.multiplicity_) {
        run_end = x;
        break;
      }
    }
    if (run_end >= 0) {
      Int conductor = 0;
      for (Int x = run_end - h.multiplicity_; x >= 0; --x) {
        if (!member[static_cast<std::size_t>(x)]) {
          conductor = x + 1;
          break;
        }
      }
      h.conductor_ = conductor;
      // Keep the table through conductor + multiplicity; contains() treats
      // everything beyond the table as a member.
      Int limit = std::min(window, checked_add(conductor, h.multiplicity_));
      member.resize(static_cast<std::size_t>(limit) + 1);
      h.member_ = std::move(member);
      h.genus_ = 0;
      for (Int x = 0; x < conductor; ++x) {
        if (!h.member_[static_cast<std::size_t>(x)]) ++h.genus_;
      }
      return h;
    }
    if (window >= kClosureWindowCap) {
      throw CapExceeded("semigroup closure window exceeds cap");
    }
    window = std::min(kClosureWindowCap, checked_mul(window, 2));
  }
}

std::vector<Int> NumericalSemigroup::gaps() const {
  std::vector<Int> out;
  for (Int x = 0; x < conductor_; ++x) {
    if (!contains(x)) out.push_back(x);
  }
  return out;
}

AperySet NumericalSemigroup::apery_set(Int e) const {
  if (e <= 0 || !contains(e)) {
    throw BaseNotInSemigroup("Apery base must be a nonzero member of the semigroup");
  }
  AperySet ap;
  ap.base = e;
  ap.elements.resize(static_cast<std::size_t>(e));
  for (Int r = 0; r < e; ++r) {
    Int x = r;
    while (!contains(x)) x = checked_add(x, e);
    ap.elements[static_cast<std::size_t>(r)] = x;
  }
  return ap;
}

std::vector<Int> NumericalSemigroup::shifted_sum_complement(Int e) const {
  if (e < 1) throw Error("shift factor must be at least 1");
  // Everything at or beyond e*multiplicity + conductor lies in
  // e*multiplicity + H, so the complement lives below this cap.
  Int cap = checked_add(checked_mul(e, multiplicity_), conductor_);
  std::vector<bool> in_sum(static_cast<std::size_t>(cap), false);
  Int lambda_max = (cap - 1) / e;
  for (Int lambda = multiplicity_; lambda <= lambda_max; ++lambda) {
    if (!contains(lambda)) continue;
    Int base = e * lambda;
    for (Int h = 0; base + h < cap; ++h) {
      if (contains(h)) in_sum[static_cast<std::size_t>(base + h)] = true;
    }
  }
  std::vector<Int> out;
  for (Int x = 0; x < cap; ++x) {
    if (contains(x) && !in_sum[static_cast<std::size_t>(x)]) out.push_back(x);
  }
  return out;
}

Int geil_matsumoto_bound(const NumericalSemigroup& h, Int q) {
  if (q < 2) throw Error("field size must be at least 2");
  return static_cast<Int>(h.shifted_sum_complement(q).size()) + 1;
}

Int lewittes_bound(const NumericalSemigroup& h, Int q) {
  if (q < 2) throw Error("field size must be at least 2");
  return checked_add(checked_mul(q, h.multiplicity()), 1);
}

Int single_point_t_bound(const NumericalSemigroup& h, Int q) {
  if (q < 2) throw Error("field size must be at least 2");
  return static_cast<Int>(h.shifted_sum_complement(q - 1).size());
}

Int hasse_weil_bound(Int genus, Int q) {
  if (q < 2) throw Error("field size must be at least 2");
  if (genus < 0) throw Error("genus must be nonnegative");
  // floor(2g sqrt(q)) = isqrt(4 g^2 q)
  Int radicand = checked_mul(checked_mul(4, checked_mul(genus, genus)), q);
  return checked_add(q + 1, isqrt(radicand));
}

}  // namespace wsbound
