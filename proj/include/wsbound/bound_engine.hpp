#ifndef WSBOUND_BOUND_ENGINE_HPP
#define WSBOUND_BOUND_ENGINE_HPP

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "wsbound/field_model.hpp"

namespace wsbound {

// Why an edge (i, i + e_j) of the divisor lattice carries weight 0, or the
// marker that it does not.
struct NonNegligible {};
struct SpaceEquality {};
struct Decomposition {
  Int lambda = 0;            // nonzero member of H(P_j)
  Int mu = 0;                // member of H_i(P_j), mu + q*lambda = i_j + 1
  ExponentVector monomial;   // witness realizing mu
};
struct HorizonRule {
  Int threshold = 0;  // edge degree at or beyond this is always negligible
};
using NegligibilityWitness = std::variant<NonNegligible, SpaceEquality, Decomposition, HorizonRule>;

struct DeltaResult {
  int value = 1;  // 0 or 1
  NegligibilityWitness witness = NonNegligible{};
};

enum class HorizonMode { corollary, proposition };

struct CertificateEdge {
  DivisorIndex from;
  DivisorIndex to;
  std::size_t direction = 0;
  int delta = 1;
  NegligibilityWitness witness = NonNegligible{};
};

/// A re-checkable upper-bound derivation: a unit-step lattice path from
/// degree -1 to a degree at or beyond the horizon of its final direction,
/// with the weight of every edge recomputable from the model alone.
struct BoundCertificate {
  std::string model_id;
  std::string model_hash;
  std::vector<DivisorIndex> path;
  std::vector<CertificateEdge> edges;
  std::size_t final_direction = 0;
  Int horizon = 0;
  Int weight = 0;
  Int bound = 0;  // num_distinguished + weight
};

inline constexpr Int kDefaultNodeBudget = 1'000'000;

class BoundEngine {
 public:
  /// Keeps its own copy of the model, so temporaries are fine to pass.
  explicit BoundEngine(CurveModel model, std::string model_id = "model");

  const CurveModel& model() const { return model_; }
  const NumericalSemigroup& semigroup(std::size_t j) const;
  std::size_t num_places() const { return place_semigroups_.size(); }

  /// Edge weight with its witness. Memoized; recomputation is deterministic.
  DeltaResult delta(const DivisorIndex& i, std::size_t j);

  Int horizon(std::size_t j, HorizonMode mode = HorizonMode::corollary) const;

  /// Recompute every edge of a caller-supplied path and assemble the
  /// certificate. Throws InvalidPath when the path does not start at degree
  /// -1, takes a non-unit step, or stops short of the horizon of its final
  /// direction.
  BoundCertificate evaluate_path(const std::vector<DivisorIndex>& path);

  /// Dijkstra over one lattice window: for each choice of spine coordinate p
  /// the window is [-1, horizon_p] in coordinate p and [0, width] elsewhere,
  /// starting from -1 in coordinate p. Returns the best certificate over all
  /// spine choices. Deterministic: equal-weight frontier nodes pop in
  /// lexicographic order.
  BoundCertificate search_window(Int width, Int node_budget = kDefaultNodeBudget);

  /// Progressive widening from width 0 through max_width; every width is
  /// searched and the best certificate wins.
  BoundCertificate min_weight_path(Int max_width, Int node_budget = kDefaultNodeBudget);

 private:
  CurveModel model_;
  std::string model_id_;
  std::vector<NumericalSemigroup> place_semigroups_;
  std::map<std::pair<DivisorIndex, std::size_t>, DeltaResult> delta_cache_;
};

DeltaResult delta(const CurveModel& model, const DivisorIndex& i, std::size_t j);
Int horizon(const CurveModel& model, std::size_t j, HorizonMode mode = HorizonMode::corollary);
BoundCertificate evaluate_path(const CurveModel& model, const std::vector<DivisorIndex>& path);
BoundCertificate min_weight_path(const CurveModel& model, Int max_width);

/// n + weight of a minimum-weight path under the default widening policy.
Int multipoint_bound(const CurveModel& model);

/// Default widening cap used by multipoint_bound: wide enough to let paths
/// trade poles between places across the whole gap range.
Int default_width_cap(const CurveModel& model);

}  // namespace wsbound

#endif  // WSBOUND_BOUND_ENGINE_HPP
