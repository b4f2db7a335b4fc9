#ifndef WSBOUND_T_BOUND_ENGINE_HPP
#define WSBOUND_T_BOUND_ENGINE_HPP

#include <map>
#include <string>
#include <vector>

#include "wsbound/bound_engine.hpp"
#include "wsbound/field_model.hpp"

namespace wsbound {

/// Per-place record of which pole orders are realized by monomials with no
/// pole elsewhere. Such monomials are units at every place where all
/// coordinate functions are nonzero, so they certify the nonvanishing
/// hypothesis of the refined bound.
struct HypothesisReport {
  std::string place_name;
  std::size_t place = 0;
  Int up_to = 0;
  bool verified = false;
  std::string note;
  std::vector<std::pair<Int, ExponentVector>> realized;
  std::vector<Int> missing;
};

/// Certificate for the refined count: bounds #Q, the number of rational
/// places where every coordinate function is nonzero; the caller supplies how
/// many places fall outside Q.
struct TBoundCertificate {
  std::string model_id;
  std::string model_hash;
  std::vector<DivisorIndex> path;
  std::vector<CertificateEdge> edges;
  std::size_t final_direction = 0;
  Int horizon = 0;
  Int weight = 0;  // equals q_bound
  std::vector<HypothesisReport> hypothesis_report;
  Int excluded_count = 0;
  Int q_bound = 0;
  Int total_bound = 0;  // q_bound + excluded_count
};

class TBoundEngine {
 public:
  /// Keeps its own copy of the model, so temporaries are fine to pass.
  explicit TBoundEngine(CurveModel model, std::string model_id = "model");

  const CurveModel& model() const { return model_; }
  const NumericalSemigroup& semigroup(std::size_t j) const;
  std::size_t num_places() const { return place_semigroups_.size(); }

  /// (q-1) * multiplicity_j + 2g - 1.
  Int t_horizon(std::size_t j) const;

  /// Memoized hypothesis check for one place (realization of every member up
  /// to a window that certifies all of them).
  const HypothesisReport& hypothesis(std::size_t j);

  /// Edge weight for the refined count. Throws HypothesisUnverified when only
  /// the horizon rule could apply but the place's hypothesis fails.
  DeltaResult t_delta(const DivisorIndex& i, std::size_t j);

  TBoundCertificate evaluate_path(const std::vector<DivisorIndex>& path, Int excluded_count);
  TBoundCertificate search_window(Int width, Int excluded_count,
                                  Int node_budget = kDefaultNodeBudget);
  TBoundCertificate min_weight_path(Int max_width, Int excluded_count,
                                    Int node_budget = kDefaultNodeBudget);

 private:
  bool lambda_realized(std::size_t j, Int lambda);
  TBoundCertificate finish_certificate(const std::vector<DivisorIndex>& path, Int excluded_count);

  CurveModel model_;
  std::string model_id_;
  std::vector<NumericalSemigroup> place_semigroups_;
  std::map<std::pair<DivisorIndex, std::size_t>, DeltaResult> delta_cache_;
  std::map<std::pair<std::size_t, Int>, bool> realized_cache_;
  std::map<std::size_t, HypothesisReport> hypothesis_cache_;
};

/// Check that every member of H(P_j) up to `up_to` is realized by a monomial
/// with exact pole order there and no pole elsewhere.
HypothesisReport verify_t_hypothesis(const CurveModel& model, std::size_t j, Int up_to);

DeltaResult t_delta(const CurveModel& model, const DivisorIndex& i, std::size_t j);
TBoundCertificate t_evaluate_path(const CurveModel& model, const std::vector<DivisorIndex>& path,
                                  Int excluded_count);
TBoundCertificate t_min_weight_path(const CurveModel& model, Int max_width, Int excluded_count);

/// Degree beyond which every pair is negligible for the refined count, as a
/// function of the count being bounded: (q-1)(q_count + 2g) + 2g - 1.
/// Reporting only; the search engines use the per-place horizons instead.
Int t_negligible_degree(Int q, Int genus, Int q_count);

}  // namespace wsbound

#endif  // WSBOUND_T_BOUND_ENGINE_HPP
