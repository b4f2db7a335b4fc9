#include "wsbound/t_bound_engine.hpp"

#include <algorithm>

#include "lattice_search.hpp"

namespace wsbound {

TBoundEngine::TBoundEngine(CurveModel model, std::string model_id)
    : model_(std::move(model)), model_id_(std::move(model_id)) {
  std::size_t n = model_.num_distinguished();
  if (n == 0) throw ValidationFailure("model has no distinguished place");
  place_semigroups_.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    place_semigroups_.push_back(place_semigroup(model_, j));
  }
}

const NumericalSemigroup& TBoundEngine::semigroup(std::size_t j) const {
  if (j >= place_semigroups_.size()) throw UnknownPlace("distinguished place index out of range");
  return place_semigroups_[j];
}

Int TBoundEngine::t_horizon(std::size_t j) const {
  return checked_add(checked_mul(model_.q - 1, semigroup(j).multiplicity()),
                     2 * model_.genus - 1);
}

bool TBoundEngine::lambda_realized(std::size_t j, Int lambda) {
  auto key = std::make_pair(j, lambda);
  if (auto it = realized_cache_.find(key); it != realized_cache_.end()) return it->second;
  bool ok = monomial_with_exact_pole(model_, j, lambda).has_value();
  realized_cache_.emplace(key, ok);
  return ok;
}

const HypothesisReport& TBoundEngine::hypothesis(std::size_t j) {
  if (auto it = hypothesis_cache_.find(j); it != hypothesis_cache_.end()) return it->second;
  const NumericalSemigroup& h = semigroup(j);
  // Realizations multiply: once every member up to conductor + multiplicity
  // is realized, every member is. Reaching past the horizon keeps the report
  // directly usable for any path the search emits. Multiplying witnesses
  // needs every exponent lower bound to be absent or nonnegative.
  Int up_to = std::max(checked_add(h.conductor(), h.multiplicity()),
                       checked_add(t_horizon(j), 1));
  HypothesisReport report = verify_t_hypothesis(model_, j, up_to);
  report.place = j;
  for (std::size_t t = 0; t < model_.arity(); ++t) {
    if (model_.exponent_lower_bounds[t] && *model_.exponent_lower_bounds[t] < 0) {
      report.verified = false;
      report.note = "exponent lower bound of '" + model_.functions[t] +
                    "' is negative; realizations do not multiply";
    }
  }
  return hypothesis_cache_.emplace(j, std::move(report)).first->second;
}

DeltaResult TBoundEngine::t_delta(const DivisorIndex& i, std::size_t j) {
  if (i.size() != place_semigroups_.size()) throw Error("divisor index arity mismatch");
  if (j >= place_semigroups_.size()) throw UnknownPlace("distinguished place index out of range");
  auto key = std::make_pair(i, j);
  if (auto it = delta_cache_.find(key); it != delta_cache_.end()) return it->second;

  DeltaResult result;
  if (!realizes_pole_increment(model_, i, j)) {
    result = {0, SpaceEquality{}};
  } else {
    result = {1, NonNegligible{}};
    const NumericalSemigroup& h = semigroup(j);
    Int q = model_.q;
    Int lambda_cap = floor_div(degree(i) + 1, q - 1);
    for (Int lambda = h.multiplicity(); lambda <= lambda_cap; ++lambda) {
      if (!h.contains(lambda) || !lambda_realized(j, lambda)) continue;
      Int mu = i[j] + 1 - (q - 1) * lambda;
      if (auto witness = h_set_witness(model_, i, j, mu)) {
        result = {0, Decomposition{lambda, mu, *witness}};
        break;
      }
    }
    if (result.value == 1) {
      Int threshold = t_horizon(j);
      if (degree(i) >= threshold) {
        if (!hypothesis(j).verified) {
          throw HypothesisUnverified("place " + model_.distinguished_place(j).name +
                                     " fails the pole realization hypothesis; the horizon rule "
                                     "does not apply");
        }
        result = {0, HorizonRule{threshold}};
      }
    }
  }
  delta_cache_.emplace(std::move(key), result);
  return result;
}

TBoundCertificate TBoundEngine::finish_certificate(const std::vector<DivisorIndex>& path,
                                                   Int excluded_count) {
  if (excluded_count < 0) throw Error("excluded place count must be nonnegative");
  std::size_t n = place_semigroups_.size();
  if (path.size() < 2) throw InvalidPath("path needs at least one edge");
  for (const auto& node : path) {
    if (node.size() != n) throw InvalidPath("path node arity does not match the model");
  }
  if (degree(path.front()) != -1) throw InvalidPath("path must start at degree -1");

  TBoundCertificate cert;
  cert.model_id = model_id_;
  cert.model_hash = model_hash(model_);
  cert.path = path;
  Int weight = 0;
  std::size_t last_dir = 0;
  for (std::size_t k = 1; k < path.size(); ++k) {
    std::size_t dir = n;
    for (std::size_t j = 0; j < n; ++j) {
      Int step = path[k][j] - path[k - 1][j];
      if (step == 0) continue;
      if (step != 1 || dir != n) throw InvalidPath("path steps must add a single unit vector");
      dir = j;
    }
    if (dir == n) throw InvalidPath("path steps must add a single unit vector");
    DeltaResult dr = t_delta(path[k - 1], dir);
    cert.edges.push_back({path[k - 1], path[k], dir, dr.value, dr.witness});
    weight += dr.value;
    last_dir = dir;
  }
  Int final_degree = degree(path.back());
  Int hz = t_horizon(last_dir);
  if (final_degree < hz) {
    throw InvalidPath("path ends at degree " + std::to_string(final_degree) +
                      ", before the horizon " + std::to_string(hz) + " of place " +
                      model_.distinguished_place(last_dir).name);
  }
  if (!hypothesis(last_dir).verified) {
    throw HypothesisUnverified("place " + model_.distinguished_place(last_dir).name +
                               " fails the pole realization hypothesis; paths cannot finish there");
  }
  cert.final_direction = last_dir;
  cert.horizon = hz;
  cert.weight = weight;
  cert.q_bound = weight;
  cert.excluded_count = excluded_count;
  cert.total_bound = checked_add(weight, excluded_count);
  for (std::size_t j = 0; j < n; ++j) cert.hypothesis_report.push_back(hypothesis(j));
  return cert;
}

TBoundCertificate TBoundEngine::evaluate_path(const std::vector<DivisorIndex>& path,
                                              Int excluded_count) {
  return finish_certificate(path, excluded_count);
}

TBoundCertificate TBoundEngine::search_window(Int width, Int excluded_count, Int node_budget) {
  std::size_t n = place_semigroups_.size();
  for (std::size_t j = 0; j < n; ++j) {
    if (!hypothesis(j).verified) {
      throw HypothesisUnverified("place " + model_.distinguished_place(j).name +
                                 " fails the pole realization hypothesis; restrict the model to "
                                 "places where it holds");
    }
  }
  std::vector<Int> horizons(n);
  for (std::size_t j = 0; j < n; ++j) horizons[j] = t_horizon(j);
  auto found = detail::search_lattice(
      n, horizons, width, node_budget,
      [this](const DivisorIndex& i, std::size_t j) { return Int{t_delta(i, j).value}; });
  if (!found) throw Error("lattice search found no terminal node");
  return finish_certificate(found->nodes, excluded_count);
}

TBoundCertificate TBoundEngine::min_weight_path(Int max_width, Int excluded_count,
                                                Int node_budget) {
  if (max_width < 0) throw Error("window width must be nonnegative");
  // As in BoundEngine::min_weight_path, the budget covers the whole sweep.
  Int remaining = node_budget;
  std::optional<TBoundCertificate> best;
  for (Int w = 0; w <= max_width; ++w) {
    for (std::size_t j = 0; j < place_semigroups_.size(); ++j) {
      Int nodes = t_horizon(j) + 2;
      for (std::size_t k = 1; k < place_semigroups_.size(); ++k) {
        nodes = checked_mul(nodes, w + 1);
      }
      remaining -= nodes;
    }
    if (remaining < 0) throw CapExceeded("width sweep exceeds the node budget");
    TBoundCertificate cert = search_window(w, excluded_count, node_budget);
    if (!best || cert.weight < best->weight) best = std::move(cert);
  }
  return *best;
}

HypothesisReport verify_t_hypothesis(const CurveModel& model, std::size_t j, Int up_to) {
  HypothesisReport report;
  report.place_name = model.distinguished_place(j).name;
  report.place = j;
  report.up_to = up_to;
  NumericalSemigroup h = place_semigroup(model, j);
  for (Int lambda = 0; lambda <= up_to; ++lambda) {
    if (!h.contains(lambda)) continue;
    if (auto witness = monomial_with_exact_pole(model, j, lambda)) {
      report.realized.emplace_back(lambda, *witness);
    } else {
      report.missing.push_back(lambda);
    }
  }
  report.verified = report.missing.empty();
  return report;
}

DeltaResult t_delta(const CurveModel& model, const DivisorIndex& i, std::size_t j) {
  return TBoundEngine(model).t_delta(i, j);
}

TBoundCertificate t_evaluate_path(const CurveModel& model, const std::vector<DivisorIndex>& path,
                                  Int excluded_count) {
  return TBoundEngine(model).evaluate_path(path, excluded_count);
}

TBoundCertificate t_min_weight_path(const CurveModel& model, Int max_width, Int excluded_count) {
  return TBoundEngine(model).min_weight_path(max_width, excluded_count);
}

Int t_negligible_degree(Int q, Int genus, Int q_count) {
  if (q < 0 || genus < 0 || q_count < 0) throw Error("inputs must be nonnegative");
  return checked_add(checked_mul(q - 1, checked_add(q_count, 2 * genus)), 2 * genus - 1);
}

}  // namespace wsbound
