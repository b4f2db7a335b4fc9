#include "wsbound/bound_engine.hpp"

#include <algorithm>

#include "lattice_search.hpp"

namespace wsbound {

BoundEngine::BoundEngine(CurveModel model, std::string model_id)
    : model_(std::move(model)), model_id_(std::move(model_id)) {
  std::size_t n = model_.num_distinguished();
  if (n == 0) throw ValidationFailure("model has no distinguished place");
  place_semigroups_.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    place_semigroups_.push_back(place_semigroup(model_, j));
  }
}

const NumericalSemigroup& BoundEngine::semigroup(std::size_t j) const {
  if (j >= place_semigroups_.size()) throw UnknownPlace("distinguished place index out of range");
  return place_semigroups_[j];
}

Int BoundEngine::horizon(std::size_t j, HorizonMode mode) const {
  Int g = model_.genus;
  Int q = model_.q;
  if (mode == HorizonMode::proposition) {
    return checked_add(checked_mul(q + 2, g + 1), -3);
  }
  return checked_add(checked_mul(q, semigroup(j).multiplicity()), 2 * g - 1);
}

DeltaResult BoundEngine::delta(const DivisorIndex& i, std::size_t j) {
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
    // Realizable pole orders mu satisfy mu >= -(deg(i) - i_j), so candidates
    // for mu + q*lambda = i_j + 1 stop at q*lambda <= deg(i) + 1.
    Int lambda_cap = floor_div(degree(i) + 1, q);
    for (Int lambda = h.multiplicity(); lambda <= lambda_cap; ++lambda) {
      if (!h.contains(lambda)) continue;
      Int mu = i[j] + 1 - q * lambda;
      if (auto witness = h_set_witness(model_, i, j, mu)) {
        result = {0, Decomposition{lambda, mu, *witness}};
        break;
      }
    }
    if (result.value == 1) {
      Int threshold = horizon(j, HorizonMode::corollary);
      if (degree(i) >= threshold) result = {0, HorizonRule{threshold}};
    }
  }
  delta_cache_.emplace(std::move(key), result);
  return result;
}

BoundCertificate BoundEngine::evaluate_path(const std::vector<DivisorIndex>& path) {
  std::size_t n = place_semigroups_.size();
  if (path.size() < 2) throw InvalidPath("path needs at least one edge");
  for (const auto& node : path) {
    if (node.size() != n) throw InvalidPath("path node arity does not match the model");
  }
  if (degree(path.front()) != -1) throw InvalidPath("path must start at degree -1");

  BoundCertificate cert;
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
    DeltaResult dr = delta(path[k - 1], dir);
    cert.edges.push_back({path[k - 1], path[k], dir, dr.value, dr.witness});
    weight += dr.value;
    last_dir = dir;
  }
  Int final_degree = degree(path.back());
  Int hz = horizon(last_dir, HorizonMode::corollary);
  if (final_degree < hz) {
    throw InvalidPath("path ends at degree " + std::to_string(final_degree) +
                      ", before the horizon " + std::to_string(hz) + " of place " +
                      model_.distinguished_place(last_dir).name);
  }
  cert.final_direction = last_dir;
  cert.horizon = hz;
  cert.weight = weight;
  cert.bound = static_cast<Int>(n) + weight;
  return cert;
}

BoundCertificate BoundEngine::search_window(Int width, Int node_budget) {
  std::size_t n = place_semigroups_.size();
  std::vector<Int> horizons(n);
  for (std::size_t j = 0; j < n; ++j) horizons[j] = horizon(j, HorizonMode::corollary);
  auto found = detail::search_lattice(
      n, horizons, width, node_budget,
      [this](const DivisorIndex& i, std::size_t j) { return Int{delta(i, j).value}; });
  if (!found) throw Error("lattice search found no terminal node");
  return evaluate_path(found->nodes);
}

BoundCertificate BoundEngine::min_weight_path(Int max_width, Int node_budget) {
  if (max_width < 0) throw Error("window width must be nonnegative");
  // The budget covers the whole progressive sweep, so oversized width caps
  // fail fast instead of grinding through thousands of windows.
  Int remaining = node_budget;
  std::optional<BoundCertificate> best;
  for (Int w = 0; w <= max_width; ++w) {
    for (std::size_t j = 0; j < place_semigroups_.size(); ++j) {
      Int nodes = horizon(j, HorizonMode::corollary) + 2;
      for (std::size_t k = 1; k < place_semigroups_.size(); ++k) {
        nodes = checked_mul(nodes, w + 1);
      }
      remaining -= nodes;
    }
    if (remaining < 0) throw CapExceeded("width sweep exceeds the node budget");
    BoundCertificate cert = search_window(w, node_budget);
    if (!best || cert.weight < best->weight) best = std::move(cert);
  }
  return *best;
}

namespace {

Int width_cap_for(const BoundEngine& engine) {
  Int widest = 1;
  for (std::size_t j = 0; j < engine.num_places(); ++j) {
    widest = std::max(widest, engine.semigroup(j).multiplicity());
  }
  return 2 * engine.model().genus + widest + 1;
}

}  // namespace

Int default_width_cap(const CurveModel& model) {
  BoundEngine engine(model);
  return width_cap_for(engine);
}

DeltaResult delta(const CurveModel& model, const DivisorIndex& i, std::size_t j) {
  return BoundEngine(model).delta(i, j);
}

Int horizon(const CurveModel& model, std::size_t j, HorizonMode mode) {
  return BoundEngine(model).horizon(j, mode);
}

BoundCertificate evaluate_path(const CurveModel& model, const std::vector<DivisorIndex>& path) {
  return BoundEngine(model).evaluate_path(path);
}

BoundCertificate min_weight_path(const CurveModel& model, Int max_width) {
  return BoundEngine(model).min_weight_path(max_width);
}

Int multipoint_bound(const CurveModel& model) {
  // Improvements can resume after several stagnant widths (the genus-6 model
  // improves again at width 6 after none at 3..5), so every width up to the
  // cap is searched.
  BoundEngine engine(model);
  return engine.min_weight_path(width_cap_for(engine)).bound;
}

}  // namespace wsbound
