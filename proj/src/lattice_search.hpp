#ifndef WSBOUND_SRC_LATTICE_SEARCH_HPP
#define WSBOUND_SRC_LATTICE_SEARCH_HPP

#include <functional>
#include <optional>
#include <vector>

#include "wsbound/types.hpp"

namespace wsbound::detail {

struct LatticePath {
  std::vector<DivisorIndex> nodes;
  Int weight = 0;
};

/// Minimum-weight unit-step path from degree -1 to a node whose degree meets
/// some coordinate's horizon, over the union of per-spine windows: coordinate
/// p runs over [-1, horizons[p]] and the others over [0, width]. The path is
/// closed so that its final step points at a coordinate whose horizon is met.
/// Deterministic: among equal-weight frontier nodes the lexicographically
/// smallest pops first, and earlier spines win ties.
std::optional<LatticePath> search_lattice(
    std::size_t n, const std::vector<Int>& horizons, Int width, Int node_budget,
    const std::function<Int(const DivisorIndex&, std::size_t)>& edge_weight);

}  // namespace wsbound::detail

#endif  // WSBOUND_SRC_LATTICE_SEARCH_HPP
