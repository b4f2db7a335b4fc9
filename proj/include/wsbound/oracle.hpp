#ifndef WSBOUND_ORACLE_HPP
#define WSBOUND_ORACLE_HPP

#include <utility>
#include <vector>

#include "wsbound/field_model.hpp"
#include "wsbound/types.hpp"

// Deliberately naive reference computations used to validate the engines.
// These share only domain types with the optimized code paths.
namespace wsbound::oracle {

/// H \ (eH* + H) by direct double enumeration of e*a + b below the cap.
/// Requires cap >= e * multiplicity + conductor so the result is provably
/// complete; throws CapTooSmall otherwise.
std::vector<Int> brute_shifted_complement(const std::vector<Int>& gens, Int e, Int cap);

struct BruteMinPath {
  Int weight = 0;
  std::vector<DivisorIndex> path;
};

/// Exact minimum weight over all unit-step paths inside the window (one
/// inclusive [lo, hi] range per distinguished place) from any degree -1 node
/// to any node whose degree meets some place's horizon, by dynamic
/// programming over the lattice in degree order. Throws WindowTooLarge above
/// 100000 nodes.
BruteMinPath brute_min_path(const CurveModel& model,
                            const std::vector<std::pair<Int, Int>>& window);

struct AperyCheckEntry {
  Int e = 0;
  bool in_semigroup = false;
  Int cardinality = 0;
  Int expected = 0;  // e * multiplicity
  bool equal = false;
};

struct AperyCheckReport {
  std::vector<AperyCheckEntry> entries;
  bool members_all_equal = true;  // equality held for every e in the semigroup
};

/// For e = 1..e_max, compare #(H \ (eH* + H)) against e * multiplicity,
/// recording whether e is a member and whether equality holds.
AperyCheckReport check_apery_proposition(const std::vector<Int>& gens, Int e_max);

}  // namespace wsbound::oracle

#endif  // WSBOUND_ORACLE_HPP
