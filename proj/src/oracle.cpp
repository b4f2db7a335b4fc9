#include "wsbound/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "wsbound/bound_engine.hpp"

namespace wsbound::oracle {

namespace {

// Membership of the semigroup generated by gens, on [0, cap], by plain
// reachability. No sharing with NumericalSemigroup.
std::vector<bool> reachable(const std::vector<Int>& gens, Int cap) {
  if (gens.empty()) throw EmptyGenerators("generator list is empty");
  Int g = 0;
  for (Int v : gens) {
    if (v <= 0) throw Error("generators must be positive");
    g = std::gcd(g, v);
  }
  if (g != 1) throw NonCoprimeGenerators("gcd of generators is not 1");
  std::vector<bool> in(static_cast<std::size_t>(cap) + 1, false);
  in[0] = true;
  for (Int x = 0; x <= cap; ++x) {
    if (!in[static_cast<std::size_t>(x)]) continue;
    for (Int v : gens) {
      if (x + v <= cap) in[static_cast<std::size_t>(x + v)] = true;
    }
  }
  return in;
}

}  // namespace

std::vector<Int> brute_shifted_complement(const std::vector<Int>& gens, Int e, Int cap) {
  if (e < 1) throw Error("shift factor must be at least 1");
  if (cap < 1) throw CapTooSmall("cap must be positive");
  std::vector<bool> in = reachable(gens, cap);

  Int multiplicity = 0;
  for (Int x = 1; x <= cap; ++x) {
    if (in[static_cast<std::size_t>(x)]) {
      multiplicity = x;
      break;
    }
  }
  Int frobenius = -1;
  for (Int x = cap; x >= 0; --x) {
    if (!in[static_cast<std::size_t>(x)]) {
      frobenius = x;
      break;
    }
  }
  Int conductor = frobenius + 1;
  // The conductor is certain only if a full run of `multiplicity` members fits
  // above it inside the table.
  if (multiplicity == 0 || conductor + multiplicity > cap + 1 ||
      cap < checked_add(checked_mul(e, multiplicity), conductor)) {
    throw CapTooSmall("cap does not cover e * multiplicity + conductor");
  }

  std::vector<bool> in_sum(static_cast<std::size_t>(cap) + 1, false);
  for (Int a = 1; a <= cap; ++a) {
    if (!in[static_cast<std::size_t>(a)]) continue;
    if (e * a > cap) break;
    for (Int b = 0; e * a + b <= cap; ++b) {
      if (in[static_cast<std::size_t>(b)]) in_sum[static_cast<std::size_t>(e * a + b)] = true;
    }
  }
  std::vector<Int> out;
  Int limit = e * multiplicity + conductor;
  for (Int x = 0; x < limit; ++x) {
    if (in[static_cast<std::size_t>(x)] && !in_sum[static_cast<std::size_t>(x)]) out.push_back(x);
  }
  return out;
}

BruteMinPath brute_min_path(const CurveModel& model,
                            const std::vector<std::pair<Int, Int>>& window) {
  BoundEngine engine(model);
  std::size_t n = engine.num_places();
  if (window.size() != n) throw Error("window arity does not match the model");

  std::vector<std::size_t> stride(n);
  std::size_t total = 1;
  for (std::size_t j = n; j-- > 0;) {
    if (window[j].second < window[j].first) throw Error("window range is empty");
    stride[j] = total;
    total *= static_cast<std::size_t>(window[j].second - window[j].first + 1);
    if (total > 100000) throw WindowTooLarge("window exceeds 100000 nodes");
  }
  auto coords_of = [&](std::size_t idx) {
    DivisorIndex v(n);
    for (std::size_t j = 0; j < n; ++j) {
      v[j] = window[j].first + static_cast<Int>(idx / stride[j]);
      idx %= stride[j];
    }
    return v;
  };

  std::vector<Int> horizons(n);
  for (std::size_t j = 0; j < n; ++j) horizons[j] = engine.horizon(j);

  // Unit steps increase the degree by one, so sorting nodes by degree gives a
  // topological order of the path DAG.
  std::vector<std::size_t> order(total);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return degree(coords_of(a)) < degree(coords_of(b));
  });

  constexpr Int kInf = Int{1} << 61;
  std::vector<Int> dist(total, kInf);
  std::vector<std::size_t> prev(total, SIZE_MAX);

  std::optional<std::size_t> best;
  for (std::size_t idx : order) {
    DivisorIndex v = coords_of(idx);
    Int d = degree(v);
    if (d == -1) dist[idx] = std::min(dist[idx], Int{0});
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j] <= window[j].first) continue;
      DivisorIndex u = v;
      --u[j];
      std::size_t uidx = 0;
      for (std::size_t t = 0; t < n; ++t) {
        uidx += static_cast<std::size_t>(u[t] - window[t].first) * stride[t];
      }
      if (dist[uidx] >= kInf) continue;
      Int cand = dist[uidx] + engine.delta(u, j).value;
      if (cand < dist[idx]) {
        dist[idx] = cand;
        prev[idx] = uidx;
      }
    }
    if (dist[idx] >= kInf) continue;
    bool terminal = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (d >= horizons[j]) terminal = true;
    }
    if (terminal && (!best || dist[idx] < dist[*best])) best = idx;
  }
  if (!best) throw Error("window contains no reachable terminal node");

  BruteMinPath out;
  out.weight = dist[*best];
  for (std::size_t at = *best; at != SIZE_MAX; at = prev[at]) {
    out.path.push_back(coords_of(at));
  }
  std::reverse(out.path.begin(), out.path.end());
  return out;
}

AperyCheckReport check_apery_proposition(const std::vector<Int>& gens, Int e_max) {
  AperyCheckReport report;
  // A window certainly containing the conductor: twice the product of the two
  // smallest generators bounds the largest gap for any coprime pair drawn
  // from the generating set; grow from there if the run check complains.
  std::vector<Int> sorted = gens;
  std::sort(sorted.begin(), sorted.end());
  Int multiplicity = sorted.front();
  for (Int e = 1; e <= e_max; ++e) {
    Int cap = checked_mul(2, checked_mul(sorted.front(), sorted.back()));
    cap = checked_add(cap, checked_mul(e, multiplicity));
    std::vector<Int> complement;
    for (;;) {
      try {
        complement = brute_shifted_complement(gens, e, cap);
        break;
      } catch (const CapTooSmall&) {
        cap = checked_mul(cap, 2);
      }
    }
    std::vector<bool> in = reachable(gens, e);
    AperyCheckEntry entry;
    entry.e = e;
    entry.in_semigroup = in[static_cast<std::size_t>(e)];
    entry.cardinality = static_cast<Int>(complement.size());
    entry.expected = checked_mul(e, multiplicity);
    entry.equal = entry.cardinality == entry.expected;
    if (entry.in_semigroup && !entry.equal) report.members_all_equal = false;
    report.entries.push_back(entry);
  }
  return report;
}

}  // namespace wsbound::oracle
