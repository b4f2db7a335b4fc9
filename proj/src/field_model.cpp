#include "wsbound/field_model.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace wsbound {

namespace {

using nlohmann::json;

constexpr std::size_t kRowCap = 4096;

struct Row {
  std::vector<Int> a;
  Int b = 0;
};

bool is_zero_row(const Row& r) {
  return std::all_of(r.a.begin(), r.a.end(), [](Int c) { return c == 0; });
}

// Divide by the gcd of the coefficients; the right-hand side rounds up, which
// is valid (and tighter) for integer solutions.
void normalize_row(Row& r) {
  Int g = 0;
  for (Int c : r.a) g = std::gcd(g, std::llabs(c));
  if (g > 1) {
    for (auto& c : r.a) c /= g;
    r.b = ceil_div(r.b, g);
  }
}

// Fourier-Motzkin elimination of variable k. Returns false when a
// contradictory constant row shows the system is infeasible.
bool eliminate(std::vector<Row>& rows, std::size_t k) {
  std::vector<Row> keep;
  std::vector<Row> pos;
  std::vector<Row> neg;
  for (auto& r : rows) {
    if (r.a[k] == 0) {
      if (is_zero_row(r)) {
        if (r.b > 0) return false;
      } else {
        keep.push_back(std::move(r));
      }
    } else if (r.a[k] > 0) {
      pos.push_back(std::move(r));
    } else {
      neg.push_back(std::move(r));
    }
  }
  for (const auto& p : pos) {
    for (const auto& n : neg) {
      Row c;
      c.a.resize(p.a.size());
      Int mp = -n.a[k];
      Int mn = p.a[k];
      for (std::size_t t = 0; t < p.a.size(); ++t) {
        c.a[t] = checked_add(checked_mul(mp, p.a[t]), checked_mul(mn, n.a[t]));
      }
      c.b = checked_add(checked_mul(mp, p.b), checked_mul(mn, n.b));
      if (is_zero_row(c)) {
        if (c.b > 0) return false;
        continue;
      }
      normalize_row(c);
      keep.push_back(std::move(c));
      if (keep.size() > kRowCap) {
        throw CapExceeded("constraint elimination produced too many rows");
      }
    }
  }
  rows = std::move(keep);
  return true;
}

struct CoordinateBounds {
  bool feasible = true;
  std::optional<Int> lo;
  std::optional<Int> hi;
};

CoordinateBounds project_onto(std::vector<Row> rows, std::size_t arity, std::size_t target) {
  CoordinateBounds out;
  for (std::size_t k = 0; k < arity; ++k) {
    if (k == target) continue;
    if (!eliminate(rows, k)) {
      out.feasible = false;
      return out;
    }
  }
  for (const auto& r : rows) {
    Int c = r.a[target];
    if (c == 0) {
      if (r.b > 0) {
        out.feasible = false;
        return out;
      }
      continue;
    }
    if (c > 0) {
      Int lo = ceil_div(r.b, c);
      if (!out.lo || lo > *out.lo) out.lo = lo;
    } else {
      Int hi = floor_div(r.b, c);
      if (!out.hi || hi < *out.hi) out.hi = hi;
    }
  }
  if (out.lo && out.hi && *out.lo > *out.hi) out.feasible = false;
  return out;
}

std::vector<Row> system_rows(const LinearSystem& sys) {
  std::vector<Row> rows;
  rows.reserve(sys.inequalities.size() + 2 * sys.equalities.size());
  for (const auto& c : sys.inequalities) {
    Row r{c.coeffs, c.rhs};
    normalize_row(r);
    rows.push_back(std::move(r));
  }
  for (const auto& c : sys.equalities) {
    Row fwd{c.coeffs, c.rhs};
    Row rev;
    rev.a.reserve(c.coeffs.size());
    for (Int v : c.coeffs) rev.a.push_back(-v);
    rev.b = -c.rhs;
    normalize_row(fwd);
    normalize_row(rev);
    rows.push_back(std::move(fwd));
    rows.push_back(std::move(rev));
  }
  return rows;
}

bool satisfies(const LinearSystem& sys, const ExponentVector& e) {
  auto dot = [&](const LinearConstraint& c) {
    Int s = 0;
    for (std::size_t t = 0; t < c.coeffs.size(); ++t) {
      s = checked_add(s, checked_mul(c.coeffs[t], e[t]));
    }
    return s;
  };
  for (const auto& c : sys.equalities) {
    if (dot(c) != c.rhs) return false;
  }
  for (const auto& c : sys.inequalities) {
    if (dot(c) < c.rhs) return false;
  }
  return true;
}

// Shared core of enumerate_feasible / first_feasible.
template <typename Visit>
void scan_feasible(const LinearSystem& sys, Int box_cap, Visit&& visit) {
  if (sys.arity == 0) throw Error("constraint system needs at least one variable");
  std::vector<Row> rows = system_rows(sys);
  std::vector<Int> lo(sys.arity), hi(sys.arity);
  for (std::size_t t = 0; t < sys.arity; ++t) {
    CoordinateBounds b = project_onto(rows, sys.arity, t);
    if (!b.feasible) return;
    if (!b.lo || !b.hi) {
      throw UnboundedRegion("feasible region unbounded in coordinate " + std::to_string(t));
    }
    lo[t] = *b.lo;
    hi[t] = *b.hi;
  }
  Int volume = 1;
  for (std::size_t t = 0; t < sys.arity; ++t) {
    volume = checked_mul(volume, hi[t] - lo[t] + 1);
    if (volume > box_cap) throw CapExceeded("bounding box exceeds the enumeration cap");
  }
  ExponentVector e = lo;
  for (;;) {
    if (satisfies(sys, e)) {
      if (!visit(e)) return;
    }
    std::size_t t = sys.arity;
    while (t > 0) {
      --t;
      if (e[t] < hi[t]) {
        ++e[t];
        break;
      }
      e[t] = lo[t];
      if (t == 0) return;
    }
  }
}

}  // namespace

std::vector<ExponentVector> enumerate_feasible(const LinearSystem& system, Int box_cap) {
  std::vector<ExponentVector> out;
  scan_feasible(system, box_cap, [&](const ExponentVector& e) {
    out.push_back(e);
    return true;
  });
  return out;
}

std::optional<ExponentVector> first_feasible(const LinearSystem& system, Int box_cap) {
  std::optional<ExponentVector> out;
  scan_feasible(system, box_cap, [&](const ExponentVector& e) {
    out = e;
    return false;
  });
  return out;
}

// --- CurveModel basics ------------------------------------------------------

std::vector<std::size_t> CurveModel::distinguished_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < places.size(); ++p) {
    if (places[p].distinguished) out.push_back(p);
  }
  return out;
}

const PlaceSpec& CurveModel::distinguished_place(std::size_t j) const {
  auto idx = distinguished_indices();
  if (j >= idx.size()) throw UnknownPlace("distinguished place index out of range");
  return places[idx[j]];
}

std::size_t CurveModel::place_index(std::string_view name) const {
  for (std::size_t p = 0; p < places.size(); ++p) {
    if (places[p].name == name) return p;
  }
  throw UnknownPlace("no place named '" + std::string(name) + "'");
}

std::size_t CurveModel::distinguished_position(std::string_view name) const {
  auto idx = distinguished_indices();
  for (std::size_t j = 0; j < idx.size(); ++j) {
    if (places[idx[j]].name == name) return j;
  }
  throw UnknownPlace("place '" + std::string(name) + "' is not distinguished");
}

CurveModel CurveModel::restricted_to(const std::vector<std::string>& names) const {
  if (names.empty()) throw UnknownPlace("restriction needs at least one place name");
  CurveModel out = *this;
  for (auto& p : out.places) p.distinguished = false;
  for (const auto& name : names) {
    out.places[out.place_index(name)].distinguished = true;
  }
  return out;
}

// --- parsing and serialization ----------------------------------------------

namespace {

json require_field(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

Int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<Int>();
}

}  // namespace

CurveModel parse_model_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("model document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("model document must be a JSON object");

  CurveModel m;
  m.q = as_int(require_field(doc, "q"), "q");
  m.genus = as_int(require_field(doc, "genus"), "genus");
  if (m.q < 2) throw ParseError("q must be at least 2");
  if (m.genus < 0) throw ParseError("genus must be nonnegative");

  json fns = require_field(doc, "functions");
  if (!fns.is_array() || fns.empty()) throw ParseError("functions must be a nonempty array");
  for (const auto& f : fns) {
    if (!f.is_string()) throw ParseError("function names must be strings");
    m.functions.push_back(f.get<std::string>());
  }

  json places = require_field(doc, "places");
  if (!places.is_array() || places.empty()) throw ParseError("places must be a nonempty array");
  for (const auto& p : places) {
    if (!p.is_object()) throw ParseError("each place must be an object");
    PlaceSpec spec;
    json name = require_field(p, "name");
    if (!name.is_string()) throw ParseError("place name must be a string");
    spec.name = name.get<std::string>();
    json vals = require_field(p, "valuations");
    if (!vals.is_array() || vals.size() != m.functions.size()) {
      throw ParseError("valuations of place '" + spec.name + "' must list one integer per function");
    }
    for (const auto& v : vals) spec.valuations.push_back(as_int(v, "valuation"));
    if (p.contains("distinguished")) {
      if (!p.at("distinguished").is_boolean()) throw ParseError("distinguished must be a boolean");
      spec.distinguished = p.at("distinguished").get<bool>();
    }
    m.places.push_back(std::move(spec));
  }

  m.exponent_lower_bounds.assign(m.functions.size(), std::nullopt);
  if (doc.contains("exponent_lower_bounds")) {
    json lbs = doc.at("exponent_lower_bounds");
    if (!lbs.is_array() || lbs.size() != m.functions.size()) {
      throw ParseError("exponent_lower_bounds must list one entry (integer or null) per function");
    }
    for (std::size_t t = 0; t < m.functions.size(); ++t) {
      if (!lbs[t].is_null()) m.exponent_lower_bounds[t] = as_int(lbs[t], "exponent lower bound");
    }
  }
  if (doc.contains("description")) {
    if (!doc.at("description").is_string()) throw ParseError("description must be a string");
    m.description = doc.at("description").get<std::string>();
  }
  return m;
}

CurveModel parse_model(const std::string& text) {
  CurveModel m = parse_model_document(text);
  ValidationReport report = validate(m);
  if (!report.ok()) {
    for (const auto& c : report.checks) {
      if (!c.passed) {
        throw ValidationFailure("model invariant '" + c.name + "' failed: " + c.detail);
      }
    }
  }
  return m;
}

std::string model_to_text(const CurveModel& model) {
  json doc;
  doc["q"] = model.q;
  doc["genus"] = model.genus;
  doc["functions"] = model.functions;
  doc["places"] = json::array();
  for (const auto& p : model.places) {
    json pj;
    pj["name"] = p.name;
    pj["valuations"] = p.valuations;
    pj["distinguished"] = p.distinguished;
    doc["places"].push_back(pj);
  }
  doc["exponent_lower_bounds"] = json::array();
  for (const auto& lb : model.exponent_lower_bounds) {
    if (lb) {
      doc["exponent_lower_bounds"].push_back(*lb);
    } else {
      doc["exponent_lower_bounds"].push_back(nullptr);
    }
  }
  if (!model.description.empty()) doc["description"] = model.description;
  return doc.dump();
}

std::string model_hash(const CurveModel& model) {
  std::string text = model_to_text(model);
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  std::ostringstream out;
  out << "fnv1a64:" << std::hex << h;
  return out.str();
}

// --- constraint builders ------------------------------------------------------

namespace {

// Constraints describing monomials of L(i) with the pole order at the j-th
// distinguished place pinned to mu: v_{P_j}(e) = -mu, v_{P_k}(e) >= -i_k at
// the other distinguished places, v >= 0 at auxiliary places, plus exponent
// lower bounds. The j-th coordinate of i plays no role.
LinearSystem level_system(const CurveModel& model, const DivisorIndex& i, std::size_t j, Int mu) {
  auto idx = model.distinguished_indices();
  if (j >= idx.size()) throw UnknownPlace("distinguished place index out of range");
  if (i.size() != idx.size()) throw Error("divisor index arity mismatch");
  LinearSystem sys;
  sys.arity = model.arity();
  for (std::size_t p = 0; p < model.places.size(); ++p) {
    if (p == idx[j]) {
      sys.equalities.push_back({model.places[p].valuations, -mu});
    } else if (model.places[p].distinguished) {
      std::size_t k = static_cast<std::size_t>(
          std::find(idx.begin(), idx.end(), p) - idx.begin());
      sys.inequalities.push_back({model.places[p].valuations, -i[k]});
    } else {
      sys.inequalities.push_back({model.places[p].valuations, 0});
    }
  }
  for (std::size_t t = 0; t < model.arity(); ++t) {
    if (model.exponent_lower_bounds[t]) {
      LinearConstraint c;
      c.coeffs.assign(model.arity(), 0);
      c.coeffs[t] = 1;
      c.rhs = *model.exponent_lower_bounds[t];
      sys.inequalities.push_back(std::move(c));
    }
  }
  return sys;
}

// The recession cone of every level system: v >= 0 at all places plus e_t >= 0
// for each function carrying a lower bound.
LinearSystem cone_system(const CurveModel& model) {
  LinearSystem sys;
  sys.arity = model.arity();
  for (const auto& p : model.places) {
    sys.inequalities.push_back({p.valuations, 0});
  }
  for (std::size_t t = 0; t < model.arity(); ++t) {
    if (model.exponent_lower_bounds[t]) {
      LinearConstraint c;
      c.coeffs.assign(model.arity(), 0);
      c.coeffs[t] = 1;
      c.rhs = 0;
      sys.inequalities.push_back(std::move(c));
    }
  }
  return sys;
}

}  // namespace

Int valuation(const CurveModel& model, const ExponentVector& e, std::size_t place_index) {
  if (place_index >= model.places.size()) throw UnknownPlace("place index out of range");
  const auto& vals = model.places[place_index].valuations;
  if (e.size() != vals.size()) throw Error("exponent vector arity mismatch");
  Int s = 0;
  for (std::size_t t = 0; t < vals.size(); ++t) s = checked_add(s, checked_mul(vals[t], e[t]));
  return s;
}

Int valuation(const CurveModel& model, const ExponentVector& e, std::string_view place_name) {
  return valuation(model, e, model.place_index(place_name));
}

std::optional<ExponentVector> h_set_witness(const CurveModel& model, const DivisorIndex& i,
                                            std::size_t j, Int mu) {
  return first_feasible(level_system(model, i, j, mu));
}

bool h_set_contains(const CurveModel& model, const DivisorIndex& i, std::size_t j, Int mu) {
  return h_set_witness(model, i, j, mu).has_value();
}

bool realizes_pole_increment(const CurveModel& model, const DivisorIndex& i, std::size_t j) {
  if (j >= i.size()) throw UnknownPlace("distinguished place index out of range");
  return h_set_contains(model, i, j, i[j] + 1);
}

std::optional<ExponentVector> monomial_with_exact_pole(const CurveModel& model, std::size_t j,
                                                       Int lambda) {
  DivisorIndex zero(model.num_distinguished(), 0);
  return first_feasible(level_system(model, zero, j, lambda));
}

NumericalSemigroup place_semigroup(const CurveModel& model, std::size_t j) {
  const std::string& name = model.distinguished_place(j).name;
  Int g = model.genus;

  Int multiplicity = 0;
  for (Int mu = 1; mu <= 2 * g + 1; ++mu) {
    if (monomial_with_exact_pole(model, j, mu)) {
      multiplicity = mu;
      break;
    }
  }
  if (multiplicity == 0) {
    throw GapCountMismatch("no nonzero pole order below 2g+2 is realized at place " + name);
  }

  // Conductor of a genus-g semigroup is at most 2g, so this window covers all
  // minimal generators (they sit below conductor + multiplicity).
  Int window = 2 * g + multiplicity + 2;
  std::vector<bool> member(static_cast<std::size_t>(window) + 1, false);
  member[0] = true;
  for (Int mu = 1; mu <= window; ++mu) {
    member[static_cast<std::size_t>(mu)] = monomial_with_exact_pole(model, j, mu).has_value();
  }

  std::vector<Int> gens;
  for (Int s = 1; s <= window; ++s) {
    if (!member[static_cast<std::size_t>(s)]) continue;
    bool decomposable = false;
    for (Int x = 1; x < s; ++x) {
      if (member[static_cast<std::size_t>(x)] && member[static_cast<std::size_t>(s - x)]) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) gens.push_back(s);
  }

  NumericalSemigroup h = NumericalSemigroup::from_generators(gens);
  if (h.genus() != g) {
    throw GapCountMismatch("place " + name + " realizes a semigroup with " +
                           std::to_string(h.genus()) + " gaps, expected " + std::to_string(g));
  }
  for (Int x = 0; x <= window; ++x) {
    if (h.contains(x) != static_cast<bool>(member[static_cast<std::size_t>(x)])) {
      throw GapCountMismatch("realized pole orders at place " + name +
                             " are not additively closed near " + std::to_string(x));
    }
  }
  return h;
}

// --- validation ---------------------------------------------------------------

ValidationReport validate(const CurveModel& model) {
  ValidationReport report;
  auto add = [&](std::string name, bool passed, std::string detail) {
    report.checks.push_back({std::move(name), passed, std::move(detail)});
  };

  bool shape_ok = true;
  if (model.functions.empty()) {
    add("functions", false, "model declares no coordinate functions");
    shape_ok = false;
  } else {
    add("functions", true, std::to_string(model.functions.size()) + " coordinate function(s)");
  }

  auto idx = model.distinguished_indices();
  if (idx.empty()) {
    add("distinguished places", false, "model declares no distinguished place");
    shape_ok = false;
  } else {
    add("distinguished places", true, std::to_string(idx.size()) + " distinguished place(s)");
  }

  bool lengths_ok = model.exponent_lower_bounds.size() == model.functions.size();
  for (const auto& p : model.places) {
    if (p.valuations.size() != model.functions.size()) lengths_ok = false;
  }
  add("vector lengths", lengths_ok,
      lengths_ok ? "valuation vectors and exponent bounds match the function list"
                 : "a valuation vector or the exponent bound list has the wrong length");
  shape_ok = shape_ok && lengths_ok;

  if (!shape_ok) return report;

  // Pointedness: the homogeneous cone must contain only the origin, which
  // holds exactly when its projection onto every exponent coordinate is {0}.
  {
    LinearSystem cone = cone_system(model);
    std::vector<Row> rows = system_rows(cone);
    bool pointed = true;
    std::string detail;
    for (std::size_t t = 0; t < model.arity(); ++t) {
      CoordinateBounds b = project_onto(rows, model.arity(), t);
      if (!b.feasible) {
        pointed = false;  // cannot happen for a cone (0 is always a member)
        detail = "cone projection infeasible";
        break;
      }
      if (!b.lo || !b.hi || *b.lo != 0 || *b.hi != 0) {
        pointed = false;
        std::string range = (b.lo ? std::to_string(*b.lo) : std::string("-inf")) + ", " +
                            (b.hi ? std::to_string(*b.hi) : std::string("inf"));
        if (!detail.empty()) detail += "; ";
        detail += "exponent of '" + model.functions[t] + "' is free in the cone (range [" +
                  range + "])";
      }
    }
    add("pointedness", pointed, pointed ? "homogeneous cone contains only the origin" : detail);
    if (!pointed) return report;
  }

  // Degree consistency: listed valuations of each function sum to zero
  // (principal divisor fully listed) or to a negative value absorbed by
  // unlisted zeros, in which case the exponent needs a lower bound of 0.
  {
    bool ok = true;
    std::string detail = "principal divisor data consistent for every function";
    for (std::size_t t = 0; t < model.arity(); ++t) {
      Int colsum = 0;
      for (const auto& p : model.places) colsum = checked_add(colsum, p.valuations[t]);
      if (colsum == 0) continue;
      if (colsum < 0 && model.exponent_lower_bounds[t] && *model.exponent_lower_bounds[t] == 0) {
        continue;
      }
      ok = false;
      detail = "function '" + model.functions[t] + "' has listed valuations summing to " +
               std::to_string(colsum) +
               (colsum < 0 ? " without the exponent lower bound 0" : " (more zeros than poles)");
      break;
    }
    add("degree consistency", ok, detail);
    if (!ok) return report;
  }

  for (std::size_t j = 0; j < idx.size(); ++j) {
    const std::string& name = model.places[idx[j]].name;
    try {
      NumericalSemigroup h = place_semigroup(model, j);
      std::ostringstream os;
      os << "semigroup <";
      for (std::size_t t = 0; t < h.generators().size(); ++t) {
        os << (t ? "," : "") << h.generators()[t];
      }
      os << "> with " << h.genus() << " gaps";
      add("gap count at " + name, true, os.str());
      report.place_semigroups.emplace_back(name, h.generators());
    } catch (const Error& e) {
      add("gap count at " + name, false, e.what());
    }
  }
  return report;
}

}  // namespace wsbound
