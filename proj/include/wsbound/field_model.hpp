#ifndef WSBOUND_FIELD_MODEL_HPP
#define WSBOUND_FIELD_MODEL_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wsbound/semigroup.hpp"
#include "wsbound/types.hpp"

namespace wsbound {

struct PlaceSpec {
  std::string name;
  std::vector<Int> valuations;  // one entry per coordinate function
  bool distinguished = false;
};

/// Monomial Riemann-Roch model of a function field: the spaces
/// L(i_1 P_1 + ... + i_n P_n) are spanned by monomials in the coordinate
/// functions subject to one valuation inequality per place, plus optional
/// per-function exponent lower bounds. Immutable once validated; all queries
/// are pure.
struct CurveModel {
  Int q = 0;
  Int genus = 0;
  std::vector<std::string> functions;
  std::vector<PlaceSpec> places;
  std::vector<std::optional<Int>> exponent_lower_bounds;  // one per function
  std::string description;

  std::size_t arity() const { return functions.size(); }

  std::vector<std::size_t> distinguished_indices() const;
  std::size_t num_distinguished() const { return distinguished_indices().size(); }
  const PlaceSpec& distinguished_place(std::size_t j) const;

  /// Index into `places` by name; throws UnknownPlace.
  std::size_t place_index(std::string_view name) const;

  /// Position of a named place among the distinguished places; throws
  /// UnknownPlace if the place is missing or not distinguished.
  std::size_t distinguished_position(std::string_view name) const;

  /// Copy of the model in which exactly the named places are distinguished
  /// (in the given order of appearance in `places`); everything else becomes
  /// an auxiliary place.
  CurveModel restricted_to(const std::vector<std::string>& names) const;
};

struct ValidationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  // Derived semigroup generators per distinguished place (in order), when the
  // gap-count check succeeded for that place.
  std::vector<std::pair<std::string, std::vector<Int>>> place_semigroups;

  bool ok() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }
};

/// Parse a model document (JSON text, see models/*.model) and validate it.
/// Throws ParseError on malformed input and ValidationFailure naming the
/// first failing invariant.
CurveModel parse_model(const std::string& text);

/// Structural parse only, without running validate(). For tooling that wants
/// to print the full validation report of a broken model.
CurveModel parse_model_document(const std::string& text);

/// Canonical serialization of a model (stable key order, no description
/// whitespace games). Two models with equal content serialize identically.
std::string model_to_text(const CurveModel& model);

/// FNV-1a 64-bit hash of the canonical serialization, as "fnv1a64:<hex>".
std::string model_hash(const CurveModel& model);

/// Run all structural invariants and report each one. Never throws; failures
/// are carried in the report.
ValidationReport validate(const CurveModel& model);

/// v_P(e): dot product of the exponent vector with the place's valuations.
Int valuation(const CurveModel& model, const ExponentVector& e, std::size_t place_index);
Int valuation(const CurveModel& model, const ExponentVector& e, std::string_view place_name);

/// Weierstrass semigroup of the j-th distinguished place as realized by the
/// monomial model: pole orders at P_j of monomials regular at every other
/// place. Certified complete by the gap count matching the declared genus;
/// throws GapCountMismatch otherwise.
NumericalSemigroup place_semigroup(const CurveModel& model, std::size_t j);

/// Whether mu lies in the generalized Weierstrass set H_i(P_j) of the
/// monomial model: some feasible monomial has v_{P_j} = -mu, v_{P_k} >= -i_k
/// at the other distinguished places and v >= 0 at auxiliary places. The
/// j-th coordinate of i is ignored. A sound under-approximation of the true
/// set of the function field.
bool h_set_contains(const CurveModel& model, const DivisorIndex& i, std::size_t j, Int mu);

/// Same query, returning the lexicographically smallest witness monomial.
std::optional<ExponentVector> h_set_witness(const CurveModel& model, const DivisorIndex& i,
                                            std::size_t j, Int mu);

/// Whether some monomial realizes pole order i_j + 1 at P_j within the level
/// constraints of i. False certifies L(i) = L(i + e_j) in the monomial model.
bool realizes_pole_increment(const CurveModel& model, const DivisorIndex& i, std::size_t j);

/// A monomial with pole order exactly lambda at the j-th distinguished place
/// and no pole anywhere else, if one exists. Such a monomial is nonzero at
/// every place where all coordinate functions are nonzero.
std::optional<ExponentVector> monomial_with_exact_pole(const CurveModel& model, std::size_t j,
                                                       Int lambda);

// --- integer linear constraint systems ------------------------------------

/// coeffs . e >= rhs
struct LinearConstraint {
  std::vector<Int> coeffs;
  Int rhs = 0;
};

struct LinearSystem {
  std::size_t arity = 0;
  std::vector<LinearConstraint> inequalities;
  std::vector<LinearConstraint> equalities;
};

inline constexpr Int kDefaultBoxCap = 10'000'000;

/// All integer points of the system, sorted lexicographically. The search
/// region is boxed by Fourier-Motzkin projection onto each coordinate, which
/// is exact for rational polyhedra; an unbounded projection raises
/// UnboundedRegion and a box with more than `box_cap` points raises
/// CapExceeded.
std::vector<ExponentVector> enumerate_feasible(const LinearSystem& system,
                                               Int box_cap = kDefaultBoxCap);

/// Lexicographically smallest integer point, or nullopt.
std::optional<ExponentVector> first_feasible(const LinearSystem& system,
                                             Int box_cap = kDefaultBoxCap);

}  // namespace wsbound

#endif  // WSBOUND_FIELD_MODEL_HPP
