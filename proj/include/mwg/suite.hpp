#pragma once

#include <deque>
#include <functional>
#include <string>
#include <vector>

#include "mwg/random.hpp"

namespace mwg {

/// Pass count for one named property, with a description of the first
/// counterexample.
struct CheckTally {
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;
  std::string first_failure;

  bool ok() const { return passed == total; }
  void record(bool ok, const std::function<std::string()>& describe);
};

struct SuiteResult {
  std::deque<CheckTally> checks;  // stable references across tally()

  bool ok() const;
  CheckTally& tally(const std::string& name);
  /// Adds the counts of `other` into same-named tallies.
  void merge(const SuiteResult& other);
};

/// Ring axioms, adjoint anti-multiplicativity, gauge grading and the
/// Cuntz-Krieger relations on `samples` random pairs (plus a third factor
/// for associativity).
SuiteResult algebra_suite(const GraphPtr& graph, Rng& rng, std::size_t samples, const RandomShape& shape = {});

/// tau as an injective *-homomorphism, pullback_shift as a
/// *-homomorphism, and the intertwining identity for every edge.
SuiteResult cylinder_suite(const GraphPtr& graph, Rng& rng, std::size_t samples, const RandomShape& shape = {});

/// Toeplitz relations and the Hilbert-module axioms.
SuiteResult toeplitz_suite(const GraphPtr& graph, Rng& rng, std::size_t samples, const RandomShape& shape = {});

/// Covariance at a random vertex for random elements supported there.
SuiteResult covariance_suite(const GraphPtr& graph, Rng& rng, std::size_t samples, const RandomShape& shape = {});

/// psi(unit_e) == s_e for every edge and pi(fibre unit) == p_v for every vertex.
SuiteResult generator_coverage(const GraphPtr& graph);

/// parse(print(x)) equals x.
SuiteResult roundtrip_suite(const GraphPtr& graph, Rng& rng, std::size_t samples, const RandomShape& shape = {});

}  // namespace mwg
