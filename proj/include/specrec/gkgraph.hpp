#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specrec/intarith.hpp"
#include "specrec/specgen.hpp"

namespace specrec {

// Prime graph: vertices are the primes dividing some order generator, and
// two primes are adjacent iff their product divides some generator.
struct PrimeGraph {
  std::vector<Int> vertices;               // ascending primes
  std::vector<std::vector<bool>> adjacency;  // symmetric, irreflexive

  std::size_t size() const { return vertices.size(); }
  bool adjacent(std::size_t i, std::size_t j) const { return adjacency[i][j]; }
  std::optional<std::size_t> index_of(const Int& p) const;
};

PrimeGraph build_prime_graph(const SpectrumGenerators& s);

// Connected components; the component containing 2 comes first when present,
// the rest are ordered by smallest vertex. Vertices ascending within each.
std::vector<std::vector<Int>> components(const PrimeGraph& g);

// Exact maximum coclique size, optionally required to contain `anchor`.
// Branch and bound with degree-0/1 reductions; throws on unknown anchor.
unsigned long independence_number(const PrimeGraph& g,
                                  const std::optional<Int>& anchor = std::nullopt);

// One row of the disconnected-prime-graph table: which family, the structural
// conditions on (dim, u, tau), and the value formula for each component
// beyond the first. Conditions and formulas are small token languages so the
// rows can live in a fixture file.
//
// Condition tokens:
//   dim-eq:K dim-min:K dim-odd-prime dim-minus1-odd-prime dim-pow2
//   dim-pow2-plus1 dim-not-pow2-plus1 dim-not-prime
//   u-odd u-even u-min:K u-eq:K u-in:A,B,...
//   tau-plus tau-minus u-minus-tau-divides-dim exclude:DIM,U,TAU
// Formula tokens:
//   char l2-half u-minus-1 u-plus-1 lu-prime lu-prime-plus1
//   lu-prime-plus1-extra const:K sympl-pow2 sympl-prime odd-orth-pow2
//   orth-plus-prime orth-plus-ext orth-minus-pow2 orth-minus-2-pow2p1
//   orth-minus-3-prime orth-minus-3-pow2p1
struct Table1Row {
  std::string key;        // stable row identifier
  Family family = Family::LinearUnitary;
  std::vector<std::string> conditions;
  std::vector<std::string> formulas;  // one per component beyond the first
  bool abridged = false;  // graph may have more components than formulas
};

// Checks the row's conditions against (dim, u, tau); empty result = admitted,
// otherwise the first violated token.
std::optional<std::string> violated_condition(const Table1Row& row,
                                              unsigned long dim, const Int& u,
                                              int tau);

// Evaluates the row's formulas; throws std::domain_error naming the violated
// condition when (dim, u, tau) is inadmissible.
std::vector<Int> n_value(const Table1Row& row, unsigned long dim, const Int& u,
                         int tau);

// Single formula token evaluation (also used for augmentation values).
Int evaluate_formula(const std::string& id, unsigned long dim, const Int& u,
                     int tau);

// Divisibility-maximal spectrum elements supported on each component beyond
// the first. `orders` is expected to be a singleton for simple groups;
// multiplicity is reported, not fatal.
struct ComponentOrder {
  std::vector<Int> primes;
  std::vector<Int> orders;
};

std::vector<ComponentOrder> component_orders(const SpectrumGenerators& s,
                                             const PrimeGraph& g);

}  // namespace specrec
