#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string_view>
#include <vector>

#include "endograph/group.hpp"

namespace endograph {

inline constexpr long kDefaultEnumBudget = 1'000'000;

struct Morphism {
  std::vector<ElementId> image;  // image[x] = f(x)
  bool bijective = false;
  auto operator<=>(const Morphism&) const = default;
};

// f(x*y) == f(x)*f(y) for all pairs; image must have size g.order().
bool is_homomorphism(const Group& g, const std::vector<ElementId>& image);
// (f . h)(x) = f(h(x))
Morphism compose(const Group& g, const Morphism& f, const Morphism& h);

// The full endomorphism monoid plus the derived arc matrix:
// arc(a,b) iff some endomorphism sends a to b.
struct EndoMonoid {
  int group_order = 0;
  std::vector<Morphism> morphisms;  // sorted lexicographically by image
  std::vector<uint8_t> arc_matrix;  // group_order * group_order

  bool arc(ElementId a, ElementId b) const {
    return arc_matrix[a * group_order + b] != 0;
  }
  long size() const { return static_cast<long>(morphisms.size()); }
};

// Generator-image enumeration: candidates for each generator are the
// elements whose order divides the generator's order (equals, for
// automorphisms); every candidate map is extended through the word table
// and validated against the full multiplication law. Returns nullopt when
// the candidate-combination estimate exceeds the budget.
std::optional<EndoMonoid> enumerate_endomorphisms(
    const Group& g, long budget = kDefaultEnumBudget);
std::optional<std::vector<Morphism>> enumerate_automorphisms(
    const Group& g, long budget = kDefaultEnumBudget);

// Orbits of the natural Aut(G) action, sorted by least element.
std::optional<std::vector<std::vector<ElementId>>> automorphism_orbits(
    const Group& g, long budget = kDefaultEnumBudget);

// Single-pair arc decision without materializing End(G): pins f(a) = b on a
// generating set that starts with a and backtracks over the remaining
// generators. Exact for any group.
bool exists_endo_arc_search(const Group& g, ElementId a, ElementId b);

// Arc decision for a coordinate presentation prod Z_{factors[j]}: an arc
// a -> b exists iff for every j the cyclic projection of the subgroup
// generated by a's coordinate data covers b_j:
//   gcd(d_j, gcd_i(t_ij * a_i mod d_j)) | b_j,  t_ij = d_j / gcd(d_i, d_j).
bool abelian_arc_fast(const std::vector<long>& factors,
                      const std::vector<long>& a, const std::vector<long>& b);

// Strategy-selecting arc oracle for one group. Enumeration is preferred
// when End(G) fits the budget; abelian groups beyond the budget use the
// coordinate fast path; anything else falls back to memoized constrained
// search. Thread-safe.
class ArcOracle {
 public:
  enum class Strategy { Enumeration, AbelianFastPath, ConstrainedSearch };

  explicit ArcOracle(const Group& g, long budget = kDefaultEnumBudget,
                     std::optional<Strategy> force = std::nullopt);

  bool arc(ElementId a, ElementId b) const;
  Strategy strategy() const { return strategy_; }
  std::string_view strategy_name() const;

 private:
  const Group& group_;  // must outlive the oracle
  Strategy strategy_;
  std::optional<EndoMonoid> monoid_;
  std::vector<long> factors_;                // fast path
  std::vector<std::vector<long>> coords_;    // fast path, per element
  mutable std::vector<int8_t> memo_;         // constrained search: -1/0/1
  mutable std::mutex memo_mutex_;
};

}  // namespace endograph
