#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "endograph/errors.hpp"

namespace endograph {

using ElementId = int;

inline constexpr int kDefaultOrderCap = 128;
inline constexpr int kAxiomScanCap = 64;

struct GroupDescriptor {
  std::string name;
  std::string family;
  nlohmann::json params = nlohmann::json::object();
};

// One primary component Z_{prime^exponent} x ... (multiplicity copies).
struct AbelianFactor {
  long prime = 0;
  int exponent = 0;
  int multiplicity = 0;
  auto operator<=>(const AbelianFactor&) const = default;
};

// Primary decomposition of a finite abelian group, canonically sorted by
// (prime asc, exponent asc). The trivial group is the empty factor list.
struct AbelianShape {
  std::vector<AbelianFactor> factors;

  auto operator<=>(const AbelianShape&) const = default;

  long order() const;
  // Expanded cyclic factor list, one entry per primary component copy,
  // e.g. {(2,1,1),(2,3,1)} -> [2, 8].
  std::vector<long> cyclic_factors() const;
  std::string to_string() const;

  // Sorts, merges duplicates and validates (prime >= 2, exponent >= 1,
  // multiplicity >= 1). Throws UsageError on malformed input.
  static AbelianShape canonical(std::vector<AbelianFactor> fs);
};

// A finite group as a Cayley table over elements 0..n-1, with 0 the identity.
// Construction validates the Latin-square property and identity row/column;
// full associativity is checked by validate_group_axioms (tests call it for
// every constructed group of order <= kAxiomScanCap).
class Group {
 public:
  Group(int order, std::vector<ElementId> table, GroupDescriptor descriptor,
        std::optional<std::vector<long>> cyclic_factors = std::nullopt);

  int order() const { return n_; }
  ElementId op(ElementId a, ElementId b) const { return table_[a * n_ + b]; }
  ElementId inverse(ElementId a) const { return inverse_[a]; }
  int element_order(ElementId a) const { return element_order_[a]; }
  ElementId power(ElementId a, long m) const;  // m may be negative
  bool is_abelian() const { return abelian_; }
  const GroupDescriptor& descriptor() const { return descriptor_; }

  // Present only for groups built with an explicit cyclic factor list
  // (make_cyclic / make_abelian). Big-endian mixed radix: the first factor
  // is the most significant digit of the element id.
  const std::optional<std::vector<long>>& cyclic_factors() const {
    return cyclic_factors_;
  }
  std::vector<long> coordinates(ElementId a) const;
  ElementId element_at(const std::vector<long>& coords) const;

 private:
  int n_;
  std::vector<ElementId> table_;
  std::vector<ElementId> inverse_;
  std::vector<int> element_order_;
  bool abelian_;
  GroupDescriptor descriptor_;
  std::optional<std::vector<long>> cyclic_factors_;
};

Group make_cyclic(long n, int order_cap = kDefaultOrderCap);
Group make_abelian(const std::vector<long>& cyclic_factors,
                   int order_cap = kDefaultOrderCap);
Group make_abelian(const AbelianShape& shape, int order_cap = kDefaultOrderCap);
Group make_direct_product(const Group& a, const Group& b,
                          int order_cap = kDefaultOrderCap);
// Closes the generators under composition; elements are sorted one-line
// permutations, so the identity lands at id 0. Throws SizeCapError when the
// closure exceeds order_cap, UsageError on non-permutation input.
Group make_from_permutation_generators(int degree,
                                       const std::vector<std::vector<int>>& gens,
                                       std::string name = "",
                                       int order_cap = kDefaultOrderCap);
Group make_quaternion();  // Q8: elements +-1, +-i, +-j, +-k

// Full axiom scan: closure, identity, inverses, associativity (O(n^3)).
// Throws UsageError naming the first violation. Orders above kAxiomScanCap
// are rejected to keep the scan honest and cheap.
void validate_group_axioms(const Group& g);

std::vector<ElementId> centralizer(const Group& g, ElementId a);
std::vector<ElementId> center(const Group& g);
// Largest centralizer index max_a |G : C(a)|; 1 iff abelian.
long max_centralizer_index(const Group& g);

// Recovers the primary decomposition from the element-order census;
// nullopt for non-abelian groups.
std::optional<AbelianShape> abelian_shape(const Group& g);

// Greedy minimal generating set: repeatedly adjoin the element whose
// closure with the current set grows largest (ties: lowest id). Empty for
// the trivial group.
std::vector<ElementId> minimal_generating_set(const Group& g);
std::vector<ElementId> closure(const Group& g, std::vector<ElementId> seed);

// Isomorphism testing via generator-image backtracking with order-census
// prefilters. The returned map sends a-ids to b-ids.
std::optional<std::vector<ElementId>> find_group_isomorphism(const Group& a,
                                                             const Group& b);
bool are_isomorphic_groups(const Group& a, const Group& b);

struct DivisorProfile {
  long n = 0;
  std::vector<long> divisors;  // ascending
  std::vector<long> phi;       // phi[i] = euler_phi(divisors[i])
};
DivisorProfile divisor_profile(long n);
long euler_phi(long n);
long gcd_long(long a, long b);
long lcm_long(long a, long b);

nlohmann::json descriptor_to_json(const GroupDescriptor& d);

}  // namespace endograph
