#include "endograph/catalog.hpp"

#include <algorithm>
#include <numeric>

namespace endograph {

namespace {

std::vector<std::vector<int>> partitions(int v) {
  // All partitions of v into weakly decreasing positive parts.
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(rest, maxpart); part >= 1; --part) {
      cur.push_back(part);
      self(self, rest - part, part);
      cur.pop_back();
    }
  };
  rec(rec, v, v);
  return out;
}

std::vector<std::pair<long, int>> factorize(long n) {
  std::vector<std::pair<long, int>> fs;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      int v = 0;
      while (n % p == 0) {
        n /= p;
        ++v;
      }
      fs.push_back({p, v});
    }
  }
  if (n > 1) fs.push_back({n, 1});
  return fs;
}

std::vector<AbelianShape> shapes_of_order(long n) {
  auto primes = factorize(n);
  std::vector<AbelianShape> shapes{AbelianShape{}};
  for (auto [p, v] : primes) {
    std::vector<AbelianShape> next;
    for (const auto& part : partitions(v)) {
      for (const auto& base : shapes) {
        auto factors = base.factors;
        for (int e : part) factors.push_back({p, e, 1});
        next.push_back(AbelianShape::canonical(std::move(factors)));
      }
    }
    shapes = std::move(next);
  }
  std::sort(shapes.begin(), shapes.end(),
            [](const AbelianShape& a, const AbelianShape& b) {
              auto fa = a.cyclic_factors();
              auto fb = b.cyclic_factors();
              if (fa.size() != fb.size()) return fa.size() < fb.size();
              return fa < fb;
            });
  return shapes;
}

Group relabeled(const Group& g, GroupDescriptor d) {
  std::vector<ElementId> table(static_cast<size_t>(g.order()) * g.order());
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) table[a * g.order() + b] = g.op(a, b);
  return Group(g.order(), std::move(table), std::move(d));
}

}  // namespace

std::vector<AbelianShape> abelian_shapes_up_to(long max_order) {
  if (max_order < 1) throw UsageError("abelian_shapes_up_to: max_order >= 1");
  std::vector<AbelianShape> out;
  for (long n = 1; n <= max_order; ++n)
    for (auto& s : shapes_of_order(n)) out.push_back(std::move(s));
  return out;
}

Group make_dihedral(int n, int order_cap) {
  if (n < 3) throw UsageError("make_dihedral: n >= 3 required");
  if (2 * n > order_cap) throw SizeCapError("make_dihedral: order exceeds cap");
  std::vector<int> rot(n), refl(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  auto g = make_from_permutation_generators(n, {rot, refl},
                                            "D" + std::to_string(n), order_cap);
  return relabeled(g, {"D" + std::to_string(n), "dihedral", {{"n", n}}});
}

Group make_symmetric(int n, int order_cap) {
  if (n < 1) throw UsageError("make_symmetric: n >= 1 required");
  long fact = 1;
  for (int i = 2; i <= n; ++i) {
    fact *= i;
    if (fact > order_cap) throw SizeCapError("make_symmetric: order exceeds cap");
  }
  std::vector<std::vector<int>> gens;
  if (n >= 2) {
    std::vector<int> swap01(n), cycle(n);
    std::iota(swap01.begin(), swap01.end(), 0);
    swap01[0] = 1;
    swap01[1] = 0;
    for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    gens = {swap01, cycle};
  }
  auto g = make_from_permutation_generators(n, gens, "S" + std::to_string(n),
                                            order_cap);
  return relabeled(g, {"S" + std::to_string(n), "symmetric", {{"n", n}}});
}

Group make_alternating4() {
  auto g = make_from_permutation_generators(4, {{1, 2, 0, 3}, {1, 0, 3, 2}}, "A4");
  return relabeled(g, {"A4", "alternating", {{"n", 4}}});
}

Group make_dicyclic3() {
  auto g = make_from_permutation_generators(
      7, {{1, 2, 0, 3, 4, 5, 6}, {0, 2, 1, 4, 5, 6, 3}}, "Dic3");
  return relabeled(g, {"Dic3", "dicyclic", {{"n", 3}}});
}

std::vector<Group> catalog_groups_up_to(int max_order) {
  if (max_order < 1) throw UsageError("catalog_groups_up_to: max_order >= 1");
  if (max_order > 15)
    throw UsageError("catalog_groups_up_to: catalog covers orders up to 15");
  std::vector<Group> out;
  for (int n = 1; n <= max_order; ++n) {
    AbelianShape cyclic_shape;
    for (auto [p, v] : factorize(n)) cyclic_shape.factors.push_back({p, v, 1});
    cyclic_shape = AbelianShape::canonical(std::move(cyclic_shape.factors));
    out.push_back(make_cyclic(n));
    for (const auto& s : shapes_of_order(n))
      if (!(s == cyclic_shape)) out.push_back(make_abelian(s));
    switch (n) {
      case 6:
        out.push_back(make_symmetric(3));
        break;
      case 8:
        out.push_back(make_dihedral(4));
        out.push_back(make_quaternion());
        break;
      case 10:
        out.push_back(make_dihedral(5));
        break;
      case 12:
        out.push_back(make_dihedral(6));
        out.push_back(make_alternating4());
        out.push_back(make_dicyclic3());
        break;
      case 14:
        out.push_back(make_dihedral(7));
        break;
      default:
        break;
    }
  }
  return out;
}

}  // namespace endograph
