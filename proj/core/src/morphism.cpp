#include "endograph/morphism.hpp"

#include <algorithm>

#include "words.hpp"

namespace endograph {

bool is_homomorphism(const Group& g, const std::vector<ElementId>& image) {
  if (image.size() != static_cast<size_t>(g.order())) return false;
  for (ElementId x : image)
    if (x < 0 || x >= g.order()) return false;
  return detail::is_endomorphism_table(g, image);
}

Morphism compose(const Group& g, const Morphism& f, const Morphism& h) {
  Morphism out;
  out.image.resize(g.order());
  for (ElementId x = 0; x < g.order(); ++x) out.image[x] = f.image[h.image[x]];
  std::vector<char> hit(g.order(), 0);
  out.bijective = true;
  for (ElementId x : out.image) {
    if (hit[x]) {
      out.bijective = false;
      break;
    }
    hit[x] = 1;
  }
  return out;
}

namespace {

bool is_bijection(const std::vector<ElementId>& f, std::vector<char>& hit) {
  std::fill(hit.begin(), hit.end(), 0);
  for (ElementId x : f) {
    if (hit[x]) return false;
    hit[x] = 1;
  }
  return true;
}

// Shared odometer enumeration over generator images. `exact_order` selects
// automorphism candidates (order equal) vs endomorphism candidates (order
// divides). Returns nullopt when the combination estimate exceeds budget.
std::optional<std::vector<Morphism>> enumerate_maps(const Group& g, long budget,
                                                    bool exact_order) {
  int n = g.order();
  auto gens = minimal_generating_set(g);
  if (gens.empty()) {
    Morphism id;
    id.image = {0};
    id.bijective = true;
    return std::vector<Morphism>{id};
  }
  auto wt = detail::bfs_words(g, gens);
  std::vector<std::vector<ElementId>> candidates(gens.size());
  double combos = 1.0;
  for (size_t i = 0; i < gens.size(); ++i) {
    int d = g.element_order(gens[i]);
    for (ElementId y = 0; y < n; ++y) {
      int dy = g.element_order(y);
      if (exact_order ? dy == d : d % dy == 0) candidates[i].push_back(y);
    }
    combos *= static_cast<double>(candidates[i].size());
    if (combos > static_cast<double>(budget)) return std::nullopt;
  }
  std::vector<Morphism> found;
  std::vector<size_t> idx(gens.size(), 0);
  std::vector<ElementId> images(gens.size());
  std::vector<ElementId> f;
  std::vector<char> hit(n);
  while (true) {
    for (size_t i = 0; i < gens.size(); ++i) images[i] = candidates[i][idx[i]];
    detail::evaluate_words(g, wt, images, f);
    bool keep = detail::is_endomorphism_table(g, f);
    if (keep) {
      Morphism m;
      m.image = f;
      m.bijective = is_bijection(f, hit);
      if (!exact_order || m.bijective) found.push_back(std::move(m));
    }
    size_t pos = gens.size();
    bool advanced = false;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < candidates[pos].size()) {
        advanced = true;
        break;
      }
      idx[pos] = 0;
    }
    if (!advanced) break;
  }
  std::sort(found.begin(), found.end(),
            [](const Morphism& a, const Morphism& b) { return a.image < b.image; });
  return found;
}

}  // namespace

std::optional<EndoMonoid> enumerate_endomorphisms(const Group& g, long budget) {
  auto maps = enumerate_maps(g, budget, /*exact_order=*/false);
  if (!maps) return std::nullopt;
  EndoMonoid monoid;
  monoid.group_order = g.order();
  monoid.morphisms = std::move(*maps);
  monoid.arc_matrix.assign(static_cast<size_t>(g.order()) * g.order(), 0);
  for (const auto& m : monoid.morphisms)
    for (ElementId a = 0; a < g.order(); ++a)
      monoid.arc_matrix[a * g.order() + m.image[a]] = 1;
  return monoid;
}

std::optional<std::vector<Morphism>> enumerate_automorphisms(const Group& g,
                                                             long budget) {
  return enumerate_maps(g, budget, /*exact_order=*/true);
}

std::optional<std::vector<std::vector<ElementId>>> automorphism_orbits(
    const Group& g, long budget) {
  auto autos = enumerate_automorphisms(g, budget);
  if (!autos) return std::nullopt;
  int n = g.order();
  std::vector<int> root(n);
  for (int i = 0; i < n; ++i) root[i] = i;
  auto find = [&](int x) {
    while (root[x] != x) {
      root[x] = root[root[x]];
      x = root[x];
    }
    return x;
  };
  for (const auto& a : *autos)
    for (ElementId x = 0; x < n; ++x) {
      int rx = find(x), ry = find(a.image[x]);
      if (rx != ry) root[std::max(rx, ry)] = std::min(rx, ry);
    }
  std::vector<std::vector<ElementId>> orbits(n);
  for (ElementId x = 0; x < n; ++x) orbits[find(x)].push_back(x);
  std::vector<std::vector<ElementId>> out;
  for (auto& o : orbits)
    if (!o.empty()) out.push_back(std::move(o));
  return out;
}

bool exists_endo_arc_search(const Group& g, ElementId a, ElementId b) {
  int n = g.order();
  if (a == b) return true;
  if (b == 0) return true;
  if (a == 0) return false;
  if (g.element_order(a) % g.element_order(b) != 0) return false;
  // Generating set that starts with a, then greedy completion.
  std::vector<ElementId> gens{a};
  size_t covered = closure(g, gens).size();
  while (covered < static_cast<size_t>(n)) {
    ElementId best = -1;
    size_t best_size = 0;
    for (ElementId x = 0; x < n; ++x) {
      auto trial = gens;
      trial.push_back(x);
      size_t sz = closure(g, std::move(trial)).size();
      if (sz > best_size) {
        best_size = sz;
        best = x;
      }
    }
    gens.push_back(best);
    covered = best_size;
  }
  auto wt = detail::bfs_words(g, gens);
  std::vector<std::vector<ElementId>> candidates(gens.size());
  candidates[0] = {b};  // pinned
  for (size_t i = 1; i < gens.size(); ++i) {
    int d = g.element_order(gens[i]);
    for (ElementId y = 0; y < n; ++y)
      if (d % g.element_order(y) == 0) candidates[i].push_back(y);
  }
  std::vector<size_t> idx(gens.size(), 0);
  std::vector<ElementId> images(gens.size());
  std::vector<ElementId> f;
  while (true) {
    for (size_t i = 0; i < gens.size(); ++i) images[i] = candidates[i][idx[i]];
    detail::evaluate_words(g, wt, images, f);
    if (detail::is_endomorphism_table(g, f)) return true;
    size_t pos = gens.size();
    bool advanced = false;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < candidates[pos].size()) {
        advanced = true;
        break;
      }
      idx[pos] = 0;
    }
    if (!advanced) return false;
  }
}

bool abelian_arc_fast(const std::vector<long>& factors,
                      const std::vector<long>& a, const std::vector<long>& b) {
  size_t k = factors.size();
  for (size_t j = 0; j < k; ++j) {
    long dj = factors[j];
    long g = 0;  // gcd of all reachable j-th coordinates
    for (size_t i = 0; i < k; ++i) {
      long t = dj / gcd_long(factors[i], dj);
      g = gcd_long(g, (t * a[i]) % dj);
    }
    g = gcd_long(g, dj);
    if (g == 0) {
      if (b[j] != 0) return false;
    } else if (b[j] % g != 0) {
      return false;
    }
  }
  return true;
}

ArcOracle::ArcOracle(const Group& g, long budget,
                     std::optional<Strategy> force)
    : group_(g) {
  auto setup_fast_path = [&] {
    if (!g.is_abelian())
      throw UsageError("ArcOracle: fast path requires an abelian group");
    if (g.cyclic_factors()) {
      factors_ = *g.cyclic_factors();
      coords_.reserve(g.order());
      for (ElementId x = 0; x < g.order(); ++x)
        coords_.push_back(g.coordinates(x));
    } else {
      // Re-present through an explicit coordinate group.
      auto shape = abelian_shape(g);
      auto model = make_abelian(*shape, std::max(g.order(), kDefaultOrderCap));
      auto iso = find_group_isomorphism(g, model);
      if (!iso) throw UsageError("ArcOracle: abelian re-presentation failed");
      factors_ = *model.cyclic_factors();
      coords_.reserve(g.order());
      for (ElementId x = 0; x < g.order(); ++x)
        coords_.push_back(model.coordinates((*iso)[x]));
    }
  };
  if (force) {
    strategy_ = *force;
    switch (strategy_) {
      case Strategy::Enumeration:
        monoid_ = enumerate_endomorphisms(g, budget);
        if (!monoid_) throw BudgetError("ArcOracle: enumeration over budget");
        break;
      case Strategy::AbelianFastPath:
        setup_fast_path();
        break;
      case Strategy::ConstrainedSearch:
        memo_.assign(static_cast<size_t>(g.order()) * g.order(), -1);
        break;
    }
    return;
  }
  monoid_ = enumerate_endomorphisms(g, budget);
  if (monoid_) {
    strategy_ = Strategy::Enumeration;
  } else if (g.is_abelian()) {
    strategy_ = Strategy::AbelianFastPath;
    setup_fast_path();
  } else {
    strategy_ = Strategy::ConstrainedSearch;
    memo_.assign(static_cast<size_t>(g.order()) * g.order(), -1);
  }
}

bool ArcOracle::arc(ElementId a, ElementId b) const {
  switch (strategy_) {
    case Strategy::Enumeration:
      return monoid_->arc(a, b);
    case Strategy::AbelianFastPath:
      return abelian_arc_fast(factors_, coords_[a], coords_[b]);
    case Strategy::ConstrainedSearch: {
      size_t key = static_cast<size_t>(a) * group_.order() + b;
      {
        std::lock_guard<std::mutex> lock(memo_mutex_);
        if (memo_[key] >= 0) return memo_[key] != 0;
      }
      bool result = exists_endo_arc_search(group_, a, b);
      std::lock_guard<std::mutex> lock(memo_mutex_);
      memo_[key] = result ? 1 : 0;
      return result;
    }
  }
  return false;
}

std::string_view ArcOracle::strategy_name() const {
  switch (strategy_) {
    case Strategy::Enumeration:
      return "enumeration";
    case Strategy::AbelianFastPath:
      return "abelian-fast-path";
    case Strategy::ConstrainedSearch:
      return "constrained-search";
  }
  return "unknown";
}

}  // namespace endograph
