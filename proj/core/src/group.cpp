#include "endograph/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "words.hpp"

namespace endograph {

long gcd_long(long a, long b) { return std::gcd(a, b); }
long lcm_long(long a, long b) { return std::lcm(a, b); }

long euler_phi(long n) {
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

DivisorProfile divisor_profile(long n) {
  if (n <= 0) throw UsageError("divisor_profile: n must be positive");
  DivisorProfile dp;
  dp.n = n;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      dp.divisors.push_back(d);
      if (d != n / d) dp.divisors.push_back(n / d);
    }
  }
  std::sort(dp.divisors.begin(), dp.divisors.end());
  dp.phi.reserve(dp.divisors.size());
  for (long d : dp.divisors) dp.phi.push_back(euler_phi(d));
  return dp;
}

long AbelianShape::order() const {
  long n = 1;
  for (const auto& f : factors) {
    long q = 1;
    for (int i = 0; i < f.exponent; ++i) q *= f.prime;
    for (int i = 0; i < f.multiplicity; ++i) n *= q;
  }
  return n;
}

std::vector<long> AbelianShape::cyclic_factors() const {
  std::vector<long> out;
  for (const auto& f : factors) {
    long q = 1;
    for (int i = 0; i < f.exponent; ++i) q *= f.prime;
    for (int i = 0; i < f.multiplicity; ++i) out.push_back(q);
  }
  return out;
}

std::string AbelianShape::to_string() const {
  if (factors.empty()) return "Z1";
  std::ostringstream os;
  bool first = true;
  for (long q : cyclic_factors()) {
    if (!first) os << " x ";
    os << "Z" << q;
    first = false;
  }
  return os.str();
}

AbelianShape AbelianShape::canonical(std::vector<AbelianFactor> fs) {
  std::vector<AbelianFactor> kept;
  for (const auto& f : fs) {
    if (f.prime < 2 || f.exponent < 1 || f.multiplicity < 0)
      throw UsageError("AbelianShape: prime >= 2, exponent >= 1 required");
    for (long p = 2; p * p <= f.prime; ++p)
      if (f.prime % p == 0) throw UsageError("AbelianShape: prime expected");
    if (f.multiplicity > 0) kept.push_back(f);
  }
  std::sort(kept.begin(), kept.end(), [](const auto& x, const auto& y) {
    return std::tie(x.prime, x.exponent) < std::tie(y.prime, y.exponent);
  });
  std::vector<AbelianFactor> merged;
  for (const auto& f : kept) {
    if (!merged.empty() && merged.back().prime == f.prime &&
        merged.back().exponent == f.exponent) {
      merged.back().multiplicity += f.multiplicity;
    } else {
      merged.push_back(f);
    }
  }
  return AbelianShape{std::move(merged)};
}

Group::Group(int order, std::vector<ElementId> table, GroupDescriptor descriptor,
             std::optional<std::vector<long>> cyclic_factors)
    : n_(order),
      table_(std::move(table)),
      descriptor_(std::move(descriptor)),
      cyclic_factors_(std::move(cyclic_factors)) {
  if (n_ <= 0) throw UsageError("Group: order must be positive");
  if (table_.size() != static_cast<size_t>(n_) * n_)
    throw UsageError("Group: table size mismatch");
  for (ElementId x : table_)
    if (x < 0 || x >= n_) throw UsageError("Group: table entry out of range");
  std::vector<char> seen(n_);
  for (ElementId a = 0; a < n_; ++a) {
    if (op(0, a) != a || op(a, 0) != a)
      throw UsageError("Group: element 0 is not an identity");
    std::fill(seen.begin(), seen.end(), 0);
    for (ElementId b = 0; b < n_; ++b) seen[op(a, b)] = 1;
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      throw UsageError("Group: row is not a permutation");
    std::fill(seen.begin(), seen.end(), 0);
    for (ElementId b = 0; b < n_; ++b) seen[op(b, a)] = 1;
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      throw UsageError("Group: column is not a permutation");
  }
  inverse_.assign(n_, -1);
  for (ElementId a = 0; a < n_; ++a) {
    for (ElementId b = 0; b < n_; ++b) {
      if (op(a, b) == 0 && op(b, a) == 0) {
        inverse_[a] = b;
        break;
      }
    }
    if (inverse_[a] < 0) throw UsageError("Group: missing two-sided inverse");
  }
  element_order_.assign(n_, 1);
  for (ElementId a = 1; a < n_; ++a) {
    ElementId x = a;
    int k = 1;
    while (x != 0) {
      x = op(x, a);
      ++k;
      if (k > n_ + 1) throw UsageError("Group: element order exceeds group order");
    }
    element_order_[a] = k;
  }
  abelian_ = true;
  for (ElementId a = 0; a < n_ && abelian_; ++a)
    for (ElementId b = a + 1; b < n_; ++b)
      if (op(a, b) != op(b, a)) {
        abelian_ = false;
        break;
      }
}

ElementId Group::power(ElementId a, long m) const {
  int d = element_order_[a];
  long r = m % d;
  if (r < 0) r += d;
  ElementId x = 0;
  for (long i = 0; i < r; ++i) x = op(x, a);
  return x;
}

std::vector<long> Group::coordinates(ElementId a) const {
  if (!cyclic_factors_)
    throw UsageError("coordinates: group has no cyclic factor presentation");
  const auto& fs = *cyclic_factors_;
  std::vector<long> coords(fs.size());
  long rem = a;
  for (size_t j = fs.size(); j-- > 0;) {
    coords[j] = rem % fs[j];
    rem /= fs[j];
  }
  return coords;
}

ElementId Group::element_at(const std::vector<long>& coords) const {
  if (!cyclic_factors_)
    throw UsageError("element_at: group has no cyclic factor presentation");
  const auto& fs = *cyclic_factors_;
  if (coords.size() != fs.size())
    throw UsageError("element_at: coordinate arity mismatch");
  long id = 0;
  for (size_t j = 0; j < fs.size(); ++j) {
    long c = coords[j] % fs[j];
    if (c < 0) c += fs[j];
    id = id * fs[j] + c;
  }
  return static_cast<ElementId>(id);
}

namespace {

std::string abelian_name(const std::vector<long>& factors) {
  if (factors.empty()) return "Z1";
  std::ostringstream os;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) os << " x ";
    os << "Z" << factors[i];
  }
  return os.str();
}

}  // namespace

Group make_cyclic(long n, int order_cap) {
  if (n <= 0) throw UsageError("make_cyclic: n must be positive");
  if (n > order_cap) throw SizeCapError("make_cyclic: order exceeds cap");
  int m = static_cast<int>(n);
  std::vector<ElementId> table(static_cast<size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) table[a * m + b] = (a + b) % m;
  GroupDescriptor d{"Z" + std::to_string(n), "cyclic", {{"n", n}}};
  return Group(m, std::move(table), std::move(d), std::vector<long>{n});
}

Group make_abelian(const std::vector<long>& cyclic_factors, int order_cap) {
  long n = 1;
  for (long f : cyclic_factors) {
    if (f <= 0) throw UsageError("make_abelian: factors must be positive");
    n *= f;
    if (n > order_cap) throw SizeCapError("make_abelian: order exceeds cap");
  }
  int m = static_cast<int>(n);
  size_t k = cyclic_factors.size();
  std::vector<std::vector<long>> coords(m, std::vector<long>(k));
  for (int a = 0; a < m; ++a) {
    long rem = a;
    for (size_t j = k; j-- > 0;) {
      coords[a][j] = rem % cyclic_factors[j];
      rem /= cyclic_factors[j];
    }
  }
  std::vector<ElementId> table(static_cast<size_t>(m) * m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      long id = 0;
      for (size_t j = 0; j < k; ++j)
        id = id * cyclic_factors[j] +
             (coords[a][j] + coords[b][j]) % cyclic_factors[j];
      table[a * m + b] = static_cast<ElementId>(id);
    }
  }
  GroupDescriptor d{abelian_name(cyclic_factors), "abelian",
                    {{"factors", cyclic_factors}}};
  return Group(m, std::move(table), std::move(d), cyclic_factors);
}

Group make_abelian(const AbelianShape& shape, int order_cap) {
  return make_abelian(shape.cyclic_factors(), order_cap);
}

Group make_direct_product(const Group& a, const Group& b, int order_cap) {
  long n = static_cast<long>(a.order()) * b.order();
  if (n > order_cap) throw SizeCapError("make_direct_product: order exceeds cap");
  int m = static_cast<int>(n);
  int nb = b.order();
  std::vector<ElementId> table(static_cast<size_t>(m) * m);
  for (int x = 0; x < m; ++x) {
    int x1 = x / nb, x2 = x % nb;
    for (int y = 0; y < m; ++y) {
      int y1 = y / nb, y2 = y % nb;
      table[x * m + y] = a.op(x1, y1) * nb + b.op(x2, y2);
    }
  }
  GroupDescriptor d{a.descriptor().name + " x " + b.descriptor().name, "product",
                    {{"orders", {a.order(), b.order()}}}};
  std::optional<std::vector<long>> factors;
  if (a.cyclic_factors() && b.cyclic_factors()) {
    std::vector<long> fs = *a.cyclic_factors();
    fs.insert(fs.end(), b.cyclic_factors()->begin(), b.cyclic_factors()->end());
    factors = std::move(fs);
  }
  return Group(m, std::move(table), std::move(d), std::move(factors));
}

namespace {

std::vector<int> perm_compose(const std::vector<int>& p,
                              const std::vector<int>& q) {
  std::vector<int> r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

}  // namespace

Group make_from_permutation_generators(int degree,
                                       const std::vector<std::vector<int>>& gens,
                                       std::string name, int order_cap) {
  if (degree <= 0)
    throw UsageError("make_from_permutation_generators: degree must be positive");
  for (const auto& g : gens) {
    if (g.size() != static_cast<size_t>(degree))
      throw UsageError("make_from_permutation_generators: arity mismatch");
    std::vector<char> seen(degree, 0);
    for (int v : g) {
      if (v < 0 || v >= degree || seen[v])
        throw UsageError("make_from_permutation_generators: not a permutation");
      seen[v] = 1;
    }
  }
  std::vector<int> identity(degree);
  std::iota(identity.begin(), identity.end(), 0);
  std::set<std::vector<int>> elems{identity};
  std::vector<std::vector<int>> frontier{identity};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& p : frontier) {
      for (const auto& g : gens) {
        auto q = perm_compose(p, g);
        if (elems.insert(q).second) {
          if (static_cast<long>(elems.size()) > order_cap)
            throw SizeCapError(
                "make_from_permutation_generators: closure exceeds cap");
          next.push_back(std::move(q));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::vector<int>> sorted(elems.begin(), elems.end());
  int m = static_cast<int>(sorted.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < m; ++i) index[sorted[i]] = i;
  std::vector<ElementId> table(static_cast<size_t>(m) * m);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      table[x * m + y] = index.at(perm_compose(sorted[x], sorted[y]));
  nlohmann::json jgens = nlohmann::json::array();
  for (const auto& g : gens) jgens.push_back(g);
  GroupDescriptor d{name.empty() ? "perm[" + std::to_string(m) + "]"
                                 : std::move(name),
                    "permutation",
                    {{"degree", degree}, {"generators", jgens}}};
  return Group(m, std::move(table), std::move(d));
}

Group make_quaternion() {
  // Elements 0..7 are +1,-1,+i,-i,+j,-j,+k,-k; basis products carry signs.
  static constexpr int basis_mul[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign_mul[4][4] = {
      {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<ElementId> table(64);
  for (int x = 0; x < 8; ++x) {
    int sx = x % 2 == 0 ? 1 : -1, bx = x / 2;
    for (int y = 0; y < 8; ++y) {
      int sy = y % 2 == 0 ? 1 : -1, by = y / 2;
      int b = basis_mul[bx][by];
      int s = sx * sy * sign_mul[bx][by];
      table[x * 8 + y] = 2 * b + (s == 1 ? 0 : 1);
    }
  }
  GroupDescriptor d{"Q8", "quaternion", nlohmann::json::object()};
  return Group(8, std::move(table), std::move(d));
}

void validate_group_axioms(const Group& g) {
  int n = g.order();
  if (n > kAxiomScanCap)
    throw UsageError("validate_group_axioms: order exceeds scan cap");
  for (ElementId a = 0; a < n; ++a) {
    if (g.op(0, a) != a || g.op(a, 0) != a)
      throw UsageError("axioms: identity violated at " + std::to_string(a));
    if (g.op(a, g.inverse(a)) != 0 || g.op(g.inverse(a), a) != 0)
      throw UsageError("axioms: inverse violated at " + std::to_string(a));
  }
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b)
      for (ElementId c = 0; c < n; ++c)
        if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c)))
          throw UsageError("axioms: associativity violated at (" +
                           std::to_string(a) + "," + std::to_string(b) + "," +
                           std::to_string(c) + ")");
}

std::vector<ElementId> centralizer(const Group& g, ElementId a) {
  std::vector<ElementId> out;
  for (ElementId x = 0; x < g.order(); ++x)
    if (g.op(x, a) == g.op(a, x)) out.push_back(x);
  return out;
}

std::vector<ElementId> center(const Group& g) {
  std::vector<ElementId> out;
  for (ElementId x = 0; x < g.order(); ++x) {
    bool central = true;
    for (ElementId y = 0; y < g.order() && central; ++y)
      central = g.op(x, y) == g.op(y, x);
    if (central) out.push_back(x);
  }
  return out;
}

long max_centralizer_index(const Group& g) {
  long best = 1;
  for (ElementId a = 0; a < g.order(); ++a) {
    long c = static_cast<long>(centralizer(g, a).size());
    best = std::max(best, g.order() / c);
  }
  return best;
}

std::optional<AbelianShape> abelian_shape(const Group& g) {
  if (!g.is_abelian()) return std::nullopt;
  long n = g.order();
  std::vector<AbelianFactor> factors;
  long m = n;
  for (long p = 2; m > 1; ++p) {
    if (m % p != 0) continue;
    int v = 0;
    while (m % p == 0) {
      m /= p;
      ++v;
    }
    // s_k = log_p #{x of p-power order : x^(p^k) = e}; the differences
    // s_k - s_{k-1} form the conjugate partition of the factor exponents.
    std::vector<int> s{0};
    long pk = 1;
    for (int k = 1; s.back() < v; ++k) {
      pk *= p;
      long count = 0;
      for (ElementId x = 0; x < g.order(); ++x) {
        int d = g.element_order(x);
        long t = d;
        while (t % p == 0) t /= p;
        if (t == 1 && pk % d == 0) ++count;
      }
      int sk = 0;
      long c = count;
      while (c > 1) {
        if (c % p != 0) throw UsageError("abelian_shape: census not a p-power");
        c /= p;
        ++sk;
      }
      s.push_back(sk);
    }
    std::vector<int> ge;  // ge[k] = number of cyclic factors with exponent > k
    for (size_t k = 1; k < s.size(); ++k) ge.push_back(s[k] - s[k - 1]);
    for (size_t k = 0; k < ge.size(); ++k) {
      int next = k + 1 < ge.size() ? ge[k + 1] : 0;
      int mult = ge[k] - next;
      if (mult > 0) factors.push_back({p, static_cast<int>(k + 1), mult});
    }
  }
  return AbelianShape::canonical(std::move(factors));
}

std::vector<ElementId> closure(const Group& g, std::vector<ElementId> seed) {
  std::vector<char> in(g.order(), 0);
  std::vector<ElementId> elems{0};
  in[0] = 1;
  std::vector<ElementId> frontier{0};
  while (!frontier.empty()) {
    std::vector<ElementId> next;
    for (ElementId x : frontier) {
      for (ElementId s : seed) {
        ElementId y = g.op(x, s);
        if (!in[y]) {
          in[y] = 1;
          elems.push_back(y);
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<ElementId> minimal_generating_set(const Group& g) {
  std::vector<ElementId> gens;
  size_t covered = 1;
  while (covered < static_cast<size_t>(g.order())) {
    ElementId best = -1;
    size_t best_size = 0;
    for (ElementId x = 0; x < g.order(); ++x) {
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
  return gens;
}

namespace detail {

WordTable bfs_words(const Group& g, const std::vector<ElementId>& gens) {
  WordTable wt;
  wt.parent.assign(g.order(), -2);
  wt.via.assign(g.order(), -1);
  wt.parent[0] = -1;
  wt.order.push_back(0);
  size_t head = 0;
  while (head < wt.order.size()) {
    ElementId x = wt.order[head++];
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      ElementId y = g.op(x, gens[gi]);
      if (wt.parent[y] == -2) {
        wt.parent[y] = x;
        wt.via[y] = static_cast<int>(gi);
        wt.order.push_back(y);
      }
    }
  }
  if (wt.order.size() != static_cast<size_t>(g.order()))
    throw UsageError("bfs_words: generators do not generate the group");
  return wt;
}

void evaluate_words(const Group& target, const WordTable& wt,
                    const std::vector<ElementId>& images,
                    std::vector<ElementId>& f) {
  f.assign(wt.parent.size(), -1);
  f[0] = 0;
  for (size_t i = 1; i < wt.order.size(); ++i) {
    ElementId y = wt.order[i];
    f[y] = target.op(f[wt.parent[y]], images[wt.via[y]]);
  }
}

bool is_endomorphism_table(const Group& g, const std::vector<ElementId>& f) {
  int n = g.order();
  for (ElementId a = 0; a < n; ++a) {
    const int fa = f[a];
    for (ElementId b = 0; b < n; ++b)
      if (f[g.op(a, b)] != g.op(fa, f[b])) return false;
  }
  return true;
}

}  // namespace detail

std::optional<std::vector<ElementId>> find_group_isomorphism(const Group& a,
                                                             const Group& b) {
  if (a.order() != b.order()) return std::nullopt;
  if (a.is_abelian() != b.is_abelian()) return std::nullopt;
  int n = a.order();
  std::map<int, int> census_a, census_b;
  for (ElementId x = 0; x < n; ++x) {
    census_a[a.element_order(x)]++;
    census_b[b.element_order(x)]++;
  }
  if (census_a != census_b) return std::nullopt;

  auto gens = minimal_generating_set(a);
  if (gens.empty()) return std::vector<ElementId>{0};
  auto wt = detail::bfs_words(a, gens);
  std::vector<std::vector<ElementId>> candidates(gens.size());
  for (size_t i = 0; i < gens.size(); ++i) {
    int d = a.element_order(gens[i]);
    for (ElementId y = 0; y < n; ++y)
      if (b.element_order(y) == d) candidates[i].push_back(y);
    if (candidates[i].empty()) return std::nullopt;
  }
  std::vector<size_t> idx(gens.size(), 0);
  std::vector<ElementId> images(gens.size());
  std::vector<ElementId> f;
  std::vector<char> hit(n);
  while (true) {
    for (size_t i = 0; i < gens.size(); ++i) images[i] = candidates[i][idx[i]];
    detail::evaluate_words(b, wt, images, f);
    std::fill(hit.begin(), hit.end(), 0);
    bool bij = true;
    for (ElementId x = 0; x < n && bij; ++x) {
      if (hit[f[x]]) bij = false;
      hit[f[x]] = 1;
    }
    if (bij) {
      bool hom = true;
      for (ElementId x = 0; x < n && hom; ++x)
        for (ElementId y = 0; y < n; ++y)
          if (f[a.op(x, y)] != b.op(f[x], f[y])) {
            hom = false;
            break;
          }
      if (hom) return f;
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
    if (!advanced) return std::nullopt;
  }
}

bool are_isomorphic_groups(const Group& a, const Group& b) {
  return find_group_isomorphism(a, b).has_value();
}

nlohmann::json descriptor_to_json(const GroupDescriptor& d) {
  return {{"name", d.name}, {"family", d.family}, {"params", d.params}};
}

}  // namespace endograph
