#include "weylkit/finite_group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace weylkit {

namespace {

std::string perm_key(const RootPerm& p) {
  return std::string(reinterpret_cast<const char*>(p.data()), p.size() * sizeof(p[0]));
}

constexpr int kMulTableLimit = 2048;

}  // namespace

int FiniteGroup::power(int a, long k) const {
  int r = identity();
  long n = k;
  int base = a;
  if (n < 0) {
    base = inverse(a);
    n = -n;
  }
  while (n > 0) {
    if (n & 1) r = mul(r, base);
    base = mul(base, base);
    n >>= 1;
  }
  return r;
}

int FiniteGroup::element_order(int a) const {
  int x = a;
  int k = 1;
  while (x != identity()) {
    x = mul(x, a);
    ++k;
    if (k > order()) throw std::logic_error("element order exceeds group order");
  }
  return k;
}

// ---------------------------------------------------------------------------
// PermGroup

PermGroup::PermGroup(std::vector<RootPerm> generator_perms, std::string description,
                     std::size_t order_cap)
    : desc_(std::move(description)) {
  if (generator_perms.empty()) throw std::invalid_argument("need at least the point count");
  std::size_t npts = generator_perms[0].size();
  RootPerm id(npts);
  std::iota(id.begin(), id.end(), 0);
  elems_.push_back(id);
  index_[perm_key(id)] = 0;
  parent_.push_back({-1, -1});
  // breadth-first closure over the generators, in the given order
  for (std::size_t head = 0; head < elems_.size(); ++head) {
    for (std::size_t gi = 0; gi < generator_perms.size(); ++gi) {
      const RootPerm& g = generator_perms[gi];
      RootPerm q(npts);
      for (std::size_t i = 0; i < npts; ++i) q[i] = elems_[head][g[i]];
      auto [it, inserted] = index_.emplace(perm_key(q), static_cast<int>(elems_.size()));
      if (inserted) {
        elems_.push_back(std::move(q));
        parent_.push_back({static_cast<int>(head), static_cast<int>(gi)});
        if (elems_.size() > order_cap) throw std::invalid_argument("group closure exceeds cap");
      }
    }
  }
  gens_.clear();
  for (const auto& g : generator_perms) gens_.push_back(index_.at(perm_key(g)));
  inv_.resize(elems_.size());
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    RootPerm q(npts);
    for (std::size_t x = 0; x < npts; ++x) q[elems_[i][x]] = static_cast<std::uint16_t>(x);
    inv_[i] = index_.at(perm_key(q));
  }
  if (order() <= kMulTableLimit) {
    table_n_ = order();
    table_.resize(static_cast<std::size_t>(table_n_) * table_n_);
    for (int a = 0; a < table_n_; ++a)
      for (int b = 0; b < table_n_; ++b) {
        RootPerm q(npts);
        for (std::size_t i = 0; i < npts; ++i) q[i] = elems_[a][elems_[b][i]];
        table_[static_cast<std::size_t>(a) * table_n_ + b] = index_.at(perm_key(q));
      }
  }
}

int PermGroup::mul(int a, int b) const {
  if (table_n_) return table_[static_cast<std::size_t>(a) * table_n_ + b];
  const RootPerm& pa = elems_[a];
  const RootPerm& pb = elems_[b];
  RootPerm q(pa.size());
  for (std::size_t i = 0; i < pa.size(); ++i) q[i] = pa[pb[i]];
  auto it = index_.find(perm_key(q));
  if (it == index_.end()) throw std::logic_error("product escaped the group");
  return it->second;
}

int PermGroup::index_of(const RootPerm& p) const {
  auto it = index_.find(perm_key(p));
  return it == index_.end() ? -1 : it->second;
}

std::vector<int> PermGroup::word_of(int a) const {
  std::vector<int> w;
  while (parent_[a].first >= 0) {
    w.push_back(parent_[a].second);
    a = parent_[a].first;
  }
  std::reverse(w.begin(), w.end());
  return w;
}

// ---------------------------------------------------------------------------
// SmallGroup

SmallGroup::SmallGroup(std::vector<std::vector<int>> table, std::vector<int> generators,
                       std::string description, std::vector<std::string> element_names)
    : table_(std::move(table)), gens_(std::move(generators)), names_(std::move(element_names)),
      desc_(std::move(description)) {
  int n = static_cast<int>(table_.size());
  for (const auto& row : table_)
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("ragged group table");
  for (int i = 0; i < n; ++i)
    if (table_[0][i] != i || table_[i][0] != i)
      throw std::invalid_argument("element 0 is not an identity");
  inv_.assign(n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (table_[i][j] == 0) inv_[i] = j;
  for (int i = 0; i < n; ++i)
    if (inv_[i] < 0) throw std::invalid_argument("missing inverse");
  // full associativity sweep; these groups are tiny
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw std::invalid_argument("group table is not associative");
  if (names_.empty()) {
    names_.resize(n);
    for (int i = 0; i < n; ++i) names_[i] = "g" + std::to_string(i);
  }
}

SmallGroup SmallGroup::cyclic(int n, const std::string& gen_name) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i)
    names[i] = i == 0 ? "1" : (i == 1 ? gen_name : gen_name + "^" + std::to_string(i));
  return SmallGroup(std::move(t), n > 1 ? std::vector<int>{1} : std::vector<int>{},
                    "Z/" + std::to_string(n), std::move(names));
}

SmallGroup SmallGroup::metacyclic(int M, int N, long k, long u) {
  auto modpow = [](long b, long e, long m) {
    long r = 1 % m;
    b %= m;
    if (b < 0) b += m;
    while (e > 0) {
      if (e & 1) r = r * b % m;
      b = b * b % m;
      e >>= 1;
    }
    return r;
  };
  if (M < 1 || N < 1) throw std::invalid_argument("metacyclic orders must be positive");
  if (modpow(k, N, M) != 1 % M) throw std::invalid_argument("metacyclic needs k^N = 1 (mod M)");
  if ((u * k) % M != u % M)
    throw std::invalid_argument("metacyclic needs u*k = u (mod M) for c^N = a^u");
  int n = M * N;
  auto id = [&](long i, long j) { return static_cast<int>((j % N) * M + ((i % M + M) % M)); };
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (long i = 0; i < M; ++i)
    for (long j = 0; j < N; ++j) {
      std::string nm;
      if (i) nm += i == 1 ? "a" : "a^" + std::to_string(i);
      if (j) nm += std::string(nm.empty() ? "" : " ") + (j == 1 ? "c" : "c^" + std::to_string(j));
      names[id(i, j)] = nm.empty() ? "1" : nm;
    }
  // (a^i c^j)(a^i' c^j') = a^{i + i' k^j + u*floor((j+j')/N)} c^{(j+j') mod N}
  for (long i = 0; i < M; ++i)
    for (long j = 0; j < N; ++j)
      for (long i2 = 0; i2 < M; ++i2)
        for (long j2 = 0; j2 < N; ++j2) {
          long iout = i + i2 * modpow(k, j, M) + u * ((j + j2) / N);
          t[id(i, j)][id(i2, j2)] = id(iout, (j + j2) % N);
        }
  std::vector<int> gens;
  if (M > 1) gens.push_back(id(1, 0));
  if (N > 1) gens.push_back(id(0, 1));
  std::ostringstream os;
  os << "metacyclic(M=" << M << ",N=" << N << ",k=" << k << ",u=" << u << ")";
  return SmallGroup(std::move(t), std::move(gens), os.str(), std::move(names));
}

// ---------------------------------------------------------------------------
// SemidirectGroup

SemidirectGroup::SemidirectGroup(GroupPtr base, std::shared_ptr<const SmallGroup> gamma,
                                 std::vector<std::vector<int>> action, std::string description)
    : base_(std::move(base)), gamma_(std::move(gamma)), action_(std::move(action)),
      desc_(std::move(description)) {
  int nb = base_->order();
  int ng = gamma_->order();
  if (static_cast<int>(action_.size()) != ng)
    throw std::invalid_argument("action table size mismatch");
  for (const auto& row : action_)
    if (static_cast<int>(row.size()) != nb) throw std::invalid_argument("action row mismatch");
  // each action_[g] must be an automorphism and g -> action_[g] a homomorphism
  for (int g = 0; g < ng; ++g) {
    if (action_[g][0] != 0) throw std::invalid_argument("action does not fix the identity");
    for (int a = 0; a < nb; ++a)
      for (int b = 0; b < nb; ++b)
        if (action_[g][base_->mul(a, b)] != base_->mul(action_[g][a], action_[g][b]))
          throw std::invalid_argument("action is not by automorphisms");
  }
  for (int g = 0; g < ng; ++g)
    for (int h = 0; h < ng; ++h)
      for (int a = 0; a < nb; ++a)
        if (action_[gamma_->mul(g, h)][a] != action_[g][action_[h][a]])
          throw std::invalid_argument("action is not a homomorphism");
  for (int g : base_->generators()) gens_.push_back(make(g, 0));
  for (int g : gamma_->generators()) gens_.push_back(make(0, g));
}

int SemidirectGroup::mul(int a, int b) const {
  int b1 = base_part(a), g1 = gamma_part(a);
  int b2 = base_part(b), g2 = gamma_part(b);
  return make(base_->mul(b1, action_[g1][b2]), gamma_->mul(g1, g2));
}

int SemidirectGroup::inverse(int a) const {
  int b1 = base_part(a), g1 = gamma_part(a);
  int gi = gamma_->inverse(g1);
  return make(action_[gi][base_->inverse(b1)], gi);
}

// ---------------------------------------------------------------------------
// Conjugacy classes

ClassData conjugacy_classes(const FiniteGroup& g, int order_bound) {
  if (g.order() > order_bound) {
    std::ostringstream os;
    os << "group order " << g.order() << " exceeds the bound " << order_bound;
    throw std::invalid_argument(os.str());
  }
  int n = g.order();
  ClassData out;
  out.class_of.assign(n, -1);
  // generator conjugation orbits; scanning ascending makes representatives
  // minimal in enumeration order
  std::vector<int> gens = g.generators();
  for (int seed = 0; seed < n; ++seed) {
    if (out.class_of[seed] >= 0) continue;
    int id = out.count();
    out.reps.push_back(seed);
    out.sizes.push_back(0);
    std::vector<int> todo{seed};
    out.class_of[seed] = id;
    while (!todo.empty()) {
      int x = todo.back();
      todo.pop_back();
      ++out.sizes[id];
      for (int gen : gens) {
        int y = g.conjugate(gen, x);
        if (out.class_of[y] < 0) {
          out.class_of[y] = id;
          todo.push_back(y);
        }
      }
    }
  }
  return out;
}

long group_exponent(const FiniteGroup& g, const ClassData& classes) {
  long e = 1;
  for (int r : classes.reps) e = std::lcm(e, static_cast<long>(g.element_order(r)));
  return e;
}

// ---------------------------------------------------------------------------
// Weyl-group constructions

std::shared_ptr<const PermGroup> weyl_group(DatumPtr datum) {
  std::vector<RootPerm> gens;
  for (int s = 0; s < datum->rank; ++s) gens.push_back(datum->simple_reflection(s).perm());
  return std::make_shared<PermGroup>(std::move(gens), "weyl:" + datum->name());
}

std::shared_ptr<const PermGroup> parabolic_group(DatumPtr datum, SimpleSubset J) {
  std::vector<RootPerm> gens;
  for (int s : J.members()) gens.push_back(datum->simple_reflection(s).perm());
  if (gens.empty()) {
    RootPerm id(datum->n_roots());
    std::iota(id.begin(), id.end(), 0);
    gens.push_back(id);  // trivial group needs the point count
  }
  return std::make_shared<PermGroup>(std::move(gens),
                                     "weyl:" + datum->name() + "|parab:" + J.str());
}

std::shared_ptr<const PermGroup> reflection_subgroup(DatumPtr datum,
                                                     const std::vector<int>& root_ids,
                                                     const std::string& description) {
  std::vector<RootPerm> gens;
  for (int r : root_ids) gens.push_back(datum->reflection_in_root(r).perm());
  if (gens.empty()) {
    RootPerm id(datum->n_roots());
    std::iota(id.begin(), id.end(), 0);
    gens.push_back(id);
  }
  return std::make_shared<PermGroup>(std::move(gens), description);
}

std::vector<int> embed_perm_group(const PermGroup& sub, const PermGroup& sup) {
  std::vector<int> map(sub.order());
  for (int i = 0; i < sub.order(); ++i) {
    int j = sup.index_of(sub.perm(i));
    if (j < 0) throw std::invalid_argument("subgroup element missing from the ambient group");
    map[i] = j;
  }
  return map;
}

}  // namespace weylkit
