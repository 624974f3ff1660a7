#include "weylkit/coxeter.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace weylkit {

namespace {

std::string perm_key(const RootPerm& p) {
  return std::string(reinterpret_cast<const char*>(p.data()), p.size() * sizeof(p[0]));
}

RootPerm compose_perm(const RootPerm& a, const RootPerm& b) {
  // (a*b)(x) = a(b(x))
  RootPerm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
  return out;
}

RootPerm invert_perm(const RootPerm& a) {
  RootPerm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[a[i]] = static_cast<std::uint16_t>(i);
  return out;
}

int count_inversions(const RootPerm& p, int n_positive) {
  int c = 0;
  for (int i = 0; i < n_positive; ++i)
    if (p[i] >= n_positive) ++c;
  return c;
}

// Cartan matrix with cartan[i][j] = <alpha_j, alpha_i^vee>; off-diagonal <= 0.
std::vector<std::vector<int>> make_cartan(char series, int rank) {
  std::vector<std::vector<int>> a(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) a[i][i] = 2;
  auto chain_edge = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (series) {
    case 'A':
      for (int i = 0; i + 1 < rank; ++i) chain_edge(i, i + 1);
      break;
    case 'B':  // alpha_{rank-1} is the short root
      for (int i = 0; i + 1 < rank; ++i) chain_edge(i, i + 1);
      if (rank >= 2) {
        a[rank - 1][rank - 2] = -2;
        a[rank - 2][rank - 1] = -1;
      }
      break;
    case 'C':  // alpha_{rank-1} is the long root
      for (int i = 0; i + 1 < rank; ++i) chain_edge(i, i + 1);
      if (rank >= 2) {
        a[rank - 1][rank - 2] = -1;
        a[rank - 2][rank - 1] = -2;
      }
      break;
    case 'D':  // fork: node rank-1 attached to node rank-3
      for (int i = 0; i + 2 < rank; ++i) chain_edge(i, i + 1);
      chain_edge(rank - 3, rank - 1);
      break;
    case 'E':  // chain 0-2-3-4-5(-6)(-7), node 1 attached to node 3
      chain_edge(0, 2);
      for (int i = 2; i + 1 < rank; ++i) chain_edge(i, i + 1);
      chain_edge(1, 3);
      break;
    case 'F':  // 0-1=2-3, nodes 0,1 long and 2,3 short
      chain_edge(0, 1);
      chain_edge(2, 3);
      a[2][1] = -2;
      a[1][2] = -1;
      break;
    case 'G':  // alpha_0 short, alpha_1 long
      a[0][1] = -3;
      a[1][0] = -1;
      break;
    default:
      throw std::invalid_argument("unknown series");
  }
  return a;
}

std::vector<std::vector<int>> make_coxeter_matrix(const std::vector<std::vector<int>>& cartan) {
  int n = static_cast<int>(cartan.size());
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) {
    m[i][i] = 1;
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      switch (cartan[i][j] * cartan[j][i]) {
        case 0: m[i][j] = 2; break;
        case 1: m[i][j] = 3; break;
        case 2: m[i][j] = 4; break;
        case 3: m[i][j] = 6; break;
        default: throw std::invalid_argument("non-crystallographic Cartan product");
      }
    }
  }
  return m;
}

// Symmetrizer d_i with (alpha_i, alpha_j) = d_i * cartan[i][j]; short roots get 1.
std::vector<int> make_norms(const std::vector<std::vector<int>>& cartan) {
  int n = static_cast<int>(cartan.size());
  std::vector<int> num(n, 0), den(n, 1);
  std::vector<int> todo;
  num[0] = 1;
  todo.push_back(0);
  while (!todo.empty()) {
    int i = todo.back();
    todo.pop_back();
    for (int j = 0; j < n; ++j) {
      if (i == j || cartan[i][j] == 0 || num[j] != 0) continue;
      // d_i a[i][j] = d_j a[j][i]
      num[j] = num[i] * cartan[i][j];
      den[j] = den[i] * cartan[j][i];
      int g = std::gcd(std::abs(num[j]), std::abs(den[j]));
      num[j] /= g;
      den[j] /= g;
      if ((num[j] < 0) == (den[j] < 0)) {
        num[j] = std::abs(num[j]);
        den[j] = std::abs(den[j]);
      }
      todo.push_back(j);
    }
  }
  int lcm_den = 1;
  for (int i = 0; i < n; ++i) lcm_den = std::lcm(lcm_den, den[i]);
  std::vector<int> d(n);
  for (int i = 0; i < n; ++i) d[i] = num[i] * (lcm_den / den[i]);
  int mn = *std::min_element(d.begin(), d.end());
  for (int& x : d) x /= mn;
  return d;
}

}  // namespace

// ---------------------------------------------------------------------------
// CoxeterDatum

DatumPtr build_weyl(char series, int rank, int rank_bound) {
  auto bad = [&](const std::string& why) {
    std::ostringstream os;
    os << "invalid Weyl pair (" << series << ", " << rank << "): " << why;
    throw std::invalid_argument(os.str());
  };
  if (rank < 1) bad("rank must be positive");
  if (rank > rank_bound) bad("rank exceeds bound " + std::to_string(rank_bound));
  if (rank > kMaxRank) bad("rank exceeds compiled maximum");
  switch (series) {
    case 'A': break;
    case 'B':
    case 'C':
      if (rank < 2) bad("series needs rank >= 2");
      break;
    case 'D':
      if (rank < 3) bad("series needs rank >= 3");
      break;
    case 'E':
      if (rank < 6 || rank > 8) bad("series needs rank in {6,7,8}");
      break;
    case 'F':
      if (rank != 4) bad("series needs rank 4");
      break;
    case 'G':
      if (rank != 2) bad("series needs rank 2");
      break;
    case 'H':
    case 'I':
      bad("non-crystallographic series is not supported");
      break;
    default:
      bad("unknown series letter");
  }

  auto d = std::make_shared<CoxeterDatum>();
  d->series = series;
  d->rank = rank;
  d->cartan = make_cartan(series, rank);
  d->coxeter = make_coxeter_matrix(d->cartan);
  d->root_norm = make_norms(d->cartan);

  // Generate the full root set by closing the simples under simple reflections.
  auto reflect = [&](int s, const Root& r) {
    // s_i(alpha) = alpha - <alpha, alpha_i^vee> alpha_i,
    // <alpha, alpha_i^vee> = sum_j c_j cartan[i][j]
    int pairing = 0;
    for (int j = 0; j < rank; ++j) pairing += r.c[j] * d->cartan[s][j];
    Root out = r;
    out.c[s] = static_cast<std::int8_t>(out.c[s] - pairing);
    return out;
  };
  std::set<Root> seen;
  std::vector<Root> queue;
  for (int s = 0; s < rank; ++s) {
    Root r{};
    r.c[s] = 1;
    seen.insert(r);
    queue.push_back(r);
  }
  while (!queue.empty()) {
    Root r = queue.back();
    queue.pop_back();
    for (int s = 0; s < rank; ++s) {
      Root img = reflect(s, r);
      if (seen.insert(img).second) queue.push_back(img);
    }
  }

  std::vector<Root> positives;
  for (const Root& r : seen) {
    bool pos = false, neg = false;
    for (int j = 0; j < rank; ++j) {
      if (r.c[j] > 0) pos = true;
      if (r.c[j] < 0) neg = true;
    }
    if (pos && neg) throw std::logic_error("mixed-sign root generated");
    if (pos) positives.push_back(r);
  }
  std::sort(positives.begin(), positives.end(), [&](const Root& x, const Root& y) {
    int hx = 0, hy = 0;
    for (int j = 0; j < rank; ++j) {
      hx += x.c[j];
      hy += y.c[j];
    }
    if (hx != hy) return hx < hy;
    return x.c < y.c;
  });

  d->n_positive = static_cast<int>(positives.size());
  d->roots = positives;
  for (const Root& r : positives) {
    Root m{};
    for (int j = 0; j < rank; ++j) m.c[j] = static_cast<std::int8_t>(-r.c[j]);
    d->roots.push_back(m);
  }
  for (int i = 0; i < d->n_roots(); ++i) d->root_index_[d->roots[i]] = i;

  d->simple_ids_.resize(rank);
  for (int s = 0; s < rank; ++s) {
    Root r{};
    r.c[s] = 1;
    d->simple_ids_[s] = d->root_index_.at(r);
  }

  d->simple_perms_.resize(rank);
  for (int s = 0; s < rank; ++s) {
    RootPerm p(d->n_roots());
    for (int i = 0; i < d->n_roots(); ++i)
      p[i] = static_cast<std::uint16_t>(d->root_index_.at(reflect(s, d->roots[i])));
    d->simple_perms_[s] = std::move(p);
  }
  return d;
}

int CoxeterDatum::root_id(const Root& r) const {
  auto it = root_index_.find(r);
  if (it == root_index_.end()) throw std::invalid_argument("not a root");
  return it->second;
}

int CoxeterDatum::root_height(int root_id) const {
  int h = 0;
  for (int j = 0; j < rank; ++j) h += roots[root_id].c[j];
  return h;
}

int CoxeterDatum::root_norm_of(int root_id) const {
  // (beta,beta)/2 = sum_{i,j} b_i b_j d_i cartan[i][j] / 2
  const Root& b = roots[root_id];
  int tot = 0;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) tot += b.c[i] * b.c[j] * root_norm[i] * cartan[i][j];
  if (tot % 2) throw std::logic_error("odd root norm");
  return tot / 2;
}

int CoxeterDatum::pairing(int alpha_id, int beta_id) const {
  // <alpha, beta^vee> = 2(alpha,beta)/(beta,beta), with (alpha_i,alpha_j) = d_i cartan[i][j]
  const Root& a = roots[alpha_id];
  const Root& b = roots[beta_id];
  int ab = 0;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) ab += a.c[i] * b.c[j] * root_norm[i] * cartan[i][j];
  int nb = root_norm_of(beta_id);
  if (ab % nb) throw std::logic_error("non-integral pairing");
  return ab / nb;
}

GroupElement CoxeterDatum::identity() const {
  RootPerm p(n_roots());
  std::iota(p.begin(), p.end(), 0);
  return GroupElement(shared_from_this(), std::move(p));
}

GroupElement CoxeterDatum::simple_reflection(int s) const {
  if (s < 0 || s >= rank) throw std::invalid_argument("simple label out of range");
  return GroupElement(shared_from_this(), simple_perms_[s]);
}

GroupElement CoxeterDatum::reflection_in_root(int beta_id) const {
  RootPerm p(n_roots());
  for (int i = 0; i < n_roots(); ++i) {
    // s_beta(alpha) = alpha - <alpha, beta^vee> beta
    int pr = pairing(i, beta_id);
    Root out = roots[i];
    for (int j = 0; j < rank; ++j)
      out.c[j] = static_cast<std::int8_t>(out.c[j] - pr * roots[beta_id].c[j]);
    p[i] = static_cast<std::uint16_t>(root_id(out));
  }
  return GroupElement(shared_from_this(), std::move(p));
}

GroupElement CoxeterDatum::from_word(const std::vector<int>& word) const {
  GroupElement w = identity();
  for (int s : word) w = w * simple_reflection(s);
  return w;
}

std::uint64_t CoxeterDatum::order_from_degrees() const {
  std::vector<int> deg;
  switch (series) {
    case 'A':
      for (int i = 2; i <= rank + 1; ++i) deg.push_back(i);
      break;
    case 'B':
    case 'C':
      for (int i = 1; i <= rank; ++i) deg.push_back(2 * i);
      break;
    case 'D':
      for (int i = 1; i < rank; ++i) deg.push_back(2 * i);
      deg.push_back(rank);
      break;
    case 'E':
      if (rank == 6) deg = {2, 5, 6, 8, 9, 12};
      if (rank == 7) deg = {2, 6, 8, 10, 12, 14, 18};
      if (rank == 8) deg = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case 'F': deg = {2, 6, 8, 12}; break;
    case 'G': deg = {2, 6}; break;
  }
  std::uint64_t n = 1;
  for (int x : deg) n *= static_cast<std::uint64_t>(x);
  return n;
}

std::string CoxeterDatum::name() const { return std::string(1, series) + std::to_string(rank); }

const ElementTable& CoxeterDatum::elements() const {
  std::lock_guard<std::mutex> lock(elements_mutex_);
  if (!elements_) {
    auto t = std::make_shared<ElementTable>();
    RootPerm id(n_roots());
    std::iota(id.begin(), id.end(), 0);
    t->perms.push_back(id);
    t->lengths.push_back(0);
    t->parent.push_back({-1, -1});
    t->index[perm_key(id)] = 0;
    for (std::size_t head = 0; head < t->perms.size(); ++head) {
      for (int s = 0; s < rank; ++s) {
        RootPerm q = compose_perm(t->perms[head], simple_perms_[s]);
        int len = count_inversions(q, n_positive);
        if (len != t->lengths[head] + 1) continue;
        auto [it, inserted] = t->index.emplace(perm_key(q), static_cast<int>(t->perms.size()));
        if (!inserted) continue;
        t->perms.push_back(std::move(q));
        t->lengths.push_back(len);
        t->parent.push_back({static_cast<int>(head), s});
      }
    }
    elements_ = std::move(t);
  }
  return *elements_;
}

GroupElement CoxeterDatum::element(int index) const {
  return GroupElement(shared_from_this(), elements().perms.at(index));
}

int ElementTable::index_of(const RootPerm& p) const {
  auto it = index.find(perm_key(p));
  return it == index.end() ? -1 : it->second;
}

std::vector<int> ElementTable::word_of(int i) const {
  std::vector<int> w;
  while (parent[i].first >= 0) {
    w.push_back(parent[i].second);
    i = parent[i].first;
  }
  std::reverse(w.begin(), w.end());
  return w;
}

// ---------------------------------------------------------------------------
// GroupElement

GroupElement::GroupElement(DatumPtr datum, RootPerm perm)
    : datum_(std::move(datum)), perm_(std::move(perm)) {
  if (datum_ && perm_.size() != static_cast<std::size_t>(datum_->n_roots()))
    throw std::invalid_argument("permutation size does not match root set");
}

bool GroupElement::is_identity() const {
  for (std::size_t i = 0; i < perm_.size(); ++i)
    if (perm_[i] != i) return false;
  return true;
}

int GroupElement::length() const { return count_inversions(perm_, datum_->n_positive); }

GroupElement GroupElement::operator*(const GroupElement& o) const {
  if (datum_.get() != o.datum_.get()) throw std::invalid_argument("mixed Weyl data");
  return GroupElement(datum_, compose_perm(perm_, o.perm_));
}

GroupElement GroupElement::inverse() const { return GroupElement(datum_, invert_perm(perm_)); }

bool GroupElement::left_descent(int s) const {
  // l(sw) < l(w) iff w^{-1}(alpha_s) < 0 iff alpha_s in w(Phi^-).
  int target = datum_->simple_root_id(s);
  int neg = datum_->negate(target);
  // find preimage of alpha_s
  for (int i = datum_->n_positive; i < datum_->n_roots(); ++i)
    if (perm_[i] == target) return true;
  (void)neg;
  return false;
}

bool GroupElement::right_descent(int s) const {
  return !datum_->is_positive(perm_[datum_->simple_root_id(s)]);
}

std::vector<int> GroupElement::word() const {
  std::vector<int> out;
  GroupElement w = *this;
  while (!w.is_identity()) {
    int s = -1;
    for (int i = 0; i < datum_->rank; ++i)
      if (w.left_descent(i)) {
        s = i;
        break;
      }
    out.push_back(s);
    w = datum_->simple_reflection(s) * w;
  }
  return out;
}

std::string GroupElement::word_str() const { return word_to_string(word()); }

// ---------------------------------------------------------------------------
// Coset machinery

int length(const CoxeterDatum&, const GroupElement& w) { return w.length(); }

GroupElement min_double_coset_rep(const CoxeterDatum& datum, SimpleSubset J,
                                  const GroupElement& w, SimpleSubset K) {
  GroupElement cur = w;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s : J.members()) {
      while (cur.left_descent(s)) {
        cur = datum.simple_reflection(s) * cur;
        changed = true;
      }
    }
    for (int s : K.members()) {
      while (cur.right_descent(s)) {
        cur = cur * datum.simple_reflection(s);
        changed = true;
      }
    }
  }
  return cur;
}

std::vector<GroupElement> coset_reps(const CoxeterDatum& datum, SimpleSubset J,
                                     std::optional<SimpleSubset> K) {
  const ElementTable& t = datum.elements();
  std::vector<GroupElement> out;
  for (int i = 0; i < t.size(); ++i) {
    GroupElement w(datum.element(i));
    bool ok = true;
    for (int s : J.members())
      if (w.left_descent(s)) {
        ok = false;
        break;
      }
    if (ok && K)
      for (int s : K->members())
        if (w.right_descent(s)) {
          ok = false;
          break;
        }
    if (ok) out.push_back(std::move(w));
  }
  return out;
}

std::optional<SimpleSubset> ad_simple_subset(const CoxeterDatum& datum, const GroupElement& w,
                                             SimpleSubset J) {
  SimpleSubset out;
  for (int s : J.members()) {
    int img = w.act(datum.simple_root_id(s));
    int line = datum.is_positive(img) ? img : datum.negate(img);
    // w s w^{-1} is the reflection in the root line of w(alpha_s)
    int t = -1;
    for (int i = 0; i < datum.rank; ++i)
      if (datum.simple_root_id(i) == line) {
        t = i;
        break;
      }
    if (t < 0) return std::nullopt;
    out = out.with(t);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Diagram automorphisms

DiagramAut::DiagramAut(DatumPtr datum, std::vector<int> node_map, AutLevel level)
    : datum_(std::move(datum)), node_map_(std::move(node_map)), level_(level) {
  int n = datum_->rank;
  if (static_cast<int>(node_map_.size()) != n)
    throw std::invalid_argument("node map has wrong size");
  std::vector<bool> hit(n, false);
  for (int x : node_map_) {
    if (x < 0 || x >= n || hit[x]) throw std::invalid_argument("node map is not a bijection");
    hit[x] = true;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (datum_->coxeter[node_map_[i]][node_map_[j]] != datum_->coxeter[i][j])
        throw std::invalid_argument("node map does not preserve the Coxeter matrix");
      if (level_ == AutLevel::dynkin &&
          datum_->cartan[node_map_[i]][node_map_[j]] != datum_->cartan[i][j])
        throw std::invalid_argument("node map does not preserve the Cartan matrix");
    }
  if (level_ == AutLevel::dynkin) {
    root_perm_.resize(datum_->n_roots());
    for (int i = 0; i < datum_->n_roots(); ++i) {
      Root img{};
      for (int j = 0; j < n; ++j) img.c[node_map_[j]] = datum_->roots[i].c[j];
      root_perm_[i] = static_cast<std::uint16_t>(datum_->root_id(img));
    }
  }
}

DiagramAut DiagramAut::identity(DatumPtr datum) {
  std::vector<int> id(datum->rank);
  std::iota(id.begin(), id.end(), 0);
  return DiagramAut(std::move(datum), std::move(id), AutLevel::dynkin);
}

bool DiagramAut::is_identity() const {
  for (std::size_t i = 0; i < node_map_.size(); ++i)
    if (node_map_[i] != static_cast<int>(i)) return false;
  return true;
}

int DiagramAut::order() const {
  DiagramAut cur = *this;
  int k = 1;
  while (!cur.is_identity()) {
    cur = cur.compose(*this);
    ++k;
    if (k > 1000) throw std::logic_error("runaway automorphism order");
  }
  return k;
}

int DiagramAut::apply_inverse(int s) const {
  for (std::size_t i = 0; i < node_map_.size(); ++i)
    if (node_map_[i] == s) return static_cast<int>(i);
  throw std::logic_error("bad node map");
}

SimpleSubset DiagramAut::apply(SimpleSubset J) const {
  SimpleSubset out;
  for (int s : J.members()) out = out.with(node_map_[s]);
  return out;
}

SimpleSubset DiagramAut::apply_inverse(SimpleSubset J) const {
  SimpleSubset out;
  for (int s : J.members()) out = out.with(apply_inverse(s));
  return out;
}

DiagramAut DiagramAut::compose(const DiagramAut& o) const {
  std::vector<int> m(node_map_.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = node_map_[o.node_map_[i]];
  AutLevel lvl =
      (level_ == AutLevel::dynkin && o.level_ == AutLevel::dynkin) ? AutLevel::dynkin
                                                                   : AutLevel::coxeter;
  return DiagramAut(datum_, std::move(m), lvl);
}

DiagramAut DiagramAut::inverse_aut() const {
  std::vector<int> m(node_map_.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[node_map_[i]] = static_cast<int>(i);
  return DiagramAut(datum_, std::move(m), level_);
}

const RootPerm& DiagramAut::root_perm() const {
  if (root_perm_.empty()) throw std::logic_error("coxeter-level automorphism has no root action");
  return root_perm_;
}

GroupElement DiagramAut::apply(const GroupElement& w) const {
  // eps(w) = rho w rho^{-1} on root permutations
  const RootPerm& rho = root_perm();
  return GroupElement(datum_, compose_perm(rho, compose_perm(w.perm(), invert_perm(rho))));
}

std::string DiagramAut::str() const {
  if (is_identity()) return "id";
  std::string out;
  for (std::size_t i = 0; i < node_map_.size(); ++i) {
    if (!out.empty()) out += ',';
    out += std::to_string(node_map_[i] + 1);
  }
  return out;
}

std::vector<DiagramAut> diagram_automorphisms(DatumPtr datum, AutLevel level) {
  int n = datum->rank;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<DiagramAut> out;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        if (level == AutLevel::dynkin) {
          if (datum->cartan[p[i]][p[j]] != datum->cartan[i][j]) ok = false;
        } else if (datum->coxeter[p[i]][p[j]] != datum->coxeter[i][j]) {
          ok = false;
        }
      }
    if (ok) out.emplace_back(datum, p, level);
  } while (std::next_permutation(p.begin(), p.end()));
  std::sort(out.begin(), out.end(),
            [](const DiagramAut& a, const DiagramAut& b) { return a.node_map() < b.node_map(); });
  return out;
}

std::vector<std::vector<int>> simple_conjugacy_classes(const CoxeterDatum& datum) {
  // Simple reflections s,t are conjugate iff joined by a path of odd bonds.
  int n = datum.rank;
  std::vector<int> comp(n, -1);
  int nc = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = nc;
    std::vector<int> todo{s};
    while (!todo.empty()) {
      int i = todo.back();
      todo.pop_back();
      for (int j = 0; j < n; ++j)
        if (comp[j] < 0 && datum.coxeter[i][j] % 2 == 1 && datum.coxeter[i][j] > 1) {
          comp[j] = nc;
          todo.push_back(j);
        }
    }
    ++nc;
  }
  std::vector<std::vector<int>> classes(nc);
  for (int s = 0; s < n; ++s) classes[comp[s]].push_back(s);
  return classes;
}

// ---------------------------------------------------------------------------
// Parsing helpers

std::string word_to_string(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string out;
  for (int s : word) {
    if (!out.empty()) out += ' ';
    out += 's' + std::to_string(s + 1);
  }
  return out;
}

namespace {
int parse_label(const std::string& tok, int rank) {
  std::string t = tok;
  if (!t.empty() && (t[0] == 's' || t[0] == 'S')) t = t.substr(1);
  std::size_t pos = 0;
  int v;
  try {
    v = std::stoi(t, &pos);
  } catch (...) {
    throw std::invalid_argument("bad simple label '" + tok + "'");
  }
  if (pos != t.size() || v < 1 || v > rank)
    throw std::invalid_argument("bad simple label '" + tok + "'");
  return v - 1;
}
}  // namespace

std::vector<int> parse_word(const std::string& text, int rank) {
  std::vector<int> out;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok == "e" || tok == "1") continue;
    out.push_back(parse_label(tok, rank));
  }
  return out;
}

SimpleSubset parse_subset(const std::string& text, int rank) {
  SimpleSubset out;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok == "-" || tok == "none") continue;
    out = out.with(parse_label(tok, rank));
  }
  return out;
}

}  // namespace weylkit
