#include "weylkit/chartable.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace weylkit {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }
u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}
u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

u64 primitive_root(u64 p) {
  std::vector<u64> q = prime_factors(p - 1);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (u64 f : q)
      if (powmod(g, (p - 1) / f, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw std::logic_error("no primitive root found");
}

// --- dense mod-p polynomials (low-to-high coefficients) ---------------------

using Poly = std::vector<u64>;

void poly_trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, u64 p) {
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  // reduce modulo `mod` (monic)
  for (std::size_t i = c.size(); i-- >= mod.size() && i + 1 >= mod.size();) {
    if (i + 1 < mod.size()) break;
    u64 f = c[i];
    if (!f) continue;
    for (std::size_t j = 0; j < mod.size(); ++j) {
      std::size_t k = i - (mod.size() - 1) + j;
      c[k] = (c[k] + p - mulmod(f, mod[j], p)) % p;
    }
  }
  c.resize(mod.size() - 1);
  poly_trim(c);
  if (c.empty()) c.push_back(0);
  return c;
}

Poly poly_powmod(Poly base, u64 e, const Poly& mod, u64 p) {
  Poly r{1};
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, mod, p);
    base = poly_mulmod(base, base, mod, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    // a mod b
    u64 lead_inv = invmod(b.back(), p);
    while (a.size() >= b.size() && !a.empty()) {
      u64 f = mulmod(a.back(), lead_inv, p);
      if (f)
        for (std::size_t j = 0; j < b.size(); ++j) {
          std::size_t k = a.size() - b.size() + j;
          a[k] = (a[k] + p - mulmod(f, b[j], p)) % p;
        }
      poly_trim(a);
      if (a.empty()) break;
      if (a.size() >= b.size() && a.back() != 0) continue;
      while (!a.empty() && a.back() == 0) a.pop_back();
    }
    std::swap(a, b);
  }
  poly_trim(a);
  if (!a.empty()) {
    u64 inv = invmod(a.back(), p);
    for (auto& x : a) x = mulmod(x, inv, p);
  }
  return a;  // monic gcd
}

Poly poly_divexact(const Poly& a, const Poly& b, u64 p) {
  Poly rem = a;
  Poly q(a.size() - b.size() + 1, 0);
  u64 lead_inv = invmod(b.back(), p);
  for (std::size_t i = q.size(); i-- > 0;) {
    u64 f = mulmod(rem[i + b.size() - 1], lead_inv, p);
    q[i] = f;
    if (f)
      for (std::size_t j = 0; j < b.size(); ++j)
        rem[i + j] = (rem[i + j] + p - mulmod(f, b[j], p)) % p;
  }
  return q;
}

Poly poly_derivative(const Poly& f, u64 p) {
  Poly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(mulmod(f[i], i % p, p));
  poly_trim(d);
  return d;
}

void collect_roots(const Poly& f, u64 p, std::vector<u64>& out) {
  Poly g = f;
  poly_trim(g);
  if (g.size() <= 1) return;
  if (g.size() == 2) {
    out.push_back(mulmod(p - g[0] % p, invmod(g[1], p), p));
    return;
  }
  // split the product of distinct linear factors with deterministic shifts
  for (u64 delta = 0;; ++delta) {
    Poly shifted{delta % p, 1};  // x + delta
    Poly h = poly_powmod(shifted, (p - 1) / 2, g, p);
    if (h.empty()) h.push_back(0);
    h[0] = (h[0] + p - 1) % p;
    Poly d = poly_gcd(h, g, p);
    if (d.size() > 1 && d.size() < g.size()) {
      collect_roots(d, p, out);
      collect_roots(poly_divexact(g, d, p), p, out);
      return;
    }
    if (delta > p) throw std::logic_error("root splitting failed");
  }
}

std::vector<u64> roots_modp(Poly f, u64 p) {
  poly_trim(f);
  // squarefree part
  Poly d = poly_derivative(f, p);
  if (!d.empty()) {
    Poly g = poly_gcd(f, d, p);
    if (g.size() > 1) f = poly_divexact(f, g, p);
  }
  // keep only roots in F_p:  gcd(x^p - x, f)
  Poly xp = poly_powmod(Poly{0, 1}, p, f, p);  // x^p mod f
  if (xp.size() < 2) xp.resize(2, 0);
  xp[1] = (xp[1] + p - 1) % p;  // x^p - x
  Poly lin = poly_gcd(xp, f, p);
  std::vector<u64> out;
  if (lin.size() > 1) collect_roots(lin, p, out);
  std::sort(out.begin(), out.end());
  return out;
}

// dense mod-p matrices, row-major
struct Mat {
  int rows = 0, cols = 0;
  std::vector<u64> a;
  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
  u64& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  u64 at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

u64 det_modp(Mat m, u64 p) {
  u64 det = 1;
  for (int c = 0; c < m.cols; ++c) {
    int piv = -1;
    for (int r = c; r < m.rows; ++r)
      if (m.at(r, c)) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(c, j));
      det = p - det;
    }
    det = mulmod(det, m.at(c, c), p);
    u64 inv = invmod(m.at(c, c), p);
    for (int r = c + 1; r < m.rows; ++r) {
      u64 f = mulmod(m.at(r, c), inv, p);
      if (!f) continue;
      for (int j = c; j < m.cols; ++j) m.at(r, j) = (m.at(r, j) + p - mulmod(f, m.at(c, j), p)) % p;
    }
  }
  return det % p;
}

// characteristic polynomial det(xI - R) by interpolation
Poly charpoly_modp(const Mat& r, u64 p) {
  int d = r.rows;
  std::vector<u64> xs(d + 1), ys(d + 1);
  for (int t = 0; t <= d; ++t) {
    Mat m(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m.at(i, j) = (i == j ? (t + p - r.at(i, j) % p) % p
                                                       : (p - r.at(i, j) % p) % p);
    xs[t] = t;
    ys[t] = det_modp(m, p);
  }
  // Lagrange interpolation
  Poly f(d + 1, 0);
  for (int i = 0; i <= d; ++i) {
    Poly num{1};
    u64 den = 1;
    for (int j = 0; j <= d; ++j) {
      if (i == j) continue;
      Poly nxt(num.size() + 1, 0);
      for (std::size_t k = 0; k < num.size(); ++k) {
        nxt[k + 1] = (nxt[k + 1] + num[k]) % p;
        nxt[k] = (nxt[k] + mulmod(num[k], p - xs[j] % p, p)) % p;
      }
      num = std::move(nxt);
      den = mulmod(den, (xs[i] + p - xs[j]) % p, p);
    }
    u64 c = mulmod(ys[i], invmod(den, p), p);
    for (std::size_t k = 0; k < num.size(); ++k) f[k] = (f[k] + mulmod(c, num[k], p)) % p;
  }
  return f;
}

// rows kept in reduced row echelon form; returns pivot columns
std::vector<int> rref_modp(std::vector<std::vector<u64>>& rows, u64 p) {
  std::vector<int> pivots;
  int rrow = 0;
  int ncols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  for (int c = 0; c < ncols && rrow < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int r = rrow; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][c]) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rrow], rows[piv]);
    u64 inv = invmod(rows[rrow][c], p);
    for (auto& x : rows[rrow]) x = mulmod(x, inv, p);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rrow || !rows[r][c]) continue;
      u64 f = rows[r][c];
      for (int j = 0; j < ncols; ++j)
        rows[r][j] = (rows[r][j] + p - mulmod(f, rows[rrow][j], p)) % p;
    }
    pivots.push_back(c);
    ++rrow;
  }
  rows.resize(pivots.size());
  return pivots;
}

}  // namespace

int CharacterTable::degree(int i) const {
  return static_cast<int>(
      irreducibles[i].value(ctx->class_of(ctx->group->identity())).rational_value().get_num().get_si());
}

CharacterTable compute_character_table(Ctx ctx) {
  const FiniteGroup& G = *ctx->group;
  const ClassData& cls = ctx->classes;
  const int r = cls.count();
  const int n = G.order();
  if (r > kMaxClassesForTable)
    throw std::invalid_argument("class count " + std::to_string(r) + " too large for exact table");
  const long e = ctx->exponent;

  // prime p = 1 (mod e), p > 2 sqrt(n) * maxclass
  int maxclass = *std::max_element(cls.sizes.begin(), cls.sizes.end());
  u64 low = static_cast<u64>(2.0 * std::sqrt(static_cast<double>(n)) * maxclass) + 1;
  u64 p = 0;
  {
    u64 k = (low + e - 1) / e;
    if (k < 1) k = 1;
    u64 tries = 0;
    while (true) {
      u64 cand = k * static_cast<u64>(e) + 1;
      if (cand > low && is_prime(cand)) {
        p = cand;
        break;
      }
      ++k;
      if (++tries > 10'000'000ULL)
        throw std::runtime_error("prime search failed for exponent " + std::to_string(e));
    }
  }

  // structure constants a[i][j][k] = #{(x,y) in C_i x C_j : xy = rep_k}
  std::vector<u64> sc(static_cast<std::size_t>(r) * r * r, 0);
  auto sc_at = [&](int i, int j, int k) -> u64& {
    return sc[(static_cast<std::size_t>(i) * r + j) * r + k];
  };
  for (int k = 0; k < r; ++k) {
    int gk = cls.reps[k];
    for (int x = 0; x < n; ++x) {
      int y = G.mul(G.inverse(x), gk);
      ++sc_at(cls.class_of[x], cls.class_of[y], k);
    }
  }

  // split F_p^r into common eigenlines of the class-sum matrices
  std::vector<std::vector<std::vector<u64>>> spaces;
  {
    std::vector<std::vector<u64>> whole(r, std::vector<u64>(r, 0));
    for (int i = 0; i < r; ++i) whole[i][i] = 1;
    spaces.push_back(std::move(whole));
  }
  for (int i = 1; i < r; ++i) {
    // (A_i)[x][y] = a_{i,y,x}: column vector v transforms by (A_i v)[x] = sum_y A_i[x][y] v[y];
    // with v[k] = omega(c_k) this is omega(c_i c_y ...) — verified by tests downstream.
    std::vector<std::vector<std::vector<u64>>> next;
    for (auto& basis : spaces) {
      int d = static_cast<int>(basis.size());
      if (d == 1) {
        next.push_back(std::move(basis));
        continue;
      }
      auto pivots = rref_modp(basis, p);
      d = static_cast<int>(basis.size());
      // image rows: img(b)[x] = sum_y a_{i, y, x} b[y]  (right eigenvector layout)
      std::vector<std::vector<u64>> img(d, std::vector<u64>(r, 0));
      for (int bi = 0; bi < d; ++bi)
        for (int y = 0; y < r; ++y) {
          u64 by = basis[bi][y];
          if (!by) continue;
          for (int x = 0; x < r; ++x) {
            u64 c = sc_at(i, y, x) % p;
            if (c) img[bi][x] = (img[bi][x] + mulmod(by, c, p)) % p;
          }
        }
      // restriction matrix: img(b_j) = sum_m R[m][j] b_m via pivot back-substitution
      Mat R(d, d);
      for (int j = 0; j < d; ++j) {
        std::vector<u64> w = img[j];
        for (int m = 0; m < d; ++m) {
          u64 c = w[pivots[m]];
          R.at(m, j) = c;
          if (!c) continue;
          for (int col = 0; col < r; ++col)
            w[col] = (w[col] + p - mulmod(c, basis[m][col], p)) % p;
        }
        for (u64 x : w)
          if (x) throw std::logic_error("class-sum matrix does not preserve the subspace");
      }
      std::vector<u64> eigs = roots_modp(charpoly_modp(R, p), p);
      if (eigs.size() <= 1) {
        next.push_back(std::move(basis));
        continue;
      }
      for (u64 lam : eigs) {
        // kernel of (R - lam) in subspace coordinates
        std::vector<std::vector<u64>> m(d, std::vector<u64>(d, 0));
        for (int x = 0; x < d; ++x)
          for (int y = 0; y < d; ++y) m[x][y] = (R.at(x, y) + (x == y ? p - lam % p : 0)) % p;
        // nullspace via rref on the transpose-free layout: solve m u = 0
        std::vector<std::vector<u64>> mm = m;
        auto piv = rref_modp(mm, p);
        std::vector<int> free_cols;
        {
          std::vector<bool> isp(d, false);
          for (int c : piv) isp[c] = true;
          for (int c = 0; c < d; ++c)
            if (!isp[c]) free_cols.push_back(c);
        }
        std::vector<std::vector<u64>> sub;
        for (int fc : free_cols) {
          std::vector<u64> u(d, 0);
          u[fc] = 1;
          for (std::size_t rr = 0; rr < mm.size(); ++rr)
            u[piv[rr]] = (p - mm[rr][fc]) % p;
          // ambient vector sum_j u[j] * basis[j]
          std::vector<u64> amb(r, 0);
          for (int j = 0; j < d; ++j) {
            if (!u[j]) continue;
            for (int col = 0; col < r; ++col)
              amb[col] = (amb[col] + mulmod(u[j], basis[j][col], p)) % p;
          }
          sub.push_back(std::move(amb));
        }
        if (sub.empty()) throw std::logic_error("empty eigenspace");
        next.push_back(std::move(sub));
      }
    }
    spaces = std::move(next);
    bool all_lines = true;
    for (const auto& s : spaces) all_lines = all_lines && s.size() == 1;
    if (all_lines) break;
  }
  if (static_cast<int>(spaces.size()) != r)
    throw std::logic_error("central character splitting failed");

  // central characters omega, normalized at the identity class
  std::vector<std::vector<u64>> omega;
  for (auto& s : spaces) {
    std::vector<u64> v = s[0];
    if (!v[0]) throw std::logic_error("eigenvector vanishes at the identity class");
    u64 inv = invmod(v[0], p);
    for (auto& x : v) x = mulmod(x, inv, p);
    omega.push_back(std::move(v));
  }

  // degrees and mod-p character values
  u64 root = primitive_root(p);
  long sqn = static_cast<long>(std::sqrt(static_cast<double>(n))) + 1;
  std::vector<std::vector<u64>> chi_modp;
  std::vector<int> degrees;
  for (const auto& v : omega) {
    u64 t = 0;
    for (int k = 0; k < r; ++k) {
      u64 term = mulmod(v[k], v[ctx->inverse_class[k]], p);
      t = (t + mulmod(term, invmod(cls.sizes[k] % p, p), p)) % p;
    }
    u64 d2 = mulmod(n % p, invmod(t, p), p);
    int deg = -1;
    for (long d = 1; d <= sqn; ++d)
      if (mulmod(d, d, p) == d2) {
        deg = static_cast<int>(d);
        break;
      }
    if (deg < 0) throw std::logic_error("degree recovery failed");
    degrees.push_back(deg);
    std::vector<u64> chi(r);
    for (int k = 0; k < r; ++k)
      chi[k] = mulmod(mulmod(deg, v[k], p), invmod(cls.sizes[k] % p, p), p);
    chi_modp.push_back(std::move(chi));
  }

  // power maps for the lifting step
  std::vector<std::vector<int>> power_class(r);
  for (int k = 0; k < r; ++k) {
    int o = ctx->rep_orders[k];
    power_class[k].resize(o);
    int g = G.identity();
    for (int t = 0; t < o; ++t) {
      power_class[k][t] = cls.class_of[g];
      g = G.mul(g, cls.reps[k]);
    }
  }

  // lift: chi(g_k) = sum_m a_m zeta_e^{(e/o) m} with eigenvalue counts a_m
  std::vector<ClassFunction> irr;
  for (std::size_t ci = 0; ci < chi_modp.size(); ++ci) {
    std::vector<Cyclotomic> vals(r);
    for (int k = 0; k < r; ++k) {
      long o = ctx->rep_orders[k];
      u64 theta = powmod(root, (p - 1) / o, p);
      u64 inv_o = invmod(o % p, p);
      Cyclotomic val;
      for (long m = 0; m < o; ++m) {
        u64 am = 0;
        for (long t = 0; t < o; ++t) {
          u64 th = powmod(theta, static_cast<u64>((o - m) % o) * t % o, p);
          am = (am + mulmod(chi_modp[ci][power_class[k][t]], th, p)) % p;
        }
        am = mulmod(am, inv_o, p);
        if (am > static_cast<u64>(degrees[ci]))
          throw std::logic_error("eigenvalue count exceeds the degree");
        if (am)
          val += Cyclotomic::root_of_unity(e, (e / o) * m).scaled(Rat(static_cast<long>(am)));
      }
      vals[k] = val.embedded(e);
    }
    irr.emplace_back(ctx, std::move(vals));
  }

  std::sort(irr.begin(), irr.end(), [&](const ClassFunction& a, const ClassFunction& b) {
    const Cyclotomic& da = a.value(0);
    const Cyclotomic& db = b.value(0);
    int c = Cyclotomic::compare(da, db);
    if (c != 0) return c < 0;
    for (int k = 1; k < r; ++k) {
      c = Cyclotomic::compare(a.value(k), b.value(k));
      if (c != 0) return c < 0;
    }
    return false;
  });

  CharacterTable table{ctx, e, std::move(irr)};
  verify_character_table(table);
  return table;
}

void verify_character_table(const CharacterTable& table) {
  const auto& ctx = *table.ctx;
  const int r = ctx.n_classes();
  if (static_cast<int>(table.irreducibles.size()) != r)
    throw std::logic_error("irreducible count != class count");
  long sum = 0;
  for (int i = 0; i < r; ++i) {
    const auto& d = table.irreducibles[i].value(0);
    if (!d.is_rational_integer()) throw std::logic_error("non-integer degree");
    sum += d.rational_value().get_num().get_si() * d.rational_value().get_num().get_si();
  }
  if (sum != ctx.order()) throw std::logic_error("sum of squared degrees mismatch");
  for (int i = 0; i < r; ++i) {
    for (int j = i; j < r; ++j) {
      Cyclotomic ip = inner_product(table.irreducibles[i], table.irreducibles[j]);
      if (ip != Cyclotomic(i == j ? 1 : 0)) throw std::logic_error("row orthogonality failed");
    }
    for (const auto& v : table.irreducibles[i].values())
      if (!v.is_algebraic_integer()) throw std::logic_error("non-integral character value");
  }
  // column orthogonality: sum_chi chi(c) conj(chi(c')) = delta |C_G(c)|
  for (int c1 = 0; c1 < r; ++c1)
    for (int c2 = c1; c2 < r; ++c2) {
      Cyclotomic s;
      for (int i = 0; i < r; ++i)
        s += table.irreducibles[i].value(c1) * table.irreducibles[i].value(c2).conj();
      Cyclotomic expect(c1 == c2 ? Rat(ctx.order(), ctx.classes.sizes[c1]) : Rat(0));
      Rat ev = expect.rational_value();
      ev.canonicalize();
      if (s != Cyclotomic(ev)) throw std::logic_error("column orthogonality failed");
    }
}

// ---------------------------------------------------------------------------
// cache

std::optional<std::string> cache_directory() {
  if (const char* dir = std::getenv("WEYLKIT_CACHE_DIR")) {
    if (*dir) return std::string(dir);
    return std::nullopt;  // explicitly disabled with an empty value
  }
  if (const char* home = std::getenv("HOME"))
    return std::string(home) + "/.cache/weylkit";
  return std::nullopt;
}

std::string group_fingerprint(const FiniteGroup& g) {
  // FNV-1a over the description
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : g.description()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

std::string table_to_json(const CharacterTable& table) {
  nlohmann::ordered_json j;
  j["schema"] = "weylkit-table/1";
  j["description"] = table.ctx->group->description();
  j["order"] = table.ctx->order();
  j["conductor"] = table.conductor;
  nlohmann::ordered_json classes = nlohmann::ordered_json::array();
  for (int k = 0; k < table.ctx->n_classes(); ++k) {
    classes.push_back({{"rep", table.ctx->classes.reps[k]},
                       {"size", table.ctx->classes.sizes[k]},
                       {"order", table.ctx->rep_orders[k]}});
  }
  j["classes"] = std::move(classes);
  nlohmann::ordered_json chars = nlohmann::ordered_json::array();
  for (const auto& chi : table.irreducibles) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (const auto& v : chi.values()) {
      nlohmann::ordered_json coords = nlohmann::ordered_json::array();
      for (const auto& c : v.embedded(table.conductor).coords()) coords.push_back(c.get_str());
      row.push_back(std::move(coords));
    }
    chars.push_back(std::move(row));
  }
  j["characters"] = std::move(chars);
  return j.dump(1);
}

CharacterTable table_from_json(Ctx ctx, const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (j.at("schema") != "weylkit-table/1") throw std::runtime_error("unknown table schema");
  if (j.at("description") != ctx->group->description())
    throw std::runtime_error("cache entry is for a different group");
  if (j.at("order") != ctx->order()) throw std::runtime_error("cache order mismatch");
  long conductor = j.at("conductor").get<long>();
  if (conductor != ctx->exponent) throw std::runtime_error("cache conductor mismatch");
  const auto& classes = j.at("classes");
  if (static_cast<int>(classes.size()) != ctx->n_classes())
    throw std::runtime_error("cache class count mismatch");
  for (int k = 0; k < ctx->n_classes(); ++k) {
    if (classes[k].at("rep") != ctx->classes.reps[k] ||
        classes[k].at("size") != ctx->classes.sizes[k] ||
        classes[k].at("order") != ctx->rep_orders[k])
      throw std::runtime_error("cache class data mismatch");
  }
  std::vector<ClassFunction> irr;
  for (const auto& row : j.at("characters")) {
    std::vector<Cyclotomic> vals;
    for (const auto& coords : row) {
      std::vector<Rat> c;
      for (const auto& s : coords) {
        Rat x(s.get<std::string>());
        x.canonicalize();
        c.push_back(x);
      }
      vals.emplace_back(conductor, std::move(c));
    }
    irr.emplace_back(ctx, std::move(vals));
  }
  CharacterTable table{std::move(ctx), conductor, std::move(irr)};
  verify_character_table(table);
  return table;
}

CharacterTable character_table(Ctx ctx, bool use_cache) {
  std::optional<std::string> dir = use_cache ? cache_directory() : std::nullopt;
  std::filesystem::path file;
  if (dir) {
    file = std::filesystem::path(*dir) / (group_fingerprint(*ctx->group) + ".json");
    std::error_code ec;
    if (std::filesystem::exists(file, ec)) {
      try {
        std::ifstream in(file);
        std::stringstream ss;
        ss << in.rdbuf();
        return table_from_json(ctx, ss.str());
      } catch (const std::exception&) {
        // fall through to recompute; the entry is stale or corrupt
      }
    }
  }
  CharacterTable table = compute_character_table(ctx);
  if (dir) {
    std::error_code ec;
    std::filesystem::create_directories(*dir, ec);
    if (!ec) {
      std::ofstream out(file);
      out << table_to_json(table);
    }
  }
  return table;
}

}  // namespace weylkit
