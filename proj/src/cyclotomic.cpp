#include "weylkit/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace weylkit {

long euler_phi(long n) {
  long r = n;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  if (n > 1) r -= r / n;
  return r;
}

namespace {

// exact division of integer polynomials, quotient returned; remainder must vanish
std::vector<long> poly_divide(std::vector<long> num, const std::vector<long>& den) {
  std::vector<long> q(num.size() - den.size() + 1, 0);
  for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
    long lead = num[i + den.size() - 1];
    if (lead % den.back() != 0) throw std::logic_error("inexact polynomial division");
    long f = lead / den.back();
    q[i] = f;
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= f * den[j];
  }
  for (long x : num)
    if (x != 0) throw std::logic_error("nonzero remainder in cyclotomic division");
  return q;
}

std::map<long, std::vector<long>> g_cyclo_cache;
std::mutex g_cyclo_mutex;

}  // namespace

const std::vector<long>& cyclotomic_polynomial(long n) {
  std::lock_guard<std::mutex> lock(g_cyclo_mutex);
  auto it = g_cyclo_cache.find(n);
  if (it != g_cyclo_cache.end()) return it->second;
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  std::vector<long> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    std::vector<long> phid;
    {
      auto jt = g_cyclo_cache.find(d);
      if (jt != g_cyclo_cache.end()) {
        phid = jt->second;
      } else {
        // fill recursively without re-locking
        std::vector<long> p2(d + 1, 0);
        p2[0] = -1;
        p2[d] = 1;
        for (long e = 1; e < d; ++e) {
          if (d % e != 0) continue;
          p2 = poly_divide(std::move(p2), g_cyclo_cache.at(e));
        }
        g_cyclo_cache[d] = p2;
        phid = std::move(p2);
      }
    }
    poly = poly_divide(std::move(poly), phid);
  }
  return g_cyclo_cache[n] = std::move(poly);
}

namespace {

// reduce a polynomial (low-to-high coeffs) modulo Phi_n, in place
void reduce_mod_phi(std::vector<Rat>& v, long n) {
  const std::vector<long>& phi = cyclotomic_polynomial(n);
  std::size_t deg = phi.size() - 1;  // = euler_phi(n)
  for (std::size_t i = v.size(); i-- > deg;) {
    if (v[i] == 0) continue;
    Rat f = v[i];
    for (std::size_t j = 0; j < phi.size(); ++j) v[i - deg + j] -= f * phi[j];
  }
  v.resize(deg);
}

}  // namespace

Cyclotomic::Cyclotomic(long conductor, std::vector<Rat> coords) : n_(conductor), c_(std::move(coords)) {
  long d = euler_phi(n_);
  if (static_cast<long>(c_.size()) > d) reduce_mod_phi(c_, n_);
  c_.resize(d, Rat(0));
  for (auto& x : c_) x.canonicalize();
}

Cyclotomic Cyclotomic::root_of_unity(long n, long k) {
  k %= n;
  if (k < 0) k += n;
  std::vector<Rat> v(k + 1, Rat(0));
  v[k] = 1;
  return Cyclotomic(n, std::move(v));
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat Cyclotomic::rational_value() const {
  if (!is_rational()) throw std::logic_error("value is not rational");
  return c_[0];
}

bool Cyclotomic::is_rational_integer() const {
  return is_rational() && c_[0].get_den() == 1;
}

bool Cyclotomic::is_algebraic_integer() const {
  // the power basis is an integral basis of Z[zeta_N]
  for (const auto& x : c_)
    if (x.get_den() != 1) return false;
  return true;
}

Cyclotomic Cyclotomic::embedded(long m) const {
  if (m == n_) return *this;
  if (m % n_ != 0) throw std::invalid_argument("embedding needs a conductor multiple");
  long d = m / n_;
  std::vector<Rat> v(static_cast<std::size_t>(d) * (c_.size() - 1) + 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[d * i] = c_[i];
  return Cyclotomic(m, std::move(v));
}

Cyclotomic Cyclotomic::galois(long k) const {
  k %= n_;
  if (k < 0) k += n_;
  if (std::gcd(k, n_) != 1) throw std::invalid_argument("galois exponent not coprime");
  if (n_ == 1) return *this;
  // zeta^i -> zeta^{k i mod n}
  std::vector<Rat> w(n_, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) w[(k * static_cast<long>(i)) % n_] += c_[i];
  return Cyclotomic(n_, std::move(w));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  long m = std::lcm(n_, o.n_);
  Cyclotomic a = embedded(m), b = o.embedded(m);
  for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic a = *this;
  for (auto& x : a.c_) x = -x;
  return a;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  long m = std::lcm(n_, o.n_);
  Cyclotomic a = embedded(m), b = o.embedded(m);
  std::vector<Rat> v(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      v[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return Cyclotomic(m, std::move(v));
}

Cyclotomic Cyclotomic::scaled(const Rat& r) const {
  Cyclotomic a = *this;
  for (auto& x : a.c_) x *= r;
  return a;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const { return compare(*this, o) == 0; }

int Cyclotomic::compare(const Cyclotomic& a, const Cyclotomic& b) {
  long m = std::lcm(a.n_, b.n_);
  Cyclotomic x = a.embedded(m), y = b.embedded(m);
  for (std::size_t i = 0; i < x.c_.size(); ++i) {
    int c = cmp(x.c_[i], y.c_[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

std::string Cyclotomic::str() const {
  if (is_rational()) return c_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[i].get_str();
    if (i >= 1) os << "*z" << n_ << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return os.str();
}

}  // namespace weylkit
