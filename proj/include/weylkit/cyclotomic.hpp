#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace weylkit {

using Rat = mpq_class;

inline Rat frac(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

long euler_phi(long n);
// Coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<long>& cyclotomic_polynomial(long n);

// Element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^{phi(N)-1},
// reduced modulo the N-th cyclotomic polynomial.  All arithmetic is exact;
// mixed conductors are re-embedded into the lcm.
class Cyclotomic {
 public:
  Cyclotomic() : n_(1), c_(1, Rat(0)) {}
  explicit Cyclotomic(const Rat& r) : n_(1), c_(1, r) {}
  explicit Cyclotomic(long i) : n_(1), c_(1, Rat(i)) {}
  Cyclotomic(long conductor, std::vector<Rat> coords);

  static Cyclotomic root_of_unity(long n, long k);  // zeta_n^k

  long conductor() const { return n_; }
  const std::vector<Rat>& coords() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Rat rational_value() const;  // requires is_rational()
  bool is_rational_integer() const;
  bool is_algebraic_integer() const;  // membership in Z[zeta_N]

  Cyclotomic embedded(long m) const;  // into Q(zeta_m), n_ | m
  Cyclotomic galois(long k) const;    // zeta -> zeta^k, gcd(k, n_) = 1
  Cyclotomic conj() const { return galois(-1); }

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  Cyclotomic scaled(const Rat& r) const;

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }
  // deterministic total order (conductor-free), for canonical sorting
  static int compare(const Cyclotomic& a, const Cyclotomic& b);

  std::string str() const;

 private:
  long n_;
  std::vector<Rat> c_;
};

}  // namespace weylkit
