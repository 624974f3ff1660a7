#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weylkit/cyclotomic.hpp"

using namespace weylkit;

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
  CHECK(cyclotomic_polynomial(2) == std::vector<long>{1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<long>{1, 0, 1});
  CHECK(cyclotomic_polynomial(3) == std::vector<long>{1, 1, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(60) == 16);
}

TEST_CASE("roots of unity behave") {
  auto z = Cyclotomic::root_of_unity(5, 1);
  Cyclotomic p = Cyclotomic(1);
  for (int i = 0; i < 5; ++i) p *= z;
  CHECK(p == Cyclotomic(1));

  // sum of all 5th roots vanishes
  Cyclotomic s;
  for (int k = 0; k < 5; ++k) s += Cyclotomic::root_of_unity(5, k);
  CHECK(s.is_zero());

  CHECK(Cyclotomic::root_of_unity(2, 1) == Cyclotomic(-1));
  CHECK(Cyclotomic::root_of_unity(4, 2) == Cyclotomic(-1));
  CHECK(Cyclotomic::root_of_unity(6, 3) == Cyclotomic(-1));
}

TEST_CASE("mixed conductors embed into the lcm") {
  auto i = Cyclotomic::root_of_unity(4, 1);
  auto w = Cyclotomic::root_of_unity(3, 1);
  auto prod = i * w;  // a primitive 12th root
  CHECK(prod.conductor() == 12);
  Cyclotomic p(1);
  for (int k = 0; k < 12; ++k) p *= prod;
  CHECK(p == Cyclotomic(1));
  Cyclotomic q(1);
  for (int k = 0; k < 6; ++k) q *= prod;
  CHECK(q == Cyclotomic(-1));
}

TEST_CASE("conjugation and integrality") {
  auto z = Cyclotomic::root_of_unity(7, 2);
  CHECK(z * z.conj() == Cyclotomic(1));
  CHECK((z + z.conj()).conj() == z + z.conj());
  CHECK(z.is_algebraic_integer());
  CHECK(!z.is_rational());
  CHECK(z.scaled(Rat(1, 2)).is_algebraic_integer() == false);
  CHECK(Cyclotomic(Rat(3)).is_rational_integer());
  CHECK(!Cyclotomic(Rat(1, 2)).is_rational_integer());

  // golden-ratio style element of Q(zeta_5): z + z^4 has minimal polynomial x^2 + x - 1
  auto t = Cyclotomic::root_of_unity(5, 1) + Cyclotomic::root_of_unity(5, 4);
  CHECK(t * t + t - Cyclotomic(1) == Cyclotomic());
}

TEST_CASE("galois action permutes roots") {
  auto z = Cyclotomic::root_of_unity(12, 1);
  CHECK(z.galois(5) == Cyclotomic::root_of_unity(12, 5));
  CHECK(z.galois(-1) == Cyclotomic::root_of_unity(12, 11));
  CHECK_THROWS(z.galois(2));
  // galois is a ring map
  auto a = z + Cyclotomic(2);
  auto b = z * z - Cyclotomic(1);
  CHECK((a * b).galois(7) == a.galois(7) * b.galois(7));
}

TEST_CASE("total order is consistent") {
  auto z = Cyclotomic::root_of_unity(3, 1);
  CHECK(Cyclotomic::compare(z, z) == 0);
  CHECK(Cyclotomic::compare(Cyclotomic(0), Cyclotomic(1)) != 0);
  // equal values with different conductor representations compare equal
  CHECK(Cyclotomic::compare(Cyclotomic::root_of_unity(6, 3).embedded(12), Cyclotomic(-1)) == 0);
}
