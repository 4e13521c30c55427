#include <doctest.h>

#include <numeric>

#include "hms/arith.hpp"

using namespace hms;

TEST_CASE("factorize and divisors") {
  CHECK(factorize(1).empty());
  CHECK(factorize(360) == std::vector<std::pair<Int, int>>{{2, 3}, {3, 2}, {5, 1}});
  CHECK(divisors(1) == std::vector<Int>{1});
  CHECK(divisors(28) == std::vector<Int>{1, 2, 4, 7, 14, 28});
  for (Int n = 1; n <= 200; ++n) {
    auto d = divisors(n);
    Int count = 0;
    for (Int k = 1; k <= n; ++k)
      if (n % k == 0) ++count;
    CHECK(Int(d.size()) == count);
  }
}

TEST_CASE("euler_phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(17) == 16);
  for (Int n = 1; n <= 120; ++n) {
    Int count = 0;
    for (Int k = 1; k <= n; ++k)
      if (std::gcd(k, n) == 1) ++count;
    CHECK(euler_phi(n) == count);
  }
}

TEST_CASE("two-adic helpers") {
  CHECK(v2(24) == 3);
  CHECK(v2(17) == 0);
  CHECK(odd_part(24) == 3);
  CHECK(odd_part(17) == 17);
}

TEST_CASE("modular helpers") {
  CHECK(mod_reduce(-1, 5) == 4);
  CHECK(mod_reduce(10, 5) == 0);
  CHECK(pow_mod(2, 10, 1000) == 24);
  CHECK(pow_mod(3, 0, 7) == 1);
  for (Int n = 2; n <= 40; ++n)
    for (Int a = 1; a < n; ++a)
      if (std::gcd(a, n) == 1) CHECK(mod_reduce(a * inv_mod(a, n), n) == 1);
}

TEST_CASE("kronecker matches the Legendre count at odd primes") {
  for (Int p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
    for (Int a = -30; a <= 30; ++a) {
      Int sols = 0;
      for (Int x = 0; x < p; ++x)
        if (mod_reduce(x * x - a, p) == 0) ++sols;
      int expected = a % p == 0 ? 0 : int(sols) - 1;
      CHECK(kronecker(a, p) == expected);
    }
  }
}

TEST_CASE("kronecker extended values") {
  CHECK(kronecker(1, 0) == 1);
  CHECK(kronecker(-1, 0) == 1);
  CHECK(kronecker(2, 0) == 0);
  CHECK(kronecker(3, 2) == -1);   // 3 = 3 mod 8
  CHECK(kronecker(7, 2) == 1);    // 7 = 7 mod 8
  CHECK(kronecker(-1, -1) == -1);
  CHECK(kronecker(2, -1) == 1);
  // Complete multiplicativity in the lower argument.
  for (Int a = -12; a <= 12; ++a)
    for (Int m = 1; m <= 12; ++m)
      for (Int n = 1; n <= 12; ++n)
        CHECK(kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n));
}

TEST_CASE("rho counts square roots in the unit group") {
  for (Int d = 1; d <= 60; ++d) {
    for (Int m = 0; m < d || (d == 1 && m == 0); ++m) {
      Int brute = 0;
      for (Int x = 1; x <= d; ++x)
        if (std::gcd(x, d) == 1 && mod_reduce(x * x - m, d) == 0) ++brute;
      CHECK(rho(d, m) == brute);
      CHECK(Int(sqrt_classes(d, m).size()) == brute);
    }
  }
}

TEST_CASE("rho frozen values") {
  CHECK(rho(1, 7) == 1);
  CHECK(rho(2, 1) == 1);
  CHECK(rho(4, 1) == 2);
  CHECK(rho(4, 3) == 0);
  CHECK(rho(8, 1) == 4);
  CHECK(rho(8, 5) == 0);
  CHECK(rho(16, 1) == 4);
  CHECK(rho(17, 1) == 2);
  CHECK(rho(17, 2) == 2);
  CHECK(rho(17, 3) == 0);
  CHECK(rho(24, 1) == 8);
  CHECK(rho(15, 1) == 4);
  CHECK(rho(33, 1) == 4);
  CHECK(rho(33, 31) == 4);  // 31 = 8^2 mod 33
}

TEST_CASE("lambda_set picks one root per sign pair") {
  CHECK(lambda_set(15, 1) == std::vector<Int>{1, 4});
  CHECK(lambda_set(1, 3) == std::vector<Int>{1});
  CHECK(lambda_set(2, 1) == std::vector<Int>{1});
  CHECK(lambda_set(17, 13) == std::vector<Int>{8});  // 8^2 = 64 = 13 mod 17
  for (Int n = 3; n <= 60; ++n)
    for (Int m = 1; m < n; ++m)
      CHECK(2 * Int(lambda_set(n, m).size()) == rho(n, m));
}

TEST_CASE("normalize_square_class") {
  CHECK(normalize_square_class(17, 4) == 1);
  CHECK(normalize_square_class(17, 13) == 1);
  CHECK(normalize_square_class(24, 7) == 7);
  CHECK(normalize_square_class(15, 8) == 2);
  CHECK(normalize_square_class(15, 4) == 1);
  for (Int n = 2; n <= 40; ++n) {
    for (Int r = 1; r < n; ++r) {
      if (std::gcd(r, n) != 1) continue;
      Int s = normalize_square_class(n, r);
      // s lies in the same class and is minimal within it.
      bool same_class = false;
      for (Int u = 1; u < n; ++u)
        if (std::gcd(u, n) == 1 && mod_reduce(r * u * u - s, n) == 0) same_class = true;
      CHECK(same_class);
      CHECK(normalize_square_class(n, s) == s);
      CHECK(s <= r);
    }
  }
}

TEST_CASE("class_number small discriminants") {
  CHECK(class_number(-3) == 1);
  CHECK(class_number(-4) == 1);
  CHECK(class_number(-7) == 1);
  CHECK(class_number(-8) == 1);
  CHECK(class_number(-11) == 1);
  CHECK(class_number(-12) == 1);
  CHECK(class_number(-15) == 2);
  CHECK(class_number(-16) == 1);
  CHECK(class_number(-19) == 1);
  CHECK(class_number(-20) == 2);
  CHECK(class_number(-23) == 3);
  CHECK(class_number(-24) == 2);
  CHECK(class_number(-28) == 1);
  CHECK(class_number(-32) == 2);
  CHECK(class_number(-35) == 2);
  CHECK(class_number(-36) == 2);
  CHECK(class_number(-39) == 4);
  CHECK(class_number(-44) == 3);
  CHECK(class_number(-47) == 5);
  CHECK(class_number(-52) == 2);
  CHECK(class_number(-59) == 3);
  CHECK(class_number(-60) == 2);
  CHECK(class_number(-64) == 2);
  CHECK(class_number(-68) == 4);
  CHECK(class_number(-71) == 7);
  CHECK(class_number(-72) == 2);
  CHECK(class_number(-76) == 3);
  CHECK(class_number(-80) == 4);
  CHECK(class_number(-84) == 4);
  CHECK(class_number(-92) == 3);
  CHECK(class_number(-96) == 4);
  CHECK(class_number(-100) == 2);
  CHECK(class_number(-104) == 6);
  CHECK(class_number(-116) == 6);
  CHECK(class_number(-128) == 4);
  CHECK(class_number(-140) == 6);
  CHECK(class_number(-144) == 4);
  CHECK(class_number(-156) == 4);
  CHECK(class_number(-188) == 5);
  CHECK(class_number(-196) == 4);
  CHECK(class_number(-200) == 6);
  CHECK(class_number(-236) == 9);
  CHECK(class_number(-284) == 7);
}

TEST_CASE("class_number rejects imprimitive forms") {
  // Both discriminants admit forms with a common factor; the imprimitive
  // ones must not be counted.
  CHECK(class_number(-147) == 2);   // (7, 7, 7) is imprimitive
  CHECK(class_number(-768) == 8);   // (14, 4, 14) is imprimitive
  CHECK(class_number(-576) == 8);
  CHECK(class_number(-1024) == 8);
  CHECK(class_number(-2116) == 12);
  CHECK(class_number(-2304) == 16);
  CHECK(class_number(-4096) == 16);
  CHECK(class_number(-867) == 6);
  CHECK(class_number(-1156) == 8);
  CHECK(class_number(-1444) == 10);
  CHECK(class_number(-1083) == 6);
}

TEST_CASE("class_number respects the conductor formula") {
  // h(f^2 D0) * u = h(D0) * f * prod_{p | f} (1 - (D0|p)/p) with
  // u = 3 for D0 = -3, u = 2 for D0 = -4, u = 1 otherwise.
  for (Int d0 : {-3, -4, -7, -8, -11, -15, -19, -20, -23, -24}) {
    Int u = d0 == -3 ? 3 : d0 == -4 ? 2 : 1;
    for (Int f = 2; f <= 30; ++f) {
      Rational rhs(class_number(d0) * f, u);
      for (auto [p, e] : factorize(f)) rhs *= Rational(p - kronecker(d0, p), p);
      CHECK(Rational(class_number(f * f * d0)) == rhs);
    }
  }
}

TEST_CASE("rational helpers") {
  CHECK(floor_rat(Rational(7, 2)) == 3);
  CHECK(floor_rat(Rational(-7, 2)) == -4);
  CHECK(floor_rat(Rational(6, 2)) == 3);
  CHECK(frac(Rational(7, 2)) == Rational(1, 2));
  CHECK(frac(Rational(-7, 2)) == Rational(1, 2));
  CHECK(frac(Rational(-3)) == Rational(0));
  CHECK(as_int(Rational(12, 4)) == 3);
}
