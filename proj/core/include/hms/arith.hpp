#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <utility>
#include <vector>

namespace hms {

using Int = long long;

// All invariant arithmetic is exact. Quantities that are a priori rational
// (plus-signatures, blow-down sums, intersection bounds) are carried as
// Rational and only converted to Int where integrality is guaranteed.
using Rational = boost::rational<Int>;

std::vector<std::pair<Int, int>> factorize(Int n);  // n >= 1, ascending primes
std::vector<Int> divisors(Int n);                   // ascending, includes 1 and n

Int euler_phi(Int n);
Int v2(Int n);
Int odd_part(Int n);

Int mod_reduce(Int a, Int n);        // representative in [0, n)
Int pow_int(Int a, Int e);           // e >= 0
Int pow_mod(Int a, Int e, Int n);
Int inv_mod(Int a, Int n);           // gcd(a, n) = 1

// Kronecker symbol (a|n), totally extended: n may be zero or negative.
int kronecker(Int a, Int n);

// #{x in (Z/d)^x : x^2 = m}.  rho(1, m) = 1; zero unless gcd(m, d) = 1.
Int rho(Int d, Int m);

// All solutions of x^2 = m in (Z/n)^x, listed in [1, n].
std::vector<Int> sqrt_classes(Int n, Int m);

// Least positive representative of each {x, -x} pair of square roots of m.
// Size rho(n, m) / 2 for n > 2.
std::vector<Int> lambda_set(Int n, Int m);

bool is_square_mod(Int n, Int m);    // rho(n, m) > 0

// Least positive representative of the class r * ((Z/n)^x)^2.
Int normalize_square_class(Int n, Int r);

// Class number h(D) for D < 0, D = 0 or 1 mod 4: the number of reduced
// primitive positive definite binary quadratic forms of discriminant D.
Int class_number(Int D);

Int floor_rat(const Rational& x);
Rational frac(const Rational& x);    // x - floor(x), in [0, 1)

// x exactly integral -> its value; aborts otherwise.  Used wherever a
// half-integer bookkeeping quantity is provably integral.
Int as_int(const Rational& x);

}  // namespace hms
