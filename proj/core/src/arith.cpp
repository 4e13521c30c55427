#include "hms/arith.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <numeric>

namespace hms {

std::vector<std::pair<Int, int>> factorize(Int n) {
  assert(n >= 1);
  std::vector<std::pair<Int, int>> out;
  for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) n /= p, ++e;
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<Int> divisors(Int n) {
  std::vector<Int> out{1};
  for (auto [p, e] : factorize(n)) {
    const size_t base = out.size();
    Int pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Int euler_phi(Int n) {
  Int out = 1;
  for (auto [p, e] : factorize(n)) {
    Int pk = 1;
    for (int i = 1; i < e; ++i) pk *= p;
    out *= pk * (p - 1);
  }
  return out;
}

Int v2(Int n) {
  Int k = 0;
  while (n % 2 == 0) n /= 2, ++k;
  return k;
}

Int odd_part(Int n) {
  while (n % 2 == 0) n /= 2;
  return n;
}

Int mod_reduce(Int a, Int n) {
  assert(n > 0);
  Int m = a % n;
  return m < 0 ? m + n : m;
}

Int pow_int(Int a, Int e) {
  assert(e >= 0);
  Int out = 1;
  while (e--) out *= a;
  return out;
}

Int pow_mod(Int a, Int e, Int n) {
  assert(e >= 0 && n > 0);
  a = mod_reduce(a, n);
  Int out = 1 % n;
  while (e) {
    if (e & 1) out = out * a % n;
    a = a * a % n;
    e >>= 1;
  }
  return out;
}

Int inv_mod(Int a, Int n) {
  a = mod_reduce(a, n);
  Int t = 0, nt = 1, r = n, nr = a;
  while (nr) {
    Int q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  assert(r == 1 && "inv_mod: argument not a unit");
  return mod_reduce(t, n);
}

int kronecker(Int a, Int n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int sign = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) sign = -sign;
  }
  if (n % 2 == 0) {
    if (a % 2 == 0) return 0;
    Int k = 0;
    while (n % 2 == 0) n /= 2, ++k;
    Int a8 = mod_reduce(a, 8);
    if ((k & 1) && (a8 == 3 || a8 == 5)) sign = -sign;
  }
  a = mod_reduce(a, n);
  // Jacobi symbol (a|n) for odd n > 0 by quadratic reciprocity.
  while (a) {
    while (a % 2 == 0) {
      a /= 2;
      Int n8 = n % 8;
      if (n8 == 3 || n8 == 5) sign = -sign;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) sign = -sign;
    a %= n;
  }
  return n == 1 ? sign : 0;
}

Int rho(Int d, Int m) {
  assert(d >= 1);
  if (d == 1) return 1;
  m = mod_reduce(m, d);
  if (std::gcd(m, d) != 1) return 0;
  Int out = 1;
  for (auto [p, e] : factorize(d)) {
    if (p == 2) {
      if (e == 1) continue;  // factor 1
      if (e == 2) {
        if (m % 4 != 1) return 0;
        out *= 2;
      } else {
        if (m % 8 != 1) return 0;
        out *= 4;
      }
    } else {
      if (kronecker(m, p) != 1) return 0;
      out *= 2;
    }
  }
  return out;
}

std::vector<Int> sqrt_classes(Int n, Int m) {
  m = mod_reduce(m, n);
  std::vector<Int> out;
  for (Int x = 1; x <= n; ++x)
    if (std::gcd(x, n) == 1 && x * x % n == m) out.push_back(x % n == 0 ? n : x);
  return out;
}

std::vector<Int> lambda_set(Int n, Int m) {
  std::vector<Int> out;
  for (Int x : sqrt_classes(n, m)) {
    Int rep = std::min(x, mod_reduce(n - x, n) == 0 ? n : n - x);
    if (n <= 2) rep = x;
    if (std::find(out.begin(), out.end(), rep) == out.end()) out.push_back(rep);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_square_mod(Int n, Int m) { return rho(n, m) > 0; }

Int normalize_square_class(Int n, Int r) {
  r = mod_reduce(r, n);
  assert(std::gcd(r, n) == 1);
  Int best = r == 0 ? n : r;
  for (Int u = 1; u < n; ++u) {
    if (std::gcd(u, n) != 1) continue;
    Int cand = r * u % n * u % n;
    if (cand != 0 && cand < best) best = cand;
  }
  return best;
}

Int class_number(Int D) {
  assert(D < 0);
  Int Dm4 = mod_reduce(D, 4);
  assert((Dm4 == 0 || Dm4 == 1) && "class_number: not a discriminant");
  Int count = 0;
  // Reduced: |b| <= a <= c, with b >= 0 whenever |b| = a or a = c.
  for (Int a = 1; 3 * a * a <= -D; ++a) {
    for (Int b = -a + 1; b <= a; ++b) {
      Int num = b * b - D;
      if (num % (4 * a)) continue;
      Int c = num / (4 * a);
      if (c < a) continue;
      if (a == c && b < 0) continue;
      if (std::gcd(std::gcd(a, std::llabs(b)), c) != 1) continue;
      ++count;
    }
  }
  return count;
}

Int floor_rat(const Rational& x) {
  Int q = x.numerator() / x.denominator();
  if (x.numerator() % x.denominator() != 0 && x.numerator() < 0) --q;
  return q;
}

Rational frac(const Rational& x) { return x - Rational(floor_rat(x)); }

Int as_int(const Rational& x) {
  assert(x.denominator() == 1 && "as_int: value not integral");
  return x.numerator();
}

}  // namespace hms
