#include "hms/hj.hpp"

#include <cassert>
#include <numeric>

namespace hms {

std::vector<Int> hj_expansion(Int d, Int q) {
  assert(d >= 2 && q > 0 && q < d && std::gcd(d, q) == 1);
  std::vector<Int> out;
  while (q > 0) {
    Int c = (d + q - 1) / q;
    out.push_back(c);
    Int nd = q, nq = c * q - d;
    d = nd, q = nq;
  }
  assert(d == 1);
  return out;
}

Rational hj_value(const std::vector<Int>& chain) {
  assert(!chain.empty());
  Rational v(chain.back());
  for (auto it = chain.rbegin() + 1; it != chain.rend(); ++it)
    v = Rational(*it) - Rational(1) / v;
  return v;
}

Int chain_conjugate(Int d, Int q) { return inv_mod(q, d); }

FiberChain fiber_multiplicities(Int N, Int d, Int q) {
  assert(d >= 2 && N % d == 0);
  q = mod_reduce(q, d);
  FiberChain out;
  out.chain = hj_expansion(d, q);
  const size_t l = out.chain.size();
  const Int scale = N / d;

  // a: backward recursion a[i-1] = c_i a[i] - a[i+1] from (a[l], a[l+1]) = (1, 0).
  out.a.assign(l + 2, 0);
  out.a[l] = 1;
  for (size_t i = l; i >= 1; --i) out.a[i - 1] = out.chain[i - 1] * out.a[i] - out.a[i + 1];
  assert(out.a[0] == d);

  // a': forward recursion a'[i+1] = c_i a'[i] - a'[i-1] from (a'[0], a'[1]) = (0, 1).
  out.a_prime.assign(l + 2, 0);
  out.a_prime[1] = 1;
  for (size_t i = 1; i <= l; ++i)
    out.a_prime[i + 1] = out.chain[i - 1] * out.a_prime[i] - out.a_prime[i - 1];
  assert(out.a_prime[l + 1] == d);

  for (auto& x : out.a) x *= scale;
  for (auto& x : out.a_prime) x *= scale;
  return out;
}

}  // namespace hms
