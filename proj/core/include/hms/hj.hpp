#pragma once

#include "hms/arith.hpp"

namespace hms {

// d/q = [[c_1, ..., c_l]], all c_i >= 2: the negative-regular continued
// fraction c_1 - 1/(c_2 - 1/(... - 1/c_l)).  Requires 0 < q < d, gcd = 1.
// The cyclic quotient singularity of type (d; q) resolves into a chain of
// rational curves of self-intersections -c_1, ..., -c_l.
std::vector<Int> hj_expansion(Int d, Int q);

// Value of [[c_1, ..., c_l]] as an exact rational.
Rational hj_value(const std::vector<Int>& chain);

// q^{-1} mod d; type (d; q') has the reversed resolution chain.
Int chain_conjugate(Int d, Int q);

// Resolution chain over a cusp of type (d, q) at level N (requires d | N):
// l + 2 curves, indices 0 and l + 1 being the two boundary curves.  The
// weight vectors a (a[0] = N, decreasing to 0) and a_prime (mirrored)
// grade the chain; consecutive pairs satisfy
//   a[k-1] * a_prime[k] - a[k] * a_prime[k-1] = N^2 / d.
struct FiberChain {
  std::vector<Int> chain;    // c_1 .. c_l for d / q
  std::vector<Int> a;        // size l + 2, strictly decreasing to 0
  std::vector<Int> a_prime;  // size l + 2, strictly increasing from 0
};

FiberChain fiber_multiplicities(Int N, Int d, Int q);

}  // namespace hms
