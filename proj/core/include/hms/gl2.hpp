#pragma once

#include "hms/arith.hpp"

#include <array>
#include <string>
#include <vector>

namespace hms {

// 2x2 matrix over Z/n, row-major entries reduced to [0, n).
struct Mat {
  Int n = 1;
  std::array<Int, 4> e{0, 0, 0, 0};

  friend bool operator==(const Mat&, const Mat&) = default;
  friend auto operator<=>(const Mat&, const Mat&) = default;
};

Mat mat_make(Int n, Int a, Int b, Int c, Int d);
Mat mat_id(Int n);
Mat mat_mul(const Mat& x, const Mat& y);
Mat mat_scale(Int c, const Mat& x);
Mat mat_neg(const Mat& x);
Int mat_det(const Mat& x);
Int mat_trace(const Mat& x);
Mat mat_inv(const Mat& x);             // det(x) must be a unit
Mat mat_pow(const Mat& x, Int e);
Mat mat_mod(const Mat& x, Int m);      // reduce to modulus m | n
Mat crt_pair(const Mat& x, const Mat& y);  // moduli coprime

bool is_scalar(const Mat& x);

// g^2 = +- det(g) I; such g cut out the one dimensional part of the fixed
// locus of the symmetry involution.
bool is_tau_matrix(const Mat& g);

// min(entries(g), entries(-g)) lexicographically: a canonical label for g
// up to sign.
std::array<Int, 4> pack_up_to_sign(const Mat& g);

// Least entry tuple of +-(conjugates of g): a canonical label for the
// conjugacy class of g in GL2(Z/n)/{+-1}.  Breadth-first closure; intended
// for small n.
std::array<Int, 4> class_min_rep(const Mat& g);

// Standard shapes at a prime power q = p^k (projective normal forms).
Mat shape_borel(Int q);              // (1, q/p; 0, 1)
Mat shape_antidiag(Int q, Int r);    // (0, -r; 1, 0), det r
Mat shape_s(Int q);                  // (1, 0; 0, -1)
Mat shape_ns(Int q);                 // odd q: (0, xi; 1, 0); 2^k: (1, 2; -2, -1)

// Unique class with square -det at an odd prime power (the normaliser of a
// Cartan subgroup), lifted to determinant r: lambda * shape_s if -r is a
// square mod p, else lambda * shape_ns.
Mat weyl_matrix(Int q, Int r);       // q an odd prime power
Mat weyl_matrix_odd(Int M, Int r);   // CRT over the prime powers of odd M

// Conjugacy classes of g in GL2(Z/N)/{+-1} with det(g) = r, g^2 = +-det(g).
enum class TauShape {
  ScalarLambda,  // lambda I                      g^2 = +det
  BorelLambda,   // lambda (borel(2^k), I)        g^2 = +det, k >= 1
  Weyl,          // weyl(N, r)                    N odd
  IWeyl,         // (I, weyl(M, r))               k = 1
  AntidiagWeyl,  // (antidiag(2^k, r), weyl)      k >= 1
  SWeyl,         // (lambda_0 s, weyl)            k >= 2, r = 3 mod 4
  OmegaSWeyl,    // (lambda_1 s, weyl)            k >= 3, r = 7 mod 8
  NSWeyl,        // (lambda_0 ns, weyl)           k >= 2, r = 3 mod 4
  OmegaNSWeyl,   // (lambda_1 ns, weyl)           k >= 3, r = 3 mod 8
};

const char* tau_shape_name(TauShape s);

struct TauClass {
  TauShape shape;
  Int lambda = 0;  // scalar factor for the ScalarLambda/BorelLambda families
  Mat rep;         // representative with det = r
};

// Closed-form class list; deduplicated under conjugacy for N <= 64 (at
// N = 2 distinct labels collide).
std::vector<TauClass> involution_classes(Int N, Int r);

// The same classes found by exhaustive search (N <= 24): sorted canonical
// labels, one per class.
std::vector<std::array<Int, 4>> brute_involution_classes(Int N, Int r);

// {h in GL2(Z/N) : h g h^-1 = +-g}; exhaustive, N <= 24.
std::vector<Mat> extended_centralizer(const Mat& g);

// Action of psi = a + b * phi on the n-torsion of a curve with CM by the
// quadratic order of discriminant D < 0, where phi = sqrt(D / 4) when
// D = 0 mod 4 and phi = (1 + sqrt(D)) / 2 when D = 1 mod 4.
Mat cm_action_matrix(Int D, Int a, Int b, Int n);

}  // namespace hms
