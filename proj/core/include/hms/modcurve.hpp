#pragma once

#include "hms/arith.hpp"
#include "hms/gl2.hpp"

#include <vector>

namespace hms {

// Invariants of the modular curve X_0(m).
struct X0Invariants {
  Int psi;       // index of Gamma_0(m) in the modular group
  Int nu2, nu3;  // elliptic points of order 2 and 3
  Int nu_inf;    // cusps
  Int genus;
};
X0Invariants x0_invariants(Int m);

// Cusps of X_0(m): classes [c : d] with d | m and c a unit modulo
// t = gcd(d, m/d).  The widths sum to psi(m).
struct Cusp {
  Int c, d;
  Int width;
  friend bool operator==(const Cusp&, const Cusp&) = default;
  friend auto operator<=>(const Cusp&, const Cusp&) = default;
};
std::vector<Cusp> x0_cusps(Int m);

// The Fricke involution sends [c : d] to [c^-1 : m/d].
Cusp fricke_image(Int m, const Cusp& cusp);

// Number of fixed points of the Fricke involution on X_0(m).
Int fricke_fixed_count(Int m);

// Whether the Fricke quotient X_0(m)+ has genus 0 (m at most 71; the
// largest such m).
bool x0plus_is_rational(Int m);

Int x1_genus(Int n);

// mu+ and e_inf+ of the weyl family at odd level n: half the number of
// trace-zero matrices of determinant -r, and half their cusp count.  The
// building blocks of every plus-signature and of the genus and Chern
// corrections at the surface level.
Rational weyl_mu_plus(Int n, Int r);
Rational weyl_e_inf_plus(Int n, Int r);

// Signature of the quotient curve attached to an involution class:
// degree over the modular line, elliptic point counts, cusp count, and the
// intersection of the resolved curve with the canonical divisor of the
// resolved surface.  Halves occur naturally, hence rational entries.
struct PlusSignature {
  Rational eta;
  Rational e2, e3;
  Rational e_inf;
  Rational kf;
  Int genus() const;
};
PlusSignature class_signature(TauShape shape, Int N, Int r);

// The same data computed directly from the subgroup H = {h : hgh^-1 = +-g}
// by coset enumeration inside SL2(Z/N); feasible for N <= 24.  index, e2,
// e3 and cusps describe one geometric component; the subgroup cuts out
// [(Z/N)^x : det H] isomorphic components.
struct OrbifoldData {
  Int index;
  Int e2, e3;
  Int cusps;
  std::vector<Int> widths;  // descending
  Int components;
  Int genus() const;
};
OrbifoldData subgroup_orbifold(Int N, const std::vector<Mat>& subgroup);
OrbifoldData class_orbifold(const Mat& g);

}  // namespace hms
