#include "hms/modcurve.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>

namespace hms {

X0Invariants x0_invariants(Int m) {
  assert(m >= 1);
  X0Invariants out;
  out.psi = m;
  out.nu2 = m % 4 == 0 ? 0 : 1;
  out.nu3 = m % 9 == 0 ? 0 : 1;
  for (auto [p, e] : factorize(m)) {
    out.psi = out.psi / p * (p + 1);
    if (out.nu2 && p != 2) out.nu2 *= 1 + kronecker(-1, p);
    if (out.nu3) out.nu3 *= 1 + kronecker(-3, p);
  }
  out.nu_inf = 0;
  for (Int d : divisors(m)) out.nu_inf += euler_phi(std::gcd(d, m / d));
  Rational g = 1 + Rational(out.psi, 12) - Rational(out.nu2, 4) - Rational(out.nu3, 3) -
               Rational(out.nu_inf, 2);
  out.genus = as_int(g);
  return out;
}

std::vector<Cusp> x0_cusps(Int m) {
  std::vector<Cusp> out;
  for (Int d : divisors(m)) {
    Int t = std::gcd(d, m / d);
    for (Int c = 1; c <= t; ++c) {
      if (std::gcd(c, t) != 1) continue;
      out.push_back({c, d, m / (d * t)});
    }
  }
  return out;
}

Cusp fricke_image(Int m, const Cusp& cusp) {
  Int d = m / cusp.d;
  Int t = std::gcd(d, m / d);
  Int c = t == 1 ? 1 : inv_mod(cusp.c, t);
  return {c, d, m / (d * t)};
}

Int fricke_fixed_count(Int m) {
  Int out = class_number(-4 * m);
  if (m % 4 == 3) out += class_number(-m);
  return out;
}

bool x0plus_is_rational(Int m) {
  static const std::set<Int> table{2,  3,  4,  5,  6,  7,  8,  9,  10, 11, 12, 13, 14,
                                   15, 16, 17, 18, 19, 20, 21, 23, 24, 25, 26, 27, 29,
                                   31, 32, 35, 36, 39, 41, 47, 49, 50, 59, 71};
  return table.count(m) != 0;
}

Int x1_genus(Int n) {
  assert(n >= 1);
  if (n <= 4) return 0;
  Rational mu(n * n, 2);
  for (auto [p, e] : factorize(n)) mu *= Rational(p * p - 1, p * p);
  Int cusp2 = 0;  // twice the number of cusps
  for (Int d : divisors(n)) cusp2 += euler_phi(d) * euler_phi(n / d);
  return as_int(1 + mu / 12 - Rational(cusp2, 4));
}

namespace {

// #{(a, b; c, -a) mod n : a^2 + bc = -r} for odd n.
Int weyl_mu(Int n, Int r) {
  Int out = n * n;
  for (auto [p, e] : factorize(n)) out = out / p * (p + kronecker(-r, p));
  return out;
}

Int weyl_e_inf(Int n, Int r) {
  Int out = 1;
  for (auto [p, e] : factorize(n)) {
    Int term = euler_phi(pow_int(p, e));
    for (Int l = 0; l < e; ++l) term += (1 + kronecker(-r, p)) * euler_phi(pow_int(p, l));
    out *= term;
  }
  return out;
}

}  // namespace

Rational weyl_mu_plus(Int n, Int r) { return Rational(weyl_mu(n, r), 2); }

Rational weyl_e_inf_plus(Int n, Int r) { return Rational(weyl_e_inf(n, r), 2); }

Int PlusSignature::genus() const {
  Rational g = 1 + (eta - 3 * e2 - 4 * e3 - 6 * e_inf) / 12;
  Int out = as_int(g);
  assert(out >= 0);
  return out;
}

PlusSignature class_signature(TauShape shape, Int N, Int r) {
  assert(N >= 2 && std::gcd(r, N) == 1);
  r = mod_reduce(r, N);
  const Int k = v2(N), M = odd_part(N);
  const Rational half(1, 2);

  switch (shape) {
    case TauShape::ScalarLambda:
      // The diagonal, a copy of the modular line.
      return {1, 1, 1, 1, -1};
    case TauShape::BorelLambda:
      // A copy of X_0(2) for every k >= 1.
      return {3, 1, 0, 2, -1};
    case TauShape::Weyl: {
      assert(k == 0);
      Rational mu = half * weyl_mu(N, r);
      Rational e2 = half * rho(N, r) + class_number(-4 * N * N);
      Rational e3 = half * rho(N, 3 * r);
      Rational einf = half * weyl_e_inf(N, r);
      return {mu, e2, e3, einf, mu / 3 - 2 * einf - e3 / 3};
    }
    case TauShape::IWeyl: {
      assert(k == 1);
      Rational mu = half * weyl_mu(M, r);
      Rational e2 = half * rho(M, r) + class_number(-4 * M * M);
      Rational e3 = half * rho(M, 3 * r);
      Rational einf = half * weyl_e_inf(M, r);
      // Each cusp of the curve meets the boundary divisor once, not twice.
      return {mu, e2, e3, einf, mu / 3 - einf - e3 / 3};
    }
    case TauShape::AntidiagWeyl: {
      assert(k >= 1);
      Rational muM = half * weyl_mu(M, r);
      Rational einfM = half * weyl_e_inf(M, r);
      Rational eta, e2;
      if (k == 1) {
        eta = 3 * muM;
        e2 = half * rho(M, r) + class_number(-4 * M * M);
      } else {
        eta = 3 * pow_int(2, 2 * k - 2) * muM;
        // rho(N, r) equals rho(N, 1) for square r and vanishes otherwise;
        // coset enumeration confirms the count is 0 for non-square r.
        e2 = r % 4 == 1 ? Rational(rho(N, r)) : Rational(class_number(-4 * N * N));
      }
      Rational einf = pow_int(2, k) * einfM;
      return {eta, e2, 0, einf, eta / 3 - Rational(3, 2) * einf};
    }
    case TauShape::SWeyl:
    case TauShape::OmegaSWeyl: {
      assert(k >= 2);
      // At level 4 extra elements normalize the subgroup and merge cusps.
      if (N == 4) return {3, 1, 0, 2, -1};
      Rational eta = 3 * pow_int(2, 2 * k - 3) * half * weyl_mu(M, r);
      Rational e2 = class_number(-(N * N));  // -4 (N/2)^2
      Rational einf = 3 * pow_int(2, k - 2) * half * weyl_e_inf(M, r);
      return {eta, e2, 0, einf, eta / 3 - einf};
    }
    case TauShape::NSWeyl:
    case TauShape::OmegaNSWeyl: {
      assert(k >= 2);
      if (N == 4) return {1, 1, 1, 1, -1};
      Rational eta = pow_int(2, 2 * k - 3) * half * weyl_mu(M, r);
      Rational e2 = class_number(-(N * N));  // -4 (N/2)^2
      Rational e3 = rho(M, 3 * r);
      Rational einf = pow_int(2, k - 2) * half * weyl_e_inf(M, r);
      return {eta, e2, e3, einf, eta / 3 - einf - e3 / 3};
    }
  }
  assert(false);
  return {};
}

Int OrbifoldData::genus() const {
  Rational g = 1 + Rational(index, 12) - Rational(e2, 4) - Rational(e3, 3) - Rational(cusps, 2);
  Int out = as_int(g);
  assert(out >= 0);
  return out;
}

OrbifoldData subgroup_orbifold(Int N, const std::vector<Mat>& subgroup) {
  assert(N >= 2 && N <= 24);

  // Geometric components: index of the determinant image in the units.
  std::set<Int> dets;
  for (const Mat& h : subgroup) dets.insert(mat_det(h));
  Int components = euler_phi(N) / Int(dets.size());

  // K = {+-h : h in subgroup, det h = 1} acting on SL2(Z/N) from the left.
  std::set<Mat> k_set;
  for (const Mat& h : subgroup)
    if (mat_det(h) == 1) {
      k_set.insert(h);
      k_set.insert(mat_neg(h));
    }

  std::vector<Mat> sl2;
  std::map<std::array<Int, 4>, int> pos;
  for (Int a = 0; a < N; ++a)
    for (Int b = 0; b < N; ++b)
      for (Int c = 0; c < N; ++c)
        for (Int d = 0; d < N; ++d) {
          Mat x = mat_make(N, a, b, c, d);
          if (mat_det(x) != 1) continue;
          pos.emplace(x.e, int(sl2.size()));
          sl2.push_back(x);
        }

  std::vector<int> label(sl2.size(), -1);
  std::vector<int> reps;
  for (size_t i = 0; i < sl2.size(); ++i) {
    if (label[i] != -1) continue;
    int id = int(reps.size());
    reps.push_back(int(i));
    for (const Mat& h : k_set) label[pos.at(mat_mul(h, sl2[i]).e)] = id;
  }
  Int index = Int(reps.size());

  auto right_perm = [&](const Mat& x) {
    std::vector<int> perm(reps.size());
    for (size_t i = 0; i < reps.size(); ++i)
      perm[i] = label[pos.at(mat_mul(sl2[reps[i]], x).e)];
    return perm;
  };
  auto count_fixed = [](const std::vector<int>& perm) {
    Int out = 0;
    for (size_t i = 0; i < perm.size(); ++i)
      if (perm[i] == int(i)) ++out;
    return out;
  };

  Mat s = mat_make(N, 0, -1, 1, 0), t = mat_make(N, 1, 1, 0, 1);
  OrbifoldData out;
  out.index = index;
  out.components = components;
  out.e2 = count_fixed(right_perm(s));
  out.e3 = count_fixed(right_perm(mat_mul(s, t)));

  std::vector<int> tp = right_perm(t);
  std::vector<bool> seen(reps.size(), false);
  for (size_t i = 0; i < reps.size(); ++i) {
    if (seen[i]) continue;
    Int width = 0;
    for (int j = int(i); !seen[j]; j = tp[j]) {
      seen[j] = true;
      ++width;
    }
    out.widths.push_back(width);
  }
  std::sort(out.widths.rbegin(), out.widths.rend());
  out.cusps = Int(out.widths.size());
  return out;
}

OrbifoldData class_orbifold(const Mat& g) {
  return subgroup_orbifold(g.n, extended_centralizer(g));
}

}  // namespace hms
