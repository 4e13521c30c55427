#include "hms/surface.hpp"

#include <algorithm>
#include <cassert>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace hms {

namespace {

Rational half(Int x) { return Rational(x, 2); }

std::string level_str(const Level& lvl) {
  return "(" + std::to_string(lvl.N) + ", " + std::to_string(lvl.r) + ")";
}

}  // namespace

Level make_level(Int N, Int r) {
  if (N < 2) throw std::invalid_argument("level requires N >= 2");
  r = mod_reduce(r, N);
  if (r == 0 || std::gcd(N, r) != 1)
    throw std::invalid_argument("level requires r to be a unit modulo N");
  Level lvl;
  lvl.N = N;
  lvl.r = normalize_square_class(N, r);
  lvl.k = static_cast<int>(v2(N));
  lvl.M = odd_part(N);
  return lvl;
}

Int SingularityCensus::total() const {
  Int out = at_1728;
  for (const SingularCount& c : at_0) out += c.count;
  for (const SingularCount& c : at_inf) out += c.count;
  return out;
}

SingularityCensus singularity_census(const Level& lvl) {
  const Int N = lvl.N;
  if (N == 2 || N == 4)
    throw std::domain_error("singularity census undefined for N = 2, 4");
  SingularityCensus out;
  out.at_1728 = class_number(-4 * N * N);
  const Int h3 = class_number(-3 * N * N);
  if (N % 3 != 0) {
    const Int each = as_int(half(h3));
    out.at_0.push_back({3, 1, each});
    out.at_0.push_back({3, 2, each});
  } else {
    out.at_0.push_back({3, mod_reduce(lvl.r, 3), h3});
  }
  for (Int d : divisors(N)) {
    if (d == 1) continue;
    const Int weight = euler_phi(N / d);
    for (Int q = 1; q < d; ++q) {
      if (std::gcd(q, d) != 1) continue;
      const Int doubled = rho(d, mod_reduce(q * lvl.r, d)) * weight;
      if (doubled > 0) out.at_inf.push_back({d, q, as_int(half(doubled))});
    }
  }
  return out;
}

std::vector<FixedLocusComponent> fixed_locus(const Level& lvl) {
  const Int omega = lvl.k >= 1 ? pow_int(2, lvl.k - 1) + 1 : 1;
  std::vector<FixedLocusComponent> out;
  for (const TauClass& cls : involution_classes(lvl.N, lvl.r)) {
    const bool plus_family = cls.shape == TauShape::ScalarLambda ||
                             cls.shape == TauShape::BorelLambda;
    const bool omega_twist =
        cls.shape == TauShape::OmegaSWeyl || cls.shape == TauShape::OmegaNSWeyl;
    FixedLocusComponent comp;
    comp.family = cls.shape;
    comp.multiplier = plus_family ? cls.lambda : omega_twist ? omega : 1;
    comp.signature = class_signature(cls.shape, lvl.N, lvl.r);
    comp.k_dot = comp.signature.kf;
    comp.in_support_s = !plus_family;
    out.push_back(std::move(comp));
  }
  return out;
}

ErrBreakdown err_breakdown(Int N, Int m) {
  if (N < 2 || m < 1 || std::gcd(N, m) != 1)
    throw std::invalid_argument("err requires m >= 1 coprime to N >= 2");
  ErrBreakdown out;
  for (Int n : divisors(m)) {
    ErrTerm term;
    term.n = n;
    const Int nsq = mod_reduce(mod_reduce(n, N) * mod_reduce(n, N), N);
    term.q = mod_reduce(mod_reduce(m, N) * inv_mod(nsq, N), N);
    const FiberChain fc = fiber_multiplicities(N, N, term.q);
    const auto& a = fc.a;
    const auto& ap = fc.a_prime;
    // unique index with a_{k-1}/a'_{k-1} > m/n^2 >= a_k/a'_k, the ratio at
    // a'_0 = 0 read as +infinity
    int kk = -1;
    for (int i = 1; i < static_cast<int>(a.size()); ++i) {
      const bool left = ap[i - 1] == 0 || a[i - 1] * n * n > m * ap[i - 1];
      const bool right = m * ap[i] >= a[i] * n * n;
      if (left && right) {
        kk = i;
        break;
      }
    }
    if (kk < 1) throw std::logic_error("no sandwich index for err term");
    term.k = kk;
    const Int w = m / n;
    const Int det = a[kk] * ap[kk - 1] - a[kk - 1] * ap[kk];
    assert(det == -N);
    const Int s_num = w * ap[kk - 1] - a[kk - 1] * n;
    const Int t_num = a[kk] * n - ap[kk] * w;
    if (s_num % det != 0 || t_num % det != 0)
      throw std::logic_error("err linear system is not integral");
    term.s = s_num / det;
    term.t = t_num / det;
    if (term.s <= 0 || term.t < 0)
      throw std::logic_error("err linear system solution out of range");
    const Int g = std::gcd(term.s, term.t);
    term.contribution = euler_phi(g) * ((term.s + term.t) / g - 1);
    out.value += term.contribution;
    out.terms.push_back(term);
  }
  return out;
}

Int err(Int N, Int m) { return err_breakdown(N, m).value; }

namespace {

// Nonnegative integer solutions of a . x = rem1 and ap . x = rem2, in
// lexicographic order, at most cap of them.
void solve_two_sums(const std::vector<Int>& a, const std::vector<Int>& ap,
                    std::size_t i, Int rem1, Int rem2, std::vector<Int>& cur,
                    std::vector<std::vector<Int>>& found, std::size_t cap) {
  if (found.size() >= cap) return;
  if (i == a.size()) {
    if (rem1 == 0 && rem2 == 0) found.push_back(cur);
    return;
  }
  Int hi = std::numeric_limits<Int>::max();
  if (a[i] > 0) hi = rem1 / a[i];
  if (ap[i] > 0) hi = std::min(hi, rem2 / ap[i]);
  for (Int v = 0; v <= hi && found.size() < cap; ++v) {
    cur[i] = v;
    solve_two_sums(a, ap, i + 1, rem1 - v * a[i], rem2 - v * ap[i], cur, found, cap);
  }
  cur[i] = 0;
}

}  // namespace

std::vector<CuspIncidence> fm_cusp_incidence(const Level& lvl, Int m) {
  if (m < 1 || !is_square_mod(lvl.N, mod_reduce(m * lvl.r, lvl.N)))
    throw std::domain_error("incidence requires mr square modulo N");
  std::vector<CuspIncidence> out;
  for (const Cusp& cusp : x0_cusps(m)) {
    CuspIncidence inc;
    inc.cusp = cusp;
    const Int n = cusp.d;
    const Int nsq = mod_reduce(mod_reduce(n, lvl.N) * mod_reduce(n, lvl.N), lvl.N);
    inc.q = mod_reduce(mod_reduce(m, lvl.N) * inv_mod(nsq, lvl.N), lvl.N);
    const FiberChain fc = fiber_multiplicities(lvl.N, lvl.N, inc.q);
    std::vector<Int> cur(fc.a.size(), 0);
    std::vector<std::vector<Int>> found;
    solve_two_sums(fc.a, fc.a_prime, 0, cusp.width, fricke_image(m, cusp).width,
                   cur, found, 2);
    if (found.empty())
      throw std::logic_error("cusp width system has no nonnegative solution");
    inc.multiplicities = found.front();
    inc.unique = found.size() == 1;
    out.push_back(std::move(inc));
  }
  return out;
}

std::vector<CmObstruction> fm_smoothness_obstructions(const Level& lvl, Int m) {
  if (m < 1 || !is_square_mod(lvl.N, mod_reduce(m * lvl.r, lvl.N)))
    throw std::domain_error("smoothness scan requires mr square modulo N");
  const Int N = lvl.N;
  const auto half_is_pm1 = [N](Int x) {
    if (x % 2 != 0) return false;
    const Int h = mod_reduce(x / 2, N);
    return h == mod_reduce(1, N) || h == mod_reduce(-1, N);
  };
  std::vector<CmObstruction> out;
  for (Int a = 0; a < 2 * m; ++a) {
    const Int rest = 4 * m * m - a * a;
    for (Int b = N; b * b <= rest; b += N) {
      if (rest % (b * b) != 0) continue;
      const Int D = rest / (b * b);
      if (D % 4 == 0) {
        // -D = 0 (mod 4): the half-trace itself acts as a scalar
        if (half_is_pm1(a)) out.push_back({D, a, b});
      } else if (D % 4 == 3) {
        // -D = 1 (mod 4): the scalar condition shifts by the conductor part
        if (half_is_pm1(a - b)) out.push_back({D, a, b});
        if (half_is_pm1(a + b)) out.push_back({D, a, -b});
      }
    }
  }
  return out;
}

FixedPointCensus fixed_point_census(const Level& lvl) {
  if (lvl.N < 5) throw std::domain_error("fixed point census requires N >= 5");
  const Int N = lvl.N, r = lvl.r, M = lvl.M;
  const int k = lvl.k;
  FixedPointCensus fpc;
  fpc.p1 = as_int(half(rho(N, r)));
  fpc.p2_pair = rho(N, mod_reduce(2 * r, N));
  fpc.p3 = as_int(half(rho(N, mod_reduce(3 * r, N))));
  if (k == 0) {
    fpc.p_inf = as_int(half(rho(N, r)));
  } else if (k == 1) {
    fpc.p_inf = as_int(half(rho(M, r)));
  } else if (k == 2) {
    fpc.p_inf = r % 4 == 3 ? rho(M, r) : 0;
  } else {
    const bool occupied = (k >= 4 && r % 8 == 1) || (k == 3 && r % 8 == 5);
    fpc.p_inf = occupied ? 2 * rho(M, r) : 0;
  }
  const Int h4 = class_number(-4 * N * N);
  const Int h3 = class_number(-3 * N * N);
  fpc.s21 = k <= 1 ? as_int(half(h4)) : r % 4 == 3 ? h4 : 0;
  fpc.s32 = N % 3 != 0 ? as_int(half(h3)) : r % 3 == 2 ? h3 : 0;
  return fpc;
}

BlowdownDeltas blowdown_deltas(const Level& lvl) {
  if (z_is_rational(lvl))
    throw std::domain_error("Z" + level_str(lvl) +
                            " is rational; no blow-down bookkeeping");
  const Int N = lvl.N, r = lvl.r, M = lvl.M;
  const int k = lvl.k;
  Rational dk2(0), dkf(0);
  if (k == 0) {
    dk2 = Rational(2 * rho(N, r) + rho(N, 2 * r)) + half(rho(N, 3 * r));
    dkf = Rational(3 * rho(N, r), 2) + Rational(rho(N, 2 * r)) + half(rho(N, 3 * r));
  } else if (k == 1) {
    dk2 = Rational(3 * rho(M, r)) + half(rho(M, 3 * r));
    dkf = Rational(2 * rho(M, r)) + half(rho(M, 3 * r));
  } else if (k == 2 && r % 4 == 1) {
    dk2 = Rational(5 * rho(M, r));
    dkf = Rational(3 * rho(M, r));
  } else if (k == 2) {
    dk2 = Rational(rho(M, r) + rho(M, 3 * r));
    dkf = dk2;
  } else if (r % 8 == 1) {
    dk2 = Rational((k == 3 ? 10 : 12) * rho(M, r));
    dkf = Rational((k == 3 ? 6 : 8) * rho(M, r));
  } else if (r % 8 == 3) {
    dk2 = Rational(2 * rho(M, 3 * r));
    dkf = dk2;
  } else if (r % 8 == 5 && k == 3) {
    dk2 = Rational(2 * rho(M, r));
    dkf = dk2;
  }
  const Rational points = k == 0 ? half(rho(N, r)) : Rational(rho(N, r));
  if (dk2 - dkf != points)
    throw std::logic_error("blow-down deltas disagree with the fixed point count");
  return {as_int(dk2), as_int(dkf)};
}

Int pg_w(const Level& lvl, const BaseTable& base) {
  if (z_is_rational(lvl))
    throw std::domain_error("Z" + level_str(lvl) + " is rational; genus bookkeeping starts above");
  const BaseInvariants bi = base_data(lvl, base);
  const Int N = lvl.N, r = lvl.r, M = lvl.M;
  const int k = lvl.k;
  Rational corr;
  if (k == 0) {
    corr = Rational(3 * rho(N, r), 2) + Rational(rho(N, 2 * r)) +
           Rational(2 * rho(N, 3 * r), 3) - weyl_mu_plus(N, r) / 3 +
           Rational(2) * weyl_e_inf_plus(N, r);
  } else if (k == 1) {
    corr = Rational(2 * rho(M, r)) + Rational(2 * rho(M, 3 * r), 3) -
           Rational(4, 3) * weyl_mu_plus(M, r) +
           Rational(4) * weyl_e_inf_plus(M, r);
  } else if (k == 2 && r % 4 == 1) {
    corr = Rational(3 * rho(M, r)) + Rational(6) * weyl_e_inf_plus(M, r) -
           Rational(4) * weyl_mu_plus(M, r);
  } else if (k == 2) {
    corr = Rational(rho(M, r)) + Rational(4 * rho(M, 3 * r), 3) +
           Rational(10) * weyl_e_inf_plus(M, r) -
           Rational(20, 3) * weyl_mu_plus(M, r);
  } else if (r % 8 == 1) {
    corr = Rational((k == 3 ? 6 : 8) * rho(M, r)) +
           Rational(3 * pow_int(2, k - 1)) * weyl_e_inf_plus(M, r) -
           Rational(pow_int(2, 2 * k - 2)) * weyl_mu_plus(M, r);
  } else if (r % 8 == 3) {
    corr = Rational(8 * rho(M, 3 * r), 3) +
           Rational(pow_int(2, k + 1)) * weyl_e_inf_plus(M, r) -
           Rational(pow_int(2, 2 * k), 3) * weyl_mu_plus(M, r);
  } else if (r % 8 == 5) {
    corr = Rational(k == 3 ? 2 * rho(M, r) : 0) +
           Rational(3 * pow_int(2, k - 1)) * weyl_e_inf_plus(M, r) -
           Rational(pow_int(2, 2 * k - 2)) * weyl_mu_plus(M, r);
  } else {
    corr = Rational(3 * pow_int(2, k)) * weyl_e_inf_plus(M, r) -
           Rational(pow_int(2, 2 * k - 1)) * weyl_mu_plus(M, r);
  }
  const Rational doubled = Rational(bi.pg_z) + corr / 4 - 1;
  const Int pg = as_int(doubled / 2);
  assert(pg >= 0);
  return pg;
}

Rational chern_correction(const Level& lvl) {
  const Int N = lvl.N, r = lvl.r, M = lvl.M;
  const int k = lvl.k;
  if (k == 0)
    return Rational(13 * rho(N, r), 2) +
           Rational(4 * rho(N, 2 * r) + 2 * rho(N, 3 * r));
  if (k == 1) return Rational(9 * rho(M, r) + 2 * rho(M, 3 * r));
  if (k == 2) {
    if (r % 4 == 1) return Rational(14 * rho(M, r));
    return Rational(4 * rho(M, r) + 4 * rho(M, 3 * r));
  }
  if (r % 8 == 1) return Rational((k == 3 ? 28 : 36) * rho(M, r));
  if (r % 8 == 3) return Rational(8 * rho(M, 3 * r));
  if (r % 8 == 5 && k == 3) return Rational(8 * rho(M, r));
  return Rational(0);
}

Int kw_squared(const Level& lvl, const BaseTable& base) {
  if (z_is_rational(lvl))
    throw std::domain_error("Z" + level_str(lvl) + " is rational; Chern bookkeeping starts above");
  const BaseInvariants bi = base_data(lvl, base);
  Rational branch(0);
  for (const FixedLocusComponent& comp : fixed_locus(lvl)) {
    if (!comp.in_support_s) continue;
    branch += Rational(3) * comp.k_dot - Rational(2 * comp.signature.genus()) + 2;
  }
  const Rational doubled = Rational(bi.c1sq_z) - branch + chern_correction(lvl);
  return as_int(doubled / 2);
}

Int kwbar_dot_cinf(const Level& lvl) {
  if (z_is_rational(lvl))
    throw std::domain_error("Z" + level_str(lvl) + " is rational; no boundary intersection");
  const Int N = lvl.N, r = lvl.r;
  Rational saw(0);
  for (Int nu = 1; nu < N; ++nu) {
    const Int g = std::gcd(nu, N);
    saw += Rational(euler_phi(g)) * frac(Rational(nu * nu * r, N * g));
  }
  const Rational csq = -saw / 2;
  const Rational kc =
      Rational(2 * x1_genus(N) - 2) - csq - Rational(euler_phi(N), 2);
  Rational chains(0);
  for (Int d : divisors(N))
    if (d != 1) chains += Rational(rho(d, mod_reduce(-r, d)) * euler_phi(N / d));
  return as_int(kc - chains / 2);
}

Rational kw_dot_fm_bound(const Level& lvl, Int m) {
  if (m < 5) throw std::domain_error("intersection bound applies for m >= 5");
  if (!is_square_mod(lvl.N, mod_reduce(m * lvl.r, lvl.N)))
    throw std::domain_error("intersection bound requires mr square modulo N");
  const X0Invariants x0 = x0_invariants(m);
  return (Rational(x0.psi, 3) - Rational(x0.nu_inf) - Rational(x0.nu3, 3) -
          Rational(err(lvl.N, m)) - Rational(fricke_fixed_count(m))) /
         2;
}

FrakM frak_m(const Level& lvl) {
  FrakM out{Rational(0), {}};
  for (Int m = 5; m <= 71; ++m) {
    if (!x0plus_is_rational(m)) continue;
    const Int count = rho(lvl.N, mod_reduce(m * lvl.r, lvl.N));
    if (count == 0) continue;
    if (kw_dot_fm_bound(lvl, m) <= Rational(-1)) {
      out.ms.push_back(m);
      out.value += half(count);
    }
  }
  return out;
}

Int k_small_squared(const Level& lvl, const BaseTable& base) {
  if (w_is_rational(lvl))
    throw std::domain_error("W" + level_str(lvl) +
                            " is rational; the small model has no K^2");
  const Int N = lvl.N, r = lvl.r, M = lvl.M;
  const int k = lvl.k;
  Rational total(kw_squared(lvl, base));
  // chains of type (d; -1) over infinity, blown down in their entirety
  for (Int d : divisors(N))
    if (d != 1)
      total += Rational((d / 2) * rho(d, mod_reduce(-r, d)) * euler_phi(N / d), 2);
  const FixedPointCensus fpc = fixed_point_census(lvl);
  total += Rational(fpc.s21 + fpc.s32);
  total += half(rho(N, mod_reduce(3 * r, N)));
  total += frak_m(lvl).value;
  total += half(rho(N, mod_reduce(5 * r, N)));
  {
    Int factor = 0;
    if (k == 1)
      factor = 2;
    else if (k == 2)
      factor = rho(4, mod_reduce(3 * r, 4));
    else if (k == 3)
      factor = rho(8, mod_reduce(5 * r, 8));
    else if (k >= 4)
      factor = rho(8, mod_reduce(r, 8));
    total += Rational(rho(M, r) * factor, 4);
  }
  if (k == 1) total += Rational(rho(M, mod_reduce(2 * r, M)));
  total += Rational(rho(N, r) * (k == 2 ? 2 : k >= 3 ? 1 : 0), 4);
  if (k >= 1) total += half(rho(N, mod_reduce(3 * r, N)));
  if (N % 3 == 0 && N % 9 != 0)
    total += Rational(rho(N / 3, mod_reduce(r, N / 3)) *
                          (4 * rho(3, mod_reduce(r, 3)) + 5 * rho(3, mod_reduce(2 * r, 3))),
                      4);
  return as_int(total);
}

const char* surface_class_name(SurfaceClass c) {
  switch (c) {
    case SurfaceClass::Rational:
      return "rational";
    case SurfaceClass::BlownUpEllipticK3:
      return "blown_up_elliptic_K3";
    case SurfaceClass::ProperlyElliptic:
      return "properly_elliptic";
    case SurfaceClass::GeneralType:
      return "general_type";
  }
  return "";
}

Int kodaira_dimension(SurfaceClass c) {
  switch (c) {
    case SurfaceClass::Rational:
      return -1;
    case SurfaceClass::BlownUpEllipticK3:
      return 0;
    case SurfaceClass::ProperlyElliptic:
      return 1;
    case SurfaceClass::GeneralType:
      return 2;
  }
  return -2;
}

namespace {

bool level_in(const Level& lvl, std::initializer_list<std::pair<Int, Int>> list) {
  for (const auto& [n, r] : list)
    if (lvl.N == n && lvl.r == r) return true;
  return false;
}

}  // namespace

bool z_is_rational(const Level& lvl) {
  return lvl.N <= 5 || level_in(lvl, {{6, 1}, {7, 1}, {8, 1}});
}

bool w_is_rational(const Level& lvl) {
  return lvl.N <= 14 ||
         level_in(lvl, {{15, 1},
                        {15, 2},
                        {15, 11},
                        {16, 1},
                        {16, 3},
                        {16, 7},
                        {18, 5},
                        {20, 11},
                        {24, 23}});
}

SurfaceClass classify_z(const Level& lvl, const BaseTable& base) {
  SurfaceClass tag = SurfaceClass::GeneralType;
  if (z_is_rational(lvl))
    tag = SurfaceClass::Rational;
  else if (level_in(lvl, {{6, 5}, {7, 3}, {8, 3}, {8, 5}, {9, 1}, {12, 1}}))
    tag = SurfaceClass::BlownUpEllipticK3;
  else if (level_in(lvl, {{8, 7}, {9, 2}, {10, 1}, {10, 3}, {11, 1}}))
    tag = SurfaceClass::ProperlyElliptic;
  if (!z_is_rational(lvl)) {
    if (auto bi = lookup_base(base, lvl.N, lvl.r)) {
      if (std::min<Int>(2, bi->pg_z - 1) != kodaira_dimension(tag))
        throw std::logic_error("Z classification disagrees with min(2, pg - 1) at " +
                               level_str(lvl));
    }
  }
  return tag;
}

SurfaceClass classify_w(const Level& lvl, const BaseTable& base) {
  SurfaceClass tag = SurfaceClass::GeneralType;
  if (w_is_rational(lvl))
    tag = SurfaceClass::Rational;
  else if (lvl.N == 17 ||
           level_in(lvl, {{16, 5}, {18, 1}, {20, 1}, {20, 3}, {21, 2}}))
    tag = SurfaceClass::BlownUpEllipticK3;
  else if (lvl.N == 19 || level_in(lvl, {{15, 7}, {21, 5}, {22, 1}, {24, 11}}))
    tag = SurfaceClass::ProperlyElliptic;
  if (!z_is_rational(lvl) && lookup_base(base, lvl.N, lvl.r)) {
    if (std::min<Int>(2, pg_w(lvl, base) - 1) != kodaira_dimension(tag))
      throw std::logic_error("W classification disagrees with min(2, pg - 1) at " +
                             level_str(lvl));
  }
  return tag;
}

InvariantRow invariant_row(const Level& lvl, const BaseTable& base) {
  if (z_is_rational(lvl))
    throw std::domain_error("Z" + level_str(lvl) +
                            " is rational; W carries no invariant row");
  InvariantRow row;
  row.level = lvl;
  const BaseInvariants bi = base_data(lvl, base);
  row.pg_z = bi.pg_z;
  row.kappa_z = kodaira_dimension(classify_z(lvl, base));
  row.pg_w = pg_w(lvl, base);
  row.kwbar_cinf = kwbar_dot_cinf(lvl);
  row.kw_sq = kw_squared(lvl, base);
  row.kappa_w = kodaira_dimension(classify_w(lvl, base));
  if (row.kappa_w >= 0) row.ksmall_sq = k_small_squared(lvl, base);
  return row;
}

std::vector<Int> table_classes(Int N) {
  std::vector<Int> out;
  for (Int r = 1; r < N; ++r) {
    if (std::gcd(r, N) != 1) continue;
    if (normalize_square_class(N, r) != r) continue;
    if (!z_is_rational(make_level(N, r))) out.push_back(r);
  }
  return out;
}

BaseInvariants base_data(const Level& lvl, const BaseTable& base) {
  if (auto bi = lookup_base(base, lvl.N, lvl.r)) return *bi;
  throw DataError(
      "no pg / c1^2 seed data for level " + level_str(lvl) +
      ": those values come from the Kani-Schanz invariant formulas for the "
      "resolved surface; supply an override table to extend the range");
}

}  // namespace hms
