#pragma once

#include "hms/arith.hpp"
#include "hms/base_data.hpp"
#include "hms/gl2.hpp"
#include "hms/hj.hpp"
#include "hms/modcurve.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace hms {

// Raised when an invariant needs pg / c1^2 of Z(N, r) for a level outside
// the bundled table and no override supplies it.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A level (N, r): r is a unit modulo N kept as the least positive
// representative of its square class.  N = 2^k * M with M odd.
struct Level {
  Int N = 1, r = 1;
  int k = 0;
  Int M = 1;
  friend bool operator==(const Level&, const Level&) = default;
};

// Requires N >= 2 and gcd(N, r) = 1; throws std::invalid_argument.
Level make_level(Int N, Int r);

// ----------------------------------------------------------------------
// Quotient singularities of Z(N, r)

struct SingularCount {
  Int d = 0, q = 0;  // cyclic quotient type (d; q)
  Int count = 0;
  friend bool operator==(const SingularCount&, const SingularCount&) = default;
};

// The three singular strata: the fibres over j = 1728, 0 and infinity.
// Entries with count zero are omitted; listing order is (d, q) ascending.
struct SingularityCensus {
  Int at_1728 = 0;                  // all of type (2; 1)
  std::vector<SingularCount> at_0;  // types (3; 1) and (3; 2)
  std::vector<SingularCount> at_inf;
  Int total() const;
};

// Counts h(-4N^2), h(-3N^2) split by type, and rho(d, qr) phi(N/d) / 2 for
// d | N, d != 1.  The half-counts are not integral for N = 2, 4; those
// levels are rejected with std::domain_error.
SingularityCensus singularity_census(const Level& lvl);

// ----------------------------------------------------------------------
// Fixed locus of the symmetry involution

struct FixedLocusComponent {
  TauShape family = TauShape::ScalarLambda;
  // lambda for the scalar and borel families, 2^{k-1} + 1 for the omega
  // twisted families, 1 otherwise.
  Int multiplier = 1;
  PlusSignature signature;
  Rational k_dot;  // K_Z . F of the resolved component
  // False exactly for the scalar and borel families (present only when r
  // is a square mod N): their components are excluded from the support of
  // the branch divisor used in the quotient Chern bookkeeping.
  bool in_support_s = true;
};

// One entry per irreducible component, scalar/borel families first.
std::vector<FixedLocusComponent> fixed_locus(const Level& lvl);

// ----------------------------------------------------------------------
// The excess intersection err(N, m) of F_m with the cusp chains

struct ErrTerm {
  Int n = 0;             // divisor of m
  Int q = 0;             // m = n^2 q (mod N)
  Int k = 0;             // unique index with a_{k-1}/a'_{k-1} > m/n^2 >= a_k/a'_k
  Int s = 0, t = 0;      // m/n = s a_k + t a_{k-1} and n = s a'_k + t a'_{k-1}
  Int contribution = 0;  // phi(gcd(s, t)) ((s + t) / gcd(s, t) - 1)
};

struct ErrBreakdown {
  Int value = 0;
  std::vector<ErrTerm> terms;  // one per divisor of m, n ascending
};

// Requires gcd(N, m) = 1.  Vanishes whenever m < N.
ErrBreakdown err_breakdown(Int N, Int m);
Int err(Int N, Int m);

// ----------------------------------------------------------------------
// Incidence of F_m with the cusp chains

struct CuspIncidence {
  Cusp cusp;                        // cusp [c : n] of X_0(m)
  Int q = 0;                        // chain met: singular type (N; q)
  std::vector<Int> multiplicities;  // indexed like FiberChain.a; 0 and l+1
                                    // are the boundary curves
  bool unique = true;               // false: several nonnegative solutions
};

// One entry per cusp of X_0(m); requires mr square modulo N.  The
// multiplicities solve sum a_i m_i = width(cusp) together with
// sum a'_i m_i = width(Fricke(cusp)); the lexicographically least
// nonnegative solution is returned.
std::vector<CuspIncidence> fm_cusp_incidence(const Level& lvl, Int m);

// Candidate CM data (D, a, b) at which a component of F_m could be
// singular away from j = infinity: 4m^2 - a^2 = b^2 D with N | b, b != 0,
// -D a discriminant, and the half-trace condition a/2 = +-1 (even
// discriminant) or (a - b)/2 = +-1 (odd discriminant) modulo N.  An empty
// result certifies those components smooth away from the cusp chains.
struct CmObstruction {
  Int D = 0, a = 0, b = 0;
  friend bool operator==(const CmObstruction&, const CmObstruction&) = default;
};
std::vector<CmObstruction> fm_smoothness_obstructions(const Level& lvl, Int m);

// ----------------------------------------------------------------------
// Isolated fixed points and singular points on the fixed locus

struct FixedPointCensus {
  Int p1 = 0;       // isolated points above 1728 on the diagonal
  Int p2_pair = 0;  // the swapped pair above 1728 (odd N only)
  Int p3 = 0;       // isolated points above 0
  Int p_inf = 0;    // isolated points above infinity
  Int s21 = 0;      // singular points of type (2, 1) on the fixed locus
  Int s32 = 0;      // singular points of type (3, 2) on the fixed locus
  Int isolated_total() const { return p1 + p2_pair + p3 + p_inf; }
};

// Requires N >= 5.
FixedPointCensus fixed_point_census(const Level& lvl);

// ----------------------------------------------------------------------
// Invariants of W(N, r)

// Gain of K^2 and of K . (fibre class) when the curves over the isolated
// fixed points are blown back down.  Requires Z(N, r) non-rational.
struct BlowdownDeltas {
  Int delta_k2 = 0;
  Int delta_kf = 0;
};
BlowdownDeltas blowdown_deltas(const Level& lvl);

// Geometric genus of W(N, r); nonnegative.  Requires Z(N, r) non-rational
// and base data for pg(Z).
Int pg_w(const Level& lvl, const BaseTable& base = bundled_base_table());

// Self-intersection of the canonical class of W(N, r).  Requires Z(N, r)
// non-rational and base data for c1^2(Z).
Int kw_squared(const Level& lvl, const BaseTable& base = bundled_base_table());

// Correction absorbing the isolated fixed points and the branch-divisor
// normal degree in the Chern number of the quotient:
// 2 K_W^2 = c1^2(Z) - sum_S (3 K.F - 2g + 2) + chern_correction.
Rational chern_correction(const Level& lvl);

// Intersection of the canonical class of the blown-down model with the
// image of the boundary curve.  Requires Z(N, r) non-rational.
Int kwbar_dot_cinf(const Level& lvl);

// Upper bound for K_W . F*_m; exact rational.  Requires m >= 5 and mr
// square modulo N (std::domain_error otherwise).
Rational kw_dot_fm_bound(const Level& lvl, Int m);

// Half the number of components of the curves F*_m certified contractible
// by the intersection bound: m >= 5, X_0(m)+ rational, bound <= -1.
struct FrakM {
  Rational value;       // half-integer, total over the listed m
  std::vector<Int> ms;  // contributing m, ascending
};
FrakM frak_m(const Level& lvl);

// K^2 of the small model of W(N, r).  Requires W(N, r) non-rational.
Int k_small_squared(const Level& lvl, const BaseTable& base = bundled_base_table());

// ----------------------------------------------------------------------
// Classification

enum class SurfaceClass {
  Rational,
  BlownUpEllipticK3,
  ProperlyElliptic,
  GeneralType,
};
const char* surface_class_name(SurfaceClass c);
Int kodaira_dimension(SurfaceClass c);  // -1, 0, 1, 2

bool z_is_rational(const Level& lvl);
bool w_is_rational(const Level& lvl);

// Classification by the explicit case lists; whenever base data covers the
// level the result is cross-checked against min(2, pg - 1) and a mismatch
// throws std::logic_error.
SurfaceClass classify_z(const Level& lvl, const BaseTable& base = bundled_base_table());
SurfaceClass classify_w(const Level& lvl, const BaseTable& base = bundled_base_table());

// One row of the invariant table.
struct InvariantRow {
  Level level;
  Int pg_z = 0;
  Int kappa_z = 0;
  Int pg_w = 0;
  Int kwbar_cinf = 0;
  Int kw_sq = 0;
  std::optional<Int> ksmall_sq;  // absent exactly when W is rational
  Int kappa_w = 0;
};
InvariantRow invariant_row(const Level& lvl, const BaseTable& base = bundled_base_table());

// Normalized square classes r with Z(N, r) non-rational, ascending: the
// rows of the invariant table at level N.
std::vector<Int> table_classes(Int N);

// pg and c1^2 of Z(N, r); throws DataError outside the supplied table.
BaseInvariants base_data(const Level& lvl, const BaseTable& base = bundled_base_table());

}  // namespace hms
