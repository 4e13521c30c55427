#include "doctest.h"

#include "hms/arith.hpp"
#include "hms/gl2.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

using namespace hms;

namespace {

Int gl2_order(Int n) {
  // |GL2(Z/n)| = n^4 prod (1 - 1/p)(1 - 1/p^2)
  Int out = n * n * n * n;
  for (auto [p, e] : factorize(n)) {
    out = out / (p * p * p) * (p - 1) * (p * p - 1);
  }
  return out;
}

std::vector<std::array<Int, 4>> sorted_labels(const std::vector<TauClass>& classes) {
  std::vector<std::array<Int, 4>> labels;
  for (const TauClass& c : classes) labels.push_back(class_min_rep(c.rep));
  std::sort(labels.begin(), labels.end());
  return labels;
}

}  // namespace

TEST_CASE("matrix arithmetic over Z/n") {
  Mat x = mat_make(11, 1, 2, 3, 4), y = mat_make(11, 5, 6, 7, 0);
  CHECK(mat_mul(x, y) == mat_make(11, 8, 6, 10, 7));
  CHECK(mat_det(x) == mod_reduce(-2, 11));
  CHECK(mat_trace(x) == 5);
  CHECK(mat_mul(x, mat_inv(x)) == mat_id(11));
  CHECK(mat_mul(mat_inv(x), x) == mat_id(11));

  Mat p = mat_id(11);
  for (int i = 0; i < 5; ++i) p = mat_mul(p, x);
  CHECK(mat_pow(x, 5) == p);
  CHECK(mat_pow(x, 0) == mat_id(11));

  CHECK(mat_neg(mat_id(7)) == mat_make(7, 6, 0, 0, 6));
  CHECK(is_scalar(mat_make(9, 4, 0, 0, 4)));
  CHECK_FALSE(is_scalar(mat_make(9, 4, 0, 0, 5)));
}

TEST_CASE("Chinese remainder lifting of matrix pairs") {
  Mat a = mat_make(4, 1, 2, 3, 0), b = mat_make(9, 5, 7, 1, 8);
  Mat c = crt_pair(a, b);
  CHECK(c.n == 36);
  CHECK(mat_mod(c, 4) == a);
  CHECK(mat_mod(c, 9) == b);
  CHECK(crt_pair(a, mat_id(1)) == a);
  CHECK(crt_pair(mat_id(1), b) == b);

  // Multiplicativity: crt is a ring isomorphism.
  Mat a2 = mat_make(4, 0, 1, 1, 1), b2 = mat_make(9, 2, 0, 3, 2);
  CHECK(mat_mul(c, crt_pair(a2, b2)) == crt_pair(mat_mul(a, a2), mat_mul(b, b2)));
}

TEST_CASE("order two criterion") {
  CHECK(is_tau_matrix(mat_id(12)));
  CHECK(is_tau_matrix(mat_make(12, 0, 11, 1, 0)));   // g^2 = -det
  CHECK_FALSE(is_tau_matrix(mat_make(4, 1, 1, 0, 1)));
  CHECK_FALSE(is_tau_matrix(mat_make(4, 2, 0, 0, 2)));  // det not a unit
  CHECK_FALSE(is_tau_matrix(mat_make(2, 1, 1, 1, 0)));  // order 3 in GL2(F2)
  CHECK(is_tau_matrix(mat_make(2, 0, 1, 1, 0)));
}

TEST_CASE("normal forms and their determinants") {
  CHECK(shape_borel(2) == mat_make(2, 1, 1, 0, 1));
  CHECK(shape_borel(8) == mat_make(8, 1, 4, 0, 1));
  CHECK(shape_s(4) == mat_make(4, 1, 0, 0, 3));
  CHECK(shape_ns(8) == mat_make(8, 1, 2, 6, 7));
  CHECK(mat_det(shape_ns(8)) == 3);
  CHECK(shape_ns(3) == mat_make(3, 0, 2, 1, 0));     // 2 is the least nonresidue
  CHECK(shape_ns(5) == mat_make(5, 0, 2, 1, 0));
  CHECK(shape_ns(7) == mat_make(7, 0, 3, 1, 0));
  CHECK(mat_det(shape_antidiag(8, 3)) == 3);

  CHECK(weyl_matrix(3, 1) == mat_make(3, 0, 2, 1, 0));
  CHECK(weyl_matrix(5, 1) == mat_make(5, 2, 0, 0, 3));
  for (Int q : {3, 5, 7, 9, 11, 13, 25, 27}) {
    for (Int r = 1; r < q; ++r) {
      if (std::gcd(r, q) != 1) continue;
      Mat w = weyl_matrix(q, r);
      CHECK(mat_det(w) == r);
      CHECK(mat_trace(w) == 0);
      CHECK(is_tau_matrix(w));
      // trace 0 means w^2 = -det(w), the minus sign of the involution type
      CHECK(mat_mul(w, w) == mat_scale(mod_reduce(-r, q), mat_id(q)));
    }
  }
  for (Int m : {15, 21, 45}) {
    for (Int r = 1; r < m; ++r) {
      if (std::gcd(r, m) != 1) continue;
      Mat w = weyl_matrix_odd(m, r);
      CHECK(mat_det(w) == r);
      CHECK(mat_trace(w) == 0);
    }
  }
}

TEST_CASE("canonical conjugacy labels") {
  // Conjugate matrices share a label; a matrix and its negative share a label.
  Mat g = mat_make(12, 1, 3, 0, 1);
  Mat h = mat_make(12, 5, 2, 3, 7);
  CHECK(std::gcd(mat_det(h), Int(12)) == 1);
  Mat conj = mat_mul(h, mat_mul(g, mat_inv(h)));
  CHECK(class_min_rep(g) == class_min_rep(conj));
  CHECK(class_min_rep(g) == class_min_rep(mat_neg(g)));
  CHECK(class_min_rep(mat_id(10)) == std::array<Int, 4>{1, 0, 0, 1});
}

TEST_CASE("complex multiplication action on torsion") {
  CHECK(cm_action_matrix(-4, 1, 1, 21) == mat_make(21, 1, -1, 1, 1));
  CHECK(cm_action_matrix(-11, -1, 3, 18) == mat_make(18, 17, 9, 3, 2));
  CHECK(cm_action_matrix(-8, 0, 1, 15) == mat_make(15, 0, 13, 1, 0));

  // det = norm and trace = trace of psi = a + b phi, reduced mod n.
  for (Int D : {-4, -8, -3, -7, -11, -20, -19}) {
    Int n = 36;
    for (Int a = -3; a <= 3; ++a)
      for (Int b = -3; b <= 3; ++b) {
        Mat m = cm_action_matrix(D, a, b, n);
        Int norm, tr;
        if (mod_reduce(D, 4) == 0) {
          norm = a * a + b * b * (-D / 4);
          tr = 2 * a;
        } else {
          norm = a * a + a * b + b * b * (1 - D) / 4;
          tr = 2 * a + b;
        }
        CHECK(mat_det(m) == mod_reduce(norm, n));
        CHECK(mat_trace(m) == mod_reduce(tr, n));
      }
  }
}

TEST_CASE("involution class lists: frozen examples") {
  auto c15 = involution_classes(15, 1);
  REQUIRE(c15.size() == 3);
  CHECK(c15[0].shape == TauShape::ScalarLambda);
  CHECK(c15[0].lambda == 1);
  CHECK(c15[1].shape == TauShape::ScalarLambda);
  CHECK(c15[1].lambda == 4);
  CHECK(c15[2].shape == TauShape::Weyl);

  CHECK(involution_classes(17, 1).size() == 2);
  CHECK(involution_classes(16, 5).size() == 1);
  CHECK(involution_classes(16, 5)[0].shape == TauShape::AntidiagWeyl);
  CHECK(involution_classes(24, 23).size() == 3);
  CHECK(involution_classes(12, 7).size() == 3);
  CHECK(involution_classes(8, 1).size() == 5);
  CHECK(involution_classes(6, 1).size() == 4);
  CHECK(involution_classes(2, 1).size() == 2);  // labels collide in GL2(F2)

  for (const TauClass& c : involution_classes(24, 23)) {
    CHECK(mat_det(c.rep) == 23);
    CHECK(is_tau_matrix(c.rep));
  }
}

TEST_CASE("involution class count closed form") {
  // For N >= 6 no label collisions occur and the count is determined by
  // k = v2(N) and the residue of r.
  for (Int N = 6; N <= 33; ++N) {
    Int k = v2(N);
    for (Int r = 1; r < N; ++r) {
      if (std::gcd(r, N) != 1) continue;
      Int plus = is_square_mod(N, r) ? (rho(N, r) / 2) * (k >= 1 ? 2 : 1) : 0;
      Int minus;
      if (k == 0) minus = 1;
      else if (k == 1) minus = 2;
      else if (k == 2) minus = (r % 4 == 1) ? 1 : 3;
      else minus = (r % 8 == 1 || r % 8 == 5) ? 1 : 3;
      CHECK(Int(involution_classes(N, r).size()) == plus + minus);
    }
  }
}

TEST_CASE("closed form classes match exhaustive search") {
  for (Int N = 2; N <= 24; ++N) {
    for (Int r = 1; r < N; ++r) {
      if (std::gcd(r, N) != 1) continue;
      CAPTURE(N);
      CAPTURE(r);
      auto closed = sorted_labels(involution_classes(N, r));
      auto brute = brute_involution_classes(N, r);
      CHECK(closed == brute);
      // Labels are pairwise distinct: the list has no repeated class.
      CHECK(std::adjacent_find(closed.begin(), closed.end()) == closed.end());
    }
  }
}

TEST_CASE("extended centralizer") {
  // h ranges over matrices commuting with g up to sign; a subgroup of GL2.
  Mat w15 = weyl_matrix_odd(15, 1);
  auto h = extended_centralizer(w15);
  CHECK(Int(h.size()) == 256);
  CHECK(gl2_order(15) == 23040);
  CHECK(gl2_order(15) / Int(h.size()) == 90);  // the index mu^+(15,1)

  for (Int N : {12, 15}) {
    for (Int r = 1; r < N && r <= 7; ++r) {
      if (std::gcd(r, N) != 1) continue;
      for (const TauClass& c : involution_classes(N, r)) {
        auto cent = extended_centralizer(c.rep);
        // Subgroup order divides the group order.
        CHECK(gl2_order(N) % Int(cent.size()) == 0);
        // Closure under multiplication on a sample.
        for (size_t i = 0; i < cent.size(); i += 37)
          for (size_t j = 0; j < cent.size(); j += 41) {
            Mat prod = mat_mul(cent[i], cent[j]);
            Mat pg = mat_mul(prod, c.rep), gp = mat_mul(c.rep, prod);
            CHECK((pg == gp || pg == mat_neg(gp)));
          }
      }
    }
  }
}
