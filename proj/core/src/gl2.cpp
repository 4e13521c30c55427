#include "hms/gl2.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>

namespace hms {

Mat mat_make(Int n, Int a, Int b, Int c, Int d) {
  assert(n >= 1);
  return Mat{n, {mod_reduce(a, n), mod_reduce(b, n), mod_reduce(c, n), mod_reduce(d, n)}};
}

Mat mat_id(Int n) { return mat_make(n, 1, 0, 0, 1); }

Mat mat_mul(const Mat& x, const Mat& y) {
  assert(x.n == y.n);
  return mat_make(x.n, x.e[0] * y.e[0] + x.e[1] * y.e[2], x.e[0] * y.e[1] + x.e[1] * y.e[3],
                  x.e[2] * y.e[0] + x.e[3] * y.e[2], x.e[2] * y.e[1] + x.e[3] * y.e[3]);
}

Mat mat_scale(Int c, const Mat& x) {
  return mat_make(x.n, c * x.e[0], c * x.e[1], c * x.e[2], c * x.e[3]);
}

Mat mat_neg(const Mat& x) { return mat_scale(-1, x); }

Int mat_det(const Mat& x) { return mod_reduce(x.e[0] * x.e[3] - x.e[1] * x.e[2], x.n); }

Int mat_trace(const Mat& x) { return mod_reduce(x.e[0] + x.e[3], x.n); }

Mat mat_inv(const Mat& x) {
  Int di = inv_mod(mat_det(x), x.n);
  return mat_make(x.n, di * x.e[3], -di * x.e[1], -di * x.e[2], di * x.e[0]);
}

Mat mat_pow(const Mat& x, Int e) {
  assert(e >= 0);
  Mat out = mat_id(x.n), base = x;
  while (e) {
    if (e & 1) out = mat_mul(out, base);
    base = mat_mul(base, base);
    e >>= 1;
  }
  return out;
}

Mat mat_mod(const Mat& x, Int m) {
  assert(x.n % m == 0);
  return mat_make(m, x.e[0], x.e[1], x.e[2], x.e[3]);
}

Mat crt_pair(const Mat& x, const Mat& y) {
  assert(std::gcd(x.n, y.n) == 1);
  if (y.n == 1) return x;
  if (x.n == 1) return y;
  Int n = x.n * y.n, xi = inv_mod(x.n, y.n);
  Mat out{n, {}};
  for (int i = 0; i < 4; ++i) {
    Int t = mod_reduce((y.e[i] - x.e[i]) * xi, y.n);
    out.e[i] = mod_reduce(x.e[i] + x.n * t, n);
  }
  return out;
}

bool is_scalar(const Mat& x) {
  return x.e[1] == 0 && x.e[2] == 0 && x.e[0] == x.e[3];
}

bool is_tau_matrix(const Mat& g) {
  Int det = mat_det(g);
  if (std::gcd(det, g.n) != 1) return false;
  Mat g2 = mat_mul(g, g);
  return g2 == mat_scale(det, mat_id(g.n)) || g2 == mat_scale(-det, mat_id(g.n));
}

std::array<Int, 4> pack_up_to_sign(const Mat& g) {
  return std::min(g.e, mat_neg(g).e);
}

namespace {

// Conjugation generators: elementary matrices and diag(u, 1) over units u.
std::vector<Mat> conjugation_generators(Int n) {
  std::vector<Mat> gens{mat_make(n, 1, 1, 0, 1), mat_make(n, 1, 0, 1, 1)};
  for (Int u = 2; u < n; ++u)
    if (std::gcd(u, n) == 1) gens.push_back(mat_make(n, u, 0, 0, 1));
  return gens;
}

}  // namespace

std::array<Int, 4> class_min_rep(const Mat& g) {
  auto gens = conjugation_generators(g.n);
  std::vector<Mat> inv(gens.size());
  for (size_t i = 0; i < gens.size(); ++i) inv[i] = mat_inv(gens[i]);

  std::set<std::array<Int, 4>> seen{pack_up_to_sign(g)};
  std::vector<Mat> frontier{g};
  while (!frontier.empty()) {
    std::vector<Mat> next;
    for (const Mat& m : frontier) {
      for (size_t i = 0; i < gens.size(); ++i) {
        Mat c = mat_mul(gens[i], mat_mul(m, inv[i]));
        if (seen.insert(pack_up_to_sign(c)).second) next.push_back(c);
      }
    }
    frontier = std::move(next);
  }
  return *seen.begin();
}

Mat shape_borel(Int q) {
  auto f = factorize(q);
  assert(f.size() == 1);
  return mat_make(q, 1, q / f[0].first, 0, 1);
}

Mat shape_antidiag(Int q, Int r) { return mat_make(q, 0, -r, 1, 0); }

Mat shape_s(Int q) { return mat_make(q, 1, 0, 0, -1); }

Mat shape_ns(Int q) {
  if (q % 2 == 0) return mat_make(q, 1, 2, -2, -1);
  auto f = factorize(q);
  assert(f.size() == 1);
  Int p = f[0].first, xi = 2;
  while (kronecker(xi, p) != -1) ++xi;
  return mat_make(q, 0, xi, 1, 0);
}

Mat weyl_matrix(Int q, Int r) {
  auto f = factorize(q);
  assert(f.size() == 1 && f[0].first % 2 == 1);
  Int p = f[0].first;
  if (kronecker(-r, p) == 1) {
    // lambda^2 = -r: det(lambda s) = -lambda^2 = r.
    Int lambda = lambda_set(q, mod_reduce(-r, q)).front();
    return mat_scale(lambda, shape_s(q));
  }
  Mat ns = shape_ns(q);
  // det(ns) = -xi: lambda^2 = -r/xi gives det(lambda ns) = r.
  Int target = mod_reduce(-r * inv_mod(mod_reduce(-mat_det(ns), q), q), q);
  Int lambda = lambda_set(q, target).front();
  return mat_scale(lambda, ns);
}

Mat weyl_matrix_odd(Int M, Int r) {
  assert(M % 2 == 1);
  Mat out = mat_id(1);
  for (auto [p, e] : factorize(M)) {
    Int q = 1;
    for (int i = 0; i < e; ++i) q *= p;
    out = crt_pair(out, weyl_matrix(q, r));
  }
  return out;
}

const char* tau_shape_name(TauShape s) {
  switch (s) {
    case TauShape::ScalarLambda: return "scalar";
    case TauShape::BorelLambda: return "borel";
    case TauShape::Weyl: return "weyl";
    case TauShape::IWeyl: return "(I, weyl)";
    case TauShape::AntidiagWeyl: return "(antidiag, weyl)";
    case TauShape::SWeyl: return "(s, weyl)";
    case TauShape::OmegaSWeyl: return "(omega s, weyl)";
    case TauShape::NSWeyl: return "(ns, weyl)";
    case TauShape::OmegaNSWeyl: return "(omega ns, weyl)";
  }
  return "?";
}

std::vector<TauClass> involution_classes(Int N, Int r) {
  assert(N >= 2);
  r = mod_reduce(r, N);
  assert(std::gcd(r, N) == 1);
  const Int k = v2(N), M = odd_part(N);
  const Int q2 = N / M;  // 2^k

  std::vector<TauClass> out;
  if (is_square_mod(N, r)) {
    for (Int lambda : lambda_set(N, r)) {
      out.push_back({TauShape::ScalarLambda, lambda, mat_scale(lambda, mat_id(N))});
      if (k >= 1)
        out.push_back({TauShape::BorelLambda, lambda,
                       mat_scale(lambda, crt_pair(shape_borel(q2), mat_id(M)))});
    }
  }

  const Mat weyl_m = weyl_matrix_odd(M, r);
  auto minus_class = [&](TauShape shape, const Mat& two_part) {
    out.push_back({shape, 0, crt_pair(two_part, weyl_m)});
  };

  if (k == 0) {
    out.push_back({TauShape::Weyl, 0, weyl_m});
  } else if (k == 1) {
    minus_class(TauShape::IWeyl, mat_id(2));
    minus_class(TauShape::AntidiagWeyl, shape_antidiag(2, r));
  } else {
    minus_class(TauShape::AntidiagWeyl, shape_antidiag(q2, r));
    if (mod_reduce(r, 4) == 3) {
      // lambda^2 = -r lifts s to determinant r; lambda^2 = r / 3 lifts ns.
      auto ls = lambda_set(q2, mod_reduce(-r, q2));
      auto ln = lambda_set(q2, mod_reduce(r * inv_mod(3, q2), q2));
      if (!ls.empty()) {
        minus_class(TauShape::SWeyl, mat_scale(ls[0], shape_s(q2)));
        if (ls.size() > 1) minus_class(TauShape::OmegaSWeyl, mat_scale(ls[1], shape_s(q2)));
      }
      if (!ln.empty()) {
        minus_class(TauShape::NSWeyl, mat_scale(ln[0], shape_ns(q2)));
        if (ln.size() > 1) minus_class(TauShape::OmegaNSWeyl, mat_scale(ln[1], shape_ns(q2)));
      }
    }
  }

  for (const TauClass& c : out) {
    assert(mat_det(c.rep) == r);
    assert(is_tau_matrix(c.rep));
  }

  // Distinct labels can name one class at very small N; keep first spellings.
  if (N <= 64) {
    std::set<std::array<Int, 4>> seen;
    std::vector<TauClass> unique;
    for (const TauClass& c : out)
      if (seen.insert(class_min_rep(c.rep)).second) unique.push_back(c);
    out = std::move(unique);
  }
  return out;
}

std::vector<std::array<Int, 4>> brute_involution_classes(Int N, Int r) {
  assert(N >= 2 && N <= 24);
  r = mod_reduce(r, N);
  std::set<std::array<Int, 4>> pending;
  for (Int a = 0; a < N; ++a)
    for (Int b = 0; b < N; ++b)
      for (Int c = 0; c < N; ++c)
        for (Int d = 0; d < N; ++d) {
          Mat g = mat_make(N, a, b, c, d);
          if (mat_det(g) != r) continue;
          if (!is_tau_matrix(g)) continue;
          pending.insert(pack_up_to_sign(g));
        }

  std::vector<std::array<Int, 4>> classes;
  std::set<std::array<Int, 4>> visited;
  for (const auto& p : pending) {
    if (visited.count(p)) continue;
    Mat g{N, p};
    // Mark the whole conjugacy closure of g as visited.
    auto gens = conjugation_generators(N);
    std::vector<Mat> frontier{g};
    visited.insert(p);
    std::array<Int, 4> best = p;
    while (!frontier.empty()) {
      std::vector<Mat> next;
      for (const Mat& m : frontier)
        for (const Mat& t : gens) {
          Mat c = mat_mul(t, mat_mul(m, mat_inv(t)));
          auto key = pack_up_to_sign(c);
          if (visited.insert(key).second) {
            next.push_back(c);
            best = std::min(best, key);
          }
        }
      frontier = std::move(next);
    }
    classes.push_back(best);
  }
  std::sort(classes.begin(), classes.end());
  return classes;
}

std::vector<Mat> extended_centralizer(const Mat& g) {
  const Int N = g.n;
  assert(N <= 24);
  std::vector<Mat> out;
  for (Int a = 0; a < N; ++a)
    for (Int b = 0; b < N; ++b)
      for (Int c = 0; c < N; ++c)
        for (Int d = 0; d < N; ++d) {
          Mat h = mat_make(N, a, b, c, d);
          if (std::gcd(mat_det(h), N) != 1) continue;
          Mat hg = mat_mul(h, g), gh = mat_mul(g, h);
          if (hg == gh || hg == mat_neg(gh)) out.push_back(h);
        }
  return out;
}

Mat cm_action_matrix(Int D, Int a, Int b, Int n) {
  assert(D < 0);
  if (mod_reduce(D, 4) == 0) {
    Int d = -D / 4;
    return mat_make(n, a, -b * d, b, a);
  }
  assert(mod_reduce(D, 4) == 1);
  Int d = -D;
  return mat_make(n, a, -b * (d + 1) / 4, b, a + b);
}

}  // namespace hms
