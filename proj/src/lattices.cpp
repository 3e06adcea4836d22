// SPDX-License-Identifier: Apache-2.0
#include "hnbound/lattices.hpp"

#include <algorithm>

#include "hnbound/errors.hpp"

namespace hnb {

namespace {

void require_enumerable(const EuclideanLattice& l) {
  if (l.rank() > kMaxEnumerationRank) throw InvalidArgument("lattice rank too large to enumerate");
}

Integer round_nearest(const Rational& q) {
  Rational shifted = q + frac(1, 2);
  Integer z;
  mpz_fdiv_q(z.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  return z;
}

struct Gso {
  RationalMatrix mu;
  std::vector<Rational> bstar;
};

Gso gram_schmidt(const RationalMatrix& g) {
  const int r = static_cast<int>(g.size());
  Gso s{RationalMatrix(r, RationalVector(r, Rational(0))), std::vector<Rational>(r)};
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < i; ++j) {
      Rational v = g[i][j];
      for (int k = 0; k < j; ++k) v -= s.mu[j][k] * s.mu[i][k] * s.bstar[k];
      s.mu[i][j] = v / s.bstar[j];
    }
    Rational b = g[i][i];
    for (int k = 0; k < i; ++k) b -= s.mu[i][k] * s.mu[i][k] * s.bstar[k];
    s.bstar[i] = b;
  }
  return s;
}

// b_k -= q b_j in Gram form.
void row_op(RationalMatrix& g, int k, int j, const Rational& q) {
  const int r = static_cast<int>(g.size());
  const Rational gjj = g[j][j], gkj = g[k][j];
  for (int c = 0; c < r; ++c) g[k][c] -= q * g[j][c];
  for (int c = 0; c < r; ++c) g[c][k] = g[k][c];
  g[k][k] = g[k][k] + q * q * gjj - q * gkj;  // row update already subtracted q g_jk once
}

void swap_basis(RationalMatrix& g, int a, int b) {
  std::swap(g[a], g[b]);
  for (auto& row : g) std::swap(row[a], row[b]);
}

}  // namespace

EuclideanLattice::EuclideanLattice(RationalMatrix gram) : gram_(std::move(gram)) {
  if (gram_.empty()) throw InvalidArgument("lattice rank must be >= 1");
  if (!is_symmetric(gram_)) throw InvalidArgument("Gram matrix must be square and symmetric");
  for (int k = 1; k <= rank(); ++k) {
    RationalMatrix minor(k, RationalVector(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) minor[i][j] = gram_[i][j];
    Rational m = hnb::determinant(std::move(minor));
    if (m <= 0) throw InvalidArgument("Gram matrix is not positive definite");
    if (k == rank()) det_ = m;
  }
  form_ = kernels::decompose(gram_);
}

bool EuclideanLattice::is_diagonal() const {
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j)
      if (i != j && gram_[i][j] != 0) return false;
  return true;
}

EuclideanLattice EuclideanLattice::scaled(const Rational& c) const {
  RationalMatrix g = gram_;
  for (auto& row : g)
    for (auto& v : row) v *= c;
  return EuclideanLattice(std::move(g));
}

H0Hat h0_hat(const EuclideanLattice& l, std::uint64_t budget) {
  require_enumerable(l);
  H0Hat out;
  out.count = kernels::count_short_vectors(l.form(), Rational(1), budget);
  out.value = Scalar(ln(Rational(Integer(std::to_string(out.count)))));
  return out;
}

RationalMatrix lll_reduce(const RationalMatrix& gram) {
  RationalMatrix g = gram;
  const int r = static_cast<int>(g.size());
  const Rational delta(3, 4);
  int k = 1;
  while (k < r) {
    for (int j = k - 1; j >= 0; --j) {
      Gso s = gram_schmidt(g);
      Integer q = round_nearest(s.mu[k][j]);
      if (q != 0) row_op(g, k, j, Rational(q));
    }
    Gso s = gram_schmidt(g);
    if (s.bstar[k] >= (delta - s.mu[k][k - 1] * s.mu[k][k - 1]) * s.bstar[k - 1]) {
      ++k;
    } else {
      swap_basis(g, k, k - 1);
      k = std::max(k - 1, 1);
    }
  }
  return g;
}

SuccessiveMinima successive_minima(const EuclideanLattice& l, std::uint64_t budget) {
  require_enumerable(l);
  const int r = l.rank();
  // The reduced basis has the same lattice, so its longest vector bounds the last minimum.
  RationalMatrix reduced = lll_reduce(l.gram());
  Rational bound = 0;
  for (int i = 0; i < r; ++i) bound = std::max(bound, reduced[i][i]);
  auto vecs = kernels::list_short_vectors(kernels::decompose(reduced), bound, budget);
  std::stable_sort(vecs.begin(), vecs.end(),
                   [](const kernels::ShortVector& a, const kernels::ShortVector& b) {
                     return a.norm < b.norm;
                   });
  SuccessiveMinima out;
  RationalMatrix span;
  for (const auto& v : vecs) {
    RationalVector row(v.coords.begin(), v.coords.end());
    span.push_back(row);
    if (matrix_rank(span) < static_cast<int>(span.size())) {
      span.pop_back();
      continue;
    }
    out.squared.push_back(v.norm);
    if (static_cast<int>(span.size()) == r) break;
  }
  if (static_cast<int>(out.squared.size()) != r)
    throw InvalidArgument("enumeration did not reach full rank");
  for (const auto& m : out.squared) {
    if (m == 1)
      out.lambda.emplace_back(Rational(0));
    else
      out.lambda.emplace_back(Interval::point(-0.5) * ln(m));
  }
  return out;
}

Interval ln_ball_volume(long r) {
  if (r < 1) throw InvalidArgument("ball dimension must be >= 1");
  return Interval::point(0.5 * static_cast<double>(r)) * ln(pi_interval()) -
         lgamma(frac(r + 2, 2));
}

Scalar euler_char(const EuclideanLattice& l) {
  return Scalar(ln_ball_volume(l.rank()) - Interval::point(0.5) * ln(l.determinant()));
}

Scalar arakelov_degree(const EuclideanLattice& l) {
  if (l.determinant() == 1) return Scalar(Rational(0));
  return Scalar(Interval::point(-0.5) * ln(l.determinant()));
}

HNType orthogonal_hn(const EuclideanLattice& l) {
  if (!l.is_diagonal()) throw InvalidArgument("orthogonal_hn requires a diagonal Gram matrix");
  std::vector<Rational> d;
  for (int i = 0; i < l.rank(); ++i) d.push_back(l.gram()[i][i]);
  std::sort(d.begin(), d.end());
  std::vector<HNSegment> segs;
  for (std::size_t i = 0; i < d.size();) {
    std::size_t j = i;
    while (j < d.size() && d[j] == d[i]) ++j;
    Scalar slope = d[i] == 1 ? Scalar(Rational(0)) : Scalar(Interval::point(-0.5) * ln(d[i]));
    segs.push_back({static_cast<long>(j - i), slope});
    i = j;
  }
  return HNType::make(std::move(segs));
}

Scalar rank2_mu_max(const EuclideanLattice& l) {
  if (l.rank() != 2) throw InvalidArgument("rank2_mu_max requires rank 2");
  return max(successive_minima(l).lambda[0], arakelov_degree(l) / Scalar(2));
}

NumberFieldData::NumberFieldData(long d, long real, long complex, Integer disc)
    : degree(d), r1(real), r2(complex), abs_discriminant(std::move(disc)) {
  if (d < 1 || real < 0 || complex < 0 || real + 2 * complex != d)
    throw InvalidArgument("number field data needs d >= 1 and r1 + 2 r2 = d");
  if (abs_discriminant < 1) throw InvalidArgument("|discriminant| must be >= 1");
}

Scalar gillet_soule_constant(const NumberFieldData& k, long n) {
  if (n < 1) throw InvalidArgument("gillet_soule_constant requires n >= 1");
  auto pt = [](double x) { return Interval::point(x); };
  const double nd = static_cast<double>(n);
  Interval c = pt(nd * static_cast<double>(k.degree)) * ln(Rational(3)) +
               pt(nd * static_cast<double>(k.r1 + k.r2)) * ln(Rational(2)) +
               pt(0.5 * nd) * ln(Rational(k.abs_discriminant));
  if (k.r1 > 0)
    c -= pt(static_cast<double>(k.r1)) * (ln_ball_volume(n) + ln_factorial(n));
  if (k.r2 > 0)
    c -= pt(static_cast<double>(k.r2)) * (ln_ball_volume(2 * n) + ln_factorial(2 * n));
  c += ln_factorial(k.degree * n);
  return Scalar(c);
}

RationalMatrix random_integer_gram(int rank, std::mt19937_64& rng) {
  if (rank < 1) throw InvalidArgument("rank must be >= 1");
  std::uniform_int_distribution<int> entry(-3, 3);
  while (true) {
    RationalMatrix b(rank, RationalVector(rank));
    for (auto& row : b)
      for (auto& v : row) v = entry(rng);
    if (determinant(b) == 0) continue;
    return multiply(transpose(b), b);
  }
}

}  // namespace hnb
