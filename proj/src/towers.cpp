// SPDX-License-Identifier: Apache-2.0
#include "hnbound/towers.hpp"

#include "hnbound/errors.hpp"

namespace hnb {

namespace {

void validate(const Tower& t, const TowerData& data) {
  if (data.mu.size() != t.genera.size() || data.vol.size() != t.genera.size())
    throw InvalidArgument("tower data length does not match the tower");
  for (const auto& v : data.vol)
    if (v < 0) throw InvalidArgument("tower volumes must be nonnegative");
}

Rational factorial(long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

Rational genus_factor(long g) { return g - 1 > 1 ? g - 1 : 1; }

template <class Extra>
Rational recurse(const Tower& t, const TowerData& data, Extra extra) {
  validate(t, data);
  const int d = t.depth();
  Rational eps = genus_factor(t.genera[d]);
  for (int i = d - 1; i >= 0; --i) {
    Rational factor = genus_factor(t.genera[i]) + extra(t.genera[i]);
    eps = data.mu[i] * eps + (data.vol[i + 1] / factorial(d - i) + eps) * factor;
  }
  return eps;
}

}  // namespace

Tower::Tower(std::vector<long> g) : genera(std::move(g)) {
  if (genera.empty()) throw InvalidArgument("tower needs at least one level");
  for (long x : genera)
    if (x < 0) throw InvalidArgument("tower genera must be nonnegative");
}

Rational epsilon(const Tower& t, const TowerData& data) {
  return recurse(t, data, [](long) { return Rational(0); });
}

Rational epsilon_tilde(const Tower& t, const TowerData& data, const AffineFunction& ell) {
  return recurse(t, data, [&](long g) { return ell(g); });
}

TowerData rescale(const TowerData& data, long p) {
  if (p < 1) throw InvalidArgument("rescale requires p >= 1");
  if (data.mu.size() != data.vol.size()) throw InvalidArgument("tower data length mismatch");
  const long d = static_cast<long>(data.mu.size()) - 1;
  TowerData out = data;
  for (long i = 0; i <= d; ++i) {
    out.mu[i] *= p;
    Integer pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d + 1 - i));
    out.vol[i] *= Rational(pk);
  }
  return out;
}

bool negative_mu_flag(const Tower& t, const TowerData& data) {
  validate(t, data);
  for (int i = 0; i < t.depth(); ++i)
    if (data.mu[i] < 0) return true;
  return false;
}

}  // namespace hnb
