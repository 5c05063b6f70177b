#include "sqen/exact_forms.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sqen {

namespace {

// Raise an exact rational to a nonnegative integer power (0^0 = 1).
mpq_class pow_q(const mpq_class& base, unsigned long e) {
  mpq_class out = 1;
  mpq_class b = base;
  while (e > 0) {
    if (e & 1ul) out *= b;
    b *= b;
    e >>= 1;
  }
  return out;
}

RationalSpectrum from_multiset(std::map<mpz_class, mpz_class>& acc) {
  RationalSpectrum spec;
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    if (it->second != 0) spec.pairs.emplace_back(it->first, it->second);
  return spec;
}

}  // namespace

mpz_class RationalSpectrum::total() const {
  mpz_class n = 0;
  for (const auto& [eig, mult] : pairs) n += mult;
  return n;
}

mpz_class RationalSpectrum::trace() const {
  mpz_class t = 0;
  for (const auto& [eig, mult] : pairs) t += eig * mult;
  return t;
}

mpz_class RationalSpectrum::second_moment() const {
  mpz_class t = 0;
  for (const auto& [eig, mult] : pairs) t += eig * eig * mult;
  return t;
}

RationalSpectrum SrgSpectrumParams::spectrum() const {
  std::map<mpz_class, mpz_class> acc;
  acc[k] += 1;
  acc[r] += f;
  acc[s] += g;
  return from_multiset(acc);
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

mpz_class binomial_general(const mpz_class& a, unsigned long m) {
  mpz_class num = 1;
  for (unsigned long i = 0; i < m; ++i) num *= a - static_cast<long>(i);
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), m);
  mpz_class out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), fact.get_mpz_t());
  return out;
}

RationalSpectrum kneser_spectrum(long n, long k) {
  if (k < 1 || n < 2 * k)
    throw std::invalid_argument("kneser_spectrum: n >= 2k >= 2 required");
  std::map<mpz_class, mpz_class> acc;
  for (long i = 0; i <= k; ++i) {
    mpz_class eig = binomial(static_cast<unsigned long>(n - k - i),
                             static_cast<unsigned long>(k - i));
    if (i % 2 == 1) eig = -eig;
    mpz_class mult = binomial(static_cast<unsigned long>(n),
                              static_cast<unsigned long>(i));
    if (i > 0)
      mult -= binomial(static_cast<unsigned long>(n),
                       static_cast<unsigned long>(i - 1));
    acc[eig] += mult;
  }
  return from_multiset(acc);
}

ExactEnergies exact_square_energies(const RationalSpectrum& spec) {
  ExactEnergies e{0, 0, 0, 0};
  for (const auto& [eig, mult] : spec.pairs) {
    if (eig > 0)
      e.s_plus += eig * eig * mult;
    else if (eig < 0)
      e.s_minus += eig * eig * mult;
  }
  e.two_m = e.s_plus + e.s_minus;
  e.spread = e.s_plus - e.s_minus;
  return e;
}

ExactInertia kneser_inertia(long n, long k) {
  if (k < 1 || n < 2 * k)
    throw std::invalid_argument("kneser_inertia: n >= 2k >= 2 required");
  ExactInertia in;
  in.n_plus = binomial(static_cast<unsigned long>(n - 1),
                       static_cast<unsigned long>(k));
  in.n_zero = 0;
  in.n_minus = binomial(static_cast<unsigned long>(n - 1),
                        static_cast<unsigned long>(k - 1));
  return in;
}

mpz_class kneser_symmetry_value(long k, long j) {
  if (j < 1 || k <= j)
    throw std::invalid_argument("kneser_symmetry_value: k > j >= 1 required");
  mpz_class prod = binomial(static_cast<unsigned long>(2 * k + 2 * j),
                            static_cast<unsigned long>(k)) *
                   binomial(static_cast<unsigned long>(k + 2 * j),
                            static_cast<unsigned long>(k));
  mpz_class out;
  mpz_class two = 2;
  mpz_divexact(out.get_mpz_t(), prod.get_mpz_t(), two.get_mpz_t());
  return out;
}

SrgSpectrumParams gq_spectrum(long s, long t) {
  if (s < 1 || t < 1)
    throw std::invalid_argument("gq_spectrum: s, t >= 1 required");
  const mpz_class zs = s, zt = t;
  SrgSpectrumParams out;
  out.family = "gq";
  out.n = (zs + 1) * (zs * zt + 1);
  out.k = zs * (zt + 1);
  out.r = zs - 1;
  out.s = -(zt + 1);
  const mpz_class denom = zs + zt;
  const mpz_class f_num = zs * (zs + 1) * zt * (zt + 1);
  const mpz_class g_num = zs * zs * (zs * zt + 1);
  if (f_num % denom != 0 || g_num % denom != 0)
    throw std::domain_error(
        "gq_spectrum: s+t does not divide the multiplicity numerators (not "
        "a valid GQ parameter set)");
  out.f = f_num / denom;
  out.g = g_num / denom;
  return out;
}

SrgSpectrumParams taylor_spectrum(long q) {
  if (q < 3 || q % 2 == 0)
    throw std::invalid_argument("taylor_spectrum: odd q >= 3 required");
  const mpz_class zq = q;
  SrgSpectrumParams out;
  out.family = "taylor";
  out.n = zq * zq * zq;
  out.k = (zq - 1) * (zq * zq + 1) / 2;
  out.r = (zq - 1) / 2;
  out.s = -(zq * zq + 1) / 2;
  out.f = (zq - 1) * (zq * zq + 1);
  out.g = zq * (zq - 1);
  return out;
}

RationalSpectrum blowup_spectrum(const RationalSpectrum& spec, long t) {
  if (t < 1) throw std::invalid_argument("blowup_spectrum: t >= 1 required");
  if (t == 1) return spec;
  const mpz_class n = spec.total();
  std::map<mpz_class, mpz_class> acc;
  for (const auto& [eig, mult] : spec.pairs) acc[eig * t] += mult;
  acc[0] += (mpz_class(t) - 1) * n;
  return from_multiset(acc);
}

mpq_class ruiz_identity(long n, const mpq_class& x) {
  if (n < 1) throw std::invalid_argument("ruiz_identity: n >= 1 required");
  mpq_class sum = 0;
  for (long i = 0; i <= n; ++i) {
    mpq_class term = mpq_class(binomial(static_cast<unsigned long>(n),
                                        static_cast<unsigned long>(i))) *
                     pow_q(x - i, static_cast<unsigned long>(n));
    sum += (i % 2 == 0) ? term : -term;
  }
  return sum;
}

mpq_class ruiz_derivative_identity(long n, const mpq_class& x, long j) {
  if (n < 1) throw std::invalid_argument("ruiz_derivative_identity: n >= 1");
  if (j < 1 || j > n)
    throw std::invalid_argument(
        "ruiz_derivative_identity: 1 <= j <= n required");
  mpq_class sum = 0;
  for (long i = 0; i <= n; ++i) {
    mpq_class term = mpq_class(binomial(static_cast<unsigned long>(n),
                                        static_cast<unsigned long>(i))) *
                     pow_q(x - i, static_cast<unsigned long>(n - j));
    sum += (i % 2 == 0) ? term : -term;
  }
  return sum;
}

mpq_class p_polynomial(long j, const mpz_class& a) {
  if (j < 1) throw std::invalid_argument("p_polynomial: j >= 1 required");
  const unsigned long two_j = static_cast<unsigned long>(2 * j);
  const mpz_class b1 = binomial_general(a, two_j);
  const mpz_class b2 = binomial_general(a - 1, two_j);
  return mpq_class(b1 * b1 + b2 * b2);
}

std::vector<mpq_class> q_coefficients(long j) {
  if (j < 1) throw std::invalid_argument("q_coefficients: j >= 1 required");
  // Expand 2 (1/(2j)!)^2 y^2 (y^2 + j^2) prod_{m=1}^{j-1} (y^2 - m^2)^2.
  std::vector<mpq_class> poly = {0, 0, 1};  // y^2
  auto multiply_quadratic = [&poly](const mpq_class& constant) {
    // poly *= (y^2 + constant)
    std::vector<mpq_class> next(poly.size() + 2, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 2] += poly[i];
      next[i] += poly[i] * constant;
    }
    poly = std::move(next);
  };
  multiply_quadratic(mpq_class(j) * j);  // (y^2 + j^2)
  for (long m = 1; m <= j - 1; ++m) {
    const mpq_class c = -mpq_class(m) * m;
    multiply_quadratic(c);  // (y^2 - m^2) twice
    multiply_quadratic(c);
  }
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(2 * j));
  const mpq_class scale = mpq_class(2) / (mpq_class(fact) * fact);
  for (auto& c : poly) c *= scale;
  poly.resize(static_cast<std::size_t>(4 * j) + 1, 0);
  return poly;
}

KneserSymmetryWitness verify_kneser_symmetry(long k, long j) {
  if (j < 1 || k <= j)
    throw std::invalid_argument("verify_kneser_symmetry: k > j >= 1 required");
  const ExactEnergies e = exact_square_energies(kneser_spectrum(2 * k + 2 * j, k));
  KneserSymmetryWitness w;
  w.s_plus = e.s_plus;
  w.s_minus = e.s_minus;
  w.equal = (e.s_plus == e.s_minus);

  // Independent certificate: the full alternating sum over i = 0..2k+2j of
  // (-1)^i C(2k+2j, i) P(k+2j-i) vanishes (P as a polynomial via generalized
  // binomials).
  const long big_n = 2 * k + 2 * j;
  mpq_class sum = 0;
  for (long i = 0; i <= big_n; ++i) {
    mpq_class term = mpq_class(binomial(static_cast<unsigned long>(big_n),
                                        static_cast<unsigned long>(i))) *
                     p_polynomial(j, mpz_class(k + 2 * j - i));
    sum += (i % 2 == 0) ? term : -term;
  }
  w.identity_zero = (sum == 0);
  return w;
}

}  // namespace sqen
