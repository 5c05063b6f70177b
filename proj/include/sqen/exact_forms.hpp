#pragma once

// Arbitrary-precision closed-form spectra and square energies for the
// structured families (Kneser, generalised-quadrangle and Taylor strongly
// regular parameters, blowups), plus the exact combinatorial identities used
// to certify the Kneser symmetry s+ = s- of K(2k+2j, k).

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace sqen {

// Exact (eigenvalue, multiplicity) pairs, eigenvalues strictly descending
// and pairwise distinct, multiplicities positive.
struct RationalSpectrum {
  std::vector<std::pair<mpz_class, mpz_class>> pairs;

  mpz_class total() const;          // n = sum of multiplicities
  mpz_class trace() const;          // sum mult * eig (zero for all families)
  mpz_class second_moment() const;  // sum mult * eig^2 = 2m
};

struct ExactEnergies {
  mpz_class s_plus, s_minus, spread, two_m;
};

struct ExactInertia {
  mpz_class n_plus, n_zero, n_minus;
};

// Strongly regular spectrum k^1 r^f s^g on n vertices.
struct SrgSpectrumParams {
  std::string family;  // "gq" or "taylor"
  mpz_class n, k, r, s, f, g;

  RationalSpectrum spectrum() const;
};

// Nonnegative-argument binomial coefficient.
mpz_class binomial(unsigned long n, unsigned long k);
// Generalized binomial C(a, m) = a(a-1)...(a-m+1)/m! for any integer a.
mpz_class binomial_general(const mpz_class& a, unsigned long m);

// Kneser graph K(n,k) spectrum: entries (-1)^i C(n-k-i, k-i) with
// multiplicity C(n,i) - C(n,i-1) for i = 0..k (equal eigenvalues merged).
// Requires n >= 2k >= 2.
RationalSpectrum kneser_spectrum(long n, long k);

ExactEnergies exact_square_energies(const RationalSpectrum& spec);

// Closed form n+ = C(n-1,k), n0 = 0, n- = C(n-1,k-1).
ExactInertia kneser_inertia(long n, long k);

// The common value s+ = s- = (1/2) C(2k+2j,k) C(k+2j,k) of K(2k+2j,k),
// for k > j >= 1.
mpz_class kneser_symmetry_value(long k, long j);

// Collinearity-graph spectrum of a generalised quadrangle of order (s,t):
// n = (s+1)(st+1), k = s(t+1), r = s-1, a = -t-1, f = s(s+1)t(t+1)/(s+t),
// g = s^2(st+1)/(s+t).  Throws std::domain_error when s+t fails to divide
// either multiplicity numerator (not a valid GQ parameter set).
SrgSpectrumParams gq_spectrum(long s, long t);

// Taylor graph T_q on q^3 vertices (q odd, >= 3): k = (q-1)(q^2+1)/2,
// r = (q-1)/2, s = -(q^2+1)/2, f = (q-1)(q^2+1), g = q(q-1).
SrgSpectrumParams taylor_spectrum(long q);

// Eigenvalues scaled by t with (t-1)*n extra zeros.
RationalSpectrum blowup_spectrum(const RationalSpectrum& spec, long t);

// sum_{i=0}^{n} (-1)^i C(n,i) (x-i)^n; equals n! for every x.
mpq_class ruiz_identity(long n, const mpq_class& x);
// sum_{i=0}^{n} (-1)^i C(n,i) (x-i)^{n-j} for 1 <= j <= n; equals 0.
mpq_class ruiz_derivative_identity(long n, const mpq_class& x, long j);

// P(a) = C(a,2j)^2 + C(a-1,2j)^2 with generalized binomials.
mpq_class p_polynomial(long j, const mpz_class& a);
// Coefficients c_0..c_{4j} of Q(y) = 2 (1/(2j)!)^2 y^2 (y^2+j^2)
// prod_{m=1}^{j-1} (y^2-m^2)^2, satisfying P(a) = Q(a-j); every odd
// coefficient is zero.
std::vector<mpq_class> q_coefficients(long j);

struct KneserSymmetryWitness {
  bool equal;            // s_plus == s_minus
  mpz_class s_plus, s_minus;
  bool identity_zero;    // alternating-sum identity evaluates to 0
};

// Certifies s+ = s- for K(2k+2j,k), k > j >= 1, two independent ways: exact
// energies from the closed-form spectrum, and the alternating-sum identity
// sum_{i=0}^{2k+2j} (-1)^i C(2k+2j,i) P(k+2j-i) = 0.
KneserSymmetryWitness verify_kneser_symmetry(long k, long j);

}  // namespace sqen
