#ifndef DWKIT_NUMBER_THEORY_HPP
#define DWKIT_NUMBER_THEORY_HPP

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "dwkit/phase.hpp"

namespace dwkit {

/// q^{-1} mod p in [0, p). Throws DomainError unless gcd(q, p) = 1.
std::int64_t mod_inverse(std::int64_t q, std::int64_t p);

bool is_prime(std::int64_t n);

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

/// (r | n) for an odd prime n not dividing r.
int legendre_symbol(std::int64_t r, std::int64_t n);

/// The exact terms r l^2 / n, l = 1..n, of the quadratic Gauss sum.
PhaseMultiset gauss_sum_terms(std::int64_t r, std::int64_t n);

/// G(r, n) by direct summation. Requires gcd(r, n) = 1.
std::complex<double> gauss_sum(std::int64_t r, std::int64_t n);

/**
 * G(r, n) in closed form: Dirichlet's four-case evaluation when r = 1 mod n,
 * otherwise the Legendre-symbol formula for odd prime n. Throws DomainError
 * outside those two cases.
 */
std::complex<double> gauss_sum_closed(std::int64_t r, std::int64_t n);

}  // namespace dwkit

#endif  // DWKIT_NUMBER_THEORY_HPP
