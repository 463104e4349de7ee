#include "dwkit/number_theory.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "dwkit/error.hpp"

namespace dwkit {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) {
  __int128 result = 1 % m;
  __int128 b = floor_mod(base, m);
  while (exp > 0) {
    if (exp & 1) result = (result * b) % m;
    b = (b * b) % m;
    exp >>= 1;
  }
  return static_cast<std::int64_t>(result);
}

}  // namespace

std::int64_t mod_inverse(std::int64_t q, std::int64_t p) {
  if (p < 1) throw DomainError("modulus must be >= 1");
  if (std::gcd(q, p) != 1) {
    throw DomainError(std::to_string(q) + " is not invertible modulo " + std::to_string(p));
  }
  // Extended Euclid on (q mod p, p).
  std::int64_t old_r = floor_mod(q, p), r = p;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t quotient = old_r / r;
    std::int64_t tmp = old_r - quotient * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quotient * s;
    old_s = s;
    s = tmp;
  }
  return floor_mod(old_s, p);
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  if (n < 1) throw DomainError("factorize expects a positive integer");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int legendre_symbol(std::int64_t r, std::int64_t n) {
  if (n == 2 || !is_prime(n)) throw DomainError(std::to_string(n) + " is not an odd prime");
  if (floor_mod(r, n) == 0) throw DomainError(std::to_string(n) + " divides " + std::to_string(r));
  // Euler's criterion.
  return pow_mod(r, (n - 1) / 2, n) == 1 ? 1 : -1;
}

PhaseMultiset gauss_sum_terms(std::int64_t r, std::int64_t n) {
  if (n < 1) throw DomainError("Gauss sum modulus must be >= 1");
  if (std::gcd(r, n) != 1) throw DomainError("Gauss sum needs gcd(r, N) = 1");
  PhaseMultiset terms;
  for (std::int64_t l = 1; l <= n; ++l) {
    std::int64_t sq = static_cast<std::int64_t>((static_cast<__int128>(l) * l) % n);
    terms.add(RationalPhase(static_cast<std::int64_t>((static_cast<__int128>(floor_mod(r, n)) * sq) % n), n));
  }
  return terms;
}

std::complex<double> gauss_sum(std::int64_t r, std::int64_t n) { return gauss_sum_terms(r, n).sum(); }

std::complex<double> gauss_sum_closed(std::int64_t r, std::int64_t n) {
  if (n < 1) throw DomainError("Gauss sum modulus must be >= 1");
  if (std::gcd(r, n) != 1) throw DomainError("Gauss sum needs gcd(r, N) = 1");
  const double root = std::sqrt(static_cast<double>(n));
  if (floor_mod(r, n) == 1 % n) {
    switch (n % 4) {
      case 0: return {root, root};
      case 1: return {root, 0.0};
      case 2: return {0.0, 0.0};
      default: return {0.0, root};
    }
  }
  if (n != 2 && is_prime(n)) {
    const double sign = legendre_symbol(r, n);
    if (n % 4 == 1) return {sign * root, 0.0};
    return {0.0, sign * root};
  }
  throw DomainError("no closed form for G(" + std::to_string(r) + ", " + std::to_string(n) + ")");
}

}  // namespace dwkit
