#include "dwkit/phase.hpp"

#include <numbers>
#include <numeric>

#include "dwkit/error.hpp"

namespace dwkit {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw DomainError("phase arithmetic overflow");
  }
  return out;
}

}  // namespace

RationalPhase::RationalPhase(std::int64_t numerator, std::int64_t denominator) {
  if (denominator <= 0) {
    throw DomainError("phase denominator must be positive");
  }
  num_ = floor_mod(numerator, denominator);
  std::int64_t g = std::gcd(num_, denominator);
  if (g == 0) g = denominator;
  num_ /= g;
  den_ = denominator / g;
  if (num_ == 0) den_ = 1;
}

double RationalPhase::turns() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::complex<double> RationalPhase::value() const {
  if (num_ == 0) return {1.0, 0.0};
  // Exact values on the axes avoid sin(pi) ~ 1e-16 residue.
  if (den_ == 2) return {-1.0, 0.0};
  if (den_ == 4) return num_ == 1 ? std::complex<double>{0.0, 1.0} : std::complex<double>{0.0, -1.0};
  return std::polar(1.0, 2.0 * std::numbers::pi * turns());
}

RationalPhase RationalPhase::operator-() const { return RationalPhase(-num_, den_); }

RationalPhase& RationalPhase::operator+=(const RationalPhase& other) {
  std::int64_t l = std::lcm(den_, other.den_);
  std::int64_t n = floor_mod(checked_mul(num_, l / den_), l) + floor_mod(checked_mul(other.num_, l / other.den_), l);
  *this = RationalPhase(n, l);
  return *this;
}

RationalPhase& RationalPhase::operator-=(const RationalPhase& other) { return *this += -other; }

RationalPhase& RationalPhase::operator*=(std::int64_t factor) {
  std::int64_t n = checked_mul(floor_mod(factor, den_), num_);
  *this = RationalPhase(n, den_);
  return *this;
}

bool operator<(const RationalPhase& a, const RationalPhase& b) {
  return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
}

std::ostream& operator<<(std::ostream& os, const RationalPhase& phase) {
  return os << phase.numerator() << '/' << phase.denominator();
}

void PhaseMultiset::add(const RationalPhase& phase, std::int64_t multiplicity) {
  if (multiplicity == 0) return;
  counts_[phase] += multiplicity;
  size_ += multiplicity;
}

void PhaseMultiset::merge(const PhaseMultiset& other, std::int64_t scale) {
  for (const auto& [phase, count] : other.counts_) add(phase, count * scale);
}

PhaseMultiset PhaseMultiset::convolve(const PhaseMultiset& other) const {
  PhaseMultiset out;
  for (const auto& [a, ca] : counts_) {
    for (const auto& [b, cb] : other.counts_) out.add(a + b, ca * cb);
  }
  return out;
}

std::complex<double> PhaseMultiset::sum() const {
  std::complex<double> total{0.0, 0.0};
  for (const auto& [phase, count] : counts_) {
    total += static_cast<double>(count) * phase.value();
  }
  return total;
}

}  // namespace dwkit
