#ifndef DWKIT_COCYCLES_HPP
#define DWKIT_COCYCLES_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dwkit/abelian.hpp"
#include "dwkit/phase.hpp"

namespace dwkit {

/**
 * A U(1)-valued group cochain A^d -> Q/Z with trivial action.
 *
 * Builtins are formulas evaluated against whatever group is passed in;
 * table cochains are bound to one group. Tables are indexed by
 * sum_j index(g_j) |A|^j.
 */
class GroupCochain {
 public:
  using Rule = std::function<RationalPhase(const FiniteAbelianGroup&, std::span<const GroupElement>)>;

  GroupCochain(int degree, std::string name, Rule rule);

  static GroupCochain trivial(int degree);
  /// k a (b + c - [b + c]) on coordinate 0 read in U(1).
  static GroupCochain omega(std::int64_t k);
  /// l a_1 (b_2 + c_2 - [b_2 + c_2]); needs at least two factors.
  static GroupCochain psi(std::int64_t l);
  /// a_i b_j / gcd(d_i, d_j), a degree-2 bicharacter.
  static GroupCochain bicharacter(std::size_t i, std::size_t j, std::int64_t multiple = 1);
  static GroupCochain table(FiniteAbelianGroup group, int degree, std::vector<RationalPhase> values);

  int degree() const { return degree_; }
  const std::string& name() const { return name_; }
  /// The group a table cochain is bound to; empty for formula cochains.
  const std::optional<FiniteAbelianGroup>& group() const { return group_; }

  RationalPhase operator()(const FiniteAbelianGroup& a, std::span<const GroupElement> args) const;
  RationalPhase operator()(const FiniteAbelianGroup& a, std::initializer_list<GroupElement> args) const {
    return (*this)(a, std::span<const GroupElement>(args.begin(), args.size()));
  }

  /// Dense table of all |A|^d values.
  GroupCochain materialize(const FiniteAbelianGroup& a) const;
  /// Values in table order (materializing when needed).
  std::vector<RationalPhase> values(const FiniteAbelianGroup& a) const;

 private:
  int degree_;
  std::string name_;
  Rule rule_;
  std::optional<FiniteAbelianGroup> group_;
};

/// Standard bar-complex coboundary with trivial coefficients.
GroupCochain coboundary(const GroupCochain& w);

/// Pointwise sum of phases (product of U(1) values).
GroupCochain product(const GroupCochain& x, const GroupCochain& y);
/// Pointwise multiple (k-th power of U(1) values).
GroupCochain power(const GroupCochain& x, std::int64_t k);

/// (w \ a)(g_1..g_n) = sum_i (-1)^{n-i} w(g_1..g_i, a, g_{i+1}..g_n).
GroupCochain slant(const GroupCochain& w, const GroupElement& a);

/// Exhaustive check that the cochain is identically zero on A.
bool is_zero(const GroupCochain& w, const FiniteAbelianGroup& a);
bool is_cocycle(const GroupCochain& w, const FiniteAbelianGroup& a);
/// Zero whenever some argument is the identity.
bool is_normalized(const GroupCochain& w, const FiniteAbelianGroup& a);
bool equal_on(const GroupCochain& x, const GroupCochain& y, const FiniteAbelianGroup& a);

/// Table with values in (1/60)Z/Z drawn from mt19937_64(seed).
GroupCochain random_cochain(const FiniteAbelianGroup& a, int degree, std::uint64_t seed);
/// Coboundary of random_cochain(a, degree - 1, seed).
GroupCochain random_coboundary(const FiniteAbelianGroup& a, int degree, std::uint64_t seed);

/// Calls fn on every tuple of A^degree in table order.
void for_each_tuple(const FiniteAbelianGroup& a, int degree,
                    const std::function<void(std::span<const GroupElement>)>& fn);

}  // namespace dwkit

#endif  // DWKIT_COCYCLES_HPP
