#pragma once

#include "macfrob/errors.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace macfrob {

using Exponent = std::int16_t;

/// A monomial in a fixed number of variables, stored as its exponent
/// vector with the total degree cached. Immutable after construction.
class Monomial {
 public:
  explicit Monomial(std::vector<Exponent> exponents);

  static Monomial one(int arity);
  static Monomial variable(int arity, int var, Exponent power = 1);  // var is 0-based

  int arity() const noexcept { return static_cast<int>(exps_.size()); }
  int degree() const noexcept { return degree_; }
  Exponent exponent(int var) const { return exps_.at(static_cast<std::size_t>(var)); }
  std::span<const Exponent> exponents() const noexcept { return exps_; }

  /// Exponentwise sum. Throws std::invalid_argument on arity mismatch.
  Monomial operator*(const Monomial& rhs) const;

  bool divisible_by(int var) const { return exponent(var) > 0; }

  /// m * x_to / x_from; requires x_from | m. The Borel raising move is
  /// with_move(from, to) for to < from, the lowering move the reverse.
  Monomial with_move(int from_var, int to_var) const;

  bool operator==(const Monomial& rhs) const noexcept { return exps_ == rhs.exps_; }

  /// Canonical text form: `x1^a1*x2^a2*...` with zero exponents omitted,
  /// `^1` omitted, and `1` for the constant monomial.
  std::string str() const;

  std::size_t hash() const noexcept;

 private:
  std::vector<Exponent> exps_;
  int degree_ = 0;
};

/// Compact display using the aliases x,y,z,w; only valid for arity <= 4.
std::string format_alias(const Monomial& m);

/// Parses the canonical form as well as the x,y,z,w alias form
/// (`x^2z^2`, `xy^3z`); `*` and whitespace are optional separators, a
/// bare variable means exponent 1, and digits directly after `x` select
/// the variable index (`x12` is the twelfth variable, never x1^2).
Monomial parse_monomial(std::string_view text, int arity);

/// Term orders on monomials of a common degree, variables x1 > x2 > ... > xn.
///
/// Comparison rules (a, b of equal degree, e = exponents(a) - exponents(b)):
///   Lex:       a > b  iff the first nonzero entry of e is positive.
///   RevLex:    a > b  iff the last nonzero entry of e is negative.
///   DegRevLex: degree first, RevLex tie-break; on a single graded
///              component this coincides with RevLex.
enum class TermOrder { Lex, RevLex, DegRevLex };

std::string_view term_order_name(TermOrder order);
TermOrder parse_term_order(std::string_view name);

/// Strict total order within a graded component. Throws
/// std::invalid_argument if degrees or arities differ.
std::strong_ordering compare(TermOrder order, const Monomial& a, const Monomial& b);

inline bool order_greater(TermOrder o, const Monomial& a, const Monomial& b) {
  return compare(o, a, b) == std::strong_ordering::greater;
}
inline bool order_less(TermOrder o, const Monomial& a, const Monomial& b) {
  return compare(o, a, b) == std::strong_ordering::less;
}

/// All monomials of degree d in n variables, sorted descending by
/// `order`; the list has C(n+d-1, d) entries.
std::vector<Monomial> enumerate_monomials(int n, int d, TermOrder order = TermOrder::Lex);

/// The monomial basis of one graded component S_d, interned to dense
/// ranks 0..dim-1 in descending `order`; matrices index their columns
/// by these ranks.
class GradedBasis {
 public:
  GradedBasis(int n, int d, TermOrder order = TermOrder::Lex,
              std::int64_t size_cap = 10'000'000);

  int arity() const noexcept { return n_; }
  int degree() const noexcept { return d_; }
  TermOrder order() const noexcept { return order_; }
  std::size_t dimension() const noexcept { return monomials_.size(); }
  const Monomial& monomial(std::size_t rank) const { return monomials_.at(rank); }
  const std::vector<Monomial>& monomials() const noexcept { return monomials_; }

  /// Rank of a degree-d monomial (binary search); throws if m is not a
  /// member of this component.
  std::size_t rank_of(const Monomial& m) const;

 private:
  int n_;
  int d_;
  TermOrder order_;
  std::vector<Monomial> monomials_;
};

using BasisPtr = std::shared_ptr<const GradedBasis>;

BasisPtr make_basis(int n, int d, TermOrder order = TermOrder::Lex,
                    std::int64_t size_cap = 10'000'000);

/// A set of distinct monomials of one degree; dimension = cardinality.
/// Members are kept sorted descending under Lex, so equal spaces compare
/// equal memberwise.
class MonomialSpace {
 public:
  MonomialSpace(int n, int d, std::vector<Monomial> members);

  int arity() const noexcept { return n_; }
  int degree() const noexcept { return d_; }
  std::size_t dim() const noexcept { return members_.size(); }
  const std::vector<Monomial>& members() const noexcept { return members_; }
  bool contains(const Monomial& m) const;

  bool operator==(const MonomialSpace& rhs) const noexcept {
    return n_ == rhs.n_ && d_ == rhs.d_ && members_ == rhs.members_;
  }

 private:
  int n_;
  int d_;
  std::vector<Monomial> members_;  // descending Lex
};

}  // namespace macfrob

template <>
struct std::hash<macfrob::Monomial> {
  std::size_t operator()(const macfrob::Monomial& m) const noexcept { return m.hash(); }
};
