#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace macfrob {

bool is_prime(std::uint64_t n);

/// Which exact field a computation runs over. Generic statements are
/// sampled over a large prime field by default; rationals are available
/// for small instances.
struct FieldSpec {
  enum class Kind { Prime, Rationals };

  Kind kind = Kind::Prime;
  std::uint32_t p = 32003;

  static FieldSpec prime(std::uint32_t p);
  static FieldSpec rationals() { return FieldSpec{Kind::Rationals, 0}; }
  static FieldSpec parse(std::string_view text);  // "32003" or "Q"

  bool is_prime_field() const { return kind == Kind::Prime; }
  std::string str() const;

  bool operator==(const FieldSpec&) const = default;
};

/// GF(p) with machine-word residues; p < 2^31 so products fit in 64 bits.
class PrimeField {
 public:
  using Elem = std::uint32_t;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }
  FieldSpec spec() const { return FieldSpec::prime(p_); }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }

  Elem add(Elem a, Elem b) const {
    std::uint64_t s = static_cast<std::uint64_t>(a) + b;
    return static_cast<Elem>(s >= p_ ? s - p_ : s);
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : static_cast<Elem>(a + p_ - b); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Elem inv(Elem a) const;

  Elem from_int64(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
  }
  Elem parse(std::string_view text) const;
  std::string str(Elem a) const { return std::to_string(a); }

 private:
  std::uint32_t p_;
};

/// Exact rational arithmetic for small instances.
class RationalField {
 public:
  using Elem = boost::multiprecision::cpp_rational;

  FieldSpec spec() const { return FieldSpec::rationals(); }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(const Elem& a) const { return a == 0; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const;

  Elem from_int64(std::int64_t v) const { return Elem(v); }
  Elem parse(std::string_view text) const;  // "a" or "a/b"
  std::string str(const Elem& a) const;
};

}  // namespace macfrob
