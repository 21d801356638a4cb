#include "macfrob/field.hpp"

#include <stdexcept>

namespace macfrob {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("field modulus must be prime: " + std::to_string(p));
  if (p >= (1u << 31)) throw std::invalid_argument("field modulus must be below 2^31");
  return FieldSpec{Kind::Prime, p};
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q" || text == "q" || text == "rationals") return rationals();
  try {
    unsigned long v = std::stoul(std::string(text));
    return prime(static_cast<std::uint32_t>(v));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("field must be a prime number or Q: " + std::string(text));
  }
}

std::string FieldSpec::str() const {
  return kind == Kind::Rationals ? "Q" : std::to_string(p);
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw std::invalid_argument("modulus must be prime: " + std::to_string(p));
  if (p >= (1u << 31)) throw std::invalid_argument("modulus must be below 2^31");
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  // Fermat: a^(p-2) mod p.
  std::uint64_t base = a, result = 1, e = p_ - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<Elem>(result);
}

PrimeField::Elem PrimeField::parse(std::string_view text) const {
  std::size_t pos = 0;
  long long v = std::stoll(std::string(text), &pos);
  if (pos != text.size()) throw std::invalid_argument("bad field element: " + std::string(text));
  return from_int64(v);
}

RationalField::Elem RationalField::inv(const Elem& a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return 1 / a;
}

RationalField::Elem RationalField::parse(std::string_view text) const {
  std::string s(text);
  auto slash = s.find('/');
  using Int = boost::multiprecision::cpp_int;
  if (slash == std::string::npos) return Elem(Int(s));
  Int num(s.substr(0, slash));
  Int den(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: " + s);
  return Elem(num) / Elem(den);
}

std::string RationalField::str(const Elem& a) const {
  return a.str();
}

}  // namespace macfrob
