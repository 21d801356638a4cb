#include "macfrob/bigint.hpp"

namespace macfrob {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;  // exact at every step
  }
  return r;
}

BigInt dim_graded_component(int n, int j) {
  if (n < 1) throw std::invalid_argument("arity must be positive");
  if (j < 0) throw std::invalid_argument("degree must be non-negative");
  return binomial(static_cast<std::int64_t>(n) - 1 + j, n - 1);
}

std::optional<std::int64_t> to_int64(const BigInt& v) {
  if (v < std::numeric_limits<std::int64_t>::min() || v > std::numeric_limits<std::int64_t>::max())
    return std::nullopt;
  return static_cast<std::int64_t>(v);
}

std::int64_t to_int64_checked(const BigInt& v, const std::string& what) {
  auto r = to_int64(v);
  if (!r) throw std::overflow_error(what + " does not fit in 64 bits: " + v.str());
  return *r;
}

}  // namespace macfrob
