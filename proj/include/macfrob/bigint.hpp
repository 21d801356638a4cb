#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace macfrob {

using BigInt = boost::multiprecision::cpp_int;

/// Exact binomial coefficient C(n, k); zero when k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

/// dim S_j for the polynomial ring in n variables: C(n-1+j, n-1).
BigInt dim_graded_component(int n, int j);

/// Narrow a BigInt to int64 if it fits.
std::optional<std::int64_t> to_int64(const BigInt& v);

/// Narrow or throw; used where the surrounding caps guarantee the fit.
std::int64_t to_int64_checked(const BigInt& v, const std::string& what);

}  // namespace macfrob
