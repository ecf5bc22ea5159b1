#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace dcodes {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt ipow(const BigInt& base, unsigned exp) { return boost::multiprecision::pow(base, exp); }

inline BigInt ipow(std::uint64_t base, unsigned exp) { return ipow(BigInt(base), exp); }

/// Binomial coefficient C(n, k); zero when k < 0 or k > n or n < 0.
BigInt binomial(std::int64_t n, std::int64_t k);

}  // namespace dcodes
