// Packed codeword arithmetic used by the enumeration paths. Internal header.
#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <span>
#include <vector>

#include "designcodes/finite_field.hpp"

namespace dcodes::detail {

using Word = std::uint64_t;

inline std::size_t words_for_bits(std::size_t n) { return (n + 63) / 64; }

/// GF(2^s): one bit plane per digit; addition is XOR.
struct BinaryKernel {
  std::size_t n = 0;
  std::uint32_t s = 1;
  std::size_t plane = 0;  // words per digit plane

  BinaryKernel(std::size_t n_, std::uint32_t s_, std::uint32_t /*p*/) : n(n_), s(s_), plane(words_for_bits(n_)) {}

  std::size_t words() const { return s * plane; }

  void pack(std::span<const Elem> v, Word* out) const {
    std::memset(out, 0, words() * sizeof(Word));
    for (std::size_t j = 0; j < n; ++j)
      for (std::uint32_t d = 0; d < s; ++d)
        if ((v[j] >> d) & 1) out[d * plane + j / 64] |= Word{1} << (j % 64);
  }

  void add(Word* acc, const Word* x) const {
    const std::size_t w = words();
    for (std::size_t i = 0; i < w; ++i) acc[i] ^= x[i];
  }

  unsigned weight(const Word* acc) const {
    unsigned w = 0;
    for (std::size_t i = 0; i < plane; ++i) {
      Word nz = acc[i];
      for (std::uint32_t d = 1; d < s; ++d) nz |= acc[d * plane + i];
      w += static_cast<unsigned>(std::popcount(nz));
    }
    return w;
  }

  void support(const Word* acc, Word* out) const {
    for (std::size_t i = 0; i < plane; ++i) {
      Word nz = acc[i];
      for (std::uint32_t d = 1; d < s; ++d) nz |= acc[d * plane + i];
      out[i] = nz;
    }
  }
};

/// GF(3^s): each digit plane is a (lo, hi) pair of bit vectors with
/// 0 = (0,0), 1 = (1,0), 2 = (0,1).
struct TernaryKernel {
  std::size_t n = 0;
  std::uint32_t s = 1;
  std::size_t plane = 0;

  TernaryKernel(std::size_t n_, std::uint32_t s_, std::uint32_t /*p*/) : n(n_), s(s_), plane(words_for_bits(n_)) {}

  std::size_t words() const { return 2 * s * plane; }

  void pack(std::span<const Elem> v, Word* out) const {
    std::memset(out, 0, words() * sizeof(Word));
    for (std::size_t j = 0; j < n; ++j) {
      Elem e = v[j];
      for (std::uint32_t d = 0; d < s; ++d, e /= 3) {
        const Elem digit = e % 3;
        if (digit == 0) continue;
        const std::size_t base = 2 * d * plane;
        out[base + (digit == 1 ? 0 : plane) + j / 64] |= Word{1} << (j % 64);
      }
    }
  }

  void add(Word* acc, const Word* x) const {
    for (std::uint32_t d = 0; d < s; ++d) {
      Word* alo = acc + 2 * d * plane;
      Word* ahi = alo + plane;
      const Word* blo = x + 2 * d * plane;
      const Word* bhi = blo + plane;
      for (std::size_t i = 0; i < plane; ++i) {
        const Word a0 = alo[i], a1 = ahi[i], b0 = blo[i], b1 = bhi[i];
        const Word za = ~(a0 | a1), zb = ~(b0 | b1);
        alo[i] = (a0 & zb) | (za & b0) | (a1 & b1);
        ahi[i] = (a1 & zb) | (za & b1) | (a0 & b0);
      }
    }
  }

  unsigned weight(const Word* acc) const {
    unsigned w = 0;
    for (std::size_t i = 0; i < plane; ++i) {
      Word nz = 0;
      for (std::uint32_t d = 0; d < s; ++d) nz |= acc[2 * d * plane + i] | acc[(2 * d + 1) * plane + i];
      w += static_cast<unsigned>(std::popcount(nz));
    }
    return w;
  }

  void support(const Word* acc, Word* out) const {
    for (std::size_t i = 0; i < plane; ++i) {
      Word nz = 0;
      for (std::uint32_t d = 0; d < s; ++d) nz |= acc[2 * d * plane + i] | acc[(2 * d + 1) * plane + i];
      out[i] = nz;
    }
  }
};

/// Any other characteristic: one byte per digit, digit planes of n bytes
/// padded to whole words.
struct ByteKernel {
  std::size_t n = 0;
  std::uint32_t s = 1;
  std::uint8_t p = 0;
  std::size_t plane_bytes = 0;

  ByteKernel(std::size_t n_, std::uint32_t s_, std::uint32_t p_)
      : n(n_), s(s_), p(static_cast<std::uint8_t>(p_)), plane_bytes((n_ + 7) / 8 * 8) {}

  std::size_t words() const { return s * plane_bytes / 8; }

  void pack(std::span<const Elem> v, Word* out) const {
    std::memset(out, 0, words() * sizeof(Word));
    auto* b = reinterpret_cast<std::uint8_t*>(out);
    for (std::size_t j = 0; j < n; ++j) {
      Elem e = v[j];
      for (std::uint32_t d = 0; d < s; ++d, e /= p) b[d * plane_bytes + j] = static_cast<std::uint8_t>(e % p);
    }
  }

  void add(Word* acc, const Word* x) const {
    auto* a = reinterpret_cast<std::uint8_t*>(acc);
    const auto* b = reinterpret_cast<const std::uint8_t*>(x);
    const std::size_t total = s * plane_bytes;
    const std::uint8_t pp = p;
    for (std::size_t i = 0; i < total; ++i) {
      const std::uint8_t t = static_cast<std::uint8_t>(a[i] + b[i]);
      a[i] = t >= pp ? static_cast<std::uint8_t>(t - pp) : t;
    }
  }

  unsigned weight(const Word* acc) const {
    const auto* a = reinterpret_cast<const std::uint8_t*>(acc);
    unsigned w = 0;
    if (s == 1) {
      for (std::size_t j = 0; j < n; ++j) w += a[j] != 0;
      return w;
    }
    for (std::size_t j = 0; j < n; ++j) {
      std::uint8_t nz = 0;
      for (std::uint32_t d = 0; d < s; ++d) nz |= a[d * plane_bytes + j];
      w += nz != 0;
    }
    return w;
  }

  void support(const Word* acc, Word* out) const {
    const auto* a = reinterpret_cast<const std::uint8_t*>(acc);
    std::memset(out, 0, words_for_bits(n) * sizeof(Word));
    for (std::size_t j = 0; j < n; ++j) {
      std::uint8_t nz = 0;
      for (std::uint32_t d = 0; d < s; ++d) nz |= a[d * plane_bytes + j];
      if (nz) out[j / 64] |= Word{1} << (j % 64);
    }
  }
};

/// Calls `fn(kernel)` with the kernel suited to characteristic p.
template <class Fn>
decltype(auto) with_kernel(std::size_t n, std::uint32_t p, std::uint32_t s, Fn&& fn) {
  if (p == 2) return fn(BinaryKernel(n, s, p));
  if (p == 3) return fn(TernaryKernel(n, s, p));
  if (p >= 128) throw BadParams("codeword enumeration supports characteristic below 128");
  return fn(ByteKernel(n, s, p));
}

/// Packed vectors stored contiguously.
template <class K>
struct PackedSet {
  const K* kernel;
  std::vector<Word> data;
  std::size_t count = 0;

  explicit PackedSet(const K& k) : kernel(&k) {}

  void push(std::span<const Elem> v) {
    data.resize((count + 1) * kernel->words());
    kernel->pack(v, data.data() + count * kernel->words());
    ++count;
  }
  const Word* operator[](std::size_t i) const { return data.data() + i * kernel->words(); }
};

}  // namespace dcodes::detail
