#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lcert {

/// A certificate is a bit string of at most 64 bits, stored big-endian in the
/// low `size()` bits of a machine word. Bit 0 of the string is the most
/// significant stored bit.
class Certificate {
 public:
  static constexpr std::size_t kMaxBits = 64;

  constexpr Certificate() = default;

  /// `value` rendered on exactly `width` bits. Throws if it does not fit.
  static Certificate from_uint(std::uint64_t value, std::size_t width);
  /// Shortest rendering of `value`; zero is the empty string.
  static Certificate minimal(std::uint64_t value) {
    return from_uint(value, static_cast<std::size_t>(std::bit_width(value)));
  }
  /// Parses a string of '0'/'1' characters.
  static Certificate from_string(std::string_view text);

  constexpr std::size_t size() const { return size_; }
  constexpr bool empty() const { return size_ == 0; }
  /// The whole string read as an unsigned big-endian integer.
  constexpr std::uint64_t value() const { return bits_; }
  bool bit(std::size_t index) const {
    return ((bits_ >> (size_ - 1 - index)) & 1U) != 0;
  }

  std::string to_string() const;

  friend constexpr bool operator==(const Certificate&, const Certificate&) = default;
  friend constexpr auto operator<=>(const Certificate& a, const Certificate& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  constexpr Certificate(std::uint64_t bits, std::uint8_t size) : bits_(bits), size_(size) {}

  std::uint64_t bits_ = 0;
  std::uint8_t size_ = 0;
};

using Assignment = std::vector<Certificate>;

/// Largest certificate length in an assignment.
inline std::size_t max_cert_bits(const Assignment& p) {
  std::size_t best = 0;
  for (const auto& c : p) best = std::max(best, c.size());
  return best;
}

/// Number of bits needed to write every value in [0, max_value].
constexpr std::size_t bits_for(std::uint64_t max_value) {
  return static_cast<std::size_t>(std::bit_width(max_value));
}

/// Appends fixed-width unsigned fields to a certificate.
class BitWriter {
 public:
  BitWriter& put(std::uint64_t value, std::size_t width);
  Certificate finish() const { return Certificate::from_uint(bits_, size_); }

 private:
  std::uint64_t bits_ = 0;
  std::size_t size_ = 0;
};

/// Reads fixed-width fields back out of a certificate. A read past the end
/// yields nullopt, which callers treat as a malformed certificate.
class BitReader {
 public:
  explicit BitReader(const Certificate& cert) : cert_(cert) {}

  std::optional<std::uint64_t> take(std::size_t width) {
    if (width > remaining()) return std::nullopt;
    std::uint64_t out = 0;
    if (width > 0) {
      const std::size_t shift = cert_.size() - pos_ - width;
      const std::uint64_t mask = width == 64 ? ~0ULL : ((1ULL << width) - 1);
      out = (cert_.value() >> shift) & mask;
    }
    pos_ += width;
    return out;
  }
  std::size_t remaining() const { return cert_.size() - pos_; }

 private:
  const Certificate& cert_;
  std::size_t pos_ = 0;
};

}  // namespace lcert

template <>
struct std::hash<lcert::Certificate> {
  std::size_t operator()(const lcert::Certificate& c) const noexcept {
    return std::hash<std::uint64_t>{}(c.value() * 0x9E3779B97F4A7C15ULL ^ c.size());
  }
};
