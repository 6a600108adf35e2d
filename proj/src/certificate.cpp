#include "lcert/certificate.hpp"

#include <stdexcept>

namespace lcert {

Certificate Certificate::from_uint(std::uint64_t value, std::size_t width) {
  if (width > kMaxBits) throw std::length_error("certificate longer than 64 bits");
  if (width < 64 && (value >> width) != 0) {
    throw std::invalid_argument("value " + std::to_string(value) + " does not fit in " +
                                std::to_string(width) + " bits");
  }
  return Certificate(value, static_cast<std::uint8_t>(width));
}

Certificate Certificate::from_string(std::string_view text) {
  if (text.size() > kMaxBits) throw std::length_error("certificate longer than 64 bits");
  std::uint64_t bits = 0;
  for (char ch : text) {
    if (ch != '0' && ch != '1') throw std::invalid_argument("certificate must be a 0/1 string");
    bits = (bits << 1) | static_cast<std::uint64_t>(ch == '1');
  }
  return Certificate(bits, static_cast<std::uint8_t>(text.size()));
}

std::string Certificate::to_string() const {
  std::string out(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (bit(i)) out[i] = '1';
  }
  return out;
}

BitWriter& BitWriter::put(std::uint64_t value, std::size_t width) {
  if (size_ + width > Certificate::kMaxBits) throw std::length_error("certificate longer than 64 bits");
  if (width < 64 && (value >> width) != 0) {
    throw std::invalid_argument("field value " + std::to_string(value) + " does not fit in " +
                                std::to_string(width) + " bits");
  }
  bits_ = width == 64 ? value : ((bits_ << width) | value);
  size_ += width;
  return *this;
}

}  // namespace lcert
