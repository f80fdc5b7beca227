#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace parith {

// Exact unsigned integer, base-1e9 limbs, little-endian. Covers the few
// operations the formula codes need: Horner accumulation, comparison and
// decimal text.
class BigNat {
 public:
  BigNat() = default;
  BigNat(std::uint64_t v);  // NOLINT(google-explicit-constructor)

  static BigNat from_decimal(const std::string& text);
  std::string to_decimal() const;

  bool is_zero() const { return limbs_.empty(); }
  // Returns the value when it fits in 64 bits.
  bool fits_u64(std::uint64_t& out) const;

  BigNat& mul_add_small(std::uint32_t mul, std::uint32_t add);
  BigNat& operator+=(const BigNat& other);

  friend BigNat operator+(BigNat a, const BigNat& b) { a += b; return a; }

  friend std::strong_ordering operator<=>(const BigNat& a, const BigNat& b);
  friend bool operator==(const BigNat& a, const BigNat& b) { return a.limbs_ == b.limbs_; }

 private:
  static constexpr std::uint64_t kBase = 1000000000ull;
  std::vector<std::uint32_t> limbs_;

  void trim();
};

}  // namespace parith
