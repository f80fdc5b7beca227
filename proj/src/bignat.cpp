#include "parith/bignat.hpp"

#include <algorithm>
#include <stdexcept>

namespace parith {

BigNat::BigNat(std::uint64_t v) {
  while (v != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(v % kBase));
    v /= kBase;
  }
}

void BigNat::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigNat BigNat::from_decimal(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty decimal literal");
  BigNat out;
  for (char c : text) {
    if (c < '0' || c > '9') throw std::invalid_argument("bad decimal digit");
    out.mul_add_small(10, static_cast<std::uint32_t>(c - '0'));
  }
  return out;
}

std::string BigNat::to_decimal() const {
  if (limbs_.empty()) return "0";
  std::string out = std::to_string(limbs_.back());
  for (auto it = limbs_.rbegin() + 1; it != limbs_.rend(); ++it) {
    std::string part = std::to_string(*it);
    out += std::string(9 - part.size(), '0') + part;
  }
  return out;
}

bool BigNat::fits_u64(std::uint64_t& out) const {
  if (limbs_.size() > 3) return false;
  unsigned __int128 acc = 0;
  for (auto it = limbs_.rbegin(); it != limbs_.rend(); ++it) acc = acc * kBase + *it;
  if (acc > static_cast<unsigned __int128>(UINT64_MAX)) return false;
  out = static_cast<std::uint64_t>(acc);
  return true;
}

BigNat& BigNat::mul_add_small(std::uint32_t mul, std::uint32_t add) {
  std::uint64_t carry = add;
  for (auto& limb : limbs_) {
    std::uint64_t v = static_cast<std::uint64_t>(limb) * mul + carry;
    limb = static_cast<std::uint32_t>(v % kBase);
    carry = v / kBase;
  }
  while (carry != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(carry % kBase));
    carry /= kBase;
  }
  trim();
  return *this;
}

BigNat& BigNat::operator+=(const BigNat& other) {
  if (other.limbs_.size() > limbs_.size()) limbs_.resize(other.limbs_.size(), 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t v = carry + limbs_[i] + (i < other.limbs_.size() ? other.limbs_[i] : 0);
    limbs_[i] = static_cast<std::uint32_t>(v % kBase);
    carry = v / kBase;
  }
  if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
  return *this;
}

std::strong_ordering operator<=>(const BigNat& a, const BigNat& b) {
  if (a.limbs_.size() != b.limbs_.size())
    return a.limbs_.size() <=> b.limbs_.size();
  for (std::size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace parith
