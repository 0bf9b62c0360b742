#pragma once

// Advice codecs: a k-bit approximation of the average size, its
// self-delimiting frame, and the two-value (s, t) scheme.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "upk/core.hpp"

namespace upk {

class BitString {
 public:
  BitString() = default;
  explicit BitString(std::vector<bool> bits) : bits_(std::move(bits)) {}

  // Parses ASCII '0'/'1'. Throws ParseError on any other character.
  static BitString from_string(std::string_view text);
  // The low `width` bits of v, most significant first.
  static BitString from_uint(std::uint64_t v, int width);

  std::size_t size() const { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i]; }
  void push_back(bool b) { bits_.push_back(b); }
  void append(const BitString& other);
  std::uint64_t to_uint() const;
  std::string to_string() const;

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  std::vector<bool> bits_;
};

inline constexpr int kMaxAdviceBits = 62;
inline constexpr int kMaxLeadingZeros = 40;

struct SingleValueAdvice {
  int z = 0;            // zeros after the binary point
  std::uint64_t s = 0;  // next k bits; leading bit set
  int k = 1;

  // Throws ConfigError unless 0 <= z <= 40, 1 <= k <= 62 and s has exactly
  // k significant bits.
  static SingleValueAdvice make(int z, std::uint64_t s, int k);

  double ahat() const;
  BitString s_bits() const { return BitString::from_uint(s, k); }

  friend bool operator==(const SingleValueAdvice&, const SingleValueAdvice&) = default;
};

// Throws std::domain_error unless 2^-40 <= a < 1 and 1 <= k <= 62.
SingleValueAdvice encode_average(double a, int k);

// Per field: w ones, a zero, then w payload bits. w = bit_width(z) for z and
// w = k for s.
BitString frame_self_delimiting(const SingleValueAdvice& adv);

// Inverse of frame_self_delimiting. Throws ParseError on truncated input,
// trailing bits, a non-minimal z field or an s without its leading one.
SingleValueAdvice parse_frame(const BitString& frame);

// Decodes the frame and runs AT with the decoded prediction.
PackingResult run_at_with_encoded_advice(const RequestSequence& seq,
                                         const BitString& frame);

struct TwoValueAdvice {
  int z = 0;
  std::uint64_t s = 0;  // k bits of the largest item in the optimum
  std::uint64_t t = 0;  // k bits of the room left by items below ŝ
  int k = 1;

  static TwoValueAdvice make(int z, std::uint64_t s, std::uint64_t t, int k);

  double shat() const;
  double that() const;
  double window() const;  // 2^-(z+k)
};

// Advice for `seq`: s from the largest item in opt_pack(seq), t from
// 1 - (sum of all items strictly below ŝ). Throws std::domain_error when the
// optimum is empty.
TwoValueAdvice encode_two_value(const RequestSequence& seq, int k);

// Accepts every fitting item below ŝ. Items in [ŝ, ŝ + window) are accepted
// while their accepted total stays within t̂; larger items are rejected.
PackingResult run_two_value_advice(const RequestSequence& seq,
                                   const TwoValueAdvice& adv);

}  // namespace upk
