#include "upk/advice.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "upk/engine.hpp"
#include "upk/errors.hpp"

namespace upk {

BitString BitString::from_string(std::string_view text) {
  std::vector<bool> bits;
  bits.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1') {
      throw ParseError("bit string has invalid character '" + std::string(1, text[i]) +
                       "' at position " + std::to_string(i));
    }
    bits.push_back(text[i] == '1');
  }
  return BitString(std::move(bits));
}

BitString BitString::from_uint(std::uint64_t v, int width) {
  std::vector<bool> bits;
  for (int i = width - 1; i >= 0; --i) bits.push_back(((v >> i) & 1U) != 0);
  return BitString(std::move(bits));
}

void BitString::append(const BitString& other) {
  bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

std::uint64_t BitString::to_uint() const {
  if (bits_.size() > 64) throw std::overflow_error("bit string longer than 64 bits");
  std::uint64_t v = 0;
  for (bool b : bits_) v = (v << 1) | (b ? 1U : 0U);
  return v;
}

std::string BitString::to_string() const {
  std::string out;
  out.reserve(bits_.size());
  for (bool b : bits_) out.push_back(b ? '1' : '0');
  return out;
}

SingleValueAdvice SingleValueAdvice::make(int z, std::uint64_t s, int k) {
  if (z < 0 || z > kMaxLeadingZeros) throw ConfigError("advice requires 0 <= z <= 40");
  if (k < 1 || k > kMaxAdviceBits) throw ConfigError("advice requires 1 <= k <= 62");
  if (static_cast<int>(std::bit_width(s)) != k) {
    throw ConfigError("advice requires s to have exactly k bits with a leading 1");
  }
  return SingleValueAdvice{z, s, k};
}

double SingleValueAdvice::ahat() const {
  return std::ldexp(static_cast<double>(s), -(z + k));
}

SingleValueAdvice encode_average(double a, int k) {
  if (!(a > 0.0 && a < 1.0)) throw std::domain_error("encode_average requires 0 < a < 1");
  if (a < std::ldexp(1.0, -kMaxLeadingZeros)) {
    throw std::domain_error("encode_average requires a >= 2^-40");
  }
  if (k < 1 || k > kMaxAdviceBits) throw std::domain_error("encode_average requires 1 <= k <= 62");
  // a = m * 2^e with m in [0.5, 1): the expansion has -e zeros after the
  // point. Scaling by a power of two and flooring are both exact.
  int e = 0;
  std::frexp(a, &e);
  const int z = -e;
  const auto s = static_cast<std::uint64_t>(std::floor(std::ldexp(a, z + k)));
  return SingleValueAdvice::make(z, s, k);
}

namespace {

void put_field(BitString& out, std::uint64_t value, int width) {
  for (int i = 0; i < width; ++i) out.push_back(true);
  out.push_back(false);
  out.append(BitString::from_uint(value, width));
}

class FrameReader {
 public:
  explicit FrameReader(const BitString& bits) : bits_(bits) {}

  // Returns {width, value}.
  std::pair<int, std::uint64_t> field(const char* name) {
    int width = 0;
    while (true) {
      if (pos_ >= bits_.size()) throw ParseError(std::string("frame truncated in ") + name + " header");
      if (!bits_[pos_++]) break;
      if (++width > 64) throw ParseError(std::string(name) + " field wider than 64 bits");
    }
    if (pos_ + static_cast<std::size_t>(width) > bits_.size()) {
      throw ParseError(std::string("frame truncated in ") + name + " payload");
    }
    std::uint64_t v = 0;
    for (int i = 0; i < width; ++i) v = (v << 1) | (bits_[pos_++] ? 1U : 0U);
    return {width, v};
  }

  bool done() const { return pos_ == bits_.size(); }

 private:
  const BitString& bits_;
  std::size_t pos_ = 0;
};

}  // namespace

BitString frame_self_delimiting(const SingleValueAdvice& adv) {
  BitString out;
  put_field(out, static_cast<std::uint64_t>(adv.z), std::bit_width(static_cast<unsigned>(adv.z)));
  put_field(out, adv.s, adv.k);
  return out;
}

SingleValueAdvice parse_frame(const BitString& frame) {
  FrameReader reader(frame);
  auto [zw, z] = reader.field("z");
  if (static_cast<int>(std::bit_width(z)) != zw) throw ParseError("z field is not minimal width");
  auto [k, s] = reader.field("s");
  if (!reader.done()) throw ParseError("trailing bits after frame");
  if (k == 0) throw ParseError("s field is empty");
  if (static_cast<int>(std::bit_width(s)) != k) throw ParseError("s field must start with a 1");
  if (z > static_cast<std::uint64_t>(kMaxLeadingZeros) || k > kMaxAdviceBits) {
    throw ParseError("frame values out of range");
  }
  return SingleValueAdvice::make(static_cast<int>(z), s, k);
}

PackingResult run_at_with_encoded_advice(const RequestSequence& seq,
                                         const BitString& frame) {
  return run_at(seq, parse_frame(frame).ahat());
}

TwoValueAdvice TwoValueAdvice::make(int z, std::uint64_t s, std::uint64_t t, int k) {
  if (z < 0 || z > kMaxLeadingZeros) throw ConfigError("advice requires 0 <= z <= 40");
  if (k < 1 || k > kMaxAdviceBits) throw ConfigError("advice requires 1 <= k <= 62");
  if (static_cast<int>(std::bit_width(s)) != k) {
    throw ConfigError("advice requires s to have exactly k bits with a leading 1");
  }
  if (static_cast<int>(std::bit_width(t)) > k) throw ConfigError("advice requires t to fit in k bits");
  return TwoValueAdvice{z, s, t, k};
}

double TwoValueAdvice::shat() const { return std::ldexp(static_cast<double>(s), -(z + k)); }
double TwoValueAdvice::that() const { return std::ldexp(static_cast<double>(t), -k); }
double TwoValueAdvice::window() const { return std::ldexp(1.0, -(z + k)); }

TwoValueAdvice encode_two_value(const RequestSequence& seq, int k) {
  PackingResult opt = opt_pack(seq);
  if (opt.profit == 0) throw std::domain_error("two-value advice needs a nonempty optimum");
  const double largest = opt.accepted_sizes.back();
  if (!(largest < 1.0)) throw std::domain_error("two-value advice needs optimal items below 1");
  SingleValueAdvice sv = encode_average(largest, k);
  const double shat = sv.ahat();
  double small = 0.0;
  for (double x : opt.accepted_sizes) {
    if (x < shat) small += x;
  }
  const double t = std::max(0.0, 1.0 - small);
  const std::uint64_t top = (std::uint64_t{1} << k) - 1;
  const auto t_bits = std::min(top, static_cast<std::uint64_t>(std::floor(std::ldexp(t, k))));
  return TwoValueAdvice::make(sv.z, sv.s, t_bits, k);
}

PackingResult run_two_value_advice(const RequestSequence& seq, const TwoValueAdvice& adv) {
  const double shat = adv.shat();
  const double upper = shat + adv.window();
  const double budget = adv.that();
  PackingState state;
  double window_sum = 0.0;
  for (double x : seq) {
    if (x < shat) {
      if (state.fits(x)) {
        state.accept(x);
      } else {
        state.reject(Verdict::RejectCapacity);
      }
    } else if (x < upper) {
      if (window_sum + x > budget) {
        state.reject(Verdict::RejectSize);
      } else if (!state.fits(x)) {
        state.reject(Verdict::RejectCapacity);
      } else {
        window_sum += x;
        state.accept(x);
      }
    } else {
      state.reject(Verdict::RejectSize);
    }
  }
  return PackingResult::from_state(state);
}

}  // namespace upk
