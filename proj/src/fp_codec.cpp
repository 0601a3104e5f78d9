#include "fpuq/fp_codec.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>

namespace fpuq {

namespace {
constexpr std::uint64_t kFracMask = (std::uint64_t{1} << 52) - 1;
constexpr std::uint64_t kImplicitBit = std::uint64_t{1} << 52;
}  // namespace

FpDecomposition decompose(double x) noexcept {
  const std::uint64_t bits = std::bit_cast<std::uint64_t>(x);
  FpDecomposition d;
  d.sign = (bits >> 63) ? -1 : 1;
  const unsigned raw_exp = static_cast<unsigned>((bits >> 52) & 0x7FF);
  const std::uint64_t frac = bits & kFracMask;

  if (raw_exp == 0x7FF) {
    d.cls = frac ? FpClass::nan : FpClass::infinity;
    d.exponent = 1024;
    d.significand = frac;
  } else if (raw_exp == 0) {
    if (frac == 0) {
      d.cls = FpClass::zero;
    } else {
      d.cls = FpClass::subnormal;
      const int lead = 63 - std::countl_zero(frac);
      d.exponent = lead - 1074;  // effective exponent of the leading bit
      d.significand = frac;
    }
  } else {
    d.cls = FpClass::normal;
    d.exponent = static_cast<int>(raw_exp) - 1023;
    d.significand = frac | kImplicitBit;
  }
  return d;
}

double recompose(const FpDecomposition& d) noexcept {
  const std::uint64_t sign_bit = (d.sign < 0) ? (std::uint64_t{1} << 63) : 0;
  std::uint64_t bits = sign_bit;
  switch (d.cls) {
    case FpClass::zero:
      break;
    case FpClass::subnormal:
      bits |= d.significand & kFracMask;
      break;
    case FpClass::normal:
      bits |= static_cast<std::uint64_t>(d.exponent + 1023) << 52;
      bits |= d.significand & kFracMask;
      break;
    case FpClass::infinity:
      bits |= std::uint64_t{0x7FF} << 52;
      break;
    case FpClass::nan:
      bits |= std::uint64_t{0x7FF} << 52;
      bits |= d.significand & kFracMask;
      break;
  }
  return std::bit_cast<double>(bits);
}

int exponent_of(double x) noexcept {
  // frexp normalizes subnormals, giving the effective exponent directly.
  int e = 0;
  std::frexp(x, &e);
  return e - 1;
}

double round_to_precision(double x, int precision_bits) noexcept {
  if (x == 0.0 || !std::isfinite(x) || precision_bits >= 53) return x;

  const FpDecomposition d = decompose(x);
  const int lead = 63 - std::countl_zero(d.significand);
  const int shift = lead - (precision_bits - 1);
  if (shift <= 0) return x;  // already fits

  std::uint64_t keep = d.significand >> shift;
  const std::uint64_t rem = d.significand & ((std::uint64_t{1} << shift) - 1);
  const std::uint64_t half = std::uint64_t{1} << (shift - 1);
  if (rem > half || (rem == half && (keep & 1))) ++keep;

  // keep <= 2^precision_bits, so the product below is exact.
  const double mag = std::ldexp(static_cast<double>(keep), d.exponent - (precision_bits - 1));
  return d.sign < 0 ? -mag : mag;
}

ClampResult clamp_exponent(double x, int exponent_bits) noexcept {
  if (x == 0.0 || !std::isfinite(x)) return {x, RangeEvent::none};
  const int emax = (1 << (exponent_bits - 1)) - 1;
  const int emin = 1 - emax;
  const int e = exponent_of(x);
  if (e > emax) return {x, RangeEvent::overflow};
  if (e < emin) return {std::copysign(0.0, x), RangeEvent::underflow};
  return {x, RangeEvent::none};
}

std::optional<FloatFormat> format_from_name(std::string_view name) {
  if (name == "binary64") return formats::binary64;
  if (name == "binary32") return formats::binary32;
  if (name == "binary16") return formats::binary16;
  if (name == "bfloat16") return formats::bfloat16;
  if (name == "bfloat8") return formats::bfloat8;

  // Explicit "p,e" pair.
  const auto comma = name.find(',');
  if (comma == std::string_view::npos) return std::nullopt;
  const std::string p_str(name.substr(0, comma));
  const std::string e_str(name.substr(comma + 1));
  char* end = nullptr;
  const long p = std::strtol(p_str.c_str(), &end, 10);
  if (end == p_str.c_str() || *end != '\0') return std::nullopt;
  const long e = std::strtol(e_str.c_str(), &end, 10);
  if (end == e_str.c_str() || *end != '\0') return std::nullopt;
  if (p < 1 || p > 53 || e < 1 || e > 11) return std::nullopt;
  return FloatFormat{static_cast<int>(p), static_cast<int>(e)};
}

std::string format_name(const FloatFormat& fmt) {
  if (fmt == formats::binary64) return "binary64";
  if (fmt == formats::binary32) return "binary32";
  if (fmt == formats::binary16) return "binary16";
  if (fmt == formats::bfloat16) return "bfloat16";
  if (fmt == formats::bfloat8) return "bfloat8";
  return std::to_string(fmt.precision_bits) + "," + std::to_string(fmt.exponent_bits);
}

}  // namespace fpuq
