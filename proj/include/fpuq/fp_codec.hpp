// Bit-exact decomposition, precision rounding and exponent clamping for
// binary64 values. This is the shared substrate of the perturbation and
// emulation backends: everything here is a pure function of its inputs.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace fpuq {

enum class FpClass { zero, subnormal, normal, infinity, nan };

/// Lossless field view of a binary64 value.
///
/// For normals the significand includes the implicit leading bit (bit 52).
/// For subnormals the significand is the raw fraction field and `exponent`
/// is the effective exponent of its highest set bit, so the invariant
/// 2^exponent <= |value| < 2^(exponent+1) holds for all finite nonzero
/// values. NaN keeps its payload in `significand`.
struct FpDecomposition {
  int sign = 1;  // +1 or -1
  FpClass cls = FpClass::zero;
  int exponent = 0;
  std::uint64_t significand = 0;
};

FpDecomposition decompose(double x) noexcept;

/// Exact inverse of decompose: reproduces the original bit pattern.
double recompose(const FpDecomposition& d) noexcept;

/// e_x such that 2^e_x <= |x| < 2^(e_x+1). Finite nonzero x only.
int exponent_of(double x) noexcept;

/// Round x to the nearest value whose significand fits in `precision_bits`
/// bits (implicit bit included), ties to even. p=53 is the identity;
/// zero, infinities and NaN pass through.
double round_to_precision(double x, int precision_bits) noexcept;

enum class RangeEvent { none, overflow, underflow };

struct ClampResult {
  double value;
  RangeEvent event;
};

/// Check x against the exponent range of a format with `exponent_bits`
/// exponent bits (emax = 2^(e-1)-1, emin = 1-emax). Out-of-range values
/// are reported as events, never raised: overflow keeps the input value
/// so the caller can pick a policy, underflow flushes to signed zero.
ClampResult clamp_exponent(double x, int exponent_bits) noexcept;

/// A (precision, exponent) pair describing a target numeric format.
struct FloatFormat {
  int precision_bits;  // significand length including the implicit bit
  int exponent_bits;

  constexpr int emax() const noexcept { return (1 << (exponent_bits - 1)) - 1; }
  constexpr int emin() const noexcept { return 1 - emax(); }
  bool operator==(const FloatFormat&) const = default;
};

namespace formats {
inline constexpr FloatFormat binary64{53, 11};
inline constexpr FloatFormat binary32{24, 8};
inline constexpr FloatFormat binary16{11, 5};
inline constexpr FloatFormat bfloat16{8, 8};
inline constexpr FloatFormat bfloat8{3, 5};
}  // namespace formats

/// Parse "binary32", "bfloat16", ... or an explicit "p,e" pair.
std::optional<FloatFormat> format_from_name(std::string_view name);
std::string format_name(const FloatFormat& fmt);

}  // namespace fpuq
