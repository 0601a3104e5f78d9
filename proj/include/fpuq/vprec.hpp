// Reduced-precision emulation inside binary64: compute the operation
// exactly, round the result to the target significand length, then clamp
// its exponent to the target range. Overflow behaviour is a policy; every
// range event is counted so a run's report can account for them.
#pragma once

#include <cstdint>

#include "fpuq/arithmetic.hpp"

namespace fpuq {

enum class OverflowPolicy { signal, saturate_to_infinity };

struct EventCounters {
  std::uint64_t overflow = 0;
  std::uint64_t underflow = 0;

  EventCounters& operator+=(const EventCounters& o) {
    overflow += o.overflow;
    underflow += o.underflow;
    return *this;
  }
};

struct VprecConfig {
  FloatFormat fmt64 = formats::binary64;  // applied to binary64-class ops
  FloatFormat fmt32 = formats::binary32;  // applied to binary32-class ops
  OverflowPolicy policy = OverflowPolicy::signal;
};

/// Round + clamp a raw binary64 value into fmt. Underflow flushes to
/// signed zero (emulated subnormals are out of scope) and is counted;
/// overflow follows the policy: signal throws FormatError, saturate
/// returns an infinity of the right sign. NaN and infinities pass through.
double pre_round_input(double x, const FloatFormat& fmt, OverflowPolicy policy,
                       EventCounters& counters, PrecClass cls = PrecClass::bits32);

/// Exact binary64 op followed by the same round + clamp path.
/// Operands are expected to be representable in fmt already (the closure
/// property of the backend guarantees it for chained ops).
double emulate_binop(BinOp op, double x, double y, const FloatFormat& fmt,
                     OverflowPolicy policy, EventCounters& counters,
                     PrecClass cls = PrecClass::bits32, double z = 0.0);

class VprecContext final : public ArithmeticContext {
 public:
  explicit VprecContext(const VprecConfig& cfg) : cfg_(cfg) {}

  double add(double x, double y, PrecClass cls) override { return binop(BinOp::add, x, y, cls); }
  double sub(double x, double y, PrecClass cls) override { return binop(BinOp::sub, x, y, cls); }
  double mul(double x, double y, PrecClass cls) override { return binop(BinOp::mul, x, y, cls); }
  double div(double x, double y, PrecClass cls) override { return binop(BinOp::div, x, y, cls); }
  double fma(double x, double y, double z, PrecClass cls) override {
    return binop(BinOp::fma, x, y, cls, z);
  }
  double load(double x, PrecClass cls) override {
    return pre_round_input(x, format_for(cls), cfg_.policy, counters_, cls);
  }
  std::string name() const override { return "vprec"; }

  const FloatFormat& format_for(PrecClass cls) const {
    return cls == PrecClass::bits32 ? cfg_.fmt32 : cfg_.fmt64;
  }
  const VprecConfig& config() const { return cfg_; }
  const EventCounters& counters() const { return counters_; }
  EventCounters& counters() { return counters_; }

 private:
  double binop(BinOp op, double x, double y, PrecClass cls, double z = 0.0) {
    return emulate_binop(op, x, y, format_for(cls), cfg_.policy, counters_, cls, z);
  }

  VprecConfig cfg_;
  EventCounters counters_;
};

}  // namespace fpuq
