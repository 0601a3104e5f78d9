#include "fpuq/vprec.hpp"

#include <cmath>
#include <sstream>

namespace fpuq {

std::string FormatError::describe(RangeEvent event, double value, PrecClass cls) {
  std::ostringstream os;
  os << (event == RangeEvent::overflow ? "overflow" : "underflow with total loss")
     << " in emulated " << (cls == PrecClass::bits32 ? "binary32" : "binary64")
     << "-class operation, value " << value;
  return os.str();
}

namespace {

double apply_format(double v, const FloatFormat& fmt, OverflowPolicy policy,
                    EventCounters& counters, PrecClass cls) {
  const double rounded = round_to_precision(v, fmt.precision_bits);
  const ClampResult clamped = clamp_exponent(rounded, fmt.exponent_bits);
  switch (clamped.event) {
    case RangeEvent::none:
      return clamped.value;
    case RangeEvent::overflow:
      ++counters.overflow;
      if (policy == OverflowPolicy::signal) throw FormatError(RangeEvent::overflow, v, cls);
      return std::copysign(INFINITY, v);
    case RangeEvent::underflow:
      ++counters.underflow;
      return clamped.value;  // signed zero
  }
  return clamped.value;
}

}  // namespace

double pre_round_input(double x, const FloatFormat& fmt, OverflowPolicy policy,
                       EventCounters& counters, PrecClass cls) {
  return apply_format(x, fmt, policy, counters, cls);
}

double emulate_binop(BinOp op, double x, double y, const FloatFormat& fmt,
                     OverflowPolicy policy, EventCounters& counters, PrecClass cls,
                     double z) {
  return apply_format(exact_op(op, x, y, z), fmt, policy, counters, cls);
}

}  // namespace fpuq
