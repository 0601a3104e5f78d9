// The pluggable arithmetic backend. Every scalar operation of the inference
// pipeline goes through an ArithmeticContext, declaring its working
// precision class, so the same forward pass can run exact, perturbed or
// format-emulated without touching the model code.
#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "fpuq/fp_codec.hpp"

namespace fpuq {

/// The precision class an operation would have in the original pipeline:
/// bits32 for the binary32 compute path, bits64 for double-typed glue ops.
enum class PrecClass { bits32, bits64 };

enum class BinOp { add, sub, mul, div, fma };

/// Exact binary64 evaluation of an op (z only used by fma).
inline double exact_op(BinOp op, double x, double y, double z = 0.0) {
  switch (op) {
    case BinOp::add: return x + y;
    case BinOp::sub: return x - y;
    case BinOp::mul: return x * y;
    case BinOp::div: return x / y;
    case BinOp::fma: return std::fma(x, y, z);
  }
  return 0.0;
}

/// Raised by format-emulating backends when a value leaves the target
/// format's range under the signalling policy.
class FormatError : public std::runtime_error {
 public:
  FormatError(RangeEvent event, double value, PrecClass cls)
      : std::runtime_error(describe(event, value, cls)),
        event_(event),
        value_(value),
        cls_(cls) {}

  RangeEvent event() const noexcept { return event_; }
  double value() const noexcept { return value_; }
  PrecClass prec_class() const noexcept { return cls_; }

 private:
  static std::string describe(RangeEvent event, double value, PrecClass cls);

  RangeEvent event_;
  double value_;
  PrecClass cls_;
};

class ArithmeticContext {
 public:
  virtual ~ArithmeticContext() = default;

  virtual double add(double x, double y, PrecClass cls) = 0;
  virtual double sub(double x, double y, PrecClass cls) = 0;
  virtual double mul(double x, double y, PrecClass cls) = 0;
  virtual double div(double x, double y, PrecClass cls) = 0;
  virtual double fma(double x, double y, double z, PrecClass cls) = 0;

  /// Entry point for raw values (weights, library-call results). Format
  /// emulators round here; other backends pass through.
  virtual double load(double x, PrecClass) { return x; }

  /// Comparison-based selection; never perturbed (it is not an arithmetic
  /// rounding site), but routed so backends see the full op stream.
  virtual double max(double x, double y, PrecClass) { return x < y ? y : x; }

  virtual std::string name() const = 0;
};

/// Plain IEEE binary64 arithmetic; the reference backend.
class IeeeContext final : public ArithmeticContext {
 public:
  double add(double x, double y, PrecClass) override { return x + y; }
  double sub(double x, double y, PrecClass) override { return x - y; }
  double mul(double x, double y, PrecClass) override { return x * y; }
  double div(double x, double y, PrecClass) override { return x / y; }
  double fma(double x, double y, double z, PrecClass) override { return std::fma(x, y, z); }
  std::string name() const override { return "ieee"; }
};

}  // namespace fpuq
