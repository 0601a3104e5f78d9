// Monte Carlo Arithmetic: stochastic perturbation of floating point
// operations at a configurable virtual precision t. Random Rounding (RR)
// perturbs operation outputs, Precision Bounding (PB) perturbs inputs,
// full MCA does both.
#pragma once

#include <cstdint>

#include "fpuq/arithmetic.hpp"
#include "fpuq/rng.hpp"

namespace fpuq {

enum class McaMode { rr, pb, full };

struct McaConfig {
  McaMode mode = McaMode::rr;
  int t32 = 24;  // virtual precision for binary32-class ops
  int t64 = 53;  // virtual precision for binary64-class ops
  std::uint64_t seed = 0;
  // When false, operations whose IEEE result is exact (no roundoff
  // occurred) are left unperturbed. Applies to add/sub/mul/div; fma is
  // always treated as inexact.
  bool perturb_exact = true;
};

/// x + 2^(e_x - t) * xi with xi uniform on (-1/2, 1/2).
/// Zero, infinities and NaN pass through unperturbed.
double inexact(double x, int t, SplitMix64& rng);

/// Exact binary64 op, then one output perturbation (Eq. RR).
double rr_binop(BinOp op, double x, double y, int t, SplitMix64& rng, double z = 0.0);

/// Input perturbation of each operand, then the exact op.
double pb_binop(BinOp op, double x, double y, int t, SplitMix64& rng, double z = 0.0);

/// PB on the inputs followed by RR on the output.
double full_mca_binop(BinOp op, double x, double y, int t, SplitMix64& rng, double z = 0.0);

/// True when the IEEE evaluation of op on these operands is exact
/// (determined with error-free transformations). fma reports false.
bool ieee_op_is_exact(BinOp op, double x, double y, double result);

class McaContext final : public ArithmeticContext {
 public:
  explicit McaContext(const McaConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {}

  double add(double x, double y, PrecClass cls) override { return binop(BinOp::add, x, y, cls); }
  double sub(double x, double y, PrecClass cls) override { return binop(BinOp::sub, x, y, cls); }
  double mul(double x, double y, PrecClass cls) override { return binop(BinOp::mul, x, y, cls); }
  double div(double x, double y, PrecClass cls) override { return binop(BinOp::div, x, y, cls); }
  double fma(double x, double y, double z, PrecClass cls) override {
    return binop(BinOp::fma, x, y, cls, z);
  }
  std::string name() const override { return "mca"; }

  const McaConfig& config() const { return cfg_; }
  SplitMix64& rng() { return rng_; }
  int precision_for(PrecClass cls) const { return cls == PrecClass::bits32 ? cfg_.t32 : cfg_.t64; }

 private:
  double binop(BinOp op, double x, double y, PrecClass cls, double z = 0.0);

  McaConfig cfg_;
  SplitMix64 rng_;
};

}  // namespace fpuq
