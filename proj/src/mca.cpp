#include "fpuq/mca.hpp"

#include <cmath>

namespace fpuq {

double inexact(double x, int t, SplitMix64& rng) {
  if (x == 0.0 || !std::isfinite(x)) return x;
  const int e = exponent_of(x);
  return x + std::ldexp(rng.next_xi(), e - t);
}

double rr_binop(BinOp op, double x, double y, int t, SplitMix64& rng, double z) {
  return inexact(exact_op(op, x, y, z), t, rng);
}

double pb_binop(BinOp op, double x, double y, int t, SplitMix64& rng, double z) {
  const double px = inexact(x, t, rng);
  const double py = inexact(y, t, rng);
  if (op == BinOp::fma) {
    const double pz = inexact(z, t, rng);
    return exact_op(op, px, py, pz);
  }
  return exact_op(op, px, py, z);
}

double full_mca_binop(BinOp op, double x, double y, int t, SplitMix64& rng, double z) {
  return inexact(pb_binop(op, x, y, t, rng, z), t, rng);
}

bool ieee_op_is_exact(BinOp op, double x, double y, double result) {
  if (!std::isfinite(result)) return false;
  switch (op) {
    case BinOp::add:
    case BinOp::sub: {
      // Knuth TwoSum residual.
      const double b = (op == BinOp::sub) ? -y : y;
      const double bp = result - x;
      const double err = (x - (result - bp)) + (b - bp);
      return err == 0.0;
    }
    case BinOp::mul:
      return std::fma(x, y, -result) == 0.0;
    case BinOp::div:
      // result * y == x exactly iff the division rounded nothing away.
      return std::fma(result, y, -x) == 0.0;
    case BinOp::fma:
      return false;
  }
  return false;
}

double McaContext::binop(BinOp op, double x, double y, PrecClass cls, double z) {
  const int t = precision_for(cls);
  if (!cfg_.perturb_exact && cfg_.mode == McaMode::rr) {
    const double r = exact_op(op, x, y, z);
    if (ieee_op_is_exact(op, x, y, r)) return r;
    return inexact(r, t, rng_);
  }
  switch (cfg_.mode) {
    case McaMode::rr: return rr_binop(op, x, y, t, rng_, z);
    case McaMode::pb: return pb_binop(op, x, y, t, rng_, z);
    case McaMode::full: return full_mca_binop(op, x, y, t, rng_, z);
  }
  return exact_op(op, x, y, z);
}

}  // namespace fpuq
