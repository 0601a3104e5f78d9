#include "fpuq/cnn.hpp"

#include <cmath>

#include "fpuq/mca.hpp"

namespace fpuq {

OneHotMatrix encode_sequence(std::string_view seq, const Model& model) {
  OneHotMatrix out;
  out.rows = model.max_len;
  out.cols = model.alphabet_size();
  out.data.assign(static_cast<std::size_t>(out.rows) * out.cols, 0.0);
  out.hot.assign(out.rows, -1);

  const std::size_t len = std::min<std::size_t>(seq.size(), static_cast<std::size_t>(model.max_len));
  for (std::size_t i = 0; i < len; ++i) {
    const auto pos = model.alphabet.find(seq[i]);
    if (pos == std::string::npos) {
      ++out.unknown_count;  // unknown symbol: all-zero row
      continue;
    }
    out.hot[i] = static_cast<int>(pos);
    out.data[i * out.cols + pos] = 1.0;
  }
  return out;
}

std::vector<double> conv1d_maxpool(const OneHotMatrix& encoded, const FilterBank& bank,
                                   ArithmeticContext& ctx, int alpha_size,
                                   std::vector<int>* argmax_out) {
  const int positions = encoded.rows - bank.kernel_length + 1;
  std::vector<double> pooled(bank.num_filters, 0.0);
  if (argmax_out) argmax_out->assign(bank.num_filters, 0);

  for (int f = 0; f < bank.num_filters; ++f) {
    double best = 0.0;
    int best_pos = 0;
    for (int p = 0; p < positions; ++p) {
      double acc = 0.0;
      for (int j = 0; j < bank.kernel_length; ++j) {
        const int a = encoded.hot[p + j];
        if (a < 0) continue;  // padding or unknown symbol: zero row
        const double prod = ctx.mul(bank.k(j, a, f, alpha_size), encoded.at(p + j, a),
                                    PrecClass::bits32);
        acc = ctx.add(acc, prod, PrecClass::bits32);
      }
      const double response = ctx.add(acc, bank.bias[f], PrecClass::bits32);
      if (p == 0) {
        best = response;
      } else {
        const double m = ctx.max(best, response, PrecClass::bits32);
        if (best < response) best_pos = p;  // ties keep the earlier position
        best = m;
      }
    }
    pooled[f] = best;
    if (argmax_out) (*argmax_out)[f] = best_pos;
  }
  return pooled;
}

std::vector<double> dense_sigmoid(std::span<const double> pooled, const Model& model,
                                  ArithmeticContext& ctx, const ForwardOptions& opts) {
  const int num_classes = model.num_classes();
  const int total = model.total_filters();
  std::vector<double> probs(num_classes, 0.0);

  auto* mca = dynamic_cast<McaContext*>(&ctx);

  for (int c = 0; c < num_classes; ++c) {
    double acc = 0.0;
    for (int f = 0; f < total; ++f) {
      const double prod = ctx.mul(model.w(f, c), pooled[f], PrecClass::bits32);
      acc = ctx.add(acc, prod, PrecClass::bits32);
    }
    const double logit = ctx.add(acc, model.dense_bias[c], PrecClass::bits32);

    // exp itself is a native libm call; only its surroundings are routed.
    double e = std::exp(-logit);
    if (opts.exp_through_context) e = ctx.load(e, PrecClass::bits32);
    if (opts.perturb_exp && mca) e = inexact(e, mca->precision_for(PrecClass::bits32), mca->rng());

    const double denom = ctx.add(1.0, e, PrecClass::bits32);
    probs[c] = ctx.div(1.0, denom, PrecClass::bits64);
  }
  return probs;
}

PredictionMatrix forward(const Model& model, const std::vector<std::string>& sequences,
                         ArithmeticContext& ctx, const ForwardOptions& opts,
                         ForwardStats* stats) {
  model.validate();

  // Weights and biases enter the pipeline through the context once, so
  // format emulators see them already at the target format.
  Model loaded = model;
  for (auto& bank : loaded.banks) {
    for (auto& v : bank.kernel) v = ctx.load(v, PrecClass::bits32);
    for (auto& v : bank.bias) v = ctx.load(v, PrecClass::bits32);
  }
  for (auto& v : loaded.dense_weights) v = ctx.load(v, PrecClass::bits32);
  for (auto& v : loaded.dense_bias) v = ctx.load(v, PrecClass::bits32);

  PredictionMatrix out;
  out.num_proteins = static_cast<int>(sequences.size());
  out.num_classes = model.num_classes();
  out.probs.resize(static_cast<std::size_t>(out.num_proteins) * out.num_classes);

  const int alpha = loaded.alphabet_size();
  for (std::size_t i = 0; i < sequences.size(); ++i) {
    try {
      const OneHotMatrix enc = encode_sequence(sequences[i], loaded);
      if (stats) stats->unknown_symbols += enc.unknown_count;

      std::vector<double> pooled;
      pooled.reserve(loaded.total_filters());
      for (const auto& bank : loaded.banks) {
        const auto bank_pooled = conv1d_maxpool(enc, bank, ctx, alpha);
        pooled.insert(pooled.end(), bank_pooled.begin(), bank_pooled.end());
      }
      const auto probs = dense_sigmoid(pooled, loaded, ctx, opts);
      std::copy(probs.begin(), probs.end(),
                out.probs.begin() + static_cast<std::ptrdiff_t>(i) * out.num_classes);
    } catch (const FormatError& err) {
      throw InferenceError(i, err);
    }
  }
  return out;
}

}  // namespace fpuq
