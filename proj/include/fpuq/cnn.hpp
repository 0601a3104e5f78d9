#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "fpuq/arithmetic.hpp"
#include "fpuq/model.hpp"

namespace fpuq {

/// One-hot encoding of a sequence against the model alphabet. Rows beyond
/// the sequence length are all-zero padding; out-of-alphabet symbols
/// encode as all-zero rows and are tallied in unknown_count.
struct OneHotMatrix {
  int rows = 0;  // max_len
  int cols = 0;  // alphabet size
  std::vector<double> data;   // rows*cols, row-major
  std::vector<int> hot;       // per row: alphabet index, or -1 for all-zero
  int unknown_count = 0;

  double at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
};

OneHotMatrix encode_sequence(std::string_view seq, const Model& model);

/// Valid cross-correlation of one filter bank over the encoded sequence,
/// bias added, then global max pooling over window positions. All scalar
/// arithmetic is routed through ctx in the binary32 class. One-hot input
/// means each window touches exactly one weight per kernel position, so
/// the op stream is one mul+add pair per in-sequence position, walked
/// left to right (fixed reduction order).
std::vector<double> conv1d_maxpool(const OneHotMatrix& encoded, const FilterBank& bank,
                                   ArithmeticContext& ctx, int alpha_size,
                                   std::vector<int>* argmax_out = nullptr);

struct ForwardOptions {
  // Route the sigmoid's native exp result through the context's load hook
  // (format emulators round it into range; MCA leaves it untouched unless
  // perturb_exp is set).
  bool exp_through_context = true;
  // Additionally apply an output perturbation to exp under MCA backends.
  bool perturb_exp = false;
};

/// Dense layer + sigmoid. Logit accumulation runs in the binary32 class;
/// the final 1/(1+e) evaluation runs in the binary64 class, mirroring the
/// double-typed glue ops of the original pipeline.
std::vector<double> dense_sigmoid(std::span<const double> pooled, const Model& model,
                                  ArithmeticContext& ctx,
                                  const ForwardOptions& opts = {});

struct PredictionMatrix {
  int num_proteins = 0;
  int num_classes = 0;
  std::vector<double> probs;  // row-major [protein][class]

  double at(int p, int c) const { return probs[static_cast<std::size_t>(p) * num_classes + c]; }
};

/// Raised when a format error occurs during inference; carries the index
/// of the protein being processed.
class InferenceError : public std::runtime_error {
 public:
  InferenceError(std::size_t protein_index, const FormatError& cause)
      : std::runtime_error("protein " + std::to_string(protein_index) + ": " + cause.what()),
        protein_index_(protein_index),
        event_(cause.event()) {}

  std::size_t protein_index() const noexcept { return protein_index_; }
  RangeEvent event() const noexcept { return event_; }

 private:
  std::size_t protein_index_;
  RangeEvent event_;
};

struct ForwardStats {
  int unknown_symbols = 0;
};

/// Full forward pass over a batch of sequences. Model weights enter the
/// pipeline through ctx.load (format emulators pre-round them once).
PredictionMatrix forward(const Model& model, const std::vector<std::string>& sequences,
                         ArithmeticContext& ctx, const ForwardOptions& opts = {},
                         ForwardStats* stats = nullptr);

}  // namespace fpuq
