// The desk-scale sequence CNN: parallel 1D convolution filter banks of
// varying kernel lengths, global max pooling, and a dense sigmoid output
// layer mapping pooled features to per-class probabilities.
#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace fpuq {

struct FilterBank {
  int kernel_length = 0;
  int num_filters = 0;
  // kernel[j][a][f] row-major over (position j, alphabet index a, filter f)
  std::vector<double> kernel;
  std::vector<double> bias;  // per filter

  double k(int j, int a, int f, int alpha_size) const {
    return kernel[(static_cast<std::size_t>(j) * alpha_size + a) * num_filters + f];
  }
};

struct Model {
  std::string alphabet;  // ordered symbol set; out-of-alphabet symbols encode as zero
  int max_len = 0;
  std::vector<FilterBank> banks;
  std::vector<double> dense_weights;  // [filter][class] row-major
  std::vector<double> dense_bias;     // per class
  std::vector<std::string> class_ids;

  int alphabet_size() const { return static_cast<int>(alphabet.size()); }
  int num_classes() const { return static_cast<int>(class_ids.size()); }
  int total_filters() const;

  double w(int f, int c) const {
    return dense_weights[static_cast<std::size_t>(f) * class_ids.size() + c];
  }

  /// Throws std::invalid_argument when shapes are inconsistent.
  void validate() const;
};

Model load_model(const std::filesystem::path& path);
void save_model(const Model& model, const std::filesystem::path& path);

}  // namespace fpuq
