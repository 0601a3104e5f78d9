// Non-parametric significant-bits estimation for sampled outputs, plus the
// bits-to-decimal-digits conversion and plain per-column statistics.
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace fpuq {

/// n iteration results for m outputs, plus the designated reference row
/// (the unperturbed IEEE run).
struct SampleSet {
  std::size_t n = 0;  // iterations
  std::size_t m = 0;  // outputs
  std::vector<double> samples;    // n*m, row-major
  std::vector<double> reference;  // length m

  double at(std::size_t i, std::size_t j) const { return samples[i * m + j]; }
};

/// Largest k in 1..53 such that every sample agrees with the reference
/// within relative distance 2^-k (|s/ref - 1| < 2^-k); 0 when even k=1
/// fails, 53 when all samples equal the reference (including the all-zero
/// case). Throws std::domain_error for reference 0 with a nonzero sample.
int significant_bits(std::span<const double> samples, double reference);

/// s_b * log10(2).
double bits_to_digits(double bits);

struct ColumnStats {
  double mean = 0.0;
  double stddev = 0.0;  // unbiased, n-1
};

ColumnStats column_stats(std::span<const double> values);
std::vector<ColumnStats> sample_stats(const SampleSet& set);

std::vector<int> significant_bits_per_column(const SampleSet& set);

/// Confidence metadata of the estimator. Only the n=10 pair quoted for
/// this estimator is surfaced; other sample sizes report none.
struct ConfidenceInfo {
  double confidence;
  double probability;
};
std::optional<ConfidenceInfo> confidence_for_samples(std::size_t n);

/// Ceiling on reportable digits for a given significand length
/// (15.95 for binary64, 7.23 for binary32).
double digits_ceiling(int precision_bits);

}  // namespace fpuq
