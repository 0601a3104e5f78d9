#include "fpuq/model.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace fpuq {

int Model::total_filters() const {
  int total = 0;
  for (const auto& b : banks) total += b.num_filters;
  return total;
}

void Model::validate() const {
  if (alphabet.empty()) throw std::invalid_argument("model: empty alphabet");
  if (max_len <= 0) throw std::invalid_argument("model: max_len must be positive");
  if (class_ids.empty()) throw std::invalid_argument("model: no classes");
  const int alpha = alphabet_size();
  for (const auto& b : banks) {
    if (b.kernel_length <= 0 || b.kernel_length > max_len)
      throw std::invalid_argument("model: kernel_length out of range");
    if (b.num_filters <= 0) throw std::invalid_argument("model: num_filters must be positive");
    const std::size_t expected =
        static_cast<std::size_t>(b.kernel_length) * alpha * b.num_filters;
    if (b.kernel.size() != expected) throw std::invalid_argument("model: kernel shape mismatch");
    if (b.bias.size() != static_cast<std::size_t>(b.num_filters))
      throw std::invalid_argument("model: conv bias shape mismatch");
  }
  const std::size_t tf = static_cast<std::size_t>(total_filters());
  if (dense_weights.size() != tf * class_ids.size())
    throw std::invalid_argument("model: dense weight shape mismatch");
  if (dense_bias.size() != class_ids.size())
    throw std::invalid_argument("model: dense bias shape mismatch");
}

Model load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open model file: " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("model file " + path.string() + ": " + e.what());
  }

  Model m;
  try {
    m.alphabet = j.at("alphabet").get<std::string>();
    m.max_len = j.at("max_len").get<int>();
    for (const auto& jb : j.at("filter_banks")) {
      FilterBank b;
      b.kernel_length = jb.at("kernel_length").get<int>();
      b.num_filters = jb.at("num_filters").get<int>();
      b.kernel = jb.at("kernel").get<std::vector<double>>();
      b.bias = jb.at("bias").get<std::vector<double>>();
      m.banks.push_back(std::move(b));
    }
    m.dense_weights = j.at("dense_weights").get<std::vector<double>>();
    m.dense_bias = j.at("dense_bias").get<std::vector<double>>();
    m.class_ids = j.at("class_ids").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("model file " + path.string() + ": " + e.what());
  }
  m.validate();
  return m;
}

void save_model(const Model& model, const std::filesystem::path& path) {
  model.validate();
  nlohmann::json j;
  j["alphabet"] = model.alphabet;
  j["max_len"] = model.max_len;
  j["filter_banks"] = nlohmann::json::array();
  for (const auto& b : model.banks) {
    j["filter_banks"].push_back({{"kernel_length", b.kernel_length},
                                 {"num_filters", b.num_filters},
                                 {"kernel", b.kernel},
                                 {"bias", b.bias}});
  }
  j["dense_weights"] = model.dense_weights;
  j["dense_bias"] = model.dense_bias;
  j["class_ids"] = model.class_ids;

  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write model file: " + path.string());
  out << j.dump(1) << "\n";
}

}  // namespace fpuq
