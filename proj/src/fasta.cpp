#include "fpuq/fasta.hpp"

#include <cctype>
#include <fstream>
#include <stdexcept>

namespace fpuq {

std::vector<FastaRecord> read_fasta(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open FASTA file: " + path.string());

  std::vector<FastaRecord> records;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '>') {
      FastaRecord rec;
      const auto sp = line.find_first_of(" \t", 1);
      rec.id = line.substr(1, sp == std::string::npos ? std::string::npos : sp - 1);
      if (rec.id.empty()) throw std::runtime_error("FASTA: empty record id in " + path.string());
      records.push_back(std::move(rec));
    } else {
      if (records.empty())
        throw std::runtime_error("FASTA: sequence data before first header in " + path.string());
      for (const char c : line) {
        if (!std::isspace(static_cast<unsigned char>(c)))
          records.back().sequence.push_back(c);
      }
    }
  }
  if (records.empty()) throw std::runtime_error("FASTA: no records in " + path.string());
  return records;
}

void write_fasta(const std::vector<FastaRecord>& records, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write FASTA file: " + path.string());
  for (const auto& rec : records) {
    out << '>' << rec.id << '\n';
    for (std::size_t i = 0; i < rec.sequence.size(); i += 70)
      out << rec.sequence.substr(i, 70) << '\n';
  }
}

}  // namespace fpuq
