#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace fpuq {

struct FastaRecord {
  std::string id;  // first token of the header line
  std::string sequence;
};

std::vector<FastaRecord> read_fasta(const std::filesystem::path& path);
void write_fasta(const std::vector<FastaRecord>& records, const std::filesystem::path& path);

}  // namespace fpuq
