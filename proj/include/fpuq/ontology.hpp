// Hierarchical class vocabulary: a DAG of child->parent edges partitioned
// under the three root labels, annotation propagation, and information
// content derived from a truth corpus.
#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace fpuq {

using ClassSet = std::set<int>;

inline constexpr const char* kPartitionNames[3] = {"MF", "CC", "BP"};

struct Ontology {
  std::vector<std::string> ids;           // class index -> identifier
  std::map<std::string, int> index;       // identifier -> class index
  std::vector<std::vector<int>> parents;  // class index -> parent indices
  std::vector<int> partition;             // class index -> 0 MF, 1 CC, 2 BP

  int num_classes() const { return static_cast<int>(ids.size()); }
  int class_index(const std::string& id) const;  // throws on unknown id

  /// Validates acyclicity and that every class reaches exactly one
  /// partition root; called by load_ontology.
  void validate() const;
};

/// Tab-separated child/parent pairs. A class whose parent field is one of
/// the root labels MF/CC/BP is a partition root; root labels themselves
/// are not classes.
Ontology load_ontology(const std::filesystem::path& path);
void save_ontology(const Ontology& onto, const std::filesystem::path& path);

/// Close a set of annotations under parent edges. Idempotent.
ClassSet propagate(const Ontology& onto, const ClassSet& direct);

/// Per-protein direct annotations keyed by protein id, from tab-separated
/// protein/class lines.
std::map<std::string, ClassSet> load_annotations(const std::filesystem::path& path,
                                                 const Ontology& onto);
void save_annotations(const std::map<std::string, ClassSet>& annotations, const Ontology& onto,
                      const std::filesystem::path& path);

enum class IcMode {
  frequency,            // IC(c) = -log2(n_c / n)
  conditional_parents,  // IC(c) = -log2(n_c / n_{parents of c all present})
};

/// Information content per class from an ancestor-closed truth corpus.
/// Classes absent from the corpus get no entry (flagged by the caller).
std::vector<double> information_content(const std::vector<ClassSet>& corpus, int num_classes,
                                        const Ontology& onto, IcMode mode = IcMode::frequency);

}  // namespace fpuq
