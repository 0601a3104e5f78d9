#include "fpuq/ontology.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace fpuq {

namespace {

int partition_label_index(const std::string& label) {
  for (int i = 0; i < 3; ++i)
    if (label == kPartitionNames[i]) return i;
  return -1;
}

}  // namespace

int Ontology::class_index(const std::string& id) const {
  const auto it = index.find(id);
  if (it == index.end()) throw std::invalid_argument("unknown ontology class: " + id);
  return it->second;
}

void Ontology::validate() const {
  const int n = num_classes();

  // Cycle check: iterative DFS over parent edges.
  std::vector<int> state(n, 0);  // 0 unvisited, 1 on stack, 2 done
  std::function<void(int)> visit = [&](int c) {
    state[c] = 1;
    for (const int p : parents[c]) {
      if (state[p] == 1) throw std::invalid_argument("ontology: cycle through class " + ids[c]);
      if (state[p] == 0) visit(p);
    }
    state[c] = 2;
  };
  for (int c = 0; c < n; ++c)
    if (state[c] == 0) visit(c);

  for (int c = 0; c < n; ++c) {
    if (partition[c] < 0)
      throw std::invalid_argument("ontology: class " + ids[c] + " reaches no partition root");
  }
}

Ontology load_ontology(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open ontology file: " + path.string());

  Ontology onto;
  auto intern = [&onto](const std::string& id) {
    const auto it = onto.index.find(id);
    if (it != onto.index.end()) return it->second;
    const int idx = onto.num_classes();
    onto.index.emplace(id, idx);
    onto.ids.push_back(id);
    onto.parents.emplace_back();
    return idx;
  };

  // Partition of the root a class points at; -1 until known.
  std::vector<std::pair<int, int>> root_decls;  // (class, partition)
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw std::runtime_error(path.string() + ":" + std::to_string(lineno) +
                               ": expected child<TAB>parent");
    const std::string child = line.substr(0, tab);
    const std::string parent = line.substr(tab + 1);
    if (child.empty() || parent.empty())
      throw std::runtime_error(path.string() + ":" + std::to_string(lineno) + ": empty field");

    const int child_idx = intern(child);
    const int part = partition_label_index(parent);
    if (part >= 0) {
      root_decls.emplace_back(child_idx, part);
    } else {
      onto.parents[child_idx].push_back(intern(parent));
    }
  }

  const int n = onto.num_classes();
  onto.partition.assign(n, -1);
  for (const auto& [root, part] : root_decls) {
    if (onto.partition[root] >= 0 && onto.partition[root] != part)
      throw std::runtime_error("ontology: class " + onto.ids[root] + " declared under two roots");
    onto.partition[root] = part;
  }

  // Propagate partitions downward: a class lives in the partition of the
  // roots it reaches; reaching two partitions is an error.
  std::function<int(int, std::vector<int>&)> resolve = [&](int c, std::vector<int>& seen) -> int {
    if (seen[c] == 1)
      throw std::runtime_error("ontology: cycle through class " + onto.ids[c]);
    if (onto.partition[c] >= 0) return onto.partition[c];
    seen[c] = 1;
    int part = -1;
    for (const int p : onto.parents[c]) {
      const int pp = resolve(p, seen);
      if (part >= 0 && pp >= 0 && pp != part)
        throw std::runtime_error("ontology: class " + onto.ids[c] + " reaches two partitions");
      if (pp >= 0) part = pp;
    }
    seen[c] = 2;
    onto.partition[c] = part;
    return part;
  };
  std::vector<int> seen(n, 0);
  for (int c = 0; c < n; ++c) resolve(c, seen);

  onto.validate();
  return onto;
}

void save_ontology(const Ontology& onto, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write ontology file: " + path.string());
  for (int c = 0; c < onto.num_classes(); ++c) {
    if (onto.parents[c].empty())
      out << onto.ids[c] << '\t' << kPartitionNames[onto.partition[c]] << '\n';
    for (const int p : onto.parents[c]) out << onto.ids[c] << '\t' << onto.ids[p] << '\n';
  }
}

ClassSet propagate(const Ontology& onto, const ClassSet& direct) {
  ClassSet closed;
  std::vector<int> stack(direct.begin(), direct.end());
  for (const int c : stack)
    if (c < 0 || c >= onto.num_classes()) throw std::invalid_argument("propagate: unknown class index");
  while (!stack.empty()) {
    const int c = stack.back();
    stack.pop_back();
    if (!closed.insert(c).second) continue;
    for (const int p : onto.parents[c]) stack.push_back(p);
  }
  return closed;
}

std::map<std::string, ClassSet> load_annotations(const std::filesystem::path& path,
                                                 const Ontology& onto) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open annotation file: " + path.string());
  std::map<std::string, ClassSet> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw std::runtime_error(path.string() + ":" + std::to_string(lineno) +
                               ": expected protein<TAB>class");
    const std::string protein = line.substr(0, tab);
    const std::string cls = line.substr(tab + 1);
    out[protein].insert(onto.class_index(cls));
  }
  return out;
}

void save_annotations(const std::map<std::string, ClassSet>& annotations, const Ontology& onto,
                      const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write annotation file: " + path.string());
  for (const auto& [protein, classes] : annotations)
    for (const int c : classes) out << protein << '\t' << onto.ids[c] << '\n';
}

std::vector<double> information_content(const std::vector<ClassSet>& corpus, int num_classes,
                                        const Ontology& onto, IcMode mode) {
  if (corpus.empty()) throw std::invalid_argument("information_content: empty corpus");
  const double n = static_cast<double>(corpus.size());

  std::vector<double> count(num_classes, 0.0);
  for (const auto& set : corpus)
    for (const int c : set) count[c] += 1.0;

  std::vector<double> ic(num_classes, std::numeric_limits<double>::quiet_NaN());
  for (int c = 0; c < num_classes; ++c) {
    if (count[c] == 0.0) continue;  // undefined, caller excludes with a warning
    double denom = n;
    if (mode == IcMode::conditional_parents && !onto.parents[c].empty()) {
      double with_parents = 0.0;
      for (const auto& set : corpus) {
        bool all = true;
        for (const int p : onto.parents[c])
          if (!set.count(p)) { all = false; break; }
        if (all) with_parents += 1.0;
      }
      denom = with_parents;
    }
    if (denom > 0.0) ic[c] = -std::log2(count[c] / denom);
  }
  return ic;
}

}  // namespace fpuq
