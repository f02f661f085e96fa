#include "closure/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string_view>

#include "closure/complex_view.hpp"

namespace closure {

bool Interaction::contains(NodeId v) const noexcept {
  return std::binary_search(nodes.begin(), nodes.end(), v);
}

bool Interaction::contains_all(std::span<const NodeId> sorted_subset) const noexcept {
  return std::includes(nodes.begin(), nodes.end(), sorted_subset.begin(), sorted_subset.end());
}

std::optional<NodeId> SimplicialDataset::dense_id(RawNodeId raw) const {
  auto it = std::lower_bound(raw_ids.begin(), raw_ids.end(), raw);
  if (it == raw_ids.end() || *it != raw) return std::nullopt;
  return static_cast<NodeId>(it - raw_ids.begin());
}

SimplicialDataset normalize_dataset(std::string name, std::vector<RawInteraction> records) {
  SimplicialDataset ds;
  ds.name = std::move(name);

  std::vector<RawInteraction> kept;
  kept.reserve(records.size());
  for (auto& rec : records) {
    std::sort(rec.nodes.begin(), rec.nodes.end());
    if (rec.nodes.empty() ||
        std::adjacent_find(rec.nodes.begin(), rec.nodes.end()) != rec.nodes.end()) {
      ++ds.dropped_degenerate;
      continue;
    }
    if (rec.nodes.size() > kMaxSimplexOrder) {
      ++ds.dropped_oversize;
      continue;
    }
    kept.push_back(std::move(rec));
  }
  std::stable_sort(kept.begin(), kept.end(), [](const RawInteraction& a, const RawInteraction& b) {
    return a.time < b.time;
  });

  for (const auto& rec : kept) ds.raw_ids.insert(ds.raw_ids.end(), rec.nodes.begin(), rec.nodes.end());
  std::sort(ds.raw_ids.begin(), ds.raw_ids.end());
  ds.raw_ids.erase(std::unique(ds.raw_ids.begin(), ds.raw_ids.end()), ds.raw_ids.end());
  ds.node_count = ds.raw_ids.size();

  ds.interactions.reserve(kept.size());
  for (const auto& rec : kept) {
    Interaction it;
    it.time = rec.time;
    it.nodes.reserve(rec.nodes.size());
    // Ascending raw ids map to ascending dense ids, so order is preserved.
    for (RawNodeId raw : rec.nodes) {
      auto pos = std::lower_bound(ds.raw_ids.begin(), ds.raw_ids.end(), raw);
      it.nodes.push_back(static_cast<NodeId>(pos - ds.raw_ids.begin()));
    }
    ds.interactions.push_back(std::move(it));
  }
  return ds;
}

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open dataset file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

// One integer per line. Blank lines are accepted only at the end of file.
template <typename Int>
std::vector<Int> read_integer_column(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  std::vector<Int> values;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  std::size_t first_blank = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) nl = text.size();
    ++line_no;
    std::string_view line(text.data() + pos, nl - pos);
    pos = nl + 1;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (line.empty()) {
      if (first_blank == 0) first_blank = line_no;
      continue;
    }
    if (first_blank != 0) {
      throw LoadError(path.string() + ":" + std::to_string(first_blank) + ": empty line");
    }
    Int value{};
    auto [end, ec] = std::from_chars(line.data(), line.data() + line.size(), value);
    if (ec != std::errc{} || end != line.data() + line.size()) {
      throw LoadError(path.string() + ":" + std::to_string(line_no) + ": expected an integer, got '" +
                      std::string(line) + "'");
    }
    values.push_back(value);
  }
  return values;
}

}  // namespace

SimplicialDataset load_dataset(const std::filesystem::path& directory, const std::string& name) {
  const auto nverts_path = directory / (name + "-nverts.txt");
  const auto simplices_path = directory / (name + "-simplices.txt");
  const auto times_path = directory / (name + "-times.txt");
  for (const auto& p : {nverts_path, simplices_path, times_path}) {
    if (!std::filesystem::is_regular_file(p)) throw LoadError("missing dataset file: " + p.string());
  }

  const auto nverts = read_integer_column<std::uint32_t>(nverts_path);
  const auto simplices = read_integer_column<RawNodeId>(simplices_path);
  const auto times = read_integer_column<Timestamp>(times_path);

  if (nverts.size() != times.size()) {
    throw LoadError("inconsistent dataset '" + name + "': " + std::to_string(nverts.size()) +
                    " nverts entries but " + std::to_string(times.size()) + " timestamps");
  }
  const std::uint64_t total = std::accumulate(nverts.begin(), nverts.end(), std::uint64_t{0});
  if (total != simplices.size()) {
    throw LoadError("inconsistent dataset '" + name + "': nverts sums to " + std::to_string(total) +
                    " but simplices has " + std::to_string(simplices.size()) + " entries");
  }

  std::vector<RawInteraction> records(nverts.size());
  std::size_t cursor = 0;
  for (std::size_t i = 0; i < nverts.size(); ++i) {
    records[i].time = times[i];
    records[i].nodes.assign(simplices.begin() + static_cast<std::ptrdiff_t>(cursor),
                            simplices.begin() + static_cast<std::ptrdiff_t>(cursor + nverts[i]));
    cursor += nverts[i];
  }
  return normalize_dataset(name, std::move(records));
}

void write_dataset(const std::filesystem::path& directory, const SimplicialDataset& ds) {
  std::filesystem::create_directories(directory);
  auto open = [&](const char* suffix) {
    const auto path = directory / (ds.name + suffix);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw LoadError("cannot write dataset file: " + path.string());
    return out;
  };
  auto nverts = open("-nverts.txt");
  auto simplices = open("-simplices.txt");
  auto times = open("-times.txt");
  for (const auto& it : ds.interactions) {
    nverts << it.nodes.size() << '\n';
    for (NodeId v : it.nodes) simplices << ds.raw_ids[v] << '\n';
    times << it.time << '\n';
  }
  if (!nverts || !simplices || !times) throw LoadError("write failed for dataset '" + ds.name + "'");
}

StatsRecord dataset_stats(const SimplicialDataset& ds, unsigned threads) {
  StatsRecord stats;
  stats.nodes = ds.node_count;
  stats.simplices = ds.interactions.size();
  if (!ds.empty()) {
    ComplexView full(ds, Window{0, static_cast<InteractionIndex>(ds.size())}, threads);
    stats.skeleton_edges = full.edge_count();
  }
  return stats;
}

}  // namespace closure
