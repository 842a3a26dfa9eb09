#include "packedge/scan.hpp"

#include <omp.h>

#include <algorithm>

#include "packedge/graph6.hpp"

namespace packedge {

std::vector<const ScanEntry*> ScanReport::with_status(SolveStatus s) const {
  std::vector<const ScanEntry*> out;
  for (const auto& e : entries) {
    if (e.outcome && e.outcome->status == s) out.push_back(&e);
  }
  return out;
}

std::size_t ScanReport::errors() const {
  return static_cast<std::size_t>(std::count_if(
      entries.begin(), entries.end(), [](const ScanEntry& e) { return !e.outcome; }));
}

std::vector<std::filesystem::path> list_corpus(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

ScanReport scan_corpus(std::span<const std::filesystem::path> files,
                       const PackingSequence& s, const Budget& budget, int jobs) {
  std::vector<std::filesystem::path> sorted(files.begin(), files.end());
  std::sort(sorted.begin(), sorted.end());

  ScanReport report;
  std::vector<Graph> graphs;
  std::vector<std::size_t> work;  // entry index per graph
  for (const auto& path : sorted) {
    try {
      auto parsed = parse_graphs(read_text_file(path), GraphFormat::Auto);
      for (std::size_t i = 0; i < parsed.size(); ++i) {
        ScanEntry entry{path.string(), static_cast<int>(i), encode_graph6(parsed[i]), {}, {}};
        work.push_back(report.entries.size());
        report.entries.push_back(std::move(entry));
        graphs.push_back(std::move(parsed[i]));
      }
    } catch (const std::exception& ex) {
      report.entries.push_back({path.string(), 0, {}, std::nullopt, ex.what()});
    }
  }

  const long n = static_cast<long>(graphs.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(jobs, 1))
  for (long i = 0; i < n; ++i) {
    ScanEntry& entry = report.entries[work[i]];
    try {
      entry.outcome = solve_serial(graphs[i], s, budget);
    } catch (const std::exception& ex) {
      entry.error = ex.what();
    }
  }
  return report;
}

}  // namespace packedge
