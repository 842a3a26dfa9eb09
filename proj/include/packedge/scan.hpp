#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "packedge/packing.hpp"

namespace packedge {

struct ScanEntry {
  std::string path;
  int index = 0;  // graph position inside its file
  std::string graph6;
  std::optional<SolveOutcome> outcome;
  std::string error;  // set instead of outcome for unreadable/unparsable input
};

struct ScanReport {
  std::vector<ScanEntry> entries;

  std::vector<const ScanEntry*> with_status(SolveStatus s) const;
  std::size_t errors() const;
};

/// Regular files under `dir` (non-recursive), sorted by path.
std::vector<std::filesystem::path> list_corpus(const std::filesystem::path& dir);

/// Solves every graph of every file. Files are taken in sorted path order and
/// entries keep that order whatever the completion order of the `jobs`
/// threads. Per-file failures become error entries; the scan continues.
ScanReport scan_corpus(std::span<const std::filesystem::path> files,
                       const PackingSequence& s, const Budget& budget, int jobs = 1);

}  // namespace packedge
