#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kunneth/linalg.hpp"

namespace kunneth {

std::uint64_t fnv1a64(std::string_view text);

/// On-disk store of structure-constant tables, one JSON file per table,
/// named by the FNV-1a hash of a key string that is also stored in the file.
/// Unreadable or mismatching files count as misses.  Writes go through a
/// temporary file and a rename, so concurrent writers never leave partial files.
class TableCache {
 public:
  explicit TableCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(const std::string& key) const;
  std::optional<std::vector<SparseVec>> load(const std::string& key) const;
  void store(const std::string& key, const std::vector<SparseVec>& columns) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace kunneth
