#include "kunneth/cache.hpp"

#include <atomic>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace kunneth {

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

TableCache::TableCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::filesystem::path TableCache::path_for(const std::string& key) const {
  char name[32];
  std::snprintf(name, sizeof name, "%016llx.json", static_cast<unsigned long long>(fnv1a64(key)));
  return dir_ / name;
}

std::optional<std::vector<SparseVec>> TableCache::load(const std::string& key) const {
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  try {
    auto j = nlohmann::json::parse(in);
    if (j.at("key").get<std::string>() != key) return std::nullopt;
    std::vector<SparseVec> out;
    for (const auto& col : j.at("columns")) {
      SparseVec v;
      for (const auto& e : col) v.emplace_back(e.at(0).get<int>(), Scalar(e.at(1).get<std::string>()));
      out.push_back(std::move(v));
    }
    return out;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void TableCache::store(const std::string& key, const std::vector<SparseVec>& columns) const {
  nlohmann::json cols = nlohmann::json::array();
  for (const auto& c : columns) {
    nlohmann::json col = nlohmann::json::array();
    for (const auto& [i, v] : c) col.push_back({i, v.get_str()});
    cols.push_back(std::move(col));
  }
  nlohmann::json j{{"key", key}, {"columns", cols}};
  static std::atomic<unsigned> counter{0};
  auto target = path_for(key);
  std::ostringstream tmp_name;
  tmp_name << target.filename().string() << ".tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id()) << '.'
           << counter++;
  auto tmp = dir_ / tmp_name.str();
  {
    std::ofstream out(tmp);
    if (!out) return;  // read-only cache directory: run uncached
    out << j.dump();
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      return;
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace kunneth
