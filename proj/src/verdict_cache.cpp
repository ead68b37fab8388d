#include "rfs/verdict_cache.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace rfs {

VerdictCache::VerdictCache(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;
  nlohmann::json j;
  in >> j;
  for (auto it = j.begin(); it != j.end(); ++it)
    records_[it.key()] = it.value().get<std::string>();
}

std::string VerdictCache::make_key(const Graph& h1, const Graph& h2, int min_n, int max_n,
                                   int min_colors, const std::string& mode,
                                   std::uint64_t samples, std::uint64_t seed) {
  std::ostringstream os;
  os << canonical_key(h1) << "|" << canonical_key(h2) << "|n" << min_n << ".." << max_n << "|c"
     << min_colors << "|" << mode << "|s" << samples << "|seed" << seed;
  return os.str();
}

std::optional<std::string> VerdictCache::lookup(const std::string& key) const {
  auto it = records_.find(key);
  if (it == records_.end()) return std::nullopt;
  return it->second;
}

void VerdictCache::store(const std::string& key, const std::string& verdict_json) {
  records_[key] = verdict_json;
}

void VerdictCache::save() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : records_) j[k] = v;
  std::ofstream out(path_);
  out << j.dump(2) << "\n";
}

}  // namespace rfs
