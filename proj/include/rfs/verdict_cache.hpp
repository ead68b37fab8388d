#pragma once
// Flat-file verdict cache: maps a canonical request key to the exact verdict
// JSON text emitted when the check first ran. Keys use isomorphism-canonical
// pattern encodings, so textually different specs of the same pattern share
// entries, and hits replay byte-identical output.

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "rfs/graph.hpp"

namespace rfs {

class VerdictCache {
 public:
  explicit VerdictCache(std::string path);  // loads the file when present

  static std::string make_key(const Graph& h1, const Graph& h2, int min_n, int max_n,
                              int min_colors, const std::string& mode, std::uint64_t samples,
                              std::uint64_t seed);

  std::optional<std::string> lookup(const std::string& key) const;
  void store(const std::string& key, const std::string& verdict_json);
  void save() const;

  size_t size() const { return records_.size(); }
  const std::map<std::string, std::string>& records() const { return records_; }

 private:
  std::string path_;
  std::map<std::string, std::string> records_;
};

}  // namespace rfs
