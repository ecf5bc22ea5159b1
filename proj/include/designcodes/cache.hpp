#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace dcodes {

/// Flat-file result cache. Each entry lives in `<dir>/<sha256(key)>.json`
/// and records the format version and the full key, so a hash collision or
/// an old format reads as a miss.
class Cache {
 public:
  static constexpr int kVersion = 1;

  /// A disabled cache when `dir` is empty.
  explicit Cache(std::filesystem::path dir = {});

  /// `explicit_dir` if set, else $DESIGNCODES_CACHE, else disabled.
  static Cache from_environment(const std::string& explicit_dir);

  bool enabled() const noexcept { return !dir_.empty(); }
  std::optional<std::string> get(const std::string& key) const;
  void put(const std::string& key, const std::string& value) const;

 private:
  std::filesystem::path path_for(const std::string& key) const;
  std::filesystem::path dir_;
};

/// Lowercase hex SHA-256 of `data`.
std::string sha256_hex(const std::string& data);

}  // namespace dcodes
