#include "designcodes/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>
#include <openssl/evp.h>

namespace dcodes {

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

Cache::Cache(std::filesystem::path dir) : dir_(std::move(dir)) {}

Cache Cache::from_environment(const std::string& explicit_dir) {
  if (!explicit_dir.empty()) return Cache(explicit_dir);
  if (const char* env = std::getenv("DESIGNCODES_CACHE"); env && *env) return Cache(env);
  return Cache();
}

std::filesystem::path Cache::path_for(const std::string& key) const { return dir_ / (sha256_hex(key) + ".json"); }

std::optional<std::string> Cache::get(const std::string& key) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  const auto j = nlohmann::json::parse(buf.str(), nullptr, false);
  if (j.is_discarded() || !j.is_object() || j.value("version", 0) != kVersion || j.value("key", "") != key ||
      !j.contains("value") || !j["value"].is_string())
    return std::nullopt;
  return j["value"].get<std::string>();
}

void Cache::put(const std::string& key, const std::string& value) const {
  if (!enabled()) return;
  std::filesystem::create_directories(dir_);
  nlohmann::ordered_json j;
  j["version"] = kVersion;
  j["key"] = key;
  j["value"] = value;
  // Write then rename so a concurrent reader never sees half a file.
  const auto target = path_for(key);
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    out << j.dump() << '\n';
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace dcodes
