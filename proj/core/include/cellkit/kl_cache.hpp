#pragma once

#include <filesystem>
#include <memory>
#include <string>

#include "cellkit/kl_table.hpp"

namespace cellkit {

inline constexpr int kCacheFormatVersion = 1;
inline constexpr const char* kCacheNormalization = "selfdual-v";

/// <dir>/kl_<type><rank>.json
std::filesystem::path kl_cache_path(const std::filesystem::path& dir, CartanType type, int rank);

/// Writes every p(y,w), y <= w, in canonical order (by w, then y) with
/// decimal-string coefficients and a CRC32 over the records.
void save_kl_cache(const KLTable& table, const std::filesystem::path& file);

/// Loads a complete table. Any header mismatch, checksum failure or
/// malformed record raises CacheError; nothing is recomputed.
std::unique_ptr<KLTable> load_kl_cache(std::shared_ptr<const CoxeterSystem> system, const std::filesystem::path& file);

struct CacheInfo {
  int format_version = 0;
  std::string cartan_type;
  int rank = 0;
  std::string normalization;
  std::size_t order = 0;
  std::size_t records = 0;
  std::string stored_checksum;
  std::string computed_checksum;
  bool checksum_ok() const { return stored_checksum == computed_checksum; }
};

/// Reads the header and recomputes the checksum without validating records.
CacheInfo inspect_kl_cache(const std::filesystem::path& file);

}  // namespace cellkit
