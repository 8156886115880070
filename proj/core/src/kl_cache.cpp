#include "cellkit/kl_cache.hpp"

#include <boost/crc.hpp>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cellkit/errors.hpp"

namespace cellkit {

using nlohmann::json;

namespace {

std::string crc32_hex(const std::string& bytes) {
  boost::crc_32_type crc;
  crc.process_bytes(bytes.data(), bytes.size());
  char buf[9];
  std::snprintf(buf, sizeof buf, "%08x", static_cast<unsigned>(crc.checksum()));
  return buf;
}

json read_json(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw CacheError("cannot open KL cache " + file.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw CacheError("KL cache " + file.string() + " is not valid JSON (" + e.what() + "); re-run `cache warm`");
  }
}

Coefficient parse_coefficient(const std::string& s) {
  Coefficient v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw CacheError("bad coefficient \"" + s + "\" in KL cache");
  return v;
}

}  // namespace

std::filesystem::path kl_cache_path(const std::filesystem::path& dir, CartanType type, int rank) {
  return dir / ("kl_" + std::string(1, to_char(type)) + std::to_string(rank) + ".json");
}

void save_kl_cache(const KLTable& table, const std::filesystem::path& file) {
  const CoxeterSystem& W = table.system();
  table.precompute_all();
  json records = json::array();
  for (ElementId w = 0; w < W.order(); ++w) {
    const KLColumn& col = table.column(w);
    for (std::size_t i = 0; i < col.ys.size(); ++i) {
      json terms = json::array();
      for (const auto& t : col.ps[i].terms()) terms.push_back({t.exponent, std::to_string(t.coeff)});
      records.push_back({W.word(col.ys[i]), W.word(w), std::move(terms)});
    }
  }
  json doc;
  doc["format_version"] = kCacheFormatVersion;
  doc["cartan_type"] = std::string(1, to_char(W.cartan_type()));
  doc["rank"] = W.rank();
  doc["normalization"] = kCacheNormalization;
  doc["order"] = W.order();
  doc["checksum"] = crc32_hex(records.dump());
  doc["records"] = std::move(records);

  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  const auto tmp = std::filesystem::path(file.string() + ".tmp");
  {
    std::ofstream out(tmp);
    if (!out) throw CacheError("cannot write KL cache " + tmp.string());
    out << doc.dump() << '\n';
    if (!out) throw CacheError("failed writing KL cache " + tmp.string());
  }
  std::filesystem::rename(tmp, file);
}

CacheInfo inspect_kl_cache(const std::filesystem::path& file) {
  json doc = read_json(file);
  CacheInfo info;
  try {
    info.format_version = doc.at("format_version").get<int>();
    info.cartan_type = doc.at("cartan_type").get<std::string>();
    info.rank = doc.at("rank").get<int>();
    info.normalization = doc.at("normalization").get<std::string>();
    info.order = doc.at("order").get<std::size_t>();
    info.stored_checksum = doc.at("checksum").get<std::string>();
    const json& records = doc.at("records");
    info.records = records.size();
    info.computed_checksum = crc32_hex(records.dump());
  } catch (const json::exception& e) {
    throw CacheError("KL cache " + file.string() + " has a malformed header (" + e.what() + ")");
  }
  return info;
}

std::unique_ptr<KLTable> load_kl_cache(std::shared_ptr<const CoxeterSystem> system, const std::filesystem::path& file) {
  const CoxeterSystem& W = *system;
  json doc = read_json(file);
  const CacheInfo info = inspect_kl_cache(file);
  const std::string type(1, to_char(W.cartan_type()));
  if (info.format_version != kCacheFormatVersion || info.cartan_type != type || info.rank != W.rank() ||
      info.normalization != kCacheNormalization || info.order != W.order())
    throw CacheError("KL cache " + file.string() + " was written for " + info.cartan_type + std::to_string(info.rank) +
                     " (format " + std::to_string(info.format_version) + ", normalization " + info.normalization +
                     "), not " + W.name() + "; re-run `cache warm`");
  if (!info.checksum_ok())
    throw CacheError("KL cache " + file.string() + " failed its checksum (stored " + info.stored_checksum +
                     ", computed " + info.computed_checksum + "); delete it and re-run `cache warm`");

  std::vector<KLColumn> columns(W.order());
  ElementId last_w = 0;
  try {
    for (const json& rec : doc.at("records")) {
      const ElementId y = W.parse_id(rec.at(0).get<std::string>());
      const ElementId w = W.parse_id(rec.at(1).get<std::string>());
      if (w < last_w) throw CacheError("KL cache records are out of order");
      last_w = w;
      std::vector<LaurentPoly::Term> terms;
      for (const json& t : rec.at(2)) terms.push_back({t.at(0).get<int>(), parse_coefficient(t.at(1).get<std::string>())});
      KLColumn& col = columns[w];
      if (!col.ys.empty() && col.ys.back() >= y) throw CacheError("KL cache records are out of order");
      col.ys.push_back(y);
      col.ps.push_back(LaurentPoly::from_terms(std::move(terms)));
    }
  } catch (const json::exception& e) {
    throw CacheError("KL cache " + file.string() + " has a malformed record (" + e.what() + ")");
  } catch (const UsageError& e) {
    throw CacheError("KL cache " + file.string() + " has an invalid element word (" + e.what() + ")");
  }
  return std::make_unique<KLTable>(std::move(system), std::move(columns));
}

}  // namespace cellkit
