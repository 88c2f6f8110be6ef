#include "cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

namespace lcmcap {

namespace {

constexpr std::uint64_t kMagic = 0x4c434d5054424c31ull;  // "LCMPTBL1"

std::string cache_path(const char* dir, std::uint64_t limit) {
  return std::string(dir) + "/primes-" + std::to_string(limit) + ".bin";
}

bool load_table(const std::string& path, std::uint64_t limit, PrimeTable& out) {
  std::FILE* f = std::fopen(path.c_str(), "rb");
  if (!f) return false;
  std::uint64_t header[3];
  bool ok = std::fread(header, sizeof header, 1, f) == 1 && header[0] == kMagic &&
            header[1] == limit;
  if (ok) {
    out.limit = limit;
    out.primes.resize(header[2]);
    ok = header[2] == 0 ||
         std::fread(out.primes.data(), sizeof(std::uint64_t), out.primes.size(), f) ==
             out.primes.size();
  }
  std::fclose(f);
  return ok;
}

void store_table(const std::string& path, const PrimeTable& table) {
  const std::string tmp = path + ".tmp";
  std::FILE* f = std::fopen(tmp.c_str(), "wb");
  if (!f) return;
  const std::uint64_t header[3] = {kMagic, table.limit,
                                   static_cast<std::uint64_t>(table.primes.size())};
  bool ok = std::fwrite(header, sizeof header, 1, f) == 1 &&
            (table.primes.empty() ||
             std::fwrite(table.primes.data(), sizeof(std::uint64_t),
                         table.primes.size(), f) == table.primes.size());
  std::fclose(f);
  std::error_code ec;
  if (ok)
    std::filesystem::rename(tmp, path, ec);
  if (!ok || ec) std::filesystem::remove(tmp, ec);
}

}  // namespace

PrimeTable cached_prime_table(std::uint64_t limit, std::uint64_t max_limit) {
  const char* dir = std::getenv("LCMCAP_CACHE_DIR");
  if (dir && *dir) {
    const std::string path = cache_path(dir, limit);
    PrimeTable table;
    if (load_table(path, limit, table)) return table;
    table = PrimeTable::sieve(limit, max_limit);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (!ec) store_table(path, table);
    return table;
  }
  return PrimeTable::sieve(limit, max_limit);
}

}  // namespace lcmcap
