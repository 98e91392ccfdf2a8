#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "twodist/common.hpp"

namespace twodist {

// Cached stage artifacts: a one-line header carrying an FNV-1a key over
// (stage tag, payload, upstream keys), then the payload in the plain text
// formats of the matrix/lattice modules. A key mismatch on load means the
// cache is stale or corrupted and the stage recomputes.
struct CacheFile {
    std::string payload;
    uint64_t key = 0;
};

uint64_t cache_key(const std::string& stage_tag, const std::string& payload, const std::vector<uint64_t>& upstream);

void cache_store(const std::filesystem::path& path, const std::string& payload, uint64_t key);
std::optional<CacheFile> cache_load(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace twodist
