#include "twodist/io.hpp"

#include <fstream>
#include <sstream>

namespace twodist {

namespace {
constexpr const char* kHeaderPrefix = "# twodist-cache ";
}

uint64_t cache_key(const std::string& stage_tag, const std::string& payload, const std::vector<uint64_t>& upstream) {
    uint64_t h = fnv1a64(stage_tag);
    h = fnv1a64(payload, h);
    for (uint64_t up : upstream) h = fnv1a64(hex64(up), h);
    return h;
}

void cache_store(const std::filesystem::path& path, const std::string& payload, uint64_t key) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    check(static_cast<bool>(os), "cache_store: cannot open " + path.string());
    os << kHeaderPrefix << hex64(key) << '\n' << payload;
    check(static_cast<bool>(os), "cache_store: write failed for " + path.string());
}

std::optional<CacheFile> cache_load(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) return std::nullopt;
    std::string header;
    if (!std::getline(is, header)) return std::nullopt;
    if (header.rfind(kHeaderPrefix, 0) != 0) return std::nullopt;
    std::string hex = header.substr(std::string(kHeaderPrefix).size());
    if (hex.size() != 16) return std::nullopt;
    CacheFile f;
    f.key = 0;
    for (char c : hex) {
        int d;
        if (c >= '0' && c <= '9')
            d = c - '0';
        else if (c >= 'a' && c <= 'f')
            d = c - 'a' + 10;
        else
            return std::nullopt;
        f.key = (f.key << 4) | static_cast<uint64_t>(d);
    }
    std::ostringstream body;
    body << is.rdbuf();
    f.payload = body.str();
    return f;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    check(static_cast<bool>(is), "read_file: cannot open " + path.string());
    std::ostringstream body;
    body << is.rdbuf();
    return body.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    check(static_cast<bool>(os), "write_file: cannot open " + path.string());
    os << content;
    check(static_cast<bool>(os), "write_file: write failed for " + path.string());
}

}  // namespace twodist
