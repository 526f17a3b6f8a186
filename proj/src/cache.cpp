/*
   Copyright 2026 The chevtool Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "chev/cache.hpp"

#include <atomic>
#include <boost/crc.hpp>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <unistd.h>

namespace chev {

namespace fs = std::filesystem;

namespace {

std::uint32_t crc32(const std::string& s) {
    boost::crc_32_type c;
    c.process_bytes(s.data(), s.size());
    return c.checksum();
}

std::string hex(std::uint64_t v, int width) {
    std::ostringstream os;
    os << std::hex;
    os.width(width);
    os.fill('0');
    os << v;
    return os.str();
}

}  // namespace

std::string CacheKey::to_string() const {
    return command + "|" + group + "|" + std::to_string(n) + "|" + std::to_string(d) + "|" + std::to_string(p) + "|" +
           std::to_string(degree) + "|" + extra + "|v" + std::to_string(schema_version);
}

std::string CacheKey::file_name() const {
    std::string safe;
    for (char c : command + "-" + group + std::to_string(n) + "-d" + std::to_string(d) + "-p" + std::to_string(p) + "-m" +
                      std::to_string(degree))
        safe.push_back(std::isalnum(static_cast<unsigned char>(c)) || c == '-' ? c : '_');
    return safe + "-" + hex(crc32(to_string()), 8) + ".entry";
}

ResultCache::ResultCache(std::string dir, std::function<void(const std::string&)> warn)
    : dir_(std::move(dir)), warn_(std::move(warn)) {
    if (!warn_) warn_ = [](const std::string& m) { std::cerr << "warning: " << m << "\n"; };
}

// File layout: a header line "chevtool-cache <schema> <crc32 hex> <key>", then the payload.
std::optional<std::string> ResultCache::get(const CacheKey& key) const {
    const fs::path path = fs::path(dir_) / key.file_name();
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::string header;
    if (!std::getline(in, header)) return std::nullopt;
    std::ostringstream body;
    body << in.rdbuf();
    const std::string payload = body.str();
    std::istringstream hs(header);
    std::string magic, crc_text, stored_key;
    int schema = -1;
    hs >> magic >> schema >> crc_text;
    std::getline(hs, stored_key);
    if (!stored_key.empty() && stored_key.front() == ' ') stored_key.erase(0, 1);
    if (magic != "chevtool-cache") {
        warn_("cache entry " + path.string() + " has no valid header; ignoring it");
        return std::nullopt;
    }
    if (schema != key.schema_version || stored_key != key.to_string()) return std::nullopt;
    if (crc_text != hex(crc32(payload), 8)) {
        warn_("cache entry " + path.string() + " failed its checksum; recomputing");
        return std::nullopt;
    }
    return payload;
}

void ResultCache::put(const CacheKey& key, const std::string& value) const {
    static std::atomic<unsigned> counter{0};
    fs::create_directories(dir_);
    const fs::path final_path = fs::path(dir_) / key.file_name();
    std::ostringstream tmp_name;
    tmp_name << key.file_name() << ".tmp." << ::getpid() << "." << std::hash<std::thread::id>{}(std::this_thread::get_id()) << "."
             << counter++;
    const fs::path tmp = fs::path(dir_) / tmp_name.str();
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
        out << "chevtool-cache " << key.schema_version << " " << hex(crc32(value), 8) << " " << key.to_string() << "\n" << value;
        if (!out.flush()) throw std::runtime_error("cannot write cache file " + tmp.string());
    }
    fs::rename(tmp, final_path);
}

}  // namespace chev
