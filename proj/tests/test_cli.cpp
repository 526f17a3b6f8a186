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


#include <filesystem>
#include <fstream>
#include <random>
#include <thread>

#include "chev/cache.hpp"
#include "chev/cli.hpp"
#include "chev/report.hpp"
#include "doctest.h"

using namespace chev;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / ("chevtool-test-" + std::to_string(std::random_device{}()))) {
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

CacheKey key(unsigned degree) {
    CacheKey k;
    k.command = "phi-check";
    k.group = "gl";
    k.n = 2;
    k.d = 2;
    k.p = 101;
    k.degree = degree;
    k.extra = "F_101";
    return k;
}

RunConfig json_config(const std::string& command) {
    RunConfig c;
    c.command = command;
    c.group = GroupKind::GL;
    c.n = 2;
    c.d = 2;
    c.p = 101;
    c.max_degree = 3;
    c.format = OutputFormat::Json;
    return c;
}

// every number in the document is a string
bool no_json_numbers(const Json& j) {
    if (j.is_number()) return false;
    if (j.is_object() || j.is_array())
        for (const auto& v : j) if (!no_json_numbers(v)) return false;
    return true;
}

}  // namespace

TEST_CASE("cache round trip and misses") {
    TempDir dir;
    std::vector<std::string> warnings;
    ResultCache cache(dir.path.string(), [&](const std::string& w) { warnings.push_back(w); });
    CHECK_FALSE(cache.get(key(1)).has_value());
    cache.put(key(1), "{\"x\":\"1\"}\nsecond line");
    REQUIRE(cache.get(key(1)).has_value());
    CHECK(*cache.get(key(1)) == "{\"x\":\"1\"}\nsecond line");
    CHECK_FALSE(cache.get(key(2)).has_value());

    CacheKey bumped = key(1);
    bumped.schema_version = kCacheSchemaVersion + 1;
    CHECK_FALSE(cache.get(bumped).has_value());
    CacheKey other = key(1);
    other.extra = "F_101^2";
    CHECK_FALSE(cache.get(other).has_value());
    CHECK(warnings.empty());
}

TEST_CASE("corrupted cache entries are misses with a warning") {
    TempDir dir;
    std::vector<std::string> warnings;
    ResultCache cache(dir.path.string(), [&](const std::string& w) { warnings.push_back(w); });
    cache.put(key(3), "payload");
    const fs::path file = dir.path / key(3).file_name();
    REQUIRE(fs::exists(file));
    {
        std::fstream f(file, std::ios::in | std::ios::out | std::ios::binary);
        f.seekp(-1, std::ios::end);
        f.put('X');
    }
    CHECK_FALSE(cache.get(key(3)).has_value());
    CHECK(warnings.size() == 1);
    cache.put(key(3), "payload");
    CHECK(*cache.get(key(3)) == "payload");
}

TEST_CASE("concurrent writers leave a readable entry") {
    TempDir dir;
    ResultCache cache(dir.path.string());
    std::vector<std::thread> ts;
    for (int i = 0; i < 8; ++i)
        ts.emplace_back([&] {
            for (int r = 0; r < 20; ++r) cache.put(key(4), std::string(1000, 'a'));
        });
    for (auto& t : ts) t.join();
    CHECK(*cache.get(key(4)) == std::string(1000, 'a'));
    std::size_t files = 0;
    for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir.path)) ++files;
    CHECK(files == 1);
}

TEST_CASE("validation and exit codes") {
    RunConfig c = json_config("phi-check");
    c.p = 2;
    CHECK(dispatch(c).exit_code == 1);
    c.p = 9;
    CHECK(dispatch(c).exit_code == 1);
    c = json_config("phi-check");
    c.group = GroupKind::Sp;
    c.n = 3;
    CHECK(dispatch(c).exit_code == 1);
    c = json_config("phi-check");
    c.min_degree = 4;
    CHECK(dispatch(c).exit_code == 1);
    c = json_config("phi-check");
    c.group.reset();
    CHECK(dispatch(c).exit_code == 1);
    CHECK(dispatch(json_config("no-such-command")).exit_code == 1);

    RunConfig b = json_config("bound");
    b.bound_kind = "iso";
    b.group = GroupKind::Sp;
    b.d = 1;
    CHECK(dispatch(b).exit_code == 1);

    RunConfig cert = json_config("certificate");
    cert.character = "2,0:1 0,2:1";
    cert.max_degree = 2;
    CHECK(dispatch(cert).exit_code == 2);
    cert.character.clear();
    CHECK(dispatch(cert).exit_code == 0);
    cert.group = GroupKind::O;
    cert.n = 3;
    CHECK(dispatch(cert).exit_code == 1);
}

TEST_CASE("JSON output: integers as strings, same bytes across threads and cache") {
    TempDir dir;
    for (const char* cmd : {"phi-check", "hilbert", "invariants", "betti", "certificate"}) {
        RunConfig c = json_config(cmd);
        const DispatchResult a = dispatch(c);
        REQUIRE(a.exit_code == 0);
        Json j = Json::parse(a.output);
        CHECK(no_json_numbers(j));
        c.threads = 3;
        c.cache_dir = dir.path.string();
        CHECK(dispatch(c).output == a.output);
        CHECK(dispatch(c).output == a.output);
    }
    RunConfig b = json_config("bound");
    b.bound_kind = "iso";
    b.next_prime = true;
    Json j = Json::parse(dispatch(b).output);
    CHECK(j["value"] == "369768517790072836");
    CHECK(j.contains("next-prime"));
    RunConfig s = json_config("bound");
    s.bound_kind = "iso";
    s.group = GroupKind::SO;
    s.n = 3;
    s.next_prime = true;
    Json k = Json::parse(dispatch(s).output);
    CHECK(k["value"] == "82960");
    CHECK(k["next-prime"] == "82963");
}

TEST_CASE("phi-check JSON content") {
    RunConfig c = json_config("phi-check");
    c.p = 7;
    c.d = 1;
    c.max_degree = 4;
    Json j = Json::parse(dispatch(c).output);
    CHECK(j["all-bijective"] == true);
    CHECK(j["degrees"].size() == 5);
    CHECK(j["degrees"][2]["dim-source"] == "2");
}
