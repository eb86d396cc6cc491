#pragma once

#include <filesystem>
#include <random>
#include <string>

namespace testing_support {

inline std::filesystem::path source_dir() { return BWLF_SOURCE_DIR; }

inline std::filesystem::path sample_text() { return source_dir() / "data" / "beowulf.txt"; }
inline std::filesystem::path sample_rules() { return source_dir() / "data" / "beowulf.rules"; }
inline std::filesystem::path sample_dict() { return source_dir() / "data" / "base.dict"; }
inline std::filesystem::path golden(const std::string& name) { return source_dir() / "tests" / "data" / name; }

/// Fresh, empty scratch directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
    static std::mt19937_64 rng{std::random_device{}()};
    auto dir = std::filesystem::temp_directory_path() / ("bwlf-" + name + "-" + std::to_string(rng()));
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace testing_support
