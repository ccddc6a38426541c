#pragma once

#include <filesystem>
#include <fstream>
#include <random>
#include <string>

namespace testutil {

// Writes `content` to a unique file in the build temp dir and returns its path.
inline std::filesystem::path write_temp(const std::string &name, const std::string &content) {
    auto dir = std::filesystem::temp_directory_path() / "aiimpact-tests";
    std::filesystem::create_directories(dir);
    auto path = dir / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
    return path;
}

inline std::filesystem::path fixture(const std::string &rel) {
    return std::filesystem::path(FIXTURE_DIR) / rel;
}

inline std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace testutil
