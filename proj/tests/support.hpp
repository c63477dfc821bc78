#pragma once

// Process plumbing for the end-to-end tests: run the CLI binary through the
// shell, capture combined output and the exit code, and manage scratch
// directories.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace testsupport {

inline std::filesystem::path make_temp_dir() {
    std::string tmpl = (std::filesystem::temp_directory_path() / "rsh_test_XXXXXX").string();
    if (mkdtemp(tmpl.data()) == nullptr) throw std::runtime_error("mkdtemp failed");
    return std::filesystem::path(tmpl);
}

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr interleaved
};

inline RunResult run_command(const std::string& cmd) {
    RunResult result;
    FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
    if (pipe == nullptr) throw std::runtime_error("popen failed for: " + cmd);
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) result.output.append(buf, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + path.string());
    os << content;
}

}  // namespace testsupport
