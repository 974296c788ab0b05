#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace cli {

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

inline std::filesystem::path scratch_dir() {
    static const std::filesystem::path dir = [] {
        auto d = std::filesystem::temp_directory_path() / ("ahtop_cli_" + std::to_string(::getpid()));
        std::filesystem::create_directories(d);
        return d;
    }();
    return dir;
}

inline std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

inline std::filesystem::path write_file(const std::string& name, const std::string& text) {
    auto p = scratch_dir() / name;
    std::ofstream(p, std::ios::binary) << text;
    return p;
}

/// Runs the CLI with `args` (already shell-quoted where needed), capturing stdout and stderr.
inline Run run(const std::string& args) {
    static int counter = 0;
    const auto out = scratch_dir() / ("out" + std::to_string(counter) + ".txt");
    const auto err = scratch_dir() / ("err" + std::to_string(counter) + ".txt");
    ++counter;
    const std::string cmd = std::string("\"") + AHTOP_CLI + "\" " + args + " >\"" + out.string() + "\" 2>\"" +
                            err.string() + "\"";
    const int status = std::system(cmd.c_str());
    Run r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

}  // namespace cli
