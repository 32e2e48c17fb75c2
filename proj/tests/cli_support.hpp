// Runs the command-line binary in a scratch directory and captures its output.
#pragma once

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

namespace cli {

struct Result {
    int code = -1;
    std::string out;
    std::string err;
};

inline std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

inline void spit(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
}

inline std::string quote(const std::string& s) {
    std::string q = "'";
    for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return q + "'";
}

class Sandbox {
public:
    explicit Sandbox(const std::string& name)
        : dir_(std::filesystem::temp_directory_path() / ("lrc_" + name + "_" + std::to_string(::getpid()))) {
        std::filesystem::remove_all(dir_);
        std::filesystem::create_directories(dir_);
    }
    ~Sandbox() {
        std::error_code ec;
        std::filesystem::remove_all(dir_, ec);
    }
    Sandbox(const Sandbox&) = delete;
    Sandbox& operator=(const Sandbox&) = delete;

    std::string path(const std::string& name) const { return (dir_ / name).string(); }
    std::string read(const std::string& name) const { return slurp(dir_ / name); }
    void write(const std::string& name, const std::string& text) const { spit(dir_ / name, text); }

    Result run(const std::vector<std::string>& args) const {
        std::string command = quote(LRC_CLI_PATH);
        for (const auto& a : args) command += " " + quote(a);
        const auto out = dir_ / ".stdout";
        const auto err = dir_ / ".stderr";
        command += " >" + quote(out.string()) + " 2>" + quote(err.string());
        const int status = std::system(command.c_str());
        Result r;
        r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        r.out = slurp(out);
        r.err = slurp(err);
        return r;
    }

private:
    std::filesystem::path dir_;
};

inline std::string data(const std::string& name) { return std::string(LRC_TEST_DATA) + "/" + name; }

inline std::size_t line_count(const std::string& text) {
    std::size_t n = 0;
    for (char c : text) n += c == '\n';
    return n;
}

}  // namespace cli
