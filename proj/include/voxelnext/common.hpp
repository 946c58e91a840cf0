#pragma once

#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace vx {

// Error taxonomy. Contract errors are caller bugs (bad shapes, out-of-range
// arguments), structural errors are malformed graphs/configs, io errors wrap
// filesystem and format failures.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};
struct ContractError : Error {
    explicit ContractError(const std::string& msg) : Error("contract: " + msg) {}
};
struct StructuralError : Error {
    explicit StructuralError(const std::string& msg) : Error("structural: " + msg) {}
};
struct BuildError : Error {
    explicit BuildError(const std::string& msg) : Error("build: " + msg) {}
};
struct LoadError : Error {
    explicit LoadError(const std::string& msg) : Error("load: " + msg) {}
};
struct IoError : Error {
    explicit IoError(const std::string& msg) : Error("io: " + msg) {}
};
struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error("config: " + msg) {}
};

using Shape = std::vector<int64_t>;

inline int64_t numel(const Shape& s) {
    int64_t n = 1;
    for (int64_t e : s) n *= e;
    return n;
}

inline std::string shape_str(const Shape& s) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << "]";
    return os.str();
}

inline void check(bool cond, const std::string& msg) {
    if (!cond) throw ContractError(msg);
}

}  // namespace vx
