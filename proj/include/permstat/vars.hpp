#pragma once

#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace permstat {

// Variables live in a session-global, append-only registry. The pre-seeded
// names are listed in lexicographic order so that the registry index order is
// a deterministic total order by name; later appends keep their index order.
struct VarId {
    uint32_t idx;
    friend bool operator==(VarId a, VarId b) { return a.idx == b.idx; }
    friend bool operator!=(VarId a, VarId b) { return a.idx != b.idx; }
    friend bool operator<(VarId a, VarId b) { return a.idx < b.idx; }
};

class VarRegistry {
public:
    static VarId intern(std::string_view name) {
        std::lock_guard<std::mutex> lock(mutex_());
        auto& n = names_();
        for (uint32_t i = 0; i < n.size(); ++i)
            if (n[i] == name) return VarId{i};
        n.emplace_back(name);
        return VarId{static_cast<uint32_t>(n.size() - 1)};
    }

    static const std::string& name(VarId v) {
        std::lock_guard<std::mutex> lock(mutex_());
        auto& n = names_();
        if (v.idx >= n.size()) throw std::out_of_range("unknown VarId");
        return n[v.idx];
    }

private:
    static std::vector<std::string>& names_() {
        static std::vector<std::string> names = {
            "alpha", "q", "t", "u", "v", "w", "x", "y", "z",
            "z1", "z2", "z3", "z4", "z5", "z6", "z7", "z8", "z9"};
        return names;
    }
    static std::mutex& mutex_() {
        static std::mutex m;
        return m;
    }
};

namespace vars {
inline VarId alpha() { return VarId{0}; }
inline VarId q() { return VarId{1}; }
inline VarId t() { return VarId{2}; }
inline VarId u() { return VarId{3}; }
inline VarId v() { return VarId{4}; }
inline VarId w() { return VarId{5}; }
inline VarId x() { return VarId{6}; }
inline VarId y() { return VarId{7}; }
inline VarId z() { return VarId{8}; }
inline VarId zi(unsigned i) {
    if (i < 1 || i > 9) throw std::out_of_range("cycle-length marker z1..z9");
    return VarId{static_cast<uint32_t>(8 + i)};
}
}  // namespace vars

}  // namespace permstat
