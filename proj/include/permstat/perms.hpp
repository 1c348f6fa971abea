#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "permstat/multipoly.hpp"
#include "permstat/partitions.hpp"
#include "permstat/symfunc.hpp"

namespace permstat {

constexpr int kMaxEnumN = 10;

// One permutation's statistics bundle. desc_mask has bit (i-1) set iff i is a
// descent; nc[i] counts i-cycles. fix is -1 for composition-only records.
struct StatRecord {
    uint32_t n = 0;
    uint32_t des = 0, maj = 0, pk = 0, lpk = 0, val = 0, udr = 0, ddes = 0, br = 0;
    int fix = -1;
    uint32_t desc_mask = 0;
    std::array<uint8_t, kMaxEnumN + 1> nc{};

    bool descent_at(uint32_t i) const { return (desc_mask >> (i - 1)) & 1u; }

    Composition comp() const {
        std::vector<uint32_t> d;
        for (uint32_t i = 1; i < n; ++i)
            if (descent_at(i)) d.push_back(i);
        return composition_from_descents(d, n);
    }

    Partition ctype() const {
        std::vector<uint32_t> parts;
        for (uint32_t i = 1; i <= n; ++i)
            for (uint8_t j = 0; j < nc[i]; ++j) parts.push_back(i);
        return Partition(std::move(parts));
    }

    Partition ctype_of_square() const { return cycle_type_square(ctype()); }
};

// Statistics that depend only on the descent set.
inline void fill_descent_stats(StatRecord& s) {
    uint32_t n = s.n;
    s.des = s.maj = s.pk = s.lpk = s.val = s.ddes = 0;
    for (uint32_t i = 1; i < n; ++i) {
        if (!s.descent_at(i)) continue;
        s.des++;
        s.maj += i;
        bool prev = i >= 2 && s.descent_at(i - 1);
        if (i >= 2 && !prev) s.pk++;
        if (i == 1 || !prev) s.lpk++;
        if (prev) s.ddes++;
    }
    for (uint32_t i = 2; i + 1 <= n; ++i)
        if (!s.descent_at(i) && s.descent_at(i - 1)) s.val++;
    s.udr = s.lpk + s.val + 1;
    s.br = s.udr - (n >= 2 && s.descent_at(1) ? 1 : 0);
}

// Statistics of a composition L |= n: the common value on every permutation
// whose descent composition is L.
inline StatRecord comp_stats(const Composition& L) {
    uint32_t n = std::accumulate(L.begin(), L.end(), 0u);
    if (n == 0) throw std::invalid_argument("comp_stats requires a composition of n >= 1");
    for (uint32_t part : L)
        if (part == 0) throw std::invalid_argument("composition parts must be positive");
    StatRecord s;
    s.n = n;
    for (uint32_t pos : descent_set_of(L)) s.desc_mask |= 1u << (pos - 1);
    fill_descent_stats(s);
    return s;
}

inline StatRecord stats_of_array(const uint8_t* p, uint32_t n) {
    StatRecord s;
    s.n = n;
    for (uint32_t i = 0; i + 1 < n; ++i)
        if (p[i] > p[i + 1]) s.desc_mask |= 1u << i;
    fill_descent_stats(s);
    s.fix = 0;
    bool seen[kMaxEnumN + 1] = {};
    for (uint32_t i = 0; i < n; ++i) {
        if (seen[i + 1]) continue;
        uint32_t len = 0, j = i + 1;
        while (!seen[j]) {
            seen[j] = true;
            ++len;
            j = p[j - 1];
        }
        s.nc[len]++;
        if (len == 1) s.fix++;
    }
    return s;
}

struct Perm {
    std::vector<uint32_t> oneline;

    explicit Perm(std::vector<uint32_t> v) : oneline(std::move(v)) {
        uint32_t n = static_cast<uint32_t>(oneline.size());
        if (n == 0 || n > kMaxEnumN) throw std::invalid_argument("permutation length out of range");
        std::vector<bool> seen(n + 1, false);
        for (uint32_t v2 : oneline) {
            if (v2 < 1 || v2 > n || seen[v2]) throw std::invalid_argument("not a permutation");
            seen[v2] = true;
        }
    }

    static Perm from_digits(const std::string& digits) {
        std::vector<uint32_t> v;
        for (char c : digits) v.push_back(static_cast<uint32_t>(c - '0'));
        return Perm(std::move(v));
    }
};

inline StatRecord stats_of(const Perm& pi) {
    std::array<uint8_t, kMaxEnumN> buf{};
    for (size_t i = 0; i < pi.oneline.size(); ++i) buf[i] = static_cast<uint8_t>(pi.oneline[i]);
    return stats_of_array(buf.data(), static_cast<uint32_t>(pi.oneline.size()));
}

// --- enumeration -------------------------------------------------------------

inline int env_thread_cap() {
    const char* s = std::getenv("PERMSTAT_THREADS");
    if (!s) return 0;
    int v = std::atoi(s);
    return v > 0 ? v : 1;
}

inline int resolve_threads(int requested) {
    int t = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
    if (t < 1) t = 1;
    int cap = env_thread_cap();
    if (cap > 0) t = std::min(t, cap);
    return t;
}

struct OracleConfig {
    int cap = 9;     // raise to kMaxEnumN only behind an explicit flag
    int threads = 0; // 0 = auto
};

inline void check_cap(uint32_t n, const OracleConfig& cfg) {
    if (static_cast<int>(n) > cfg.cap)
        throw std::invalid_argument("enumeration cap exceeded: n=" + std::to_string(n) +
                                    " > cap " + std::to_string(cfg.cap));
    if (n < 1) throw std::invalid_argument("enumeration requires n >= 1");
}

// Visits all of S_n in lexicographic one-line order, chunked by the first
// letter. fn(chunk_result, perm, stats) accumulates into its chunk's local
// result; chunks are merged in order, so the outcome is deterministic.
template <class Result, class Fn>
std::vector<Result> enumerate_chunks(uint32_t n, const OracleConfig& cfg, Fn fn) {
    check_cap(n, cfg);
    std::vector<Result> chunk_results(n);
    int threads = std::min<int>(resolve_threads(cfg.threads), static_cast<int>(n));
    std::atomic<uint32_t> next{0};
    auto worker = [&]() {
        for (;;) {
            uint32_t c = next.fetch_add(1);
            if (c >= n) return;
            std::array<uint8_t, kMaxEnumN> p{};
            p[0] = static_cast<uint8_t>(c + 1);
            uint32_t k = 0;
            for (uint32_t v = 1; v <= n; ++v)
                if (v != c + 1) p[1 + k++] = static_cast<uint8_t>(v);
            do {
                StatRecord s = stats_of_array(p.data(), n);
                fn(chunk_results[c], p.data(), s);
            } while (std::next_permutation(p.begin() + 1, p.begin() + n));
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return chunk_results;
}

// --- permutation families ----------------------------------------------------

struct FamilySpec {
    enum Kind { All, Cyclic, Involutions, Derangements, CycleType, FixCount };
    Kind kind = All;
    Partition lambda;
    uint32_t fix_m = 0;

    static FamilySpec all() { return {}; }
    static FamilySpec cyclic() { return {Cyclic, {}, 0}; }
    static FamilySpec involutions() { return {Involutions, {}, 0}; }
    static FamilySpec derangements() { return {Derangements, {}, 0}; }
    static FamilySpec cycle_type(Partition l) { return {CycleType, std::move(l), 0}; }
    static FamilySpec fix_count(uint32_t m) { return {FixCount, {}, m}; }

    bool contains(const StatRecord& s) const {
        switch (kind) {
            case All: return true;
            case Cyclic: return s.nc[s.n] == 1;
            case Involutions: {
                for (uint32_t i = 3; i <= s.n; ++i)
                    if (s.nc[i]) return false;
                return true;
            }
            case Derangements: return s.nc[1] == 0;
            case CycleType: {
                for (uint32_t i = 1; i <= s.n; ++i)
                    if (s.nc[i] != lambda.mult_of(i)) return false;
                return true;
            }
            case FixCount: return s.nc[1] == fix_m;
        }
        return false;
    }

    // The cycle types making up the family inside S_n.
    std::vector<Partition> classes(uint32_t n) const {
        std::vector<Partition> out;
        for (const auto& l : partitions_of(n)) {
            bool in = false;
            switch (kind) {
                case All: in = true; break;
                case Cyclic: in = (l.len() == 1); break;
                case Involutions: in = l.parts.empty() || l.parts.front() <= 2; break;
                case Derangements: in = (l.mult_of(1) == 0); break;
                case CycleType: in = (l == lambda); break;
                case FixCount: in = (l.mult_of(1) == fix_m); break;
            }
            if (in) out.push_back(l);
        }
        return out;
    }

    std::string name() const {
        switch (kind) {
            case All: return "all";
            case Cyclic: return "cyclic";
            case Involutions: return "involutions";
            case Derangements: return "derangements";
            case CycleType: {
                std::string s = "ctype:";
                for (size_t i = 0; i < lambda.parts.size(); ++i)
                    s += (i ? "," : "") + std::to_string(lambda.parts[i]);
                return s;
            }
            case FixCount: return "fix:" + std::to_string(fix_m);
        }
        return "?";
    }
};

// --- distribution polynomials --------------------------------------------------

enum class StatProfile { PkDes, Pk, Des, LpkDes, Lpk, Udr, DesMaj };

// Exponent conventions follow the polynomial definitions they implement:
// y^{pk+1} t^{des+1} for pkdes, unshifted lpk/des, t^{udr}, q^{maj} t^{des+1}.
struct DistProfile {
    StatProfile base = StatProfile::PkDes;
    bool with_fix = false;
    bool with_ctype = false;

    std::string name() const {
        std::string s;
        switch (base) {
            case StatProfile::PkDes: s = "pkdes"; break;
            case StatProfile::Pk: s = "pk"; break;
            case StatProfile::Des: s = "des"; break;
            case StatProfile::LpkDes: s = "lpkdes"; break;
            case StatProfile::Lpk: s = "lpk"; break;
            case StatProfile::Udr: s = "udr"; break;
            case StatProfile::DesMaj: s = "desmaj"; break;
        }
        if (with_fix) s += ",fix";
        if (with_ctype) s += ",ctype";
        return s;
    }

    Monomial monomial(const StatRecord& s) const {
        Monomial m;
        auto push = [&m](VarId v, uint32_t e) {
            if (e > 0) m.e.emplace_back(v, e);
        };
        // Registry order: q < t < y < z < z1 < ... < z9.
        switch (base) {
            case StatProfile::PkDes:
                push(vars::t(), s.des + 1);
                push(vars::y(), s.pk + 1);
                break;
            case StatProfile::Pk: push(vars::t(), s.pk + 1); break;
            case StatProfile::Des: push(vars::t(), s.des + 1); break;
            case StatProfile::LpkDes:
                push(vars::t(), s.des);
                push(vars::y(), s.lpk);
                break;
            case StatProfile::Lpk: push(vars::t(), s.lpk); break;
            case StatProfile::Udr: push(vars::t(), s.udr); break;
            case StatProfile::DesMaj: {
                Monomial m2;
                if (s.maj > 0) m2.e.emplace_back(vars::q(), s.maj);
                m2.e.emplace_back(vars::t(), s.des + 1);
                m = m2;
                break;
            }
        }
        if (with_fix && s.fix > 0) push(vars::z(), static_cast<uint32_t>(s.fix));
        if (with_ctype)
            for (uint32_t i = 1; i <= s.n; ++i)
                if (s.nc[i]) push(vars::zi(i), s.nc[i]);
        return m;
    }

    static DistProfile parse(const std::string& text) {
        DistProfile p;
        std::string rest = text;
        auto take_suffix = [&rest](const std::string& suf) {
            if (rest.size() >= suf.size() && rest.compare(rest.size() - suf.size(), suf.size(), suf) == 0) {
                rest = rest.substr(0, rest.size() - suf.size());
                return true;
            }
            return false;
        };
        while (true) {
            if (take_suffix(",fix")) {
                p.with_fix = true;
            } else if (take_suffix(",ctype")) {
                p.with_ctype = true;
            } else {
                break;
            }
        }
        if (rest == "pkdes") p.base = StatProfile::PkDes;
        else if (rest == "pk") p.base = StatProfile::Pk;
        else if (rest == "des") p.base = StatProfile::Des;
        else if (rest == "lpkdes") p.base = StatProfile::LpkDes;
        else if (rest == "lpk") p.base = StatProfile::Lpk;
        else if (rest == "udr") p.base = StatProfile::Udr;
        else if (rest == "desmaj") p.base = StatProfile::DesMaj;
        else throw std::invalid_argument("unknown profile: " + text);
        return p;
    }
};

struct DistPoly {
    std::string profile;
    MultiPoly poly;
};

using CountMap = std::map<Monomial, Int, MonomialLess>;

// Exact joint distribution polynomial of a family, by brute enumeration.
inline DistPoly oracle_dist(uint32_t n, const FamilySpec& family, const DistProfile& profile,
                            const OracleConfig& cfg = {}) {
    auto chunks = enumerate_chunks<CountMap>(
        n, cfg, [&](CountMap& local, const uint8_t*, const StatRecord& s) {
            if (family.contains(s)) local[profile.monomial(s)] += 1;
        });
    MultiPoly poly;
    for (const auto& chunk : chunks)
        for (const auto& [m, c] : chunk) poly.add_term(m, Rat(c));
    return DistPoly{profile.name(), std::move(poly)};
}

// Counts by descent composition.
inline std::map<Composition, Int> descent_table(uint32_t n, const FamilySpec& family,
                                                const OracleConfig& cfg = {}) {
    using Table = std::map<Composition, Int>;
    auto chunks = enumerate_chunks<Table>(
        n, cfg, [&](Table& local, const uint8_t*, const StatRecord& s) {
            if (family.contains(s)) local[s.comp()] += 1;
        });
    Table table;
    for (const auto& chunk : chunks)
        for (const auto& [c, cnt] : chunk) table[c] += cnt;
    return table;
}

inline Int family_size(uint32_t n, const FamilySpec& family, const OracleConfig& cfg = {}) {
    auto chunks = enumerate_chunks<Int>(
        n, cfg, [&](Int& local, const uint8_t*, const StatRecord& s) {
            if (family.contains(s)) local += 1;
        });
    Int total = 0;
    for (const auto& c : chunks) total += c;
    return total;
}

enum class FamilyWeight { None, FixZ, CycleTypeZ };

// Q(family) = sum of Lyndon symmetric functions over the family's cycle
// types, optionally weighted by z^{#fixed points} or by z_i^{N_i}.
inline SymFunc family_symfunc(uint32_t n, const FamilySpec& family,
                              FamilyWeight weight = FamilyWeight::None) {
    SymFunc q;
    for (const auto& l : family.classes(n)) {
        RatFunc w(1);
        if (weight == FamilyWeight::FixZ) {
            uint32_t m1 = l.mult_of(1);
            if (m1 > 0) w = RatFunc(MultiPoly::var(vars::z(), m1));
        } else if (weight == FamilyWeight::CycleTypeZ) {
            Monomial mono;
            for (uint32_t i = 1; i <= n; ++i) {
                uint32_t mi = l.mult_of(i);
                if (mi > 0) mono.e.emplace_back(vars::zi(i), mi);
            }
            w = RatFunc(MultiPoly::monomial(mono, 1));
        }
        q += lyndon_of(l) * w;
    }
    return q;
}

}  // namespace permstat
