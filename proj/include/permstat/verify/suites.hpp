#pragma once

#include <string>
#include <vector>

#include "permstat/verify/cyclic.hpp"
#include "permstat/verify/cycletype.hpp"
#include "permstat/verify/desmaj.hpp"
#include "permstat/verify/fixpoints.hpp"
#include "permstat/verify/involutions.hpp"
#include "permstat/verify/lemmas.hpp"
#include "permstat/verify/uv.hpp"

namespace permstat::verify {

struct SuiteConfig {
    int n_max = 8;
    int k_max = 5;
    int deg_max = 8;        // property-lemma truncation degree
    int ribbon_deg = 6;     // ribbon / power-sum expansion degree
    int lagrange_prec = 8;  // t-order of the explicit P^a Q^b expansion
    int lagrange_ab = 3;
    uint32_t mu_limit = 10000;
    uint32_t gr_n_max = 7;
    OracleConfig oracle;
};

inline std::vector<std::string> suite_names() {
    return {"lemmas", "cyclic", "involutions", "fixpoints", "cycletype", "desmaj", "all"};
}

inline std::vector<VerifyReport> run_suite(const std::string& name, const SuiteConfig& cfg) {
    std::vector<VerifyReport> out;
    auto append = [&out](std::vector<VerifyReport> v) {
        for (auto& r : v) out.push_back(std::move(r));
    };

    if (name == "lemmas" || name == "all") {
        out.push_back(uv_roundtrip_check(cfg.deg_max + 2));
        for (int a = 0; a <= cfg.lagrange_ab; ++a)
            for (int b = 0; b <= cfg.lagrange_ab; ++b)
                out.push_back(lagrange_PQ_check(a, b, cfg.lagrange_prec));
        out.push_back(lemma_ribexp_a(cfg.ribbon_deg));
        out.push_back(lemma_ribexp_b(cfg.ribbon_deg));
        out.push_back(lemma_ribexp_c(cfg.ribbon_deg));
        out.push_back(lemma_psexp_a(cfg.ribbon_deg));
        out.push_back(lemma_psexp_b(cfg.ribbon_deg));
        out.push_back(lemma_psexp_c(cfg.ribbon_deg));
        out.push_back(eq_dd(cfg.ribbon_deg));
        out.push_back(eq_biruns(cfg.ribbon_deg));
        out.push_back(lemma_Hps(cfg.deg_max));
        out.push_back(lemma_HE(cfg.deg_max));
        out.push_back(lemma_plethHsp(cfg.deg_max));
        out.push_back(lemma_spconst(cfg.deg_max));
        out.push_back(lemma_scalprodh(cfg.deg_max));
        out.push_back(lemma_expsum(cfg.deg_max));
        out.push_back(lemma_HEXplus1(cfg.deg_max));
        out.push_back(theorem_monic(cfg.deg_max));
        out.push_back(lemma_mu(cfg.mu_limit));
        out.push_back(lyndon_ribbon_counts(
            std::min<uint32_t>(cfg.gr_n_max, static_cast<uint32_t>(cfg.oracle.cap)), cfg.oracle));
    }
    if (name == "cyclic" || name == "all") {
        for (uint32_t n = 2; n <= static_cast<uint32_t>(cfg.n_max); ++n)
            append(cyclic_suite(n, cfg.oracle));
    }
    if (name == "involutions" || name == "all") {
        for (uint32_t n = 1; n <= static_cast<uint32_t>(cfg.n_max); ++n)
            append(involution_suite(n, cfg.k_max, cfg.oracle));
    }
    if (name == "fixpoints" || name == "all") {
        for (uint32_t n = 1; n <= static_cast<uint32_t>(cfg.n_max); ++n)
            append(fixpoint_suite(n, cfg.k_max, cfg.oracle));
    }
    if (name == "cycletype" || name == "all") {
        for (uint32_t n = 1; n <= std::min<uint32_t>(7, static_cast<uint32_t>(cfg.n_max)); ++n)
            append(cycletype_suite(n, cfg.k_max, cfg.oracle));
    }
    if (name == "desmaj" || name == "all") {
        for (uint32_t n = 1; n <= std::min<uint32_t>(6, static_cast<uint32_t>(cfg.n_max)); ++n)
            append(desmaj_suite(n, std::max(cfg.k_max, 6), 20, cfg.oracle));
    }
    if (out.empty()) throw std::invalid_argument("unknown suite: " + name);
    return out;
}

}  // namespace permstat::verify
