#pragma once

#include <vector>

#include "permstat/verify/general.hpp"

namespace permstat::verify {

// The descent-major refinement: for a family with symmetric Q, the oracle's
// sum of q^maj t^{des+1} over the family, divided by prod_{i=0}^n (1 - t q^i),
// expands as sum_k phi_k(Q) t^k. Checked termwise to t^kmax; each compared
// q-coefficient is exact (strictly stronger than any fixed q-order).
inline VerifyReport desmaj_check(uint32_t n, const FamilySpec& family, int kmax,
                                 const OracleConfig& cfg = {}) {
    Checker ck("eq:desmaj[" + family.name() + "]", static_cast<int>(n), kmax);
    MultiPoly num = oracle_dist(n, family, {StatProfile::DesMaj}, cfg).poly;
    MultiPoly den = MultiPoly::constant(1);
    for (uint32_t i = 0; i <= n; ++i)
        den *= MultiPoly::constant(1) - MultiPoly::var(vars::t()) * MultiPoly::var(vars::q(), i);
    SymFunc Q = family_symfunc(n, family);
    std::vector<MultiPoly> phis;
    for (int k = 0; k <= kmax; ++k)
        phis.push_back(k == 0 ? MultiPoly() : principal_spec(Q, k));
    std::string where;
    ck.require(matches_t_series(num, den, phis, kmax, &where), where);
    return ck.finish();
}

inline std::vector<VerifyReport> desmaj_suite(uint32_t n, int kmax, int /*qprec*/,
                                              const OracleConfig& cfg = {}) {
    std::vector<VerifyReport> reports;
    reports.push_back(desmaj_check(n, FamilySpec::all(), kmax, cfg));
    reports.push_back(desmaj_check(n, FamilySpec::cyclic(), kmax, cfg));
    reports.push_back(desmaj_check(n, FamilySpec::involutions(), kmax, cfg));
    reports.push_back(desmaj_check(n, FamilySpec::derangements(), kmax, cfg));
    return reports;
}

}  // namespace permstat::verify
