// Acceptance suite: one pass/fail line per criterion, exact equality
// throughout (tolerance zero). Exit status 0 iff every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "permstat/jsonio.hpp"
#include "permstat/verify/suites.hpp"

using namespace permstat;
using namespace permstat::verify;

namespace {

bool g_all_ok = true;

void criterion(int idx, const std::string& label,
               const std::function<bool(std::string*)>& fn, long ms_limit = 0) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = fn(&detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    long ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    if (ok && ms_limit > 0 && ms > ms_limit) {
        ok = false;
        detail = "runtime " + std::to_string(ms) + " ms exceeds the stated limit of " +
                 std::to_string(ms_limit) + " ms";
    }
    std::printf("%s criterion %2d [%5ld ms]: %s%s%s\n", ok ? "PASS" : "FAIL", idx, ms,
                label.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    g_all_ok = g_all_ok && ok;
}

bool reports_ok(const std::vector<VerifyReport>& reports, std::string* detail) {
    for (const auto& r : reports) {
        if (!r.pass) {
            *detail = r.id + " (n=" + std::to_string(r.n) + "): " + r.witness;
            return false;
        }
    }
    return true;
}

// The printed joint peak-descent polynomial of the 7-cycles:
// (y+17y^2)t^2 + (2y+64y^2+102y^3)t^3 + (3y+99y^2+207y^3+39y^4)t^4
// + (2y+64y^2+102y^3)t^5 + (y+17y^2)t^6.
MultiPoly c7_reference() {
    MultiPoly t = MultiPoly::var(vars::t()), y = MultiPoly::var(vars::y());
    auto row = [&](long c1, long c2, long c3, long c4) {
        return c1 * y + c2 * y.pow(2) + c3 * y.pow(3) + c4 * y.pow(4);
    };
    return row(1, 17, 0, 0) * t.pow(2) + row(2, 64, 102, 0) * t.pow(3) +
           row(3, 99, 207, 39) * t.pow(4) + row(2, 64, 102, 0) * t.pow(5) +
           row(1, 17, 0, 0) * t.pow(6);
}

}  // namespace

int main() {
    criterion(1, "C_7^{(pk,des)} via u,v inversion equals the reference polynomial and the oracle",
              [](std::string* detail) {
                  TSeries C = cycpkdes_via_uv(7, 11);
                  for (int j = 8; j < 11; ++j)
                      if (!C.coeff(j).is_zero()) {
                          *detail = "nonzero tail at t^" + std::to_string(j);
                          return false;
                      }
                  MultiPoly computed = series_to_poly(C, 7);
                  if (computed != c7_reference()) {
                      *detail = "inversion disagrees with the reference polynomial";
                      return false;
                  }
                  MultiPoly oracle =
                      oracle_dist(7, FamilySpec::cyclic(), {StatProfile::PkDes}).poly;
                  if (computed != oracle) {
                      *detail = "inversion disagrees with enumeration";
                      return false;
                  }
                  return true;
              },
              30000);

    criterion(
        2, "cyclic suite for 2 <= n <= 8",
        [](std::string* detail) {
            for (uint32_t n = 2; n <= 8; ++n)
                if (!reports_ok(cyclic_suite(n), detail)) return false;
            return true;
        },
        120000);

    criterion(3, "involution suite for 1 <= n <= 8, k <= 5 (counts for n <= 7)",
              [](std::string* detail) {
                  for (uint32_t n = 1; n <= 8; ++n)
                      if (!reports_ok(involution_suite(n, 5), detail)) return false;
                  return true;
              });

    criterion(4, "fixed-point suite for 1 <= n <= 8, k <= 5; classical peak identities to n = 9",
              [](std::string* detail) {
                  for (uint32_t n = 1; n <= 8; ++n)
                      if (!reports_ok(fixpoint_suite(n, 5), detail)) return false;
                  VerifyReport nine = classical_peak_identities(9);
                  if (!nine.pass) {
                      *detail = nine.id + " at n=9: " + nine.witness;
                      return false;
                  }
                  return true;
              });

    criterion(5, "cycle-type suite for 1 <= n <= 7, k <= 5; necklace counts to i = 12",
              [](std::string* detail) {
                  for (uint32_t n = 1; n <= 7; ++n)
                      if (!reports_ok(cycletype_suite(n, 5), detail)) return false;
                  // z_3 marginal of the descent-by-cycle-type polynomial at
                  // n = 3 is the cyclic descent polynomial 2t^2.
                  MultiPoly F3 =
                      oracle_dist(3, FamilySpec::all(), {StatProfile::Des, false, true}).poly;
                  MultiPoly marginal = F3.coeff_of(vars::zi(3), 1);
                  MultiPoly t = MultiPoly::var(vars::t());
                  if (marginal != 2 * t.pow(2)) {
                      *detail = "z_3 marginal of F_3^des";
                      return false;
                  }
                  return true;
              });

    criterion(6, "lemma suites: ribbon/power-sum to degree 6, plethysm laws to degree 8, "
                 "Lagrange to order 8, Mobius to 10^4",
              [](std::string* detail) {
                  std::vector<VerifyReport> v;
                  v.push_back(uv_roundtrip_check(10));
                  for (int a = 0; a <= 3; ++a)
                      for (int b = 0; b <= 3; ++b) v.push_back(lagrange_PQ_check(a, b, 8));
                  v.push_back(lemma_ribexp_a(6));
                  v.push_back(lemma_ribexp_b(6));
                  v.push_back(lemma_ribexp_c(6));
                  v.push_back(lemma_psexp_a(6));
                  v.push_back(lemma_psexp_b(6));
                  v.push_back(lemma_psexp_c(6));
                  v.push_back(eq_dd(6));
                  v.push_back(eq_biruns(6));
                  v.push_back(lemma_Hps(8));
                  v.push_back(lemma_HE(8));
                  v.push_back(lemma_plethHsp(8));
                  v.push_back(lemma_spconst(8));
                  v.push_back(lemma_scalprodh(8));
                  v.push_back(lemma_expsum(8));
                  v.push_back(lemma_HEXplus1(8));
                  v.push_back(theorem_monic(8));
                  v.push_back(lemma_mu(10000));
                  return reports_ok(v, detail);
              });

    criterion(7, "<L_lambda, r_M> equals the descent-composition counts for all lambda, M, n <= 7",
              [](std::string* detail) {
                  VerifyReport r = lyndon_ribbon_counts(7);
                  if (!r.pass) *detail = r.witness;
                  return r.pass;
              },
              60000);

    criterion(8, "symmetry theorems: qualifying cycle types and involutions for n <= 8",
              [](std::string* detail) {
                  std::vector<VerifyReport> v;
                  for (uint32_t n = 1; n <= 8; ++n) {
                      v.push_back(compsym1_check(n));
                      v.push_back(compsym2_check(n));
                  }
                  return reports_ok(v, detail);
              });

    criterion(9, "descent-major refinement for n <= 6, k <= 6 over four families",
              [](std::string* detail) {
                  for (uint32_t n = 1; n <= 6; ++n)
                      if (!reports_ok(desmaj_suite(n, 6, 20), detail)) return false;
                  // A_2(q,t) = t + qt^2.
                  MultiPoly a2 =
                      oracle_dist(2, FamilySpec::all(), {StatProfile::DesMaj}).poly;
                  MultiPoly t = MultiPoly::var(vars::t()), q = MultiPoly::var(vars::q());
                  if (a2 != t + q * t.pow(2)) {
                      *detail = "A_2(q,t)";
                      return false;
                  }
                  return true;
              });

    criterion(10, "two full verify runs produce identical payloads modulo runtime fields",
              [](std::string* detail) {
                  SuiteConfig cfg;
                  cfg.n_max = 7;
                  auto serialize = [](std::vector<VerifyReport> reports) {
                      std::string payload;
                      for (auto& r : reports) {
                          r.ms = 0;
                          payload += to_json(r) + "\n";
                      }
                      return payload;
                  };
                  std::string first = serialize(run_suite("all", cfg));
                  std::string second = serialize(run_suite("all", cfg));
                  if (first != second) {
                      *detail = "payload mismatch between runs";
                      return false;
                  }
                  if (first.find("\"status\":\"fail\"") != std::string::npos) {
                      *detail = "a check failed during the determinism run";
                      return false;
                  }
                  return true;
              });

    return g_all_ok ? 0 : 1;
}
