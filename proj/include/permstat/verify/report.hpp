#pragma once

#include <chrono>
#include <sstream>
#include <string>
#include <vector>

#include "permstat/multipoly.hpp"
#include "permstat/ratfunc.hpp"

namespace permstat::verify {

// Outcome of one theorem/lemma check. Pass means every compared coefficient
// or rational-function pair matched exactly; witness records the first
// mismatch location otherwise.
struct VerifyReport {
    std::string id;
    int n = -1;
    int k_max = -1;
    bool pass = true;
    std::string witness;
    long ms = 0;
};

class Checker {
public:
    Checker(std::string id, int n = -1, int k_max = -1)
        : start_(std::chrono::steady_clock::now()) {
        report_.id = std::move(id);
        report_.n = n;
        report_.k_max = k_max;
    }

    void require(bool ok, const std::string& where) {
        if (report_.pass && !ok) {
            report_.pass = false;
            report_.witness = where;
        }
    }

    void require_equal(const MultiPoly& lhs, const MultiPoly& rhs, const std::string& where) {
        if (!report_.pass) return;
        if (lhs != rhs) {
            report_.pass = false;
            MultiPoly diff = lhs - rhs;
            report_.witness = where + "; first differing term: " +
                              (diff.is_zero() ? "?" : diff.terms().begin()->first.empty()
                                                          ? std::string("constant")
                                                          : MultiPoly::monomial(diff.terms().begin()->first, 1).str());
        }
    }

    void require_equal(const RatFunc& lhs, const RatFunc& rhs, const std::string& where) {
        if (!report_.pass) return;
        if (!(lhs == rhs)) {
            report_.pass = false;
            report_.witness = where;
        }
    }

    bool passing() const { return report_.pass; }

    VerifyReport finish() {
        auto end = std::chrono::steady_clock::now();
        report_.ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(end - start_).count();
        return report_;
    }

private:
    VerifyReport report_;
    std::chrono::steady_clock::time_point start_;
};

// num/den == sum_k seq[k] t^k + O(t^{kmax+1}), checked as the polynomial
// identity num_j == sum_i den_i seq_{j-i} for j <= kmax. Exactness comes for
// free: no expansion of the rational function is ever needed.
inline bool matches_t_series(const MultiPoly& num, const MultiPoly& den,
                             const std::vector<MultiPoly>& seq, int kmax, std::string* where) {
    VarId tv = vars::t();
    auto nums = num.coeffs_in(tv);
    auto dens = den.coeffs_in(tv);
    for (int j = 0; j <= kmax; ++j) {
        MultiPoly lhs = j < static_cast<int>(nums.size()) ? nums[j] : MultiPoly();
        MultiPoly rhs;
        for (int i = 0; i <= j && i < static_cast<int>(dens.size()); ++i) {
            if (j - i >= static_cast<int>(seq.size())) continue;
            rhs += dens[i] * seq[j - i];
        }
        if (lhs != rhs) {
            if (where) *where = "t^" + std::to_string(j);
            return false;
        }
    }
    return true;
}

}  // namespace permstat::verify
