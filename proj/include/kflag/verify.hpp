// Identity-verification suites. Each check evaluates one operator or
// class identity exactly over a root system and reports pass/fail; the
// CLI `verify` command and the acceptance runner both build on these.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kflag/rootsys.hpp"

namespace kflag {

struct CheckResult {
    std::string name;
    bool pass = false;
};

struct SuiteReport {
    std::string suite;
    std::string cartan;
    std::vector<CheckResult> checks;

    bool all_pass() const;
    std::string render() const;  // deterministic, byte-stable text
};

// braid/commutation, quadratic relations, adjointness, reduced-word independence
std::vector<CheckResult> verify_hecke(const RootSystem& rs, std::uint64_t seed,
                                      int n_random_classes);
// bar(T_w)=D∘T_w∘D, D(ι_w)=ι_w, D²=id, the four duality-route identities,
// and the conjugation identities for T^∨
std::vector<CheckResult> verify_duality(const RootSystem& rs, std::uint64_t seed);
// normalization sums, support triangularity, route equivalences for
// MC/MC'/opposite classes
std::vector<CheckResult> verify_motivic(const RootSystem& rs);
// the three character formulas over all w and a λ sweep
// (exhaustive [-2,2]^r for rank ≤ 2, else n_lambda seeded draws in [-3,3]^r)
std::vector<CheckResult> verify_characters(const RootSystem& rs, std::uint64_t seed,
                                           int n_lambda);
// both Casselman-Shalika summation identities over a λ sweep
std::vector<CheckResult> verify_cs(const RootSystem& rs, std::uint64_t seed);
// full-flag product formula, rationally smooth Schubert checks, fixed-point
// data checks
std::vector<CheckResult> verify_poincare(const RootSystem& rs);
// algebraic vs geometric evaluation of the tilde operators
std::vector<CheckResult> verify_bridge(const RootSystem& rs, std::uint64_t seed, int count);
// orthogonality pairing matrix
std::vector<CheckResult> verify_orthogonality(const RootSystem& rs);

// λ sweep used by characters/cs (shared so reports stay reproducible)
std::vector<Weight> lambda_sweep(const RootSystem& rs, std::uint64_t seed, int n_lambda,
                                 int box = 2);

SuiteReport run_suite(const std::string& suite, char family, int rank, std::uint64_t seed);

}  // namespace kflag
