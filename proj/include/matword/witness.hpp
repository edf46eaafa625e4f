#pragma once

#include <cstdint>
#include <optional>

#include "matword/decider.hpp"
#include "matword/linalg.hpp"

namespace matword {

enum class WitnessKind { Rotation, SymPair, Scalar, Random };

const char* witness_kind_name(WitnessKind k);

// A concrete assignment proving a verdict: for NotRealEigenvalued words
// the product has an eigenvalue with |Im| above tolerance; for
// SymTimesPsd words the scalar witness has a negative eigenvalue.
// Reports are self-verifying via verify_witness.
struct WitnessReport {
    std::map<int, Matrix> assignment;
    std::complex<double> offending_eigenvalue{0, 0};
    WitnessKind kind = WitnessKind::Random;
    long long trials_used = 0;
    std::uint64_t seed = 0;
};

// Recognizes the explicit constructions:
//  (a) X^k / (X^T)^k with X non-symmetric: rotation_matrix(pi/(2k)),
//  (b) (X1^sym X2^sym)^{k/2} with distinct variables:
//      A = diag(1,-1), B = [[cos t, sin t],[sin t, -cos t]], t = pi/(2k),
//  (c) degree-1 non-sym word: rotation_matrix(pi/4).
// Absent when no template applies. Throws unless the word classifies as
// NotRealEigenvalued.
std::optional<WitnessReport> structured_witness(const Word& w);

// For SymTimesPsd words: (1) everywhere, (-1) on the sym variable; the
// product evaluates to the 1x1 matrix (-1). Absent (throws) otherwise.
std::optional<WitnessReport> psd_scalar_witness(const Word& w);

struct SearchConfig {
    std::vector<int> dims{2, 3};
    long long trials = 10000;  // per dimension
    std::uint64_t seed = 1;
    double imag_tol_base = 1e-8;  // scaled by 1 + ||P||_F
};

// Seeded random search over assignments with entries uniform on [-1,1]
// (sym variables symmetrized as (R+R^T)/2). Deterministic for a fixed
// (word, config): trial t uses a seed derived from (seed, dim, t).
// Returns the first success, or absent when all trials are exhausted.
// Throws unless the word classifies as NotRealEigenvalued.
std::optional<WitnessReport> random_witness_search(const Word& w, const SearchConfig& cfg);

// Cheapest certificate first: structured templates, then the scalar PSD
// witness (SymTimesPsd verdict), then random search.
std::optional<WitnessReport> find_witness(const Word& w, const SearchConfig& cfg);

struct Verification {
    bool pass = false;
    double max_imag = 0.0;
    double min_real = 0.0;
    std::string detail;
};

// Recomputes the product and spectrum from the stored assignment and
// checks the claim implied by the report kind.
Verification verify_witness(const Word& w, const WitnessReport& r,
                            double imag_tol_base = 1e-8, double psd_tol_base = 1e-8);

// Deterministic uniform draw on [-1, 1] from a 64-bit state; exposed so
// tests and the acceptance suite share the exact generator.
double uniform_pm1(std::uint64_t& state);
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);
Matrix random_matrix(int n, std::uint64_t seed, bool symmetric);

}  // namespace matword
