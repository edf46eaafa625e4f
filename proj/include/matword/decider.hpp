#pragma once

#include <optional>
#include <set>

#include "matword/word.hpp"

namespace matword {

enum class Verdict { Symmetric, SymTimesPsd, NotRealEigenvalued };

const char* verdict_name(Verdict v, bool adjoint = false);

// Decider output. For Symmetric / SymTimesPsd verdicts the certificate
// carries the witnessing shift and half-word L:
//   Symmetric:    cyclic_shift(w, shift) == L . L^T            (k even)
//   SymTimesPsd:  cyclic_shift(w, shift) == L . L^T . X^sym    (k odd)
// psd is true exactly for Symmetric. comparisons counts factor
// comparisons spent by the decision (O(k^2) contract).
struct Certificate {
    Verdict verdict = Verdict::NotRealEigenvalued;
    int shift = -1;
    Word half;
    int sym_var = -1;
    bool psd = false;
    int degree = 0;
    long long comparisons = 0;
    bool adjoint = false;
};

struct SymSplit {
    int shift = 0;
    Word half;
};

struct SymPlusSplit {
    int shift = 0;
    Word half;
    int sym_var = 0;
};

// Least shift j such that the shifted word factors into L·L^T; absent
// for odd degree or when no shift works. comparisons, when non-null,
// accumulates the number of factor comparisons performed.
std::optional<SymSplit> is_symmetric(const Word& w, long long* comparisons = nullptr);

// Least shift j such that the shifted word factors into L·L^T·X^sym
// with |L| = (k-1)/2; absent for even degree or when no shift works.
std::optional<SymPlusSplit> is_sym_plus(const Word& w, long long* comparisons = nullptr);

// The trichotomy: Symmetric, else SymTimesPsd, else NotRealEigenvalued.
// Expects a normalized word.
Certificate classify(const Word& w);

// Complex-adjoint variant (markers read as 1 / *): same combinatorics,
// restricted to Symmetric ("self-adjoint") vs NotRealEigenvalued.
// Throws std::invalid_argument if the word has Sym markers.
Certificate classify_adjoint(const Word& w);

// --- Colored-cycle symmetry detectors ---

// All t in [1, n] with c(e_{x+t}) = c(e_x) for every x (t = n always).
std::set<int> find_rotations(const ColoredCycle& c);

// All axes i in [0, n) such that v_x -> v_{i-x} is color respecting,
// i.e. c(e_x) = bar(c(e_{i-x-1})) for every x.
std::set<int> find_reflections(const ColoredCycle& c);

// The local two-case hypothesis for rotations: for every s, either
//   c(e_{i+s-1}) = c(e_{j+s-1}) and c(e_{i+s}) = c(e_{j+s}), or
//   c(e_{i+s-1}) = bar(c(e_{j+s})) and c(e_{i+s}) = bar(c(e_{j+s-1})).
bool check_rotation_hypothesis(const ColoredCycle& c, int i, int j);

// The reflection analogue: for every s, either
//   c(e_{s-1}) = c(e_{i-s-1}) and c(e_s) = c(e_{i-s}), or
//   c(e_{s-1}) = bar(c(e_{i-s})) and c(e_s) = bar(c(e_{i-s-1})).
bool check_reflection_hypothesis(const ColoredCycle& c, int i);

// True when the edge coloring is 2-periodic: c(e_{x+2}) = c(e_x) for
// all x (the alternating case excluded by the reflection proposition).
bool is_two_periodic(const ColoredCycle& c);

}  // namespace matword
