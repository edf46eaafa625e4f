#include "matword/decider.hpp"

#include <stdexcept>

namespace matword {

const char* verdict_name(Verdict v, bool adjoint) {
    switch (v) {
        case Verdict::Symmetric: return adjoint ? "self-adjoint" : "symmetric";
        case Verdict::SymTimesPsd: return "sym-times-psd";
        case Verdict::NotRealEigenvalued:
            return adjoint ? "not-self-adjoint" : "not-real-eigenvalued";
    }
    return "?";
}

namespace {

// Doubled factor array so shifted index pairs avoid modular arithmetic
// in the O(k^2) scan.
std::vector<Factor> doubled(const Word& w) {
    std::vector<Factor> d = w.factors;
    d.insert(d.end(), w.factors.begin(), w.factors.end());
    return d;
}

inline bool conj_pair_matches(const Factor& front, const Factor& back) {
    return back.var == front.var && back.marker == conj_marker(front.marker);
}

}  // namespace

std::optional<SymSplit> is_symmetric(const Word& w, long long* comparisons) {
    const int k = w.degree();
    if (k == 0 || k % 2 != 0) return std::nullopt;
    const std::vector<Factor> d = doubled(w);
    const int half = k / 2;
    for (int j = 0; j < k; ++j) {
        bool ok = true;
        for (int i = 0; i < half; ++i) {
            if (comparisons) ++*comparisons;
            if (!conj_pair_matches(d[j + i], d[j + k - 1 - i])) {
                ok = false;
                break;
            }
        }
        if (ok) {
            SymSplit split;
            split.shift = j;
            split.half = with_factors(
                w, std::vector<Factor>(d.begin() + j, d.begin() + j + half));
            return split;
        }
    }
    return std::nullopt;
}

std::optional<SymPlusSplit> is_sym_plus(const Word& w, long long* comparisons) {
    const int k = w.degree();
    if (k == 0 || k % 2 == 0) return std::nullopt;
    const std::vector<Factor> d = doubled(w);
    const int half = (k - 1) / 2;
    for (int j = 0; j < k; ++j) {
        if (comparisons) ++*comparisons;
        if (d[j + k - 1].marker != Marker::Sym) continue;
        bool ok = true;
        for (int i = 0; i < half; ++i) {
            if (comparisons) ++*comparisons;
            if (!conj_pair_matches(d[j + i], d[j + k - 2 - i])) {
                ok = false;
                break;
            }
        }
        if (ok) {
            SymPlusSplit split;
            split.shift = j;
            split.half = with_factors(
                w, std::vector<Factor>(d.begin() + j, d.begin() + j + half));
            split.sym_var = d[j + k - 1].var;
            return split;
        }
    }
    return std::nullopt;
}

Certificate classify(const Word& w) {
    Certificate cert;
    cert.degree = w.degree();
    cert.half = with_factors(w, {});
    if (auto sym = is_symmetric(w, &cert.comparisons)) {
        cert.verdict = Verdict::Symmetric;
        cert.shift = sym->shift;
        cert.half = std::move(sym->half);
        cert.psd = true;
        return cert;
    }
    if (auto plus = is_sym_plus(w, &cert.comparisons)) {
        cert.verdict = Verdict::SymTimesPsd;
        cert.shift = plus->shift;
        cert.half = std::move(plus->half);
        cert.sym_var = plus->sym_var;
        cert.psd = false;
        return cert;
    }
    cert.verdict = Verdict::NotRealEigenvalued;
    cert.psd = false;
    return cert;
}

Certificate classify_adjoint(const Word& w) {
    for (const Factor& f : w.factors)
        if (f.marker == Marker::Sym)
            throw std::invalid_argument(
                "adjoint classification: symmetric variables are not supported");
    Certificate cert;
    cert.degree = w.degree();
    cert.half = with_factors(w, {});
    cert.adjoint = true;
    if (auto sym = is_symmetric(w, &cert.comparisons)) {
        cert.verdict = Verdict::Symmetric;
        cert.shift = sym->shift;
        cert.half = std::move(sym->half);
        cert.psd = true;
    } else {
        cert.verdict = Verdict::NotRealEigenvalued;
    }
    return cert;
}

std::set<int> find_rotations(const ColoredCycle& c) {
    std::set<int> out;
    for (int t = 1; t <= c.n; ++t) {
        bool ok = true;
        for (int x = 0; x < c.n && ok; ++x) ok = c.edge(x + t) == c.edge(x);
        if (ok) out.insert(t);
    }
    return out;
}

std::set<int> find_reflections(const ColoredCycle& c) {
    std::set<int> out;
    for (int i = 0; i < c.n; ++i) {
        bool ok = true;
        for (int x = 0; x < c.n && ok; ++x) ok = c.edge(x) == bar(c.edge(i - x - 1));
        if (ok) out.insert(i);
    }
    return out;
}

bool check_rotation_hypothesis(const ColoredCycle& c, int i, int j) {
    for (int s = 0; s < c.n; ++s) {
        bool same = c.edge(i + s - 1) == c.edge(j + s - 1) &&
                    c.edge(i + s) == c.edge(j + s);
        bool crossed = c.edge(i + s - 1) == bar(c.edge(j + s)) &&
                       c.edge(i + s) == bar(c.edge(j + s - 1));
        if (!same && !crossed) return false;
    }
    return true;
}

bool check_reflection_hypothesis(const ColoredCycle& c, int i) {
    for (int s = 0; s < c.n; ++s) {
        bool same = c.edge(s - 1) == c.edge(i - s - 1) && c.edge(s) == c.edge(i - s);
        bool crossed = c.edge(s - 1) == bar(c.edge(i - s)) &&
                       c.edge(s) == bar(c.edge(i - s - 1));
        if (!same && !crossed) return false;
    }
    return true;
}

bool is_two_periodic(const ColoredCycle& c) {
    for (int x = 0; x < c.n; ++x)
        if (!(c.edge(x + 2) == c.edge(x))) return false;
    return true;
}

}  // namespace matword
