#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace matword {

// A word is a formal product of matrix variables, their transposes, and
// symmetric variables. Factors are (variable id, marker) pairs; variable
// ids index into the word's variable table.

enum class Marker { Plain, Transpose, Sym };

struct Factor {
    int var = 0;
    Marker marker = Marker::Plain;

    bool operator==(const Factor&) const = default;
};

// Conjugation under formal transposition: plain <-> transpose, sym fixed.
inline Marker conj_marker(Marker m) {
    switch (m) {
        case Marker::Plain: return Marker::Transpose;
        case Marker::Transpose: return Marker::Plain;
        case Marker::Sym: return Marker::Sym;
    }
    return m;
}

struct VarInfo {
    std::string name;
    bool symmetric = false;

    bool operator==(const VarInfo&) const = default;
};

struct Word {
    std::vector<Factor> factors;
    std::vector<VarInfo> vars;
    // Parse metadata only; never part of equality or printing.
    std::vector<std::string> warnings;

    int degree() const { return static_cast<int>(factors.size()); }
    bool empty() const { return factors.empty(); }
    const std::string& var_name(int id) const { return vars[id].name; }
    bool var_symmetric(int id) const { return vars[id].symmetric; }
};

// Equality compares factor sequences by (name, marker) plus each used
// variable's sym flag, so words built with different id layouts compare
// as expected. Warnings are ignored.
bool operator==(const Word& lhs, const Word& rhs);
inline bool operator!=(const Word& lhs, const Word& rhs) { return !(lhs == rhs); }

struct ParseError : std::exception {
    std::string message;
    explicit ParseError(std::string msg) : message(std::move(msg)) {}
    const char* what() const noexcept override { return message.c_str(); }
};

// Grammar: factor tokens separated by whitespace or '*'; a token is an
// identifier [A-Za-z][A-Za-z0-9]* optionally suffixed by ^T or '.
// Identifiers in sym_names become Sym factors (a transpose suffix on a
// sym variable is absorbed, with a warning recorded on the word).
// The result is normalized. Empty input is an error.
Word parse_word(const std::string& text, const std::set<std::string>& sym_names);

// Canonical printers. print_word emits "A B^T C"; the empty word prints
// as "I". print_word_header emits the "sym: C" declaration line, or ""
// when the word has no symmetric variables.
std::string print_word(const Word& w);
std::string print_word_header(const Word& w);

// Sym propagation: a variable that occurs once with marker Sym (or is
// declared symmetric in the table) has all of its occurrences rewritten
// to Sym. Idempotent.
Word normalize(const Word& w);
bool is_normalized(const Word& w);

// Reverses the factors and conjugates each marker; an involution.
Word transpose_word(const Word& w);

// cyclic_shift(w, j) starts the word at factor index j (mod degree).
Word cyclic_shift(const Word& w, int j);

// Least j in [0, k) with cyclic_shift(w1, j) == w2 factor-wise, or
// absent. Length mismatch yields absent.
std::optional<int> eq_shift(const Word& w1, const Word& w2);

// Builds a word over the table of `base` from explicit factors.
Word make_word(std::vector<Factor> factors, std::vector<VarInfo> vars);
// Word with the same variable table but a different factor list.
Word with_factors(const Word& base, std::vector<Factor> factors);
Word concat(const Word& lhs, const Word& rhs);

// --- Edge-colored oriented cycles (decider's auxiliary structure) ---

// A directed color is (orientation in {+1,-1,0}, undirected color label).
struct DirectedColor {
    int orientation = 0;
    int color = 0;

    bool operator==(const DirectedColor&) const = default;
};

inline DirectedColor bar(DirectedColor c) { return {-c.orientation, c.color}; }

struct ColoredCycle {
    int n = 0;
    std::vector<DirectedColor> edges;  // edge i joins v_i and v_{i+1 mod n}

    const DirectedColor& edge(int i) const {
        int m = i % n;
        if (m < 0) m += n;
        return edges[m];
    }
};

// Plain -> +1, Transpose -> -1, Sym -> 0; color = variable id.
ColoredCycle to_colored_cycle(const Word& w);

}  // namespace matword
