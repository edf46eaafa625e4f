#include "matword/word.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace matword {

bool operator==(const Word& lhs, const Word& rhs) {
    if (lhs.factors.size() != rhs.factors.size()) return false;
    for (size_t i = 0; i < lhs.factors.size(); ++i) {
        const Factor& a = lhs.factors[i];
        const Factor& b = rhs.factors[i];
        if (a.marker != b.marker) return false;
        if (lhs.vars[a.var].name != rhs.vars[b.var].name) return false;
        if (lhs.vars[a.var].symmetric != rhs.vars[b.var].symmetric) return false;
    }
    return true;
}

namespace {

bool valid_identifier(const std::string& s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isalnum(c); });
}

}  // namespace

Word parse_word(const std::string& text, const std::set<std::string>& sym_names) {
    std::string spaced = text;
    std::replace(spaced.begin(), spaced.end(), '*', ' ');

    Word w;
    std::map<std::string, int> ids;
    std::istringstream in(spaced);
    std::string token;
    while (in >> token) {
        bool transposed = false;
        if (token.size() >= 2 && token.substr(token.size() - 2) == "^T") {
            transposed = true;
            token.resize(token.size() - 2);
        } else if (token.size() >= 1 && token.back() == '\'') {
            transposed = true;
            token.pop_back();
        }
        if (!valid_identifier(token))
            throw ParseError("malformed factor token: '" + token + "'");

        bool declared_sym = sym_names.count(token) > 0;
        auto [it, inserted] = ids.emplace(token, static_cast<int>(w.vars.size()));
        if (inserted) w.vars.push_back({token, declared_sym});

        Marker m = transposed ? Marker::Transpose : Marker::Plain;
        if (declared_sym) {
            if (transposed)
                w.warnings.push_back("transpose suffix on symmetric variable '" +
                                     token + "' absorbed");
            m = Marker::Sym;
        }
        w.factors.push_back({it->second, m});
    }
    if (w.factors.empty()) throw ParseError("empty word");
    return normalize(w);
}

std::string print_word(const Word& w) {
    if (w.factors.empty()) return "I";
    std::string out;
    for (size_t i = 0; i < w.factors.size(); ++i) {
        if (i) out += ' ';
        out += w.vars[w.factors[i].var].name;
        if (w.factors[i].marker == Marker::Transpose) out += "^T";
    }
    return out;
}

std::string print_word_header(const Word& w) {
    std::vector<std::string> syms;
    for (const auto& v : w.vars)
        if (v.symmetric) syms.push_back(v.name);
    if (syms.empty()) return "";
    std::string out = "sym: ";
    for (size_t i = 0; i < syms.size(); ++i) {
        if (i) out += ',';
        out += syms[i];
    }
    return out;
}

Word normalize(const Word& w) {
    Word out = w;
    for (const Factor& f : out.factors)
        if (f.marker == Marker::Sym) out.vars[f.var].symmetric = true;
    for (Factor& f : out.factors)
        if (out.vars[f.var].symmetric) f.marker = Marker::Sym;
    return out;
}

bool is_normalized(const Word& w) {
    for (const Factor& f : w.factors) {
        bool sym = w.vars[f.var].symmetric;
        if (sym != (f.marker == Marker::Sym)) return false;
    }
    return true;
}

Word transpose_word(const Word& w) {
    Word out = w;
    std::reverse(out.factors.begin(), out.factors.end());
    for (Factor& f : out.factors) f.marker = conj_marker(f.marker);
    return out;
}

Word cyclic_shift(const Word& w, int j) {
    int k = w.degree();
    if (k == 0) return w;
    int s = j % k;
    if (s < 0) s += k;
    Word out = w;
    std::rotate(out.factors.begin(), out.factors.begin() + s, out.factors.end());
    return out;
}

std::optional<int> eq_shift(const Word& w1, const Word& w2) {
    int k = w1.degree();
    if (k != w2.degree()) return std::nullopt;
    if (k == 0) return 0;
    for (int j = 0; j < k; ++j) {
        bool ok = true;
        for (int i = 0; i < k && ok; ++i) {
            const Factor& a = w1.factors[(j + i) % k];
            const Factor& b = w2.factors[i];
            ok = a.marker == b.marker &&
                 w1.vars[a.var].name == w2.vars[b.var].name;
        }
        if (ok) return j;
    }
    return std::nullopt;
}

Word make_word(std::vector<Factor> factors, std::vector<VarInfo> vars) {
    Word w;
    w.factors = std::move(factors);
    w.vars = std::move(vars);
    return w;
}

Word with_factors(const Word& base, std::vector<Factor> factors) {
    Word w;
    w.vars = base.vars;
    w.factors = std::move(factors);
    return w;
}

Word concat(const Word& lhs, const Word& rhs) {
    Word out = lhs;
    out.warnings.clear();
    std::map<std::string, int> ids;
    for (size_t i = 0; i < out.vars.size(); ++i) ids[out.vars[i].name] = static_cast<int>(i);
    for (const Factor& f : rhs.factors) {
        const VarInfo& v = rhs.vars[f.var];
        auto [it, inserted] = ids.emplace(v.name, static_cast<int>(out.vars.size()));
        if (inserted) out.vars.push_back(v);
        else out.vars[it->second].symmetric = out.vars[it->second].symmetric || v.symmetric;
        out.factors.push_back({it->second, f.marker});
    }
    return out;
}

ColoredCycle to_colored_cycle(const Word& w) {
    ColoredCycle c;
    c.n = w.degree();
    c.edges.reserve(c.n);
    for (const Factor& f : w.factors) {
        int orient = 0;
        switch (f.marker) {
            case Marker::Plain: orient = 1; break;
            case Marker::Transpose: orient = -1; break;
            case Marker::Sym: orient = 0; break;
        }
        c.edges.push_back({orient, f.var});
    }
    return c;
}

}  // namespace matword
