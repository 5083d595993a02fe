#pragma once

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mcgl/error.hpp"

namespace mcgl {

/// Formal generator: a Dehn twist about a labelled curve or a labelled
/// mapping-class symbol, with exponent +-1.
struct Generator {
    enum class Kind { twist, sym };
    Kind kind = Kind::sym;
    std::string label;
    int exp = 1;
};

inline Generator twist(std::string label, int exp = 1) {
    return {Generator::Kind::twist, std::move(label), exp};
}
inline Generator sym(std::string label, int exp = 1) {
    return {Generator::Kind::sym, std::move(label), exp};
}
inline bool operator==(const Generator& a, const Generator& b) {
    return a.kind == b.kind && a.label == b.label && a.exp == b.exp;
}
inline bool operator!=(const Generator& a, const Generator& b) { return !(a == b); }
inline bool inverse_pair(const Generator& a, const Generator& b) {
    return a.kind == b.kind && a.label == b.label && a.exp == -b.exp;
}

/// Word in the formal generators.  Operations return freely reduced words.
struct McgWord {
    std::vector<Generator> letters;

    int length() const { return static_cast<int>(letters.size()); }
};

inline bool operator==(const McgWord& a, const McgWord& b) { return a.letters == b.letters; }
inline bool operator!=(const McgWord& a, const McgWord& b) { return !(a == b); }

/// Maximal cancellation of adjacent inverse pairs; idempotent and
/// length-nonincreasing.
inline McgWord free_reduce(const McgWord& w) {
    std::vector<Generator> out;
    for (const auto& g : w.letters) {
        if (!out.empty() && inverse_pair(out.back(), g))
            out.pop_back();
        else
            out.push_back(g);
    }
    return {std::move(out)};
}

inline McgWord concat(const McgWord& a, const McgWord& b) {
    McgWord w = a;
    w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
    return free_reduce(w);
}

inline McgWord inverse(const McgWord& w) {
    McgWord out;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        out.letters.push_back({it->kind, it->label, -it->exp});
    return out;
}

/// s^-1 w s, reduced.
inline McgWord conjugate_by(const McgWord& w, const Generator& s) {
    McgWord out;
    out.letters.push_back({s.kind, s.label, -s.exp});
    out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.end());
    out.letters.push_back(s);
    return free_reduce(out);
}

/// Number of maximal runs of the given periodic symbol: each run together
/// with its surrounding conjugator is one conjugate of a power.
inline int conjugate_count(const McgWord& w, const std::string& periodic_label) {
    int runs = 0;
    bool in_run = false;
    for (const auto& g : w.letters) {
        bool is_phi = g.kind == Generator::Kind::sym && g.label == periodic_label;
        if (is_phi && !in_run) ++runs;
        in_run = is_phi;
    }
    return runs;
}

/// The seven curve labels of an embedded lantern.
struct LanternLabels {
    std::string alpha1 = "alpha1", alpha2 = "alpha2";
    std::string gamma1 = "gamma1", gamma2 = "gamma2";
    std::string x1 = "x1", x2 = "x2", x3 = "x3";

    std::vector<std::string> all() const {
        return {alpha1, alpha2, gamma1, gamma2, x1, x2, x3};
    }
    /// boundary curves of the four-holed sphere: disjoint from every lantern
    /// curve, so their twists commute with all seven
    std::vector<std::string> boundary() const { return {alpha1, alpha2, x1, gamma2}; }
};

struct LanternSides {
    McgWord eq_left, eq_right;        // T_a1 = T_g1 T_g2^-1 T_x3 T_x1^-1 T_x2 T_a2^-1
    McgWord proof_left, proof_right;  // T_a1 T_a2 T_x1 T_g2 = T_g1 T_x3 T_x2
    std::vector<std::pair<std::string, std::string>> commuting;  // disjointness facts
};

/// Both presentations of the lantern relation, with the disjoint-twist
/// commutations that make them mutually derivable.
inline LanternSides lantern_sides(const LanternLabels& lab = {}) {
    auto names = lab.all();
    std::set<std::string> uniq(names.begin(), names.end());
    check(uniq.size() == 7, errc::invalid_input, "lantern: seven distinct labels required");

    LanternSides ls;
    ls.eq_left = {{twist(lab.alpha1)}};
    ls.eq_right = {{twist(lab.gamma1), twist(lab.gamma2, -1), twist(lab.x3), twist(lab.x1, -1),
                    twist(lab.x2), twist(lab.alpha2, -1)}};
    ls.proof_left = {{twist(lab.alpha1), twist(lab.alpha2), twist(lab.x1), twist(lab.gamma2)}};
    ls.proof_right = {{twist(lab.gamma1), twist(lab.x3), twist(lab.x2)}};
    for (const auto& b : lab.boundary())
        for (const auto& other : names)
            if (b != other) ls.commuting.push_back({b, other});
    return ls;
}

/// The fact "map sends source curve to target curve"; at most one target per
/// (map, source) pair.
struct MappingRule {
    std::string map_label, source, target;
};

inline void validate_rules(const std::vector<MappingRule>& rules) {
    check(rules.size() == 3, errc::missing_rule, "rules: exactly three hypotheses expected");
    for (std::size_t i = 0; i < rules.size(); ++i)
        for (std::size_t j = i + 1; j < rules.size(); ++j)
            check(rules[i].map_label != rules[j].map_label, errc::conflicting_rule,
                  "rules: map symbol '" + rules[i].map_label + "' constrained twice");
}

/// The factorization word of the twist about the first boundary curve:
///   m1^-1 (T_t1 m1 T_t1^-1) m2^-1 (T_t2 m2 T_t2^-1) m3^-1 (T_t3 m3 T_t3^-1)
/// where (mi, si, ti) are the rules; 12 letters, each map symbol once
/// inverted and once direct.
inline McgWord lemma32_factorize(const std::vector<MappingRule>& rules) {
    validate_rules(rules);
    McgWord w;
    for (const auto& r : rules) {
        w.letters.push_back(sym(r.map_label, -1));
        w.letters.push_back(twist(r.target));
        w.letters.push_back(sym(r.map_label));
        w.letters.push_back(twist(r.target, -1));
    }
    return free_reduce(w);
}

/// Directed rewriting with the naturality axiom T_{m(c)} = m T_c m^-1,
/// instantiated by the rule set, plus free reduction:
///   m^-1 T_t^e m  ->  T_s^e       and      m T_s^e m^-1  ->  T_t^e.
/// Each application removes two map letters, so rewriting terminates.
inline McgWord normal_form(const McgWord& w0, const std::vector<MappingRule>& rules) {
    McgWord w = free_reduce(w0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 2 < w.letters.size() && !changed; ++i) {
            const Generator& a = w.letters[i];
            const Generator& t = w.letters[i + 1];
            const Generator& b = w.letters[i + 2];
            if (a.kind != Generator::Kind::sym || t.kind != Generator::Kind::twist ||
                b.kind != Generator::Kind::sym)
                continue;
            if (a.label != b.label || a.exp != -b.exp) continue;
            for (const auto& r : rules) {
                if (r.map_label != a.label) continue;
                std::string replacement;
                if (a.exp == -1 && t.label == r.target)
                    replacement = r.source;  // m^-1 T_t m -> T_s
                else if (a.exp == 1 && t.label == r.source)
                    replacement = r.target;  // m T_s m^-1 -> T_t
                else
                    continue;
                std::vector<Generator> next(w.letters.begin(), w.letters.begin() + i);
                next.push_back(twist(replacement, t.exp));
                next.insert(next.end(), w.letters.begin() + i + 3, w.letters.end());
                w = free_reduce(McgWord{std::move(next)});
                changed = true;
                break;
            }
        }
    }
    return w;
}

/// Mechanical replay of the rewriting chain: the factorization word and the
/// right side of the lantern relation must reach a common normal form.
inline bool check_derivation(const std::vector<MappingRule>& rules,
                             const LanternLabels& lab = {}) {
    McgWord w = lemma32_factorize(rules);
    McgWord target = lantern_sides(lab).eq_right;
    return normal_form(w, rules) == normal_form(target, rules);
}

/// The paper-shaped rule set f(gamma1) = gamma2, g(x3) = x1, h(x2) = alpha2.
inline std::vector<MappingRule> standard_rules(const LanternLabels& lab = {}) {
    return {{"f", lab.gamma1, lab.gamma2}, {"g", lab.x3, lab.x1}, {"h", lab.x2, lab.alpha2}};
}

/// Substitutes f = psi_f^-1 phi^i psi_f (and g, h analogously) into the
/// factorization word.  The result carries exactly six maximal phi-power
/// blocks: six conjugates of powers of phi.
inline McgWord theorem14_word(int i, int j, int k, const LanternLabels& lab = {}) {
    check(i != 0 && j != 0 && k != 0, errc::invalid_input,
          "theorem14_word: powers must be nonzero");
    struct Part {
        const char* psi;
        int p;
        std::string curve;
    };
    const Part parts[] = {{"psi_f", i, lab.gamma2}, {"psi_g", j, lab.x1},
                          {"psi_h", k, lab.alpha2}};
    McgWord w;
    auto push_phi = [&](int p) {
        for (int c = 0; c < std::abs(p); ++c) w.letters.push_back(sym("phi", p > 0 ? 1 : -1));
    };
    for (const auto& part : parts) {
        // (psi^-1 phi^-p psi) T_c (psi^-1 phi^p psi) T_c^-1
        w.letters.push_back(sym(part.psi, -1));
        push_phi(-part.p);
        w.letters.push_back(sym(part.psi));
        w.letters.push_back(twist(part.curve));
        w.letters.push_back(sym(part.psi, -1));
        push_phi(part.p);
        w.letters.push_back(sym(part.psi));
        w.letters.push_back(twist(part.curve, -1));
    }
    McgWord reduced = free_reduce(w);
    check(conjugate_count(reduced, "phi") == 6, errc::internal,
          "theorem14_word: expected six conjugate blocks");
    return reduced;
}

// --- text format: whitespace tokens  T[label] / T[label]^-1 / sym / sym^-1 ---

inline std::string format_generator(const Generator& g) {
    std::string base =
        g.kind == Generator::Kind::twist ? "T[" + g.label + "]" : g.label;
    return g.exp == 1 ? base : base + "^-1";
}

inline std::string format_word(const McgWord& w) {
    std::string out;
    for (const auto& g : w.letters) {
        if (!out.empty()) out += " ";
        out += format_generator(g);
    }
    return out;
}

inline Generator parse_generator(std::string tok) {
    int exp = 1;
    if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
        exp = -1;
        tok = tok.substr(0, tok.size() - 3);
    }
    if (tok.size() > 3 && tok.front() == 'T' && tok[1] == '[' && tok.back() == ']')
        return twist(tok.substr(2, tok.size() - 3), exp);
    check(!tok.empty() && tok.find('[') == std::string::npos, errc::parse_error,
          "word: bad token '" + tok + "'");
    return sym(tok, exp);
}

inline McgWord parse_word(const std::string& text) {
    std::istringstream is(text);
    McgWord w;
    std::string tok;
    while (is >> tok) w.letters.push_back(parse_generator(tok));
    return w;
}

}  // namespace mcgl
