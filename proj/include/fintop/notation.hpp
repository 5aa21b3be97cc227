#pragma once

// ASCII surface syntax for the arrow notation: '->' and '<-' for the
// closure arrows, '<->' for isomorphic points, '=' for gluing, '=>'
// separating the domain literal of a map from its codomain literal.
//
//   space  := '{' (chain (',' chain)*)? '}'
//   chain  := label (rel label)*
//   rel    := '->' | '<-' | '<->' | '='
//   label  := [A-Za-z0-9_']+ | '*'
//   map    := space '=>' space

#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "maps.hpp"

namespace fintop {

struct parse_error : error {
    size_t pos;
    parse_error(const std::string& msg, size_t p)
        : error(msg + " at position " + std::to_string(p)), pos(p) {}
};

namespace detail {

enum class Tok { LBrace, RBrace, Comma, ArrowR, ArrowL, ArrowLR, Eq, MapsTo, Ident, End };

struct Token {
    Tok kind;
    std::string text;
    size_t pos;
};

inline bool is_label_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

inline std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (c == '{') {
            out.push_back({Tok::LBrace, "{", i++});
        } else if (c == '}') {
            out.push_back({Tok::RBrace, "}", i++});
        } else if (c == ',') {
            out.push_back({Tok::Comma, ",", i++});
        } else if (s.compare(i, 3, "<->") == 0) {
            out.push_back({Tok::ArrowLR, "<->", i});
            i += 3;
        } else if (s.compare(i, 2, "<-") == 0) {
            out.push_back({Tok::ArrowL, "<-", i});
            i += 2;
        } else if (s.compare(i, 2, "=>") == 0) {
            out.push_back({Tok::MapsTo, "=>", i});
            i += 2;
        } else if (s.compare(i, 2, "->") == 0) {
            out.push_back({Tok::ArrowR, "->", i});
            i += 2;
        } else if (c == '=') {
            out.push_back({Tok::Eq, "=", i++});
        } else if (c == '*') {
            out.push_back({Tok::Ident, "*", i++});
        } else if (is_label_char(c)) {
            size_t j = i;
            while (j < s.size() && is_label_char(s[j])) ++j;
            out.push_back({Tok::Ident, s.substr(i, j - i), i});
            i = j;
        } else {
            throw parse_error(std::string("unexpected character '") + c + "'", i);
        }
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

// One chain: labels alternating with relation tokens.
struct Chain {
    std::vector<std::string> labels;
    std::vector<Tok> rels;  // rels[k] relates labels[k], labels[k+1]
};

struct SpaceLit {
    std::vector<Chain> chains;
};

struct Parser {
    std::vector<Token> toks;
    size_t at = 0;

    const Token& peek() const { return toks[at]; }
    Token next() { return toks[at++]; }
    void expect(Tok k, const char* what) {
        if (peek().kind != k) throw parse_error(std::string("expected ") + what, peek().pos);
        ++at;
    }

    SpaceLit space_literal() {
        expect(Tok::LBrace, "'{'");
        SpaceLit lit;
        if (peek().kind == Tok::RBrace) {
            ++at;
            return lit;
        }
        for (;;) {
            Chain ch;
            if (peek().kind != Tok::Ident)
                throw parse_error("expected point label", peek().pos);
            ch.labels.push_back(next().text);
            while (peek().kind == Tok::ArrowR || peek().kind == Tok::ArrowL ||
                   peek().kind == Tok::ArrowLR || peek().kind == Tok::Eq) {
                ch.rels.push_back(next().kind);
                if (peek().kind != Tok::Ident)
                    throw parse_error("expected point label after relation", peek().pos);
                ch.labels.push_back(next().text);
            }
            lit.chains.push_back(std::move(ch));
            if (peek().kind == Tok::Comma) {
                ++at;
                continue;
            }
            expect(Tok::RBrace, "'}' or ','");
            return lit;
        }
    }
};

// Accumulates labels, arrows and '='-gluings from one or two literals, then
// quotients and closes.
struct SpaceBuilder {
    std::vector<std::string> labels;  // first-occurrence order
    std::map<std::string, int> index;
    std::vector<int> parent;          // union-find over label indices
    std::vector<std::pair<int, int>> arrows;

    int touch(const std::string& l) {
        auto it = index.find(l);
        if (it != index.end()) return it->second;
        int i = static_cast<int>(labels.size());
        labels.push_back(l);
        index.emplace(l, i);
        parent.push_back(i);
        return i;
    }
    int find(int i) { return parent[i] == i ? i : parent[i] = find(parent[i]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }

    void add(const SpaceLit& lit) {
        for (const auto& ch : lit.chains) {
            int prev = touch(ch.labels[0]);
            for (size_t k = 0; k < ch.rels.size(); ++k) {
                int cur = touch(ch.labels[k + 1]);
                switch (ch.rels[k]) {
                    case Tok::ArrowR: arrows.emplace_back(prev, cur); break;
                    case Tok::ArrowL: arrows.emplace_back(cur, prev); break;
                    case Tok::ArrowLR:
                        arrows.emplace_back(prev, cur);
                        arrows.emplace_back(cur, prev);
                        break;
                    case Tok::Eq: unite(prev, cur); break;
                    default: break;
                }
                prev = cur;
            }
        }
    }

    // point index per label class; representative label = first occurrence
    FiniteSpace build(std::vector<int>* label_to_point = nullptr) {
        std::vector<int> cls(labels.size(), -1);
        std::vector<std::string> pts;
        for (size_t i = 0; i < labels.size(); ++i) {
            int r = find(static_cast<int>(i));
            if (cls[r] == -1) {
                cls[r] = static_cast<int>(pts.size());
                pts.push_back(labels[r]);
            }
            cls[i] = cls[r];
        }
        std::vector<std::pair<std::string, std::string>> as;
        for (auto [a, b] : arrows) as.emplace_back(pts[cls[a]], pts[cls[b]]);
        if (label_to_point) *label_to_point = cls;
        return make_space(pts, as);
    }
};

}  // namespace detail

inline FiniteSpace parse_space(const std::string& text) {
    detail::Parser p{detail::tokenize(text)};
    auto lit = p.space_literal();
    if (p.peek().kind != detail::Tok::End)
        throw parse_error("trailing input after space literal", p.peek().pos);
    detail::SpaceBuilder b;
    b.add(lit);
    return b.build();
}

// The codomain is the second literal augmented with every point and
// relation of the first, glued by '=' from both; each domain point goes to
// the codomain class carrying its label. As a special case a bare '{*}'
// codomain denotes the collapse of the whole domain to a single point
// (X => {*} is the constant map).
inline ContinuousMap parse_map(const std::string& text) {
    detail::Parser p{detail::tokenize(text)};
    auto lit1 = p.space_literal();
    p.expect(detail::Tok::MapsTo, "'=>'");
    auto lit2 = p.space_literal();
    if (p.peek().kind != detail::Tok::End)
        throw parse_error("trailing input after map literal", p.peek().pos);

    detail::SpaceBuilder db;
    db.add(lit1);
    std::vector<int> dom_cls;
    FiniteSpace dom = db.build(&dom_cls);

    detail::SpaceBuilder cb;
    cb.add(lit1);
    bool collapse = lit2.chains.size() == 1 && lit2.chains[0].labels.size() == 1 &&
                    lit2.chains[0].labels[0] == "*";
    if (collapse) {
        int star = cb.touch("*");
        for (size_t i = 0; i < cb.labels.size(); ++i) cb.unite(static_cast<int>(i), star);
    } else {
        cb.add(lit2);
    }
    std::vector<int> cod_cls;
    FiniteSpace cod = cb.build(&cod_cls);

    std::vector<int> assignment(dom.n, -1);
    for (size_t li = 0; li < db.labels.size(); ++li) {
        int ci = cb.index.at(db.labels[li]);
        assignment[dom_cls[li]] = cod_cls[ci];
    }
    return make_map(std::move(dom), std::move(cod), std::move(assignment));
}

namespace detail {

inline bool valid_label(const std::string& l) {
    if (l == "*") return true;
    if (l.empty()) return false;
    for (char c : l)
        if (!is_label_char(c)) return false;
    return true;
}

// Strongly connected components of the preorder are the mutually-related
// classes; the condensation is a poset whose transitive reduction we print.
struct Reduction {
    std::vector<std::vector<int>> sccs;      // member point indices
    std::vector<int> scc_of;                 // point -> scc
    std::vector<std::pair<int, int>> edges;  // reduced edges between sccs
};

inline Reduction reduce(const FiniteSpace& s) {
    Reduction r;
    r.scc_of.assign(s.n, -1);
    for (int i = 0; i < s.n; ++i) {
        if (r.scc_of[i] != -1) continue;
        int id = static_cast<int>(r.sccs.size());
        r.sccs.push_back({});
        for (int j = 0; j < s.n; ++j)
            if (s.related(i, j) && s.related(j, i)) {
                r.scc_of[j] = id;
                r.sccs[id].push_back(j);
            }
    }
    const int m = static_cast<int>(r.sccs.size());
    std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
    for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < s.n; ++j)
            if (s.related(i, j) && r.scc_of[i] != r.scc_of[j])
                adj[r.scc_of[i]][r.scc_of[j]] = true;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            if (!adj[a][b]) continue;
            bool redundant = false;
            for (int c = 0; c < m && !redundant; ++c)
                if (c != a && c != b && adj[a][c] && adj[c][b]) redundant = true;
            if (!redundant) r.edges.emplace_back(a, b);
        }
    return r;
}

inline std::vector<std::string> safe_labels(const FiniteSpace& s) {
    std::vector<std::string> out(s.n);
    std::set<std::string> used;
    for (int i = 0; i < s.n; ++i) {
        std::string l = s.labels[i];
        if (!valid_label(l) || used.count(l)) l = "p" + std::to_string(i);
        while (used.count(l)) l += "'";
        used.insert(l);
        out[i] = l;
    }
    return out;
}

// Chains covering every relation of the transitive reduction; every point
// is mentioned at least once.
inline std::vector<std::string> space_chains(const FiniteSpace& s,
                                             const std::vector<std::string>& names) {
    Reduction r = reduce(s);
    std::vector<std::string> chains;
    std::vector<bool> mentioned(s.n, false);
    for (const auto& scc : r.sccs)
        if (scc.size() > 1) {
            std::string ch = names[scc[0]];
            mentioned[scc[0]] = true;
            for (size_t k = 1; k < scc.size(); ++k) {
                ch += "<->" + names[scc[k]];
                mentioned[scc[k]] = true;
            }
            chains.push_back(ch);
        }
    for (auto [a, b] : r.edges) {
        int pa = r.sccs[a][0], pb = r.sccs[b][0];
        chains.push_back(names[pa] + "->" + names[pb]);
        mentioned[pa] = mentioned[pb] = true;
    }
    for (int i = 0; i < s.n; ++i)
        if (!mentioned[i] && r.sccs[r.scc_of[i]][0] == i) chains.push_back(names[i]);
    return chains;
}

inline std::string brace_join(const std::vector<std::string>& chains) {
    std::string out = "{";
    for (size_t i = 0; i < chains.size(); ++i) {
        if (i) out += ",";
        out += chains[i];
    }
    return out + "}";
}

}  // namespace detail

// Emits a literal that re-parses to a homeomorphic space (in fact to an
// identically-related one over the same labels).
inline std::string print_space(const FiniteSpace& s) {
    auto names = detail::safe_labels(s);
    return detail::brace_join(detail::space_chains(s, names));
}

// Round-trips up to map isomorphism. Codomain points are named by the
// domain points they collect ('=' gluing) or freshly when outside the
// image; an endomorphism-shaped map is printed by relabeling its codomain.
inline std::string print_map(const ContinuousMap& f) {
    auto dom_names = detail::safe_labels(f.dom);
    std::set<std::string> used(dom_names.begin(), dom_names.end());

    // name per codomain point
    std::vector<std::string> cod_names(f.cod.n);
    std::vector<std::vector<int>> glued(f.cod.n);
    for (int i = 0; i < f.dom.n; ++i) glued[f.assignment[i]].push_back(i);
    for (int c = 0; c < f.cod.n; ++c) {
        if (!glued[c].empty()) {
            cod_names[c] = dom_names[glued[c].front()];
        } else {
            std::string l = detail::valid_label(f.cod.labels[c]) ? f.cod.labels[c]
                                                                 : "q" + std::to_string(c);
            while (used.count(l)) l += "'";
            used.insert(l);
            cod_names[c] = l;
        }
    }

    std::vector<std::string> cod_chains;
    for (int c = 0; c < f.cod.n; ++c)
        if (glued[c].size() > 1) {
            std::string ch = dom_names[glued[c][0]];
            for (size_t k = 1; k < glued[c].size(); ++k) ch += "=" + dom_names[glued[c][k]];
            cod_chains.push_back(ch);
        }
    for (auto& ch : detail::space_chains(f.cod, cod_names)) cod_chains.push_back(ch);

    return detail::brace_join(detail::space_chains(f.dom, dom_names)) + " => " +
           detail::brace_join(cod_chains);
}

}  // namespace fintop
