// fintop-cli: decision and enumeration front end for the lifting toolkit.
//
// Exit codes: 0 success / property holds, 1 definite property failure,
// 2 usage or parse error.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include <fintop/json_io.hpp>

using namespace fintop;

namespace {

struct CliConfig {
    int universe_bound = 4;
    bool json = false;
    int jobs = 1;
    std::string cache_dir;

    std::string cache_file() const { return cache_dir + "/fintop-lift-cache.json"; }
};

void print_caret(const std::string& text, const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n  " << text << "\n  ";
    for (size_t i = 0; i < e.pos && i < text.size() + 1; ++i) std::cerr << ' ';
    std::cerr << "^\n";
}

// A literal containing "=>" outside nothing fancy is a map literal.
bool looks_like_map(const std::string& text) { return text.find("=>") != std::string::npos; }

int cmd_parse(const CliConfig& cfg, const std::string& literal) {
    if (looks_like_map(literal)) {
        ContinuousMap f = parse_map(literal);
        ContinuousMap c = canonical_map(f);
        if (cfg.json) {
            std::cout << map_to_json(c).dump(2) << "\n";
            return 0;
        }
        std::cout << "map: " << print_map(c) << "\n";
        std::cout << "dom points: " << c.dom.n << "\ncod points: " << c.cod.n << "\n";
        return 0;
    }
    FiniteSpace s = parse_space(literal);
    FiniteSpace c = canonical_form(s).space;
    if (cfg.json) {
        std::cout << space_to_json(c).dump(2) << "\n";
        return 0;
    }
    int arrows = 0;
    detail::Reduction r = detail::reduce(c);
    for (const auto& scc : r.sccs) arrows += static_cast<int>(scc.size() > 1 ? scc.size() : 0);
    arrows += static_cast<int>(r.edges.size());
    auto o = space_oracles(c);
    std::cout << "space: " << print_space(c) << "\n";
    std::cout << "points: " << c.n << "\narrows: " << arrows << "\n";
    std::cout << "T0: " << (o.is_t0 ? "true" : "false")
              << "  T1: " << (o.is_t1 ? "true" : "false")
              << "  connected: " << (o.is_connected ? "true" : "false") << "\n";
    return 0;
}

int cmd_lift(const CliConfig& cfg, const std::string& f_lit, const std::string& g_lit) {
    ContinuousMap f = parse_map(f_lit);
    ContinuousMap g = parse_map(g_lit);
    LiftReport rep = has_lifting(f, g);
    if (cfg.json) {
        nlohmann::json j{{"holds", rep.holds}, {"squares_checked", rep.squares_checked}};
        if (rep.counterexample) {
            j["counterexample"] = {{"top", map_to_json(rep.counterexample->first)},
                                   {"bottom", map_to_json(rep.counterexample->second)}};
        }
        std::cout << j.dump(2) << "\n";
        return rep.holds ? 0 : 1;
    }
    if (rep.holds) {
        std::cout << "holds (" << rep.squares_checked << " commuting squares)\n";
        return 0;
    }
    std::cout << "fails: commuting square without diagonal\n";
    std::cout << "  top:    " << print_map(rep.counterexample->first) << "\n";
    std::cout << "  bottom: " << print_map(rep.counterexample->second) << "\n";
    return 1;
}

int cmd_orth(const CliConfig& cfg, const std::vector<std::string>& seed_lits,
             const std::string& word_text, const std::string& check_lit) {
    std::vector<ContinuousMap> seeds;
    for (const auto& lit : seed_lits) seeds.push_back(parse_map(lit));
    OrthWord word = parse_word(word_text);
    Universe u = build_universe(cfg.universe_bound);
    MapClass seed_class = make_seed_class(seeds);

    if (!check_lit.empty()) {
        ContinuousMap f = parse_map(check_lit);
        auto v = member_of_word_class(f, seed_class, word, u, cfg.jobs);
        if (cfg.json) {
            std::cout << nlohmann::json{{"word", to_string(word)},
                                        {"universe", u.bound},
                                        {"member", v.member},
                                        {"exactness", to_string(v.exactness)}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << "member: " << (v.member ? "true" : "false") << "\n";
            std::cout << "exactness: " << to_string(v.exactness) << "\n";
            if (v.exactness != Exactness::exact)
                std::cout << "note: necessary-condition evidence relative to universe bound "
                          << u.bound << ", not an equivalence\n";
        }
        return v.member ? 0 : 1;
    }

    MapClass cls = eval_word(seed_class, word, u, cfg.jobs);
    if (cfg.json) {
        std::cout << class_to_json(cls, to_string(word)).dump(2) << "\n";
        return 0;
    }
    std::cout << "word: " << to_string(word) << "\nuniverse: " << u.bound
              << "\nexactness: " << to_string(cls.exactness) << "\nmembers: " << cls.members.size()
              << "\n";
    for (const auto& m : cls.members) std::cout << "  " << print_map(m) << "\n";
    return 0;
}

int cmd_spaces(const CliConfig& cfg, int size, bool list) {
    auto spaces = enumerate_spaces(size);
    if (cfg.json) {
        nlohmann::json j{{"size", size}, {"count", spaces.size()}};
        if (list) {
            j["spaces"] = nlohmann::json::array();
            for (const auto& s : spaces) j["spaces"].push_back(space_to_json(s));
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "size " << size << ": " << spaces.size() << " spaces\n";
    if (list)
        for (const auto& s : spaces) std::cout << "  " << print_space(s) << "\n";
    return 0;
}

int cmd_classify(const CliConfig& cfg, const std::string& literal) {
    ContinuousMap f = parse_map(literal);
    Universe u = build_universe(cfg.universe_bound);
    nlohmann::json rows = nlohmann::json::array();
    size_t width = 0;
    std::vector<PropertyDef> entries;
    for (const auto& p : catalogue())
        if (p.subject == Subject::map) {
            entries.push_back(p);
            width = std::max(width, p.name.size());
        }
    for (const auto& p : entries) {
        auto v = check_property(f, p, u, cfg.jobs);
        if (cfg.json) {
            rows.push_back({{"property", p.name},
                            {"holds", v.holds},
                            {"exactness", to_string(v.exactness)}});
        } else {
            std::cout << p.name << std::string(width + 2 - p.name.size(), ' ')
                      << (v.holds ? "true " : "false") << "  (" << to_string(v.exactness)
                      << ")\n";
        }
    }
    if (cfg.json) std::cout << rows.dump(2) << "\n";
    return 0;
}

int cmd_verify(const CliConfig& cfg, const std::string& suite) {
    Universe u = build_universe(cfg.universe_bound);
    bool failed = false;
    nlohmann::json out = nlohmann::json::object();

    if (suite == "catalogue" || suite == "all") {
        auto rep = verify_catalogue(u, cfg.jobs);
        if (!rep.accepted()) failed = true;
        if (cfg.json) {
            out["catalogue"] = report_to_json(rep);
        } else {
            for (const auto& e : rep.entries) {
                std::cout << "catalogue " << e.name << " [" << e.exactness << ", " << e.mode
                          << "]: " << e.agreements << "/" << e.checked << " agree\n";
                for (const auto& d : e.disagreements)
                    std::cout << "  disagrees: " << d
                              << (e.mode == "diagnostic" ? "  (diagnostic only)" : "") << "\n";
            }
        }
    }
    if (suite == "iterated" || suite == "all") {
        Universe ui = cfg.universe_bound >= 3 ? build_universe(3) : u;
        auto seeds = make_seed_class({parse_map("{} => {*}")});
        auto cr = orthogonal_relative(seeds, Side::R, ui, cfg.jobs);
        auto cl = orthogonal_relative(seeds, Side::L, ui, cfg.jobs);
        auto cll = orthogonal_relative(cl, Side::L, ui, cfg.jobs);
        long bad = 0;
        for (const auto& m : ui.maps) {
            if (cr.contains(m) != map_oracles(m).is_surjective) ++bad;
            bool in_l = m.dom.n > 0 || (m.dom.n == 0 && m.cod.n == 0);
            if (cl.contains(m) != in_l) ++bad;
            if (cll.contains(m) != map_oracles(m).is_isomorphism) ++bad;
        }
        if (bad) failed = true;
        if (cfg.json)
            out["iterated"] = {{"checked", ui.maps.size()}, {"mismatches", bad}};
        else
            std::cout << "iterated r/l/ll identities: " << bad << " mismatches over "
                      << ui.maps.size() << " maps\n";
    }
    if (suite == "urysohn" || suite == "all") {
        auto z3 = zigzag_map(3);
        auto z5 = zigzag_map(5);
        long t4 = 0, bad = 0;
        for (const auto& s : u.spaces) {
            auto from_empty = make_map(make_space({}, {}), s, {});
            if (!lifts(from_empty, z3)) continue;
            ++t4;
            if (!lifts(from_empty, z5)) ++bad;
        }
        if (bad) failed = true;
        if (cfg.json)
            out["urysohn"] = {{"t4_spaces", t4}, {"zigzag5_failures", bad}};
        else
            std::cout << "urysohn: " << t4 << " T4 spaces, " << bad << " zigzag_5 failures\n";
    }
    if (suite == "ultrafilter" || suite == "all") {
        FiniteSpace pt = make_space({"*"}, {});
        long checked = 0, bad = 0;
        int amax = std::min(3, cfg.universe_bound);
        for (const auto& a : u.spaces) {
            if (a.n > amax) continue;
            for (int p = 0; p < a.n; ++p) {
                auto f = adjoin_point(a, p);
                for (const auto& k : u.spaces) {
                    ++checked;
                    auto to_pt = make_map(k, pt, std::vector<int>(k.n, 0));
                    if (!has_lifting(f, to_pt).holds) ++bad;
                }
            }
        }
        if (bad) failed = true;
        if (cfg.json)
            out["ultrafilter"] = {{"checked", checked}, {"failures", bad}};
        else
            std::cout << "ultrafilter: " << bad << " lifting failures over " << checked
                      << " squares\n";
    }

    if (cfg.json) std::cout << out.dump(2) << "\n";
    if (!cfg.json) std::cout << (failed ? "verify: FAIL\n" : "verify: OK\n");
    return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lifting-property toolkit for finite topological spaces"};
    app.require_subcommand(1);

    CliConfig cfg;
    cfg.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    if (const char* env = std::getenv("FINTOP_CACHE_DIR")) cfg.cache_dir = env;

    app.add_flag("--json", cfg.json, "emit JSON instead of text");
    app.add_option("--universe", cfg.universe_bound, "universe size bound (max 5)")
        ->check(CLI::Range(0, 5))
        ->capture_default_str();
    app.add_option("--jobs", cfg.jobs, "worker threads for sweeps");
    app.add_option("--cache-dir", cfg.cache_dir,
                   "directory for the on-disk lifting cache (env FINTOP_CACHE_DIR)");

    std::string literal, f_lit, g_lit, word_text = "r", check_lit, suite = "catalogue";
    std::vector<std::string> seed_lits;
    int size = 2;
    bool list = false;

    auto* parse_cmd = app.add_subcommand("parse", "parse and echo a space or map literal");
    parse_cmd->add_option("literal", literal, "space or map literal")->required();

    auto* lift_cmd = app.add_subcommand("lift", "decide f ⋌ g");
    lift_cmd->add_option("f", f_lit, "left map literal")->required();
    lift_cmd->add_option("g", g_lit, "right map literal")->required();

    auto* orth_cmd = app.add_subcommand("orth", "evaluate an iterated orthogonal word");
    orth_cmd->add_option("--seed", seed_lits, "seed map literal (repeatable)")->required();
    orth_cmd->add_option("--word", word_text, "orthogonal word, e.g. r, ll, r,<5,l,r");
    orth_cmd->add_option("--check", check_lit, "test this map for membership");

    auto* spaces_cmd = app.add_subcommand("spaces", "enumerate spaces of a given size");
    spaces_cmd->add_option("--size", size, "number of points")->check(CLI::Range(0, 5));
    spaces_cmd->add_flag("--list", list, "print one literal per space");

    auto* classify_cmd = app.add_subcommand("classify", "catalogue verdicts for one map");
    classify_cmd->add_option("literal", literal, "map literal")->required();

    auto* verify_cmd = app.add_subcommand("verify", "run a verification sweep");
    verify_cmd->add_option("--suite", suite, "catalogue|iterated|urysohn|ultrafilter|all")
        ->check(CLI::IsMember({"catalogue", "iterated", "urysohn", "ultrafilter", "all"}));

    for (auto* sub : {parse_cmd, lift_cmd, orth_cmd, spaces_cmd, classify_cmd, verify_cmd})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (!cfg.cache_dir.empty()) load_lift_cache(cfg.cache_file());

    int rc = 2;
    try {
        if (parse_cmd->parsed()) rc = cmd_parse(cfg, literal);
        else if (lift_cmd->parsed()) rc = cmd_lift(cfg, f_lit, g_lit);
        else if (orth_cmd->parsed()) rc = cmd_orth(cfg, seed_lits, word_text, check_lit);
        else if (spaces_cmd->parsed()) rc = cmd_spaces(cfg, size, list);
        else if (classify_cmd->parsed()) rc = cmd_classify(cfg, literal);
        else if (verify_cmd->parsed()) rc = cmd_verify(cfg, suite);
    } catch (const parse_error& e) {
        print_caret(literal.empty() ? (f_lit.empty() ? check_lit : f_lit) : literal, e);
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    if (!cfg.cache_dir.empty()) save_lift_cache(cfg.cache_file());
    return rc;
}
