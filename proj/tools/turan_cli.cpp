// Command-line front end: construct | count | check-free | formula |
// symmetrize | ex | verify. Graphs travel as graph6 lines; results are
// JSON on stdout. Exit codes: 0 ok, 1 pattern found (check-free), 2 bad
// arguments, 3 capacity, 4 internal consistency failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "turan/construct.hpp"
#include "turan/counting.hpp"
#include "turan/formulas.hpp"
#include "turan/freeness.hpp"
#include "turan/graph6.hpp"
#include "turan/oracle.hpp"
#include "turan/symmetrize.hpp"
#include "turan/verify.hpp"

using json = nlohmann::ordered_json;
using namespace turan;

namespace {

std::vector<long long> parse_ints(const std::string& s, size_t want,
                                  const std::string& what) {
    std::vector<long long> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stoll(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw argument_error("bad integer '" + tok + "' in " + what);
        }
    }
    if (want != 0 && out.size() != want)
        throw argument_error(what + " expects " + std::to_string(want) +
                             " comma-separated integers");
    return out;
}

Graph parse_target(const std::string& spec) {
    auto colon = spec.find(':');
    std::string head = spec.substr(0, colon);
    std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (head == "clique") {
        auto v = parse_ints(rest, 1, "clique:k");
        return clique(static_cast<int>(v[0]));
    }
    if (head == "biclique") {
        auto v = parse_ints(rest, 2, "biclique:a,b");
        return biclique(static_cast<int>(v[0]), static_cast<int>(v[1]));
    }
    if (head == "book") {
        auto v = parse_ints(rest, 2, "book:r,s");
        return book_graph(static_cast<int>(v[0]), static_cast<int>(v[1]));
    }
    if (head == "g6") return g6_decode(rest);
    throw argument_error(
        "unknown target '" + spec +
        "' (expected clique:k | biclique:a,b | book:r,s | g6:STR)");
}

ForbiddenPattern parse_pattern(const std::string& spec) {
    if (spec == "never") return ForbiddenPattern::never();
    auto colon = spec.find(':');
    std::string head = spec.substr(0, colon);
    std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (head == "clique") {
        auto v = parse_ints(rest, 1, "clique:r");
        return ForbiddenPattern::clique_pattern(static_cast<int>(v[0]));
    }
    if (head == "book") {
        auto v = parse_ints(rest, 2, "book:r,s");
        return ForbiddenPattern::book(static_cast<int>(v[0]),
                                      static_cast<int>(v[1]));
    }
    if (head == "kcliques") {
        auto v = parse_ints(rest, 2, "kcliques:k,r");
        return ForbiddenPattern::disjoint_cliques(static_cast<int>(v[0]),
                                                  static_cast<int>(v[1]));
    }
    if (head == "union") {
        auto comma = rest.find(',');
        if (comma == std::string::npos)
            throw argument_error("union pattern needs two graph6 strings");
        return ForbiddenPattern::union_pair(g6_decode(rest.substr(0, comma)),
                                            g6_decode(rest.substr(comma + 1)));
    }
    if (head == "g6") return ForbiddenPattern::explicit_graph(g6_decode(rest));
    throw argument_error("unknown pattern '" + spec +
                         "' (expected clique:r | book:r,s | kcliques:k,r | "
                         "union:G6,G6 | g6:STR | never)");
}

// Family lists are comma separated; a bare-number token continues the
// previous spec (so biclique:2,2 survives the split).
std::vector<std::string> split_family(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty() && (std::isdigit(static_cast<unsigned char>(tok[0]))) &&
            !out.empty())
            out.back() += "," + tok;
        else
            out.push_back(tok);
    }
    return out;
}

std::vector<std::string> read_g6_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

Graph read_one_graph(std::istream& in) {
    auto lines = read_g6_lines(in);
    if (lines.empty()) throw argument_error("no graph6 input on stdin");
    return g6_decode(lines[0]);
}

std::optional<TheoremId> parse_case(const std::string& s) {
    for (TheoremId id :
         {TheoremId::Thm1i, TheoremId::Thm1ii, TheoremId::Thm2Lower,
          TheoremId::Thm2iii, TheoremId::Thm3, TheoremId::Thm4,
          TheoremId::Zykov, TheoremId::MoonEdges, TheoremId::PropKrr1,
          TheoremId::Br1Edges})
        if (s == theorem_id_name(id)) return id;
    return std::nullopt;
}

struct ExCacheEntry {
    std::string value;
    std::vector<std::string> witnesses;
    uint64_t graphs_enumerated = 0;
};

std::optional<ExCacheEntry> cache_lookup(const std::string& path, int n,
                                         const std::vector<std::string>& h_keys,
                                         const std::string& f_key) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::string line;
    std::optional<ExCacheEntry> hit;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded()) continue;  // tolerate a torn trailing line
        if (!j.contains("n") || !j.contains("h") || !j.contains("f")) continue;
        if (j["n"] != n || j["f"] != f_key) continue;
        std::vector<std::string> keys = j["h"];
        if (keys != h_keys) continue;
        ExCacheEntry e;
        e.value = j["value"];
        e.witnesses = j["witnesses"].get<std::vector<std::string>>();
        e.graphs_enumerated = j["graphs_enumerated"];
        hit = e;  // last entry wins: the log is append-only
    }
    return hit;
}

void cache_append(const std::string& path, int n,
                  const std::vector<std::string>& h_keys,
                  const std::string& f_key, const OracleResult& res) {
    std::ofstream out(path, std::ios::app);
    if (!out) throw argument_error("cannot open cache file " + path);
    json j;
    j["n"] = n;
    j["h"] = h_keys;
    j["f"] = f_key;
    j["value"] = res.value.str();
    j["witnesses"] = res.witnesses;
    j["graphs_enumerated"] = res.graphs_enumerated;
    out << j.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized Turan toolkit: constructions, exact copy "
                 "counting, freeness checks, symmetrization and a "
                 "brute-force extremal oracle"};
    app.require_subcommand(1);
    // --h is a real option on several subcommands, so help is --help only
    app.set_help_flag("--help", "print help");

    std::string format = "json";
    int jobs = 1;
    std::string cache_path;
    long long seed = 0;
    app.add_option("--format", format, "output format (verify): json|md|csv")
        ->check(CLI::IsMember({"json", "md", "csv"}));
    app.add_option("--jobs", jobs, "worker threads");
    app.add_option("--cache", cache_path, "ex result cache file (JSON lines)");
    app.add_option("--seed", seed, "seed echoed into reports");

    auto* c_construct = app.add_subcommand("construct", "emit a named construction as graph6");
    std::string ctype, csizes;
    long long cn = -1, cr = -1, cs = -1, cm = -1, cq = -1;
    c_construct->add_option("--type", ctype,
                            "turan|turan-plus|book|clique-join-turan|multipartite")
        ->required();
    c_construct->add_option("--n", cn, "vertex count");
    c_construct->add_option("--r", cr, "part count / clique size");
    c_construct->add_option("--s", cs, "book overlap");
    c_construct->add_option("--m", cm, "apex clique size");
    c_construct->add_option("--q", cq, "Turan part count");
    c_construct->add_option("--sizes", csizes, "part sizes a,b,c,...");

    auto* c_count = app.add_subcommand("count", "count copies of H in graph6 graphs from stdin");
    c_count->set_help_flag("--help", "print help");
    std::string count_h;
    c_count->add_option("--h", count_h, "clique:k | biclique:a,b | book:r,s | g6:STR")
        ->required();

    auto* c_free = app.add_subcommand("check-free", "test a graph6 graph from stdin for a forbidden pattern");
    std::string free_f;
    c_free->add_option("--f", free_f, "book:r,s | clique:r | kcliques:k,r | g6:STR")
        ->required();

    auto* c_formula = app.add_subcommand("formula", "evaluate a predicted extremal value");
    std::string fcase;
    long long fn = 0, fr = 0, fs = 0, ft = 0, fk = 0, fa = 0, fb = 0;
    c_formula->add_option("--case", fcase,
                          "thm1i|thm1ii|thm2lower|thm2iii|thm3|thm4|zykov|moon|krr1|br1edges")
        ->required();
    auto* opt_fn = c_formula->add_option("--n", fn, "n");
    auto* opt_fr = c_formula->add_option("--r", fr, "r");
    auto* opt_fs = c_formula->add_option("--s", fs, "s");
    auto* opt_ft = c_formula->add_option("--t", ft, "t");
    auto* opt_fk = c_formula->add_option("--k", fk, "k");
    auto* opt_fa = c_formula->add_option("--a", fa, "a");
    auto* opt_fb = c_formula->add_option("--b", fb, "b");

    auto* c_sym = app.add_subcommand("symmetrize", "run symmetrization on a graph6 graph from stdin");
    c_sym->set_help_flag("--help", "print help");
    std::string sym_h, sym_mode;
    long long sym_cap = 0;
    c_sym->add_option("--h", sym_h, "counted graph H")->required();
    c_sym->add_option("--mode", sym_mode, "plain:r | restricted:r,s")->required();
    c_sym->add_option("--cap", sym_cap, "step cap (default 10*n^2)");

    auto* c_ex = app.add_subcommand("ex", "brute-force extremal value ex(n, H, F)");
    c_ex->set_help_flag("--help", "print help");
    long long ex_n = -1;
    std::string ex_h, ex_family, ex_f;
    int ex_witnesses = 10;
    c_ex->add_option("--n", ex_n, "vertex count")->required();
    c_ex->add_option("--h", ex_h, "target graph");
    c_ex->add_option("--family", ex_family, "comma list of targets (summed)");
    c_ex->add_option("--f", ex_f, "forbidden pattern")->required();
    c_ex->add_option("--witnesses", ex_witnesses, "max stored witnesses");

    auto* c_verify = app.add_subcommand("verify", "run a theorem verification grid");
    std::string vsuite;
    int v_oracle_limit = 8, v_witnesses = 4;
    c_verify->add_option("--suite", vsuite, "zykov|thm1|thm2|thm3|thm4|krr1|f_props")
        ->required();
    c_verify->add_option("--oracle-limit", v_oracle_limit,
                         "run the oracle on rows with n up to this");
    c_verify->add_option("--witnesses", v_witnesses, "witnesses kept per row");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*c_construct) {
            auto need = [&](long long v, const char* name) {
                if (v < 0)
                    throw argument_error(std::string("construct --type ") +
                                         ctype + " needs --" + name);
                return static_cast<int>(v);
            };
            Graph g;
            if (ctype == "turan")
                g = turan_graph(need(cn, "n"), need(cr, "r"));
            else if (ctype == "turan-plus")
                g = turan_plus(need(cn, "n"), need(cr, "r"));
            else if (ctype == "book")
                g = book_graph(need(cr, "r"), need(cs, "s"));
            else if (ctype == "clique-join-turan")
                g = clique_join_turan(need(cm, "m"), need(cq, "q"), need(cn, "n"));
            else if (ctype == "multipartite") {
                if (csizes.empty())
                    throw argument_error("multipartite needs --sizes");
                auto v = parse_ints(csizes, 0, "--sizes");
                g = complete_multipartite(std::vector<int>(v.begin(), v.end()));
            } else {
                throw argument_error("unknown construction type '" + ctype + "'");
            }
            std::cout << g6_encode(g) << "\n";
            return 0;
        }

        if (*c_count) {
            Graph h = parse_target(count_h);
            for (const auto& line : read_g6_lines(std::cin)) {
                Graph g = g6_decode(line);
                json j;
                j["count"] = count_copies(g, h).str();
                std::cout << j.dump() << "\n";
            }
            return 0;
        }

        if (*c_free) {
            ForbiddenPattern f = parse_pattern(free_f);
            Graph g = read_one_graph(std::cin);
            auto witness = find_pattern(g, f);
            json j;
            j["pattern"] = f.describe();
            j["free"] = !witness.has_value();
            if (witness) j["witness"] = *witness;
            std::cout << j.dump() << "\n";
            return witness ? 1 : 0;
        }

        if (*c_formula) {
            auto id = parse_case(fcase);
            if (!id) throw argument_error("unknown case '" + fcase + "'");
            CaseParams p;
            if (opt_fn->count()) p.n = fn;
            if (opt_fr->count()) p.r = fr;
            if (opt_fs->count()) p.s = fs;
            if (opt_ft->count()) p.t = ft;
            if (opt_fk->count()) p.k = fk;
            if (opt_fa->count()) p.a = fa;
            if (opt_fb->count()) p.b = fb;
            Prediction pred = predicted_ex({*id, p});
            json j;
            j["case"] = theorem_id_name(*id);
            json params = json::object();
            auto put = [&](const char* name, const std::optional<long long>& v) {
                if (v) params[name] = *v;
            };
            put("n", p.n);
            put("r", p.r);
            put("s", p.s);
            put("t", p.t);
            put("k", p.k);
            put("a", p.a);
            put("b", p.b);
            j["params"] = params;
            j["value"] = pred.value.str();
            j["target"] = pred.target_desc;
            j["forbidden"] = pred.forbidden.describe();
            j["construction_g6"] = g6_encode(pred.graph);
            if (*id == TheoremId::Thm4) {
                auto opt = best_bipartite_plus_edge(static_cast<int>(*p.n),
                                                    static_cast<int>(*p.a),
                                                    static_cast<int>(*p.b));
                j["m"] = opt.m;
                j["edge_side"] = opt.edge_side == 0 ? "first" : "second";
            }
            std::cout << j.dump() << "\n";
            return 0;
        }

        if (*c_sym) {
            Graph h = parse_target(sym_h);
            Graph g = read_one_graph(std::cin);
            auto colon = sym_mode.find(':');
            std::string head = sym_mode.substr(0, colon);
            std::string rest =
                colon == std::string::npos ? "" : sym_mode.substr(colon + 1);
            SymMode mode;
            ForbiddenPattern constraint = ForbiddenPattern::never();
            if (head == "plain") {
                auto v = parse_ints(rest, 1, "plain:r");
                mode = SymMode::plain();
                constraint =
                    ForbiddenPattern::clique_pattern(static_cast<int>(v[0]));
            } else if (head == "restricted") {
                auto v = parse_ints(rest, 2, "restricted:r,s");
                mode = SymMode::restricted_mode(static_cast<int>(v[0]),
                                                static_cast<int>(v[1]));
                constraint = ForbiddenPattern::book(static_cast<int>(v[0]),
                                                    static_cast<int>(v[1]));
            } else {
                throw argument_error("mode must be plain:r or restricted:r,s");
            }
            auto trace = run_symmetrization(g, h, constraint, mode, sym_cap);
            int step = 0;
            for (const auto& st : trace.steps) {
                json j;
                j["step"] = step++;
                j["source"] = st.source;
                j["target"] = st.target;
                j["count_before"] = st.count_before.str();
                j["count_after"] = st.count_after.str();
                std::cout << j.dump() << "\n";
            }
            json fin;
            fin["final_g6"] = g6_encode(trace.final_graph);
            fin["steps"] = trace.steps.size();
            fin["terminated"] = trace.terminated == SymTermination::FixedPoint
                                    ? "fixed_point"
                                    : "cap_reached";
            fin["final_count"] = count_copies(trace.final_graph, h).str();
            std::cout << fin.dump() << "\n";
            return 0;
        }

        if (*c_ex) {
            ForbiddenPattern f = parse_pattern(ex_f);
            std::vector<Graph> targets;
            std::vector<std::string> target_specs;
            if (!ex_family.empty()) {
                for (const auto& spec : split_family(ex_family)) {
                    targets.push_back(parse_target(spec));
                    target_specs.push_back(spec);
                }
            } else if (!ex_h.empty()) {
                targets.push_back(parse_target(ex_h));
                target_specs.push_back(ex_h);
            } else {
                throw argument_error("ex needs --h or --family");
            }
            std::vector<std::string> h_keys;
            for (const auto& h : targets)
                h_keys.push_back(canonical_label(h).key);
            std::sort(h_keys.begin(), h_keys.end());
            std::string f_key = f.cache_key();

            json j;
            j["n"] = ex_n;
            j["h"] = target_specs;
            j["f"] = f.describe();
            bool cached = false;
            if (!cache_path.empty()) {
                if (auto hit = cache_lookup(cache_path, static_cast<int>(ex_n),
                                            h_keys, f_key)) {
                    j["value"] = hit->value;
                    j["witnesses"] = hit->witnesses;
                    j["graphs_enumerated"] = hit->graphs_enumerated;
                    cached = true;
                }
            }
            if (!cached) {
                OracleOptions opt;
                opt.witness_cap = ex_witnesses;
                opt.jobs = jobs;
                auto res = ex_family_oracle(static_cast<int>(ex_n), targets, f, opt);
                j["value"] = res.value.str();
                j["witnesses"] = res.witnesses;
                j["graphs_enumerated"] = res.graphs_enumerated;
                j["elapsed_seconds"] = res.elapsed_seconds;
                if (!cache_path.empty())
                    cache_append(cache_path, static_cast<int>(ex_n), h_keys,
                                 f_key, res);
            }
            j["cached"] = cached;
            std::cout << j.dump() << "\n";
            return 0;
        }

        if (*c_verify) {
            auto suite = parse_suite(vsuite);
            if (!suite) throw argument_error("unknown suite '" + vsuite + "'");
            VerifyOptions opt;
            opt.oracle_limit = v_oracle_limit;
            opt.jobs = jobs;
            opt.witness_cap = v_witnesses;
            VerifyReport report = verify(*suite, opt);
            if (format == "md")
                std::cout << report_markdown(report);
            else if (format == "csv")
                std::cout << report_csv(report);
            else
                std::cout << report_json(report).dump(2) << "\n";
            return 0;
        }
    } catch (const consistency_error& e) {
        std::cerr << "consistency failure: " << e.what() << "\n";
        return 4;
    } catch (const capacity_error& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return 3;
    } catch (const argument_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
