#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cluster/canon.hpp"
#include "cluster/classify.hpp"
#include "cluster/error.hpp"
#include "cluster/explore.hpp"
#include "cluster/folding.hpp"
#include "cluster/geom.hpp"
#include "cluster/seed.hpp"
#include "cluster/tropical.hpp"

using namespace cluster;
using json = nlohmann::ordered_json;

namespace {

struct Common {
    bool json = false;
    bool dot = false;
    std::size_t cap = 0;         // depth, 0 = none
    std::size_t max_states = 1000000;
    unsigned threads = 1;

    ExploreOptions options() const {
        ExploreOptions o;
        if (cap) o.max_depth = cap;
        o.max_states = max_states;
        o.threads = threads;
        return o;
    }
};

std::string slurp(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

bool looks_json(const std::string& text) {
    auto p = text.find_first_not_of(" \t\r\n");
    return p != std::string::npos && text[p] == '{';
}

Matrix read_matrix(const std::string& path) {
    std::string text = slurp(path);
    return looks_json(text) ? matrix_from_json(text) : parse_matrix(text);
}

std::size_t content_lines(const std::string& text) {
    std::istringstream in(text);
    std::size_t k = 0;
    for (std::string line; std::getline(in, line);) {
        auto f = line.find_first_not_of(" \t\r");
        if (f != std::string::npos && line[f] != '#') ++k;
    }
    return k;
}

// m from the "m n" header
std::size_t header_rows(const std::string& text) {
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        auto f = line.find_first_not_of(" \t\r");
        if (f == std::string::npos || line[f] == '#') continue;
        std::istringstream hs(line);
        std::size_t m = 0;
        if (!(hs >> m)) throw ParseError("expected 'm n' header");
        return m;
    }
    throw ParseError("empty input");
}

// 1-based "1 2 1" -> 0-based
std::vector<std::size_t> parse_word(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::size_t> w;
    for (std::string t; in >> t;) {
        long long v = 0;
        try {
            std::size_t used = 0;
            v = std::stoll(t, &used);
            if (used != t.size()) throw ParseError("");
        } catch (...) {
            throw ParseError("bad mutation index '" + t + "'");
        }
        if (v < 1) throw IndexError("mutation indices are 1-based");
        w.push_back(static_cast<std::size_t>(v - 1));
    }
    return w;
}

json word_json(const std::vector<std::size_t>& w) {
    json a = json::array();
    for (auto k : w) a.push_back(k + 1);
    return a;
}

json matrix_json(const Matrix& b) { return json::parse(matrix_to_json(b)); }

std::string join(const std::vector<std::size_t>& v, std::size_t offset = 1) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i] + offset);
    return s;
}

void print_report(const ExplorationReport& r, bool seeds, const Common& c) {
    if (c.json) {
        std::cout << report_to_json(r, seeds) << "\n";
        return;
    }
    std::cout << "status: " << status_name(r.status) << "\n";
    std::cout << (seeds ? "seeds: " : "matrices: ") << r.count << "\n";
    if (seeds) std::cout << "variables: " << r.variables << "\n";
    std::cout << "depth  cumulative\n";
    for (std::size_t d = 0; d < r.depth_profile.size(); ++d) std::cout << d << "  " << r.depth_profile[d] << "\n";
    if (r.witness)
        std::cout << "witness: |b" << r.witness->i + 1 << "," << r.witness->j + 1 << " b" << r.witness->j + 1 << ","
                  << r.witness->i + 1 << "| = " << r.witness->product << " after word [" << join(r.witness->word)
                  << "]\n";
}

// Exchange graph of a seed pattern: vertices are the unlabeled seeds.
std::string exchange_dot(const Matrix& b, const ExploreOptions& opt) {
    ExploreOptions o = opt;
    o.keep_seeds = true;
    SeedPattern p = explore_seed_pattern(initial_seed(b), o);
    if (p.report.status != ExploreStatus::Closed) throw PreconditionError("exchange graph needs a closed pattern");
    std::map<std::string, std::size_t> id;
    for (std::size_t i = 0; i < p.seeds.size(); ++i) id[format_seed(p.seeds[i])] = i;
    std::ostringstream os;
    os << "graph exchange {\n";
    for (std::size_t i = 0; i < p.seeds.size(); ++i) os << "  s" << i << ";\n";
    for (std::size_t i = 0; i < p.seeds.size(); ++i)
        for (std::size_t k = 0; k < b.cols(); ++k) {
            std::size_t j = id.at(format_seed(canonicalize(seed_mutate(p.seeds[i], k))));
            if (i < j) os << "  s" << i << " -- s" << j << ";\n";
        }
    os << "}\n";
    return os.str();
}

// ---- subcommands ------------------------------------------------------------

int run_mutate(const std::string& input, const std::string& seq, const Common& c) {
    std::string text = slurp(input);
    auto word = parse_word(seq);
    bool seed = !looks_json(text) && content_lines(text) > 1 + header_rows(text);
    if (seed) {
        Seed s = seed_mutate_sequence(parse_seed(text), word);
        if (c.json) {
            json j{{"matrix", matrix_json(s.matrix)}, {"cluster", json::array()}};
            for (const auto& x : s.cluster) j["cluster"].push_back(x.str());
            std::cout << j.dump() << "\n";
        } else {
            std::cout << format_seed(s);
        }
        return 0;
    }
    Matrix b = looks_json(text) ? matrix_from_json(text) : parse_matrix(text);
    b = mutate_sequence(b, word);
    std::cout << (c.json ? matrix_to_json(b) + "\n" : format_matrix(b));
    return 0;
}

int run_explore(const std::string& input, bool matrices, bool labeled, bool no_abort, const Common& c) {
    Matrix b = read_matrix(input);
    ExploreOptions o = c.options();
    o.labeled = labeled;
    if (c.dot) {
        std::cout << exchange_dot(b, o);
        return 0;
    }
    if (matrices) {
        o.abort_on_witness = !no_abort;
        print_report(explore_matrix_class(b, o).report, false, c);
    } else {
        print_report(explore_seed_pattern(initial_seed(b), o).report, true, c);
    }
    return 0;
}

int run_classify(const std::string& input, const Common& c) {
    Matrix b = read_matrix(input);
    TypeResult t = identify_type(b, c.options());
    json j{{"finite", t.finite}, {"type", nullptr}, {"seeds", nullptr}, {"variables", nullptr}};
    if (t.type) {
        auto [s, v] = count_type(*t.type);
        j["type"] = t.type->str();
        j["seeds"] = json::parse(s.str());
        j["variables"] = json::parse(v.str());
    }
    if (c.json) {
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "finite: " << (t.finite ? "yes" : "no") << "\n";
        if (t.type)
            std::cout << "type: " << t.type->str() << "\nseeds: " << j["seeds"].dump()
                      << "\nvariables: " << j["variables"].dump() << "\n";
        else if (t.finite)
            std::cout << "type: unknown (search capped)\n";
    }
    return 0;
}

int run_count(const std::string& type, const std::string& model, std::size_t n, const Common& c) {
    if (!type.empty()) {
        DynkinType t = parse_dynkin(type);
        auto [s, v] = count_type(t);
        if (c.json)
            std::cout << json{{"type", t.str()}, {"seeds", json::parse(s.str())}, {"variables", json::parse(v.str())}}
                             .dump()
                      << "\n";
        else
            std::cout << t.str() << ": " << s << " seeds, " << v << " variables\n";
        return 0;
    }
    if (model.empty()) throw PreconditionError("count needs --type or --model");
    Model m = parse_model(model);
    if (c.dot) {
        std::cout << flip_graph(m, n).dot();
        return 0;
    }
    TriangulationCount t = count_triangulations(m, n);
    if (c.json)
        std::cout << json{{"model", model_name(m)},
                          {"n", n},
                          {"enumerated", json::parse(t.enumerated.str())},
                          {"closed_form", json::parse(t.closed_form.str())}}
                         .dump()
                  << "\n";
    else
        std::cout << model_name(m) << " n=" << n << ": " << t.enumerated << " triangulations (closed form "
                  << t.closed_form << ")\n";
    return 0;
}

int run_fold(const std::string& input, const std::vector<std::string>& perms, bool global, bool seeds,
             const Common& c) {
    Matrix b = read_matrix(input);
    std::vector<std::vector<std::size_t>> gens;
    for (const auto& p : perms) gens.push_back(parse_permutation(p));
    GroupAction g(b.rows(), b.cols(), gens);
    Admissibility a = is_admissible(b, g);
    json j{{"admissible", a.ok}};
    if (!a.ok) {
        j["condition"] = a.condition;
        j["message"] = a.message();
        if (c.json)
            std::cout << j.dump() << "\n";
        else
            std::cout << "admissible: no (" << a.message() << ")\n";
        return 2;
    }
    Matrix f = fold_matrix(b, g);
    json orbits = json::array();
    for (const auto& o : g.orbits()) orbits.push_back(word_json(o));
    j["orbits"] = orbits;
    j["folded"] = matrix_json(f);
    std::string extra;
    if (global) {
        Foldability fo = global_foldability(b, g, c.options());
        j["global"] = foldability_name(fo.kind);
        j["states"] = fo.states;
        extra += std::string("global: ") + foldability_name(fo.kind) + " (" + std::to_string(fo.states) + " states)\n";
        if (fo.kind == Foldability::Counterexample) {
            j["word"] = word_json(fo.word);
            extra += "orbit word: " + join(fo.word) + "\n";
        }
    }
    if (seeds) {
        FoldedPattern p = fold_seed_pattern(b, g, c.options());
        j["pattern"] = json::parse(report_to_json(p.pattern.report, true));
        extra += "folded pattern: " + std::to_string(p.pattern.report.count) + " seeds, " +
                 std::to_string(p.pattern.report.variables) + " variables\n";
    }
    if (c.json) {
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "admissible: yes\norbits:";
        for (const auto& o : g.orbits()) std::cout << " {" << join(o) << "}";
        std::cout << "\n" << format_matrix(f) << extra;
    }
    return 0;
}

std::string diagonals(const PolygonTriangulation& t) {
    std::string s;
    for (std::size_t i = 0; i < t.diagonals.size(); ++i)
        s += (i ? " " : "") + std::to_string(t.diagonals[i].first) + "-" + std::to_string(t.diagonals[i].second);
    return s;
}

int run_polygon(std::size_t n, bool fan, bool list, const Common& c) {
    if (n == 0) throw PreconditionError("--n must be at least 1");
    if (c.dot) {
        std::cout << flip_graph(Model::PolygonA, n).dot();
        return 0;
    }
    if (list) {
        auto all = polygon_triangulations(n);
        if (c.json) {
            json a = json::array();
            for (const auto& t : all) a.push_back(diagonals(t));
            std::cout << json{{"n", n}, {"count", all.size()}, {"triangulations", a}}.dump() << "\n";
        } else {
            for (const auto& t : all) std::cout << diagonals(t) << "\n";
        }
        return 0;
    }
    (void)fan;  // the fan is the default
    PolygonTriangulation t = polygon_fan(n);
    Matrix b = polygon_matrix(t);
    if (c.json)
        std::cout << json{{"diagonals", diagonals(t)}, {"matrix", matrix_json(b)}}.dump() << "\n";
    else
        std::cout << "# " << diagonals(t) << "\n" << format_matrix(b);
    return 0;
}

int run_punctured(std::size_t n, bool enumerate, const std::string& arcs, bool bullet, const Common& c) {
    if (n < 2) throw PreconditionError("--n must be at least 2");
    if (c.dot) {
        std::cout << flip_graph(Model::TaggedD, n).dot();
        return 0;
    }
    if (enumerate) {
        auto all = tagged_triangulations(n);
        if (c.json) {
            json a = json::array();
            for (const auto& t : all) a.push_back(format_tagged(t));
            std::cout << json{{"n", n}, {"count", all.size()}, {"triangulations", a}}.dump() << "\n";
        } else {
            for (const auto& t : all) std::cout << format_tagged(t) << "\n";
        }
        return 0;
    }
    TaggedTriangulation t = arcs.empty() ? all_plain_radii(n) : parse_tagged(arcs, n);
    if (!is_tagged_triangulation(t)) throw PreconditionError("not a tagged triangulation: " + arcs);
    Matrix b = bullet ? tagged_matrix_bullet(t) : tagged_matrix(t);
    if (c.json)
        std::cout << json{{"arcs", format_tagged(t)}, {"flavor", flavor_name(flavor(t))}, {"matrix", matrix_json(b)}}
                         .dump()
                  << "\n";
    else
        std::cout << "# " << format_tagged(t) << "\n" << format_matrix(b);
    return 0;
}

int run_embed(const std::string& q, const std::string& r, const Common& c) {
    EmbeddingResult e = is_embeddable(read_matrix(q), read_matrix(r), c.options());
    if (c.json) {
        json j{{"embeddable", verdict_name(e.verdict)}};
        if (e.verdict == Verdict::Yes) {
            j["subset"] = word_json(e.subset);
            j["word"] = word_json(e.word);
        }
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "embeddable: " << verdict_name(e.verdict) << "\n";
        if (e.verdict == Verdict::Yes)
            std::cout << "subset: " << join(e.subset) << "\nword: " << join(e.word) << "\n";
    }
    return 0;
}

int run_witness(long b, long c, std::size_t steps, const Common& opt) {
    auto orbit = tropical_orbit(b, c, steps);
    QuadraticNumber lambda = lambda_root(b, c);
    if (opt.json) {
        json e = json::array();
        for (const auto& m : orbit) e.push_back(m.exponent.str());
        std::cout << json{{"b", b}, {"c", c}, {"lambda", lambda.str()}, {"exponents", e}}.dump() << "\n";
    } else {
        std::cout << "lambda = " << lambda.str() << "\n";
        for (std::size_t i = 0; i < orbit.size(); ++i) {
            std::string e = orbit[i].exponent.str();
            if (e.find_first_of(" /*") != std::string::npos) e = "(" + e + ")";
            std::cout << "z" << i + 1 << " -> u^" << e << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact seed-pattern computations for cluster algebras"};
    app.require_subcommand(1);
    Common common;
    auto shared = [&](CLI::App* s, bool explores) {
        s->add_flag("--json", common.json, "machine-readable output");
        if (explores) {
            s->add_option("--cap", common.cap, "maximum BFS depth (0 = none)");
            s->add_option("--max-states", common.max_states, "maximum number of classes visited");
            s->add_option("--threads", common.threads, "worker threads")->check(CLI::Range(1u, 256u));
        }
    };

    std::string input = "-", seq, type, model, arcs, qfile, rfile;
    std::vector<std::string> perms;
    bool matrices = false, labeled = false, no_abort = false, global = false, seeds = false, fan = false, list = false,
         enumerate = false, bullet = false;
    std::size_t n = 0, steps = 10;
    long wb = 0, wc = 0;

    auto* mut = app.add_subcommand("mutate", "apply a mutation sequence to a matrix or seed");
    mut->add_option("-i,--input", input, "matrix (v1 or JSON) or seed file; - for stdin");
    mut->add_option("-s,--sequence", seq, "1-based indices, applied left to right")->required();
    shared(mut, false);

    auto* exp = app.add_subcommand("explore", "breadth-first search of a seed pattern or matrix class");
    exp->add_option("-i,--input", input, "matrix file");
    exp->add_flag("--matrices", matrices, "explore the matrix class instead of seeds");
    exp->add_flag("--labeled", labeled, "count labeled seeds");
    exp->add_flag("--no-abort", no_abort, "with --matrices, keep going past an infinite-type witness");
    exp->add_flag("--dot", common.dot, "print the exchange graph as DOT");
    shared(exp, true);

    auto* cls = app.add_subcommand("classify", "decide finite type and name it");
    cls->add_option("-i,--input", input, "matrix file");
    shared(cls, true);

    auto* cnt = app.add_subcommand("count", "closed-form counts");
    cnt->add_option("--type", type, "Dynkin type such as D4 or A2+B3");
    cnt->add_option("--model", model, "triangulation model: A, D, C or B");
    cnt->add_option("--n", n, "rank for --model");
    cnt->add_flag("--dot", common.dot, "print the flip graph of --model as DOT");
    shared(cnt, false);

    auto* fld = app.add_subcommand("fold", "fold a quiver by a group action");
    fld->add_option("-i,--input", input, "quiver matrix file");
    fld->add_option("--perm", perms, "generator as 1-based images, e.g. \"2 1 3\"")->required();
    fld->add_flag("--global", global, "check admissibility along all orbit mutations");
    fld->add_flag("--seeds", seeds, "explore the folded seed pattern");
    shared(fld, true);

    auto* pol = app.add_subcommand("polygon", "triangulations of an (n+3)-gon");
    pol->add_option("--n", n, "number of diagonals")->required();
    pol->add_flag("--fan", fan, "fan triangulation and its matrix (default)");
    pol->add_flag("--list", list, "every triangulation");
    pol->add_flag("--dot", common.dot, "flip graph as DOT");
    shared(pol, false);

    auto* pun = app.add_subcommand("punctured", "tagged triangulations of a once-punctured n-gon");
    pun->add_option("--n", n, "number of vertices")->required();
    pun->add_flag("--enumerate", enumerate, "every tagged triangulation");
    pun->add_option("--arcs", arcs, "triangulation such as \"p-1:plain p-1:notched 1-3 3-1\"");
    pun->add_flag("--bullet", bullet, "append the two extra coefficient rows");
    pun->add_flag("--dot", common.dot, "flip graph as DOT");
    shared(pun, false);

    auto* emb = app.add_subcommand("embed", "is Q an induced restriction of a member of [R]?");
    emb->add_option("-q", qfile, "matrix of Q")->required();
    emb->add_option("-r", rfile, "matrix of R")->required();
    shared(emb, true);

    auto* wit = app.add_subcommand("witness", "tropical exponents of z_1, z_2, ... for bc >= 4");
    wit->add_option("-b", wb, "b")->required();
    wit->add_option("-c", wc, "c")->required();
    wit->add_option("--steps", steps, "number of terms");
    shared(wit, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*mut) return run_mutate(input, seq, common);
        if (*exp) return run_explore(input, matrices, labeled, no_abort, common);
        if (*cls) return run_classify(input, common);
        if (*cnt) return run_count(type, model, n, common);
        if (*fld) return run_fold(input, perms, global, seeds, common);
        if (*pol) return run_polygon(n, fan, list, common);
        if (*pun) return run_punctured(n, enumerate, arcs, bullet, common);
        if (*emb) return run_embed(qfile, rfile, common);
        if (*wit) return run_witness(wb, wc, steps, common);
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
