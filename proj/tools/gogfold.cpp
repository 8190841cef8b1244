#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "gog/builders.hpp"
#include "gog/folding.hpp"
#include "gog/io.hpp"
#include "gog/membership.hpp"

using namespace gog;
using io::Json;

namespace {

struct Flags {
    std::string input;
    std::string out;
    std::string dot;
    std::string policy = "f1234-first";
    std::optional<int> max_steps;
    unsigned seed = 1;
    int sample = 0;
};

enum Exit { kOk = 0, kError = 1, kBudget = 2 };

Json header(const std::string& command) {
    Json j;
    j["format"] = io::kResultFormat;
    j["version"] = io::kVersion;
    j["command"] = command;
    return j;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write '" + path + "'");
    f << text;
}

void emit(const Flags& fl, const Json& j) {
    const std::string text = j.dump(2) + "\n";
    if (fl.out.empty())
        std::cout << text;
    else
        write_text(fl.out, text);
}

FoldOptions options(const Flags& fl) {
    if (fl.policy != "f1234-first") throw std::invalid_argument("unknown policy '" + fl.policy + "'");
    FoldOptions opt;
    opt.policy = FoldPolicy::F1234First;
    opt.max_steps = fl.max_steps;
    return opt;
}

Json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io::ParseError("cannot read '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw io::ParseError(e.what());
    }
}

Elem random_elem(std::mt19937& rng, const Group& G) {
    switch (G.kind()) {
    case Kind::Free: {
        Elem x = G.id();
        if (G.rank() == 0) return x;
        const int len = static_cast<int>(rng() % 4);
        for (int i = 0; i < len; ++i)
            x = G.mul(x, G.letter(static_cast<int>(rng() % static_cast<unsigned>(G.rank())), rng() % 2 ? 1 : -1));
        return x;
    }
    case Kind::Abelian: {
        Elem x = G.id();
        for (auto& c : x.v) c = static_cast<long long>(rng() % 7) - 3;
        return x;
    }
    case Kind::Finite: return Elem{{static_cast<long long>(rng() % static_cast<unsigned>(G.order()))}};
    }
    return G.id();
}

// Random walk from the base followed by the tree path home.
APath random_loop(std::mt19937& rng, const GraphOfGroups& A, int base, int len) {
    APath p{base, {random_elem(rng, A.vg(base))}, {}};
    int v = base;
    for (int i = 0; i < len; ++i) {
        auto out = A.graph.out_edges(v);
        if (out.empty()) break;
        const int e = out[rng() % out.size()];
        v = A.t(e);
        p.e.push_back(e);
        p.a.push_back(random_elem(rng, A.vg(v)));
    }
    return path_compose(A, p, tree_path(A, bfs_tree(A.graph, base), v, base));
}

struct Folded {
    FoldTrace trace;
    bool ok() const { return trace.status == FoldStatus::Folded; }
};

Folded fold_instance(const io::Instance& inst, const Flags& fl) {
    return {fold_to_completion(build_wedge(inst.A, inst.base, inst.generators), options(fl))};
}

int cmd_validate(const Flags& fl) {
    io::Instance inst = io::load_instance(fl.input);
    Json j = header("validate");
    j["ok"] = true;
    j["vertices"] = inst.A->graph.num_vertices;
    j["edges"] = inst.A->graph.num_pairs();
    j["generators"] = inst.generators.size();
    j["queries"] = inst.queries.size();
    j["noetherian_edge_groups"] = noetherian_edge_groups(*inst.A);
    j["instance"] = io::instance_to_json(inst);
    emit(fl, j);
    return kOk;
}

int cmd_fold(const Flags& fl) {
    io::Instance inst = io::load_instance(fl.input);
    Folded r = fold_instance(inst, fl);
    Json j = header("fold");
    j["trace"] = io::trace_to_json(r.trace);
    j["final"] = io::agraph_to_json(r.trace.final);
    const std::string dot = io::emit_dot(r.trace.final);
    j["dot"] = dot;
    if (!fl.dot.empty()) write_text(fl.dot, dot);
    emit(fl, j);
    return r.ok() ? kOk : kBudget;
}

int cmd_member(const Flags& fl) {
    io::Instance inst = io::load_instance(fl.input);
    std::mt19937 rng(fl.seed);
    for (int i = 0; i < fl.sample; ++i) inst.queries.push_back(random_loop(rng, *inst.A, inst.base, 1 + static_cast<int>(rng() % 4)));
    Folded r = fold_instance(inst, fl);
    Json j = header("member");
    j["fold"] = {{"status", r.ok() ? "Folded" : "StepBudgetExceeded"}, {"fold_moves", r.trace.fold_moves}};
    j["folded_graph"] = io::agraph_to_json(r.trace.final);
    if (!r.ok()) {
        j["trace"] = io::trace_to_json(r.trace);
        emit(fl, j);
        return kBudget;
    }
    const AGraph& B = r.trace.final;
    Json results = Json::array();
    for (const auto& p : inst.queries) {
        MembershipResult m = decide_membership(B, p, false);
        Json q = {{"query", format_path(*inst.A, p)}, {"verdict", m.member ? "In" : "NotIn"}};
        if (m.certificate) {
            q["certificate"] = io::certificate_to_json(B, *m.certificate);
            q["verified"] = verify_certificate(B, p, *m.certificate);
        } else {
            q["failure_trace"] = m.trace;
        }
        results.push_back(q);
    }
    j["seed"] = fl.seed;
    j["results"] = results;
    emit(fl, j);
    return kOk;
}

int cmd_split(const Flags& fl) {
    io::Instance inst = io::load_instance(fl.input);
    Folded r = fold_instance(inst, fl);
    Json j = header("split");
    j["fold"] = {{"status", r.ok() ? "Folded" : "StepBudgetExceeded"}, {"fold_moves", r.trace.fold_moves}};
    if (!r.ok()) {
        j["trace"] = io::trace_to_json(r.trace);
        emit(fl, j);
        return kBudget;
    }
    InducedSplitting s = extract_induced_splitting(r.trace.final);
    j["presentation"] = io::splitting_to_json(r.trace.final, s);
    j["verified"] = verify_splitting(r.trace.final, s);
    emit(fl, j);
    return kOk;
}

int cmd_grushko(const Flags& fl) {
    io::Instance inst = io::load_instance(fl.input);
    GrushkoReport g = grushko_check(inst.A, inst.base, inst.generators, options(fl));
    Json j = header("grushko");
    j["complexity"] = g.complexity;
    j["monotone"] = g.monotone;
    j["folded"] = g.folded;
    j["final_value"] = g.final_value;
    emit(fl, j);
    return g.folded ? kOk : kBudget;
}

int cmd_raag(const Flags& fl) {
    SimpleGraph g = io::simple_graph_from_json(read_json(fl.input));
    auto built = build_chordal_raag(g);
    Json j = header("raag");
    if (auto* c = std::get_if<ChordlessCycle>(&built)) {
        Json cyc = Json::array();
        for (int v : c->cycle) cyc.push_back(g.name(v));
        j["status"] = "rejected";
        j["chordless_cycle"] = cyc;
    } else {
        const auto& t = std::get<RaagTree>(built);
        auto A = std::make_shared<const GraphOfGroups>(t.tree);
        j["status"] = "accepted";
        j["tree"] = io::instance_to_json(io::Instance{A, 0, {}, {}});
        Json coords = Json::object();
        for (std::size_t v = 0; v < t.coords.size(); ++v) {
            Json names = Json::array();
            for (int x : t.coords[v]) names.push_back(g.name(x));
            coords[A->vertex_names[v]] = names;
        }
        j["coordinates"] = coords;
    }
    emit(fl, j);
    return kOk;
}

int cmd_product_tree(const Flags& fl) {
    Json doc = read_json(fl.input);
    SimpleGraph g = io::simple_graph_from_json(doc);
    if (!doc.contains("ranks") || !doc["ranks"].is_array()) throw io::ParseError("missing field 'ranks'");
    auto ranks = doc["ranks"].get<std::vector<int>>();
    auto A = std::make_shared<const GraphOfGroups>(build_tree_graph_product(g, ranks));
    Json j = header("product-tree");
    j["instance"] = io::instance_to_json(io::Instance{A, 0, {}, {}});
    emit(fl, j);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Foldings of graphs of groups and subgroup membership"};
    app.require_subcommand(1);
    Flags fl;
    int max_steps = -1;

    auto add = [&](const std::string& name, const std::string& help, int (*run)(const Flags&), bool folds) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("input", fl.input, "Input file")->required();
        sub->add_option("--out", fl.out, "Write the result here instead of stdout");
        if (folds) {
            sub->add_option("--max-steps", max_steps, "Fold-move budget, 0 for unlimited");
            sub->add_option("--policy", fl.policy, "Fold policy")->check(CLI::IsMember({"f1234-first"}));
        }
        if (name == "fold") sub->add_option("--dot", fl.dot, "Write the folded graph as DOT");
        if (name == "member") {
            sub->add_option("--seed", fl.seed, "Seed for sampled queries");
            sub->add_option("--sample", fl.sample, "Number of random queries added to the file's queries");
        }
        return std::make_pair(sub, run);
    };
    std::vector<std::pair<CLI::App*, int (*)(const Flags&)>> cmds = {
        add("validate", "Check an instance file", cmd_validate, false),
        add("fold", "Fold the wedge of the subgroup generators", cmd_fold, true),
        add("member", "Decide membership of the queries", cmd_member, true),
        add("split", "Presentation of the induced splitting", cmd_split, true),
        add("grushko", "Complexity along the fold over trivial edge groups", cmd_grushko, true),
        add("raag", "Tree of groups for a chordal defining graph", cmd_raag, false),
        add("product-tree", "Graph product over a tree of free abelian groups", cmd_product_tree, false),
    };

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kError;
    }
    if (max_steps >= 0) fl.max_steps = max_steps;

    for (const auto& [sub, run] : cmds) {
        if (!sub->parsed()) continue;
        try {
            return run(fl);
        } catch (const io::ParseError& e) {
            Json j = header(sub->get_name());
            j["error"] = {{"kind", "parse"}, {"message", e.what()}};
            std::cout << j.dump(2) << "\n";
        } catch (const std::invalid_argument& e) {
            Json j = header(sub->get_name());
            j["error"] = {{"kind", "validation"}, {"message", e.what()}};
            std::cout << j.dump(2) << "\n";
        } catch (const std::exception& e) {
            Json j = header(sub->get_name());
            j["error"] = {{"kind", "internal"}, {"message", e.what()}};
            std::cout << j.dump(2) << "\n";
        }
        return kError;
    }
    return kError;
}
