#include "gog/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace gog::io {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw ParseError(msg); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::string str_field(const Json& j, const char* key) {
    const Json& x = field(j, key);
    if (!x.is_string()) fail(std::string("field '") + key + "' must be a string");
    return x.get<std::string>();
}

int int_field(const Json& j, const char* key) {
    const Json& x = field(j, key);
    if (!x.is_number_integer()) fail(std::string("field '") + key + "' must be an integer");
    return x.get<int>();
}

const Json& array_field(const Json& j, const char* key) {
    const Json& x = field(j, key);
    if (!x.is_array()) fail(std::string("field '") + key + "' must be an array");
    return x;
}

void check_header(const Json& j, const char* format) {
    if (!j.is_object()) fail("document must be an object");
    if (str_field(j, "format") != format) fail(std::string("expected format '") + format + "'");
    if (int_field(j, "version") != kVersion) fail("unsupported version");
}

Elem parse_elem(const Group& G, const Json& x) {
    if (!x.is_string()) fail("group elements are written as strings");
    try {
        return G.normalize(G.parse(x.get<std::string>()));
    } catch (const std::invalid_argument& e) {
        fail(e.what());
    }
}

std::vector<Elem> parse_elems(const Group& G, const Json& arr) {
    if (!arr.is_array()) fail("element list must be an array");
    std::vector<Elem> out;
    for (const auto& x : arr) out.push_back(parse_elem(G, x));
    return out;
}

Json elems_to_json(const Group& G, const std::vector<Elem>& xs) {
    Json a = Json::array();
    for (const auto& x : xs) a.push_back(G.format(x));
    return a;
}

APath parse_path_literal(const GraphOfGroups& A, int start, const Json& x) {
    if (!x.is_string()) fail("paths are written as strings");
    APath p;
    try {
        p = parse_path(A, start, x.get<std::string>());
    } catch (const std::invalid_argument& e) {
        fail(std::string("path '") + x.get<std::string>() + "': " + e.what());
    }
    auto errs = check_path(A, p);
    if (!errs.empty()) fail("path '" + x.get<std::string>() + "': " + errs.front());
    return p;
}

int vertex_index(const AGraph& B, const Json& x) {
    if (!x.is_number_integer()) fail("vertex ids are integers");
    const int u = x.get<int>();
    if (u < 0 || u >= B.num_vertices()) fail("vertex id out of range");
    return u;
}

int edge_type(const GraphOfGroups& A, const Json& x) {
    if (!x.is_string()) fail("edge types are names");
    const int e = A.edge_id(x.get<std::string>());
    if (e < 0) fail("unknown edge '" + x.get<std::string>() + "'");
    return e;
}

Json subgroup_gens(const Subgroup& H) { return elems_to_json(*H.group(), H.gens()); }

}  // namespace

Json group_to_json(const Group& G) {
    Json j;
    switch (G.kind()) {
    case Kind::Free:
        j["kind"] = "free";
        j["generators"] = G.names();
        break;
    case Kind::Abelian:
        j["kind"] = "abelian";
        j["rank"] = G.rank();
        break;
    case Kind::Finite: {
        j["kind"] = "finite";
        const auto& t = G.table();
        Json rows = Json::array();
        for (int i = 0; i < t.order; ++i) {
            Json row = Json::array();
            for (int k = 0; k < t.order; ++k) row.push_back(t.mul[static_cast<std::size_t>(i * t.order + k)]);
            rows.push_back(row);
        }
        j["table"] = rows;
        Json gens = Json::array();
        for (const auto& g : G.generators()) gens.push_back(g.v.at(0));
        j["generators"] = gens;
        break;
    }
    }
    return j;
}

GroupPtr group_from_json(const Json& j) {
    const std::string kind = str_field(j, "kind");
    try {
        if (kind == "free") return Group::free(array_field(j, "generators").get<std::vector<std::string>>());
        if (kind == "trivial") return Group::free({});
        if (kind == "abelian") return Group::abelian(int_field(j, "rank"));
        if (kind == "cyclic") return Group::cyclic(int_field(j, "order"));
        if (kind == "finite") {
            auto table = array_field(j, "table").get<std::vector<std::vector<int>>>();
            std::vector<int> gens;
            if (j.contains("generators")) gens = array_field(j, "generators").get<std::vector<int>>();
            return Group::finite(table, gens);
        }
    } catch (const nlohmann::json::exception& e) {
        fail(std::string("group descriptor: ") + e.what());
    } catch (const std::invalid_argument& e) {
        fail(std::string("group descriptor: ") + e.what());
    }
    fail("unknown group kind '" + kind + "'");
}

Instance parse_instance(const Json& j) {
    check_header(j, kInstanceFormat);
    const Json& groups = field(j, "groups");
    if (!groups.is_object()) fail("'groups' must be an object");
    std::map<std::string, GroupPtr> named;
    for (const auto& [name, g] : groups.items()) named[name] = group_from_json(g);
    auto lookup = [&](const std::string& name) {
        auto it = named.find(name);
        if (it == named.end()) fail("unknown group '" + name + "'");
        return it->second;
    };

    auto A = std::make_shared<GraphOfGroups>();
    for (const auto& v : array_field(j, "vertices")) {
        const std::string name = str_field(v, "name");
        if (A->vertex_id(name) >= 0) fail("duplicate vertex '" + name + "'");
        A->add_vertex(name, lookup(str_field(v, "group")));
    }
    for (const auto& e : array_field(j, "edges")) {
        const std::string name = str_field(e, "name");
        if (A->edge_id(name) >= 0) fail("duplicate edge '" + name + "'");
        const int from = A->vertex_id(str_field(e, "from"));
        const int to = A->vertex_id(str_field(e, "to"));
        if (from < 0 || to < 0) fail("edge '" + name + "' has an unknown endpoint");
        GroupPtr E = lookup(str_field(e, "group"));
        auto al = parse_elems(A->vg(from), array_field(e, "alpha"));
        auto om = parse_elems(A->vg(to), array_field(e, "omega"));
        if (al.size() != E->generators().size() || om.size() != E->generators().size())
            fail("edge '" + name + "' needs one image per edge group generator");
        try {
            A->add_edge(name, from, to, E, al, om);
        } catch (const std::invalid_argument& ex) {
            fail("edge '" + name + "': " + ex.what());
        }
    }
    auto errs = A->validate();
    if (!errs.empty()) fail("graph of groups: " + errs.front());

    Instance inst;
    inst.base = A->vertex_id(str_field(j, "base"));
    if (inst.base < 0) fail("unknown base vertex");
    inst.A = A;
    auto loops = [&](const char* key) {
        std::vector<APath> out;
        if (!j.contains(key)) return out;
        for (const auto& x : array_field(j, key)) {
            APath p = parse_path_literal(*A, inst.base, x);
            if (path_end(*A, p) != inst.base) fail("path '" + x.get<std::string>() + "' does not return to the base");
            out.push_back(std::move(p));
        }
        return out;
    };
    inst.generators = loops("generators");
    inst.queries = loops("queries");
    return inst;
}

Instance parse_instance_text(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(e.what());
    }
    return parse_instance(j);
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_instance_text(ss.str());
}

Json instance_to_json(const Instance& inst) {
    const GraphOfGroups& A = *inst.A;
    Json j;
    j["format"] = kInstanceFormat;
    j["version"] = kVersion;
    std::map<const Group*, std::string> names;
    Json groups = Json::object();
    auto name_of = [&](const GroupPtr& G, const std::string& suggestion) {
        auto it = names.find(G.get());
        if (it != names.end()) return it->second;
        std::string n = suggestion;
        while (groups.contains(n)) n += "_";
        names[G.get()] = n;
        groups[n] = group_to_json(*G);
        return n;
    };
    Json vertices = Json::array();
    for (int v = 0; v < A.graph.num_vertices; ++v) {
        const auto& vn = A.vertex_names[static_cast<std::size_t>(v)];
        vertices.push_back({{"name", vn}, {"group", name_of(A.vgroup[static_cast<std::size_t>(v)], "A_" + vn)}});
    }
    Json edges = Json::array();
    for (int e = 0; e < A.graph.num_edges(); e += 2) {
        const auto& en = A.edge_names[static_cast<std::size_t>(e)];
        edges.push_back({{"name", en},
                         {"from", A.vertex_names[static_cast<std::size_t>(A.o(e))]},
                         {"to", A.vertex_names[static_cast<std::size_t>(A.t(e))]},
                         {"group", name_of(A.egroup[static_cast<std::size_t>(e)], "A_" + en)},
                         {"alpha", elems_to_json(A.vg(A.o(e)), A.alpha_of(e).images())},
                         {"omega", elems_to_json(A.vg(A.t(e)), A.omega_of(e).images())}});
    }
    j["groups"] = groups;
    j["vertices"] = vertices;
    j["edges"] = edges;
    j["base"] = A.vertex_names[static_cast<std::size_t>(inst.base)];
    Json gens = Json::array(), queries = Json::array();
    for (const auto& p : inst.generators) gens.push_back(format_path(A, p));
    for (const auto& p : inst.queries) queries.push_back(format_path(A, p));
    j["generators"] = gens;
    j["queries"] = queries;
    return j;
}

Json agraph_to_json(const AGraph& B) {
    const GraphOfGroups& A = B.ambient();
    Json j;
    j["base"] = B.base();
    Json vs = Json::array();
    for (int u = 0; u < B.num_vertices(); ++u)
        vs.push_back({{"type", A.vertex_names[static_cast<std::size_t>(B.vtype(u))]}, {"generators", subgroup_gens(B.group(u))}});
    Json es = Json::array();
    for (int f = 0; f < B.num_edges(); f += 2) {
        const int e = B.etype(f);
        es.push_back({{"from", B.o(f)},
                      {"to", B.t(f)},
                      {"type", A.edge_names[static_cast<std::size_t>(e)]},
                      {"label", {A.vg(A.o(e)).format(B.fa(f)), A.vg(A.t(e)).format(B.fw(f))}}});
    }
    j["vertices"] = vs;
    j["edges"] = es;
    return j;
}

AGraph agraph_from_json(std::shared_ptr<const GraphOfGroups> A, const Json& j) {
    AGraph B(A);
    for (const auto& v : array_field(j, "vertices")) {
        const int type = A->vertex_id(str_field(v, "type"));
        if (type < 0) fail("unknown vertex type");
        const GroupPtr& G = A->vgroup[static_cast<std::size_t>(type)];
        B.add_vertex(type, Subgroup(G, parse_elems(*G, array_field(v, "generators"))));
    }
    for (const auto& x : array_field(j, "edges")) {
        const int u = vertex_index(B, field(x, "from"));
        const int w = vertex_index(B, field(x, "to"));
        const int e = edge_type(*A, field(x, "type"));
        const Json& label = array_field(x, "label");
        if (label.size() != 2) fail("edge labels are pairs");
        try {
            B.add_edge(u, w, e, parse_elem(A->vg(A->o(e)), label[0]), parse_elem(A->vg(A->t(e)), label[1]));
        } catch (const std::invalid_argument& ex) {
            fail(ex.what());
        }
    }
    B.set_base(vertex_index(B, field(j, "base")));
    auto errs = B.validate();
    if (!errs.empty()) fail("A-graph: " + errs.front());
    return B;
}

Json bpath_to_json(const AGraph& B, const BPath& q) {
    Json b = Json::array();
    int u = q.start;
    for (std::size_t i = 0; i < q.b.size(); ++i) {
        b.push_back(B.vertex_group(u).format(q.b[i]));
        if (i < q.f.size()) u = B.t(q.f[i]);
    }
    return {{"start", q.start}, {"b", b}, {"f", q.f}};
}

BPath bpath_from_json(const AGraph& B, const Json& j) {
    BPath q;
    q.start = vertex_index(B, field(j, "start"));
    const Json& b = array_field(j, "b");
    const Json& f = array_field(j, "f");
    if (b.size() != f.size() + 1) fail("B-path needs one more element than edges");
    int u = q.start;
    for (std::size_t i = 0; i < b.size(); ++i) {
        q.b.push_back(parse_elem(B.vertex_group(u), b[i]));
        if (i == f.size()) break;
        if (!f[i].is_number_integer()) fail("B-path edges are integers");
        const int e = f[i].get<int>();
        if (e < 0 || e >= B.num_edges() || B.o(e) != u) fail("B-path edge does not continue the path");
        q.f.push_back(e);
        u = B.t(e);
    }
    return q;
}

Json certificate_to_json(const AGraph& B, const MembershipCertificate& c) {
    const GraphOfGroups& A = B.ambient();
    Json exprs = Json::array();
    for (const auto& x : c.b_expr) {
        Json terms = Json::array();
        for (const auto& [g, e] : x.terms) terms.push_back({g, e});
        exprs.push_back(terms);
    }
    Json cs = Json::array();
    for (std::size_t i = 0; i < c.c.size() && i < c.q.f.size(); ++i)
        cs.push_back(A.egroup[static_cast<std::size_t>(B.etype(c.q.f[i]))]->format(c.c[i]));
    return {{"path", format_path(A, c.path)}, {"q", bpath_to_json(B, c.q)}, {"b_expr", exprs}, {"c", cs}};
}

MembershipCertificate certificate_from_json(const AGraph& B, const Json& j) {
    const GraphOfGroups& A = B.ambient();
    MembershipCertificate c;
    c.path = parse_path_literal(A, B.vtype(B.base()), field(j, "path"));
    c.q = bpath_from_json(B, field(j, "q"));
    for (const auto& x : array_field(j, "b_expr")) {
        Expr e;
        try {
            for (const auto& t : x) e.terms.emplace_back(t.at(0).get<int>(), t.at(1).get<long long>());
        } catch (const nlohmann::json::exception& ex) {
            fail(std::string("b_expr: ") + ex.what());
        }
        c.b_expr.push_back(std::move(e));
    }
    const Json& cs = array_field(j, "c");
    if (cs.size() != c.q.f.size()) fail("one edge group element per edge required");
    for (std::size_t i = 0; i < cs.size(); ++i)
        c.c.push_back(parse_elem(*A.egroup[static_cast<std::size_t>(B.etype(c.q.f[i]))], cs[i]));
    return c;
}

Json trace_to_json(const FoldTrace& t) {
    Json steps = Json::array();
    std::map<std::string, int> counts;
    std::vector<int> cx{complexity(t.initial)};
    for (const auto& s : t.steps) {
        const std::string name = move_name(s.move.kind);
        Json m = {{"move", name}};
        if (s.move.vertex >= 0) m["vertex"] = s.move.vertex;
        if (s.move.f1 >= 0) m["f1"] = s.move.f1;
        if (s.move.f2 >= 0) m["f2"] = s.move.f2;
        if (!s.move.internal.empty()) m["internal_moves"] = s.move.internal.size();
        m["pairs"] = s.after.num_pairs();
        m["complexity"] = complexity(s.after);
        if (is_fold_move(s.move.kind)) ++counts[name];
        cx.push_back(complexity(s.after));
        steps.push_back(m);
    }
    Json growth = Json::array();
    for (const auto& g : t.growth)
        growth.push_back({{"step", g.step},
                          {"vertex", g.vertex},
                          {"before", subgroup_gens(g.before)},
                          {"after", subgroup_gens(g.after)},
                          {"strict", g.strict}});
    Json j;
    j["status"] = t.status == FoldStatus::Folded ? "Folded" : "StepBudgetExceeded";
    j["fold_moves"] = t.fold_moves;
    j["max_steps"] = t.max_steps;
    j["move_counts"] = counts;
    j["complexity"] = cx;
    j["steps"] = steps;
    j["growth"] = growth;
    j["diagnostics"] = t.diagnostics;
    return j;
}

Json splitting_to_json(const AGraph& B, const InducedSplitting& s) {
    const GraphOfGroups& A = B.ambient();
    Json gens = Json::array();
    for (std::size_t i = 0; i < s.names.size(); ++i)
        gens.push_back({{"name", s.names[i]}, {"image", format_path(A, s.images[i])}});
    Json rels = Json::array();
    for (const auto& r : s.relators) rels.push_back(format_relator(s, r));
    Json edges = Json::array();
    for (const auto& e : s.edges)
        edges.push_back({{"edge", e.f}, {"tree", e.tree}, {"edge_group", subgroup_gens(e.edge_group)}});
    return {{"generators", gens},
            {"relators", rels},
            {"edges", edges},
            {"abelianized_rank", abelianized_rank(static_cast<int>(s.names.size()), s.relators)}};
}

SimpleGraph simple_graph_from_json(const Json& j) {
    check_header(j, kGraphFormat);
    SimpleGraph g;
    std::map<std::string, int> id;
    for (const auto& v : array_field(j, "vertices")) {
        if (!v.is_string()) fail("graph vertices are names");
        const auto name = v.get<std::string>();
        if (!id.emplace(name, g.n).second) fail("duplicate graph vertex '" + name + "'");
        g.names.push_back(name);
        ++g.n;
    }
    for (const auto& e : array_field(j, "edges")) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) fail("graph edges are name pairs");
        auto a = id.find(e[0].get<std::string>()), b = id.find(e[1].get<std::string>());
        if (a == id.end() || b == id.end()) fail("graph edge with an unknown endpoint");
        if (a->second == b->second) fail("graph loops are not allowed");
        g.edges.emplace_back(a->second, b->second);
    }
    return g;
}

std::string emit_dot(const AGraph& B) {
    const GraphOfGroups& A = B.ambient();
    auto quote = [](const std::string& s) {
        std::string out = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\') out.push_back('\\');
            out.push_back(c);
        }
        return out + "\"";
    };
    std::ostringstream os;
    os << "digraph agraph {\n";
    for (int u = 0; u < B.num_vertices(); ++u) {
        const Subgroup& H = B.group(u);
        std::string gens;
        if (H.gens().empty()) {
            gens = "1";
        } else {
            gens = "<";
            for (std::size_t i = 0; i < H.gens().size(); ++i) gens += (i ? ", " : "") + H.group()->format(H.gens()[i]);
            gens += ">";
        }
        os << "  n" << u << " [label=" << quote("(" + gens + ", " + A.vertex_names[static_cast<std::size_t>(B.vtype(u))] + ")");
        if (u == B.base()) os << ", shape=doublecircle";
        os << "];\n";
    }
    for (int f = 0; f < B.num_edges(); f += 2) {
        const int e = B.etype(f);
        const std::string label = "(" + A.vg(A.o(e)).format(B.fa(f)) + "," + A.edge_names[static_cast<std::size_t>(e)] + "," +
                                  A.vg(A.t(e)).format(B.fw(f)) + ")";
        os << "  n" << B.o(f) << " -> n" << B.t(f) << " [label=" << quote(label) << "];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace gog::io
