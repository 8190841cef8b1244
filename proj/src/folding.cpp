#include "gog/folding.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "gog/lattice.hpp"

namespace gog {

namespace {

// Join that only keeps generators not already in the subgroup.
Subgroup grow(const Subgroup& H, const std::vector<Elem>& extra) {
    Subgroup cur = H;
    for (const auto& x : extra)
        if (!cur.contains(x)) cur = subgroup_join(cur, std::vector<Elem>{x});
    return cur;
}

}  // namespace

const char* move_name(MoveKind k) {
    switch (k) {
    case MoveKind::A0: return "A0";
    case MoveKind::A1: return "A1";
    case MoveKind::A2: return "A2";
    case MoveKind::F1: return "F1";
    case MoveKind::F2: return "F2";
    case MoveKind::F3: return "F3";
    case MoveKind::F4: return "F4";
    case MoveKind::F5: return "F5";
    case MoveKind::F6: return "F6";
    }
    return "?";
}

bool is_fold_move(MoveKind k) { return k != MoveKind::A0 && k != MoveKind::A1 && k != MoveKind::A2; }

AGraph apply_a0(const AGraph& B0, int u, const Elem& g0, bool admissible) {
    if (admissible && u == B0.base()) throw std::invalid_argument("A0 at the base vertex is not admissible");
    AGraph B = B0;
    const Group& G = B.vertex_group(u);
    const Elem g = G.normalize(g0);
    if (G.is_id(g)) return B;
    B.set_group(u, conjugate_subgroup(B.group(u), G.inv(g)));
    for (int f = 0; f < B.num_edges(); f += 2) {
        Elem a = B.fa(f), b = B.fw(f);
        if (B.o(f) == u) a = G.mul(g, a);
        if (B.t(f) == u) b = G.mul(b, G.inv(g));
        B.set_label(f, a, b);
    }
    return B;
}

AGraph apply_a1(const AGraph& B0, int f, const Elem& c) {
    AGraph B = B0;
    const int e = B.etype(f);
    const GraphOfGroups& A = B.ambient();
    const Elem cc = A.egroup[static_cast<std::size_t>(e)]->normalize(c);
    const Group& Go = B.vertex_group(B.o(f));
    const Group& Gt = B.vertex_group(B.t(f));
    B.set_label(f, Go.mul(B.fa(f), Go.inv(A.alpha_of(e).apply(cc))), Gt.mul(A.omega_of(e).apply(cc), B.fw(f)));
    return B;
}

AGraph apply_a2(const AGraph& B0, int f, const Elem& a_prime) {
    if (!B0.group(B0.o(f)).contains(a_prime)) throw std::invalid_argument("A2 element is not in the origin vertex group");
    AGraph B = B0;
    B.set_label(f, B.vertex_group(B.o(f)).mul(a_prime, B.fa(f)), B.fw(f));
    return B;
}

AGraph prepare_fold_site(const AGraph& B, const PairViolation& v, std::vector<Move>* log) {
    if (!pair_violation_holds(B, v)) throw std::invalid_argument("stale pair violation");
    const Group& G = B.vertex_group(B.o(v.f1));
    Move m2{MoveKind::A2, -1, v.f2, -1, G.inv(v.a_prime), {}};
    Move m1{MoveKind::A1, -1, v.f2, -1, v.c, {}};
    AGraph out = apply_a1(apply_a2(B, v.f2, m2.g), v.f2, v.c);
    if (log) {
        log->push_back(m2);
        log->push_back(m1);
    }
    return out;
}

MoveKind fold_kind(const AGraph& B, int f1, int f2) {
    const bool l1 = B.is_loop(f1), l2 = B.is_loop(f2);
    if (l1 && l2) return MoveKind::F3;
    if (l1 || l2) return MoveKind::F2;
    return B.t(f1) == B.t(f2) ? MoveKind::F4 : MoveKind::F1;
}

AGraph apply_fold(const AGraph& B0, int f1, int f2, Move* record) {
    if (f1 == f2 || f1 / 2 == f2 / 2 || B0.o(f1) != B0.o(f2) || B0.etype(f1) != B0.etype(f2) || B0.fa(f1) != B0.fa(f2))
        throw std::invalid_argument("fold site edges must share origin, type and first label");
    const MoveKind kind = fold_kind(B0, f1, f2);
    Move m{kind, -1, f1, f2, {}, {}};
    AGraph B = B0;
    switch (kind) {
    case MoveKind::F1:
    case MoveKind::F2: {
        if (kind == MoveKind::F1 ? B.t(f2) == B.base() : B.is_loop(f2)) std::swap(f1, f2);
        const int z = B.t(f1), y = B.t(f2);
        const Group& G = B.vertex_group(y);
        const bool was_base = y == B.base();
        const Elem g = G.mul(G.inv(B.fw(f1)), B.fw(f2));
        B = apply_a0(B, y, g);
        m.internal.push_back(Move{MoveKind::A0, y, -1, -1, g, {}});
        B.set_group(z, grow(B.group(z), B.group(y).gens()));
        B.remove_edge_pair(f2);
        B.merge_vertex(z, y);
        if (kind == MoveKind::F2 && was_base) {
            const int merged = B.base();
            B = apply_a0(B, merged, G.inv(g));
            m.internal.push_back(Move{MoveKind::A0, merged, -1, -1, G.inv(g), {}});
        }
        break;
    }
    case MoveKind::F3:
    case MoveKind::F4: {
        const int x = B.t(f1);
        const Group& G = B.vertex_group(x);
        B.set_group(x, grow(B.group(x), {G.mul(G.inv(B.fw(f1)), B.fw(f2))}));
        B.remove_edge_pair(f2);
        break;
    }
    default: break;
    }
    if (record) *record = m;
    return B;
}

AGraph apply_equalize(const AGraph& B0, int f, Move* record) {
    Subgroup p1 = pullback_alpha(B0, f), p2 = pullback_omega(B0, f);
    if (edge_subgroups_equal(p1, p2)) throw std::invalid_argument("edge pullbacks already agree");
    Subgroup C = subgroup_join(p1, p2);
    const int e = B0.etype(f);
    const GraphOfGroups& A = B0.ambient();
    const int u = B0.o(f), w = B0.t(f);
    const Group& Go = B0.vertex_group(u);
    const Group& Gt = B0.vertex_group(w);
    const Elem a = B0.fa(f), b = B0.fw(f);
    std::vector<Elem> at_o, at_t;
    for (const auto& c : C.gens()) {
        at_o.push_back(Go.prod(a, A.alpha_of(e).apply(c), Go.inv(a)));
        at_t.push_back(Gt.prod(Gt.inv(b), A.omega_of(e).apply(c), b));
    }
    AGraph B = B0;
    const bool loop = u == w;
    if (loop) {
        at_o.insert(at_o.end(), at_t.begin(), at_t.end());
        B.set_group(u, grow(B.group(u), at_o));
    } else {
        B.set_group(u, grow(B.group(u), at_o));
        B.set_group(w, grow(B.group(w), at_t));
    }
    if (record) *record = Move{loop ? MoveKind::F6 : MoveKind::F5, -1, f, -1, {}, {}};
    return B;
}

AGraph apply_move(const AGraph& B, const Move& m) {
    switch (m.kind) {
    case MoveKind::A0: return apply_a0(B, m.vertex, m.g);
    case MoveKind::A1: return apply_a1(B, m.f1, m.g);
    case MoveKind::A2: return apply_a2(B, m.f1, m.g);
    case MoveKind::F5:
    case MoveKind::F6: {
        Move r;
        AGraph out = apply_equalize(B, m.f1, &r);
        if (r.kind != m.kind) throw std::invalid_argument("recorded equalization type does not match the edge");
        return out;
    }
    default: {
        if (fold_kind(B, m.f1, m.f2) != m.kind) throw std::invalid_argument("recorded fold type does not match the topology");
        return apply_fold(B, m.f1, m.f2);
    }
    }
}

AGraph build_wedge(std::shared_ptr<const GraphOfGroups> A, int v0, const std::vector<APath>& S) {
    AGraph B(A);
    std::vector<APath> loops;
    std::vector<Elem> base_gens;
    for (const auto& p : S) {
        if (auto errs = check_path(*A, p); !errs.empty()) throw std::invalid_argument("invalid path: " + errs.front());
        if (p.start != v0 || path_end(*A, p) != v0) throw std::invalid_argument("generator path not based at the base vertex");
        APath r = reduce_a_path(*A, p).path;
        if (r.length() == 0)
            base_gens.push_back(r.a[0]);
        else
            loops.push_back(r);
    }
    const int u0 = B.add_vertex(v0, Subgroup(A->vgroup[static_cast<std::size_t>(v0)], base_gens));
    B.set_base(u0);
    for (const auto& p : loops) {
        int prev = u0;
        const int k = p.length();
        for (int i = 0; i < k; ++i) {
            const int e = p.e[static_cast<std::size_t>(i)];
            if (i + 1 < k) {
                const int w = B.add_vertex(A->t(e), Subgroup::trivial(A->vgroup[static_cast<std::size_t>(A->t(e))]));
                B.add_edge(prev, w, e, p.a[static_cast<std::size_t>(i)], A->vg(A->t(e)).id());
                prev = w;
            } else {
                B.add_edge(prev, u0, e, p.a[static_cast<std::size_t>(i)], p.a[static_cast<std::size_t>(k)]);
            }
        }
    }
    return B;
}

bool noetherian_edge_groups(const GraphOfGroups& A) {
    return std::none_of(A.egroup.begin(), A.egroup.end(),
                        [](const GroupPtr& E) { return E->kind() == Kind::Free && E->rank() >= 2; });
}

FoldTrace fold_to_completion(const AGraph& B, const FoldOptions& opt) {
    FoldTrace tr;
    tr.initial = B;
    tr.max_steps = opt.max_steps.value_or(10 * B.num_pairs() + 200);
    if (tr.max_steps < 0) throw std::invalid_argument("max_steps must be non-negative");
    if (tr.max_steps == 0 && !noetherian_edge_groups(B.ambient()))
        throw std::invalid_argument("an unlimited step budget needs Noetherian edge groups");
    AGraph cur = B;
    for (;;) {
        auto v = find_fold_violation(cur);
        if (!v) {
            tr.status = FoldStatus::Folded;
            break;
        }
        if (tr.max_steps > 0 && tr.fold_moves >= tr.max_steps) {
            tr.status = FoldStatus::StepBudgetExceeded;
            tr.diagnostics.push_back("step budget of " + std::to_string(tr.max_steps) + " fold moves exhausted");
            break;
        }
        if (auto* pv = std::get_if<PairViolation>(&*v)) {
            std::vector<Move> log;
            prepare_fold_site(cur, *pv, &log);
            for (const auto& m : log) {
                cur = apply_move(cur, m);
                tr.steps.push_back({m, cur});
            }
            Move m;
            cur = apply_fold(cur, pv->f1, pv->f2, &m);
            tr.steps.push_back({m, cur});
        } else {
            const int f = std::get<EdgeGroupViolation>(*v).f;
            const AGraph before = cur;
            Move m;
            cur = apply_equalize(cur, f, &m);
            tr.steps.push_back({m, cur});
            std::vector<int> ends{before.o(f)};
            if (!before.is_loop(f)) ends.push_back(before.t(f));
            for (int u : ends) {
                Growth g{static_cast<int>(tr.steps.size()) - 1, u, before.group(u), cur.group(u), false};
                g.strict = !g.before.contains(g.after);
                tr.diagnostics.push_back(std::string(move_name(m.kind)) + " at edge " + std::to_string(f) + ": vertex " +
                                         std::to_string(u) + " group " + (g.strict ? "grew strictly" : "unchanged") + ", " +
                                         std::to_string(g.before.gens().size()) + " -> " +
                                         std::to_string(g.after.gens().size()) + " generators");
                tr.growth.push_back(std::move(g));
            }
        }
        ++tr.fold_moves;
    }
    tr.final = cur;
    return tr;
}

AGraph replay(const FoldTrace& trace) {
    AGraph cur = trace.initial;
    for (const auto& s : trace.steps) cur = apply_move(cur, s.move);
    return cur;
}

std::vector<MoveKind> fold_move_kinds(const FoldTrace& trace) {
    std::vector<MoveKind> out;
    for (const auto& s : trace.steps)
        if (is_fold_move(s.move.kind)) out.push_back(s.move.kind);
    return out;
}

namespace {

std::string vertex_letter(int u) {
    static const char* letters[] = {"x", "y", "z"};
    return u < 3 ? letters[u] : "w" + std::to_string(u) + "_";
}

Word shifted(const Word& w, int offset) {
    Word out;
    for (long long l : w) out.push_back(l > 0 ? l + offset : l - offset);
    return out;
}

}  // namespace

InducedSplitting extract_induced_splitting(const AGraph& B) {
    if (!is_folded(B)) throw std::invalid_argument("induced splitting needs a folded graph");
    InducedSplitting s;
    const SpanningTree T = bfs_tree(B.graph(), B.base());
    const GraphOfGroups& A = B.ambient();
    for (int u = 0; u < B.num_vertices(); ++u) {
        Presentation P = subgroup_presentation(B.group(u));
        s.first_gen.push_back(static_cast<int>(s.names.size()));
        for (std::size_t j = 0; j < P.elems.size(); ++j) {
            s.names.push_back(vertex_letter(u) + std::to_string(j + 1));
            s.images.push_back(mu_translate(B, tree_loop(B, T, u, &P.elems[j], -1)));
            s.vertex_of.push_back(u);
        }
        for (const auto& r : P.relators) s.relators.push_back(shifted(r, s.first_gen.back()));
        s.vertex_presentations.push_back(std::move(P));
    }
    int stable = 0;
    for (int f = 0; f < B.num_edges(); f += 2) {
        EdgeBoundary eb;
        eb.f = f;
        eb.tree = T.in_tree[static_cast<std::size_t>(f)] != 0;
        eb.edge_group = derived_edge_group(B, f);
        if (!eb.tree) {
            eb.stable = static_cast<int>(s.names.size());
            s.names.push_back("t" + std::to_string(++stable));
            s.images.push_back(mu_translate(B, tree_loop(B, T, B.o(f), nullptr, f)));
            s.vertex_of.push_back(-1);
        }
        const int e = B.etype(f);
        const int u = B.o(f), w = B.t(f);
        const Group& Go = B.vertex_group(u);
        const Group& Gt = B.vertex_group(w);
        const Elem a = B.fa(f), b = B.fw(f);
        for (const auto& c : subgroup_presentation(eb.edge_group).elems) {
            auto wa = express_in_presentation(B.group(u), s.vertex_presentations[static_cast<std::size_t>(u)],
                                              Go.prod(a, A.alpha_of(e).apply(c), Go.inv(a)));
            auto wo = express_in_presentation(B.group(w), s.vertex_presentations[static_cast<std::size_t>(w)],
                                              Gt.prod(Gt.inv(b), A.omega_of(e).apply(c), b));
            if (!wa || !wo) throw std::logic_error("edge group image not in the vertex group");
            Word la = shifted(*wa, s.first_gen[static_cast<std::size_t>(u)]);
            Word lo = shifted(*wo, s.first_gen[static_cast<std::size_t>(w)]);
            Word r;
            if (eb.tree) {
                r = word::mul(la, word::inv(lo));
            } else {
                const long long t = eb.stable + 1;
                r = word::mul(word::mul(word::mul(Word{t}, lo), Word{-t}), word::inv(la));
            }
            if (!word::reduce(r).empty()) s.relators.push_back(word::reduce(r));
        }
        s.edges.push_back(std::move(eb));
    }
    return s;
}

bool verify_splitting(const AGraph& B, const InducedSplitting& s) {
    const GraphOfGroups& A = B.ambient();
    const int v0 = B.vtype(B.base());
    for (const auto& img : s.images)
        if (img.start != v0 || path_end(A, img) != v0) return false;
    for (const auto& r : s.relators) {
        APath p = identity_path(A, v0);
        for (long long l : r) {
            const APath& g = s.images[static_cast<std::size_t>(std::llabs(l) - 1)];
            p = path_compose(A, p, l > 0 ? g : path_invert(A, g));
        }
        if (!represents_identity(A, p)) return false;
    }
    return true;
}

int abelianized_rank(int generators, const std::vector<Word>& relators) {
    std::vector<lattice::Vec> rows;
    for (const auto& r : relators) {
        lattice::Vec v(static_cast<std::size_t>(generators), 0);
        for (long long l : r) v[static_cast<std::size_t>(std::llabs(l) - 1)] += l > 0 ? 1 : -1;
        rows.push_back(v);
    }
    int rank = 0;
    if (!rows.empty())
        for (long long d : lattice::smith_diagonal(rows))
            if (d != 0) ++rank;
    return generators - rank;
}

std::string format_relator(const InducedSplitting& s, const Word& r) {
    std::string out;
    for (std::size_t i = 0; i < r.size();) {
        std::size_t j = i;
        while (j < r.size() && r[j] == r[i]) ++j;
        long long exp = static_cast<long long>(j - i) * (r[i] > 0 ? 1 : -1);
        if (!out.empty()) out += ' ';
        out += s.names[static_cast<std::size_t>(std::llabs(r[i]) - 1)];
        if (exp != 1) out += std::to_string(exp);
        i = j;
    }
    return out.empty() ? "1" : out;
}

GrushkoReport grushko_check(std::shared_ptr<const GraphOfGroups> A, int v0, const std::vector<APath>& S,
                            const FoldOptions& opt) {
    for (const auto& E : A->egroup)
        if (!E->is_trivial()) throw std::invalid_argument("Grushko check needs trivial edge groups");
    GrushkoReport rep;
    rep.trace = fold_to_completion(build_wedge(A, v0, S), opt);
    rep.complexity.push_back(complexity(rep.trace.initial));
    for (const auto& st : rep.trace.steps)
        if (is_fold_move(st.move.kind)) {
            rep.complexity.push_back(complexity(st.after));
            if (rep.complexity.back() > rep.complexity[rep.complexity.size() - 2]) rep.monotone = false;
        }
    rep.folded = rep.trace.status == FoldStatus::Folded;
    rep.final_value = rep.complexity.back();
    return rep;
}

}  // namespace gog
