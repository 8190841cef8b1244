#include "gog/subgroup.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gog {

struct Subgroup::Cache {
    std::optional<CoreGraph> core;
    std::optional<lattice::Hnf> hnf;
    std::optional<FiniteSpan> span;
};

namespace {

Expr expr_from_letters(const Word& w) {
    Expr e;
    for (long long l : w) {
        int idx = static_cast<int>((l > 0 ? l : -l) - 1);
        long long s = l > 0 ? 1 : -1;
        if (!e.terms.empty() && e.terms.back().first == idx)
            e.terms.back().second += s;
        else
            e.terms.push_back({idx, s});
        if (e.terms.back().second == 0) e.terms.pop_back();
    }
    return e;
}

std::vector<Word> words_of(const std::vector<Elem>& gens) {
    std::vector<Word> out;
    for (const auto& g : gens) out.push_back(g.v);
    return out;
}

std::vector<lattice::Vec> vecs_of(const std::vector<Elem>& gens) {
    std::vector<lattice::Vec> out;
    for (const auto& g : gens) out.push_back(g.v);
    return out;
}

void require_same(const GroupPtr& a, const GroupPtr& b) {
    if (a.get() != b.get() && !a->same_as(*b)) throw std::invalid_argument("descriptor mismatch");
}

// Deterministic small generating set of a finite subgroup given by membership flags.
std::vector<Elem> greedy_gens(const Group& G, const std::vector<char>& member) {
    std::vector<Elem> chosen;
    FiniteSpan cur = finite_span(G, chosen);
    for (int x = 0; x < G.order(); ++x) {
        if (!member[static_cast<std::size_t>(x)] || cur.member[static_cast<std::size_t>(x)]) continue;
        chosen.push_back(Elem{{x}});
        cur = finite_span(G, chosen);
    }
    return chosen;
}

}  // namespace

FiniteSpan finite_span(const Group& G, const std::vector<Elem>& gens) {
    const int n = G.order();
    FiniteSpan s;
    s.member.assign(static_cast<std::size_t>(n), 0);
    s.parent.assign(static_cast<std::size_t>(n), -1);
    s.parent_gen.assign(static_cast<std::size_t>(n), -1);
    const int e = G.table().identity;
    s.member[static_cast<std::size_t>(e)] = 1;
    s.elements.push_back(e);
    for (std::size_t k = 0; k < s.elements.size(); ++k)
        for (std::size_t j = 0; j < gens.size(); ++j) {
            int y = G.table().mul[static_cast<std::size_t>(s.elements[k] * n + gens[j].v[0])];
            if (s.member[static_cast<std::size_t>(y)]) continue;
            s.member[static_cast<std::size_t>(y)] = 1;
            s.parent[static_cast<std::size_t>(y)] = s.elements[k];
            s.parent_gen[static_cast<std::size_t>(y)] = static_cast<int>(j);
            s.elements.push_back(y);
        }
    return s;
}

Subgroup::Subgroup(GroupPtr G, std::vector<Elem> gens) : G_(std::move(G)) {
    for (auto& g : gens) gens_.push_back(G_->normalize(g));
    auto c = std::make_shared<Cache>();
    switch (G_->kind()) {
    case Kind::Free: c->core = CoreGraph::build(G_->rank(), words_of(gens_)); break;
    case Kind::Abelian: c->hnf = lattice::hnf(G_->rank(), vecs_of(gens_)); break;
    case Kind::Finite: c->span = finite_span(*G_, gens_); break;
    }
    cache_ = std::move(c);
}

const CoreGraph& Subgroup::core() const { return cache_->core.value(); }
const lattice::Hnf& Subgroup::hnf() const { return cache_->hnf.value(); }
const FiniteSpan& Subgroup::span() const { return cache_->span.value(); }

std::optional<Expr> Subgroup::express(const Elem& g0) const {
    Elem g = G_->normalize(g0);
    switch (G_->kind()) {
    case Kind::Free: {
        auto w = core().expression(g.v);
        if (!w) return std::nullopt;
        return expr_from_letters(*w);
    }
    case Kind::Abelian: {
        auto y = lattice::solve(hnf(), g.v);
        if (!y) return std::nullopt;
        Expr e;
        for (std::size_t i = 0; i < y->size(); ++i)
            if ((*y)[i] != 0) e.terms.push_back({static_cast<int>(i), (*y)[i]});
        return e;
    }
    case Kind::Finite: {
        const auto& s = span();
        int x = static_cast<int>(g.v[0]);
        if (!s.member[static_cast<std::size_t>(x)]) return std::nullopt;
        std::vector<int> rev;
        for (; s.parent[static_cast<std::size_t>(x)] >= 0; x = s.parent[static_cast<std::size_t>(x)])
            rev.push_back(s.parent_gen[static_cast<std::size_t>(x)]);
        Word w;
        for (auto it = rev.rbegin(); it != rev.rend(); ++it) w.push_back(*it + 1);
        return expr_from_letters(w);
    }
    }
    return std::nullopt;
}

bool Subgroup::contains(const Elem& g) const {
    Elem x = G_->normalize(g);
    switch (G_->kind()) {
    case Kind::Free: return core().accepts(x.v);
    case Kind::Abelian: return lattice::solve_in_basis(hnf(), x.v).has_value();
    case Kind::Finite: return span().member[static_cast<std::size_t>(x.v[0])] != 0;
    }
    return false;
}

bool Subgroup::contains(const Subgroup& K) const {
    require_same(G_, K.G_);
    return std::all_of(K.gens_.begin(), K.gens_.end(), [&](const Elem& x) { return contains(x); });
}

bool Subgroup::is_trivial() const {
    return std::all_of(gens_.begin(), gens_.end(), [&](const Elem& x) { return G_->is_id(x); });
}

std::vector<Elem> Subgroup::enumerate() const {
    std::vector<Elem> out;
    for (int x : span().elements) out.push_back(Elem{{x}});
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Minimal generating subset search over the subgroup's elements.
std::vector<Elem> minimal_generators(const Subgroup& H) {
    const Group& G = *H.group();
    const auto& sp = H.span();
    const std::size_t total = sp.elements.size();
    if (total == 1) return {};
    std::vector<int> pool;
    for (int x : sp.elements)
        if (x != G.table().identity) pool.push_back(x);
    std::sort(pool.begin(), pool.end());
    for (std::size_t d = 1; d <= pool.size(); ++d) {
        std::vector<std::size_t> idx(d);
        for (std::size_t i = 0; i < d; ++i) idx[i] = i;
        for (;;) {
            std::vector<Elem> cand;
            for (auto i : idx) cand.push_back(Elem{{pool[i]}});
            if (finite_span(G, cand).elements.size() == total) return cand;
            std::size_t i = d;
            while (i > 0 && idx[i - 1] == pool.size() - d + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < d; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return {};
}

}  // namespace

int Subgroup::rank() const {
    switch (G_->kind()) {
    case Kind::Free: return core().subgroup_rank();
    case Kind::Abelian: return hnf().rank();
    case Kind::Finite: return static_cast<int>(minimal_generators(*this).size());
    }
    return 0;
}

MonoMap::MonoMap(GroupPtr source, GroupPtr target, std::vector<Elem> images)
    : src_(std::move(source)), dst_(std::move(target)) {
    if (images.size() != src_->generators().size())
        throw std::invalid_argument("boundary map needs one image per source generator");
    for (auto& x : images) images_.push_back(dst_->normalize(x));
    image_ = Subgroup(dst_, images_);

    if (src_->kind() == Kind::Finite) {
        const int n = src_->order();
        table_.assign(static_cast<std::size_t>(n), Elem{});
        std::vector<char> done(static_cast<std::size_t>(n), 0);
        const int e = src_->table().identity;
        table_[static_cast<std::size_t>(e)] = dst_->id();
        done[static_cast<std::size_t>(e)] = 1;
        std::vector<int> order{e};
        const auto& gens = src_->generators();
        for (std::size_t k = 0; k < order.size(); ++k)
            for (std::size_t j = 0; j < gens.size(); ++j) {
                int y = src_->table().mul[static_cast<std::size_t>(order[k] * n + gens[j].v[0])];
                Elem img = dst_->mul(table_[static_cast<std::size_t>(order[k])], images_[j]);
                if (done[static_cast<std::size_t>(y)]) {
                    if (table_[static_cast<std::size_t>(y)] != img && !error_) error_ = "generator images do not define a homomorphism";
                    continue;
                }
                done[static_cast<std::size_t>(y)] = 1;
                table_[static_cast<std::size_t>(y)] = img;
                order.push_back(y);
            }
        if (static_cast<int>(order.size()) != n && !error_) error_ = "source generators do not generate the finite group";
    }
    if (error_) return;
    if (src_->is_trivial()) return;
    auto fail = [&](const std::string& why) { error_ = "boundary map is not injective: " + why; };
    switch (src_->kind()) {
    case Kind::Free:
        if (dst_->kind() == Kind::Free) {
            if (image_.core().subgroup_rank() != src_->rank()) fail("images do not form a free basis");
        } else if (dst_->kind() == Kind::Abelian) {
            if (src_->rank() != 1 || image_.is_trivial()) fail("free source of rank > 1 or trivial image");
        } else {
            fail("infinite source into finite target");
        }
        break;
    case Kind::Abelian:
        if (dst_->kind() == Kind::Abelian) {
            if (image_.hnf().rank() != src_->rank()) fail("image matrix lacks full column rank");
        } else if (dst_->kind() == Kind::Free) {
            if (src_->rank() != 1 || image_.is_trivial()) fail("abelian source of rank > 1 or trivial image");
        } else {
            fail("infinite source into finite target");
        }
        break;
    case Kind::Finite:
        if (dst_->kind() != Kind::Finite) {
            fail("nontrivial finite source into torsion-free target");
        } else {
            std::vector<Elem> seen = table_;
            std::sort(seen.begin(), seen.end());
            if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) fail("nontrivial kernel");
        }
        break;
    }
}

std::optional<std::string> MonoMap::check() const { return error_; }

Elem MonoMap::apply(const Elem& c0) const {
    Elem c = src_->normalize(c0);
    switch (src_->kind()) {
    case Kind::Free: {
        Elem r = dst_->id();
        for (long long l : c.v)
            r = dst_->mul(r, l > 0 ? images_[static_cast<std::size_t>(l - 1)] : dst_->inv(images_[static_cast<std::size_t>(-l - 1)]));
        return r;
    }
    case Kind::Abelian: {
        Elem r = dst_->id();
        for (std::size_t i = 0; i < c.v.size(); ++i) r = dst_->mul(r, dst_->pow(images_[i], c.v[i]));
        return r;
    }
    case Kind::Finite: return table_.at(static_cast<std::size_t>(c.v[0]));
    }
    return {};
}

std::optional<Elem> MonoMap::preimage(const Elem& x0) const {
    Elem x = dst_->normalize(x0);
    if (src_->kind() == Kind::Finite) {
        for (std::size_t i = 0; i < table_.size(); ++i)
            if (table_[i] == x) return Elem{{static_cast<long long>(i)}};
        return std::nullopt;
    }
    auto e = image_.express(x);
    if (!e) return std::nullopt;
    return src_->eval(*e, src_->generators());
}

bool rational_cosets_enabled() {
#ifdef GOG_RATIONAL_COSETS
    return true;
#else
    return false;
#endif
}

namespace {

std::optional<CosetWitness> free_cyclic_witness(const Subgroup& H, const Elem& g, const MonoMap& m) {
    const Group& F = *H.group();
    const CoreGraph& cg = H.core();
    const Elem w = m.apply(m.source()->generators()[0]);
    auto [s, core] = word::cyclic_split(w.v);
    const Elem t = m.source()->generators()[0];
    auto found = [&](long long n) {
        return CosetWitness{F.mul(g, F.pow(w, n)), m.source()->pow(t, n)};
    };
    if (H.contains(g)) return found(0);
    const Word u = word::mul(g.v, s);
    const Word sinv = word::inv(s);
    for (int sign : {1, -1}) {
        const Word c = sign > 0 ? core : word::inv(core);
        const long long len = static_cast<long long>(c.size());
        const long long m0 = static_cast<long long>(u.size()) / len + 2;
        const long long m1 = static_cast<long long>(s.size()) / len + 2;
        const long long N = m0 + m1;
        for (long long n = 1; n < N; ++n)
            if (H.contains(F.mul(g, F.pow(w, sign * n)))) return found(sign * n);
        // Beyond N the word reads A c^j B reduced as written.
        Word A = u, B = sinv;
        for (long long i = 0; i < m0; ++i) A = word::mul(A, c);
        for (long long i = 0; i < m1; ++i) B = word::mul(c, B);
        auto q = cg.read(0, A);
        std::map<int, long long> seen;
        for (long long j = 0; q; ++j) {
            if (seen.count(*q)) break;
            seen[*q] = j;
            auto end = cg.read(*q, B);
            if (end && *end == 0) return found(sign * (N + j));
            q = cg.read(*q, c);
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<CosetWitness> coset_intersection_witness(const Subgroup& H, const Elem& g0, const MonoMap& m) {
    require_same(H.group(), m.target());
    const Group& T = *H.group();
    const Group& S = *m.source();
    const Elem g = T.normalize(g0);
    if (S.is_trivial()) {
        if (H.contains(g)) return CosetWitness{g, S.id()};
        return std::nullopt;
    }
    switch (T.kind()) {
    case Kind::Free: {
        if (S.generators().size() == 1) return free_cyclic_witness(H, g, m);
        if (!rational_cosets_enabled())
            throw std::runtime_error("coset test against a free edge group of rank >= 2 needs the rational-subset path");
        auto hk = product_set_witness(H.core(), m.image().core(), g.v);
        if (!hk) return std::nullopt;
        Elem h{hk->first};
        auto c = m.preimage(T.inv(Elem{hk->second}));
        if (!c) throw std::logic_error("product witness outside the image");
        return CosetWitness{h, *c};
    }
    case Kind::Abelian: {
        // g in L + M gives g = L x + M y, so g - M y lies in L.
        std::vector<lattice::Vec> cols;
        for (const auto& x : m.images()) cols.push_back(x.v);
        const std::size_t k = cols.size();
        for (const auto& x : H.hnf().cols) cols.push_back(x);
        auto y = lattice::solve(lattice::hnf(T.rank(), cols), g.v);
        if (!y) return std::nullopt;
        Expr e;
        for (std::size_t i = 0; i < k; ++i)
            if ((*y)[i] != 0) e.terms.push_back({static_cast<int>(i), -(*y)[i]});
        Elem c = S.eval(e, S.generators());
        return CosetWitness{T.mul(g, m.apply(c)), c};
    }
    case Kind::Finite: {
        for (const Elem& c : S.elements()) {
            Elem h = T.mul(g, m.apply(c));
            if (H.contains(h)) return CosetWitness{h, c};
        }
        return std::nullopt;
    }
    }
    return std::nullopt;
}

Subgroup image_intersection(const Subgroup& H, const MonoMap& m) {
    require_same(H.group(), m.target());
    const GroupPtr& S = m.source();
    if (S->is_trivial()) return Subgroup::trivial(S);
    std::vector<Elem> out;
    switch (H.group()->kind()) {
    case Kind::Free: {
        CoreGraph P = CoreGraph::product(H.core(), m.image().core());
        for (const Word& b : P.basis()) {
            auto c = m.preimage(Elem{b});
            if (!c) throw std::logic_error("intersection element outside the image");
            out.push_back(*c);
        }
        break;
    }
    case Kind::Abelian: {
        std::vector<lattice::Vec> cols;
        for (const auto& x : m.images()) cols.push_back(x.v);
        const std::size_t k = cols.size();
        for (auto x : H.hnf().cols) {
            for (auto& v : x) v = -v;
            cols.push_back(x);
        }
        lattice::Hnf h = lattice::hnf(H.group()->rank(), cols);
        for (const auto& kv : h.kernel) {
            Expr e;
            for (std::size_t i = 0; i < k; ++i)
                if (kv[i] != 0) e.terms.push_back({static_cast<int>(i), kv[i]});
            Elem c = S->eval(e, S->generators());
            if (!S->is_id(c)) out.push_back(c);
        }
        break;
    }
    case Kind::Finite: {
        std::vector<char> member(static_cast<std::size_t>(S->order()), 0);
        for (const Elem& c : S->elements())
            if (H.contains(m.apply(c))) member[static_cast<std::size_t>(c.v[0])] = 1;
        out = greedy_gens(*S, member);
        break;
    }
    }
    if (S->kind() == Kind::Abelian) {
        // Canonical lattice basis.
        lattice::Hnf h = lattice::hnf(S->rank(), vecs_of(out));
        out.clear();
        for (const auto& c : h.cols) out.push_back(Elem{c});
    }
    return Subgroup(S, out);
}

Subgroup intersect(const Subgroup& A, const Subgroup& B) {
    require_same(A.group(), B.group());
    const GroupPtr& G = A.group();
    std::vector<Elem> out;
    switch (G->kind()) {
    case Kind::Free: {
        CoreGraph P = CoreGraph::product(A.core(), B.core());
        for (const Word& b : P.basis()) out.push_back(Elem{b});
        break;
    }
    case Kind::Abelian:
        for (auto& v : lattice::intersect(G->rank(), A.hnf().cols, B.hnf().cols)) out.push_back(Elem{v});
        break;
    case Kind::Finite: {
        std::vector<char> member(static_cast<std::size_t>(G->order()), 0);
        for (int x = 0; x < G->order(); ++x)
            member[static_cast<std::size_t>(x)] = A.span().member[static_cast<std::size_t>(x)] && B.span().member[static_cast<std::size_t>(x)];
        out = greedy_gens(*G, member);
        break;
    }
    }
    return Subgroup(G, out);
}

bool edge_subgroups_equal(const Subgroup& A, const Subgroup& B) {
    require_same(A.group(), B.group());
    return A.contains(B) && B.contains(A);
}

Subgroup conjugate_subgroup(const Subgroup& H, const Elem& g0) {
    const GroupPtr& G = H.group();
    Elem g = G->normalize(g0);
    if (G->kind() == Kind::Abelian || G->is_id(g)) return H;
    std::vector<Elem> gens;
    for (const auto& x : H.gens()) gens.push_back(G->conj(x, g));
    return Subgroup(G, gens);
}

Subgroup subgroup_join(const Subgroup& A, const Subgroup& B) {
    require_same(A.group(), B.group());
    return subgroup_join(A, B.gens());
}

Subgroup subgroup_join(const Subgroup& A, const std::vector<Elem>& extra) {
    std::vector<Elem> gens = A.gens();
    for (const auto& x : extra) {
        Elem y = A.group()->normalize(x);
        if (A.group()->is_id(y)) continue;
        if (std::find(gens.begin(), gens.end(), y) == gens.end()) gens.push_back(y);
    }
    return Subgroup(A.group(), gens);
}

Presentation subgroup_presentation(const Subgroup& H) {
    const Group& G = *H.group();
    Presentation P;
    auto name = [](std::size_t i) { return "x" + std::to_string(i + 1); };
    switch (G.kind()) {
    case Kind::Free:
        for (const Word& b : H.core().basis()) P.elems.push_back(Elem{b});
        break;
    case Kind::Abelian:
        for (const auto& c : H.hnf().cols) P.elems.push_back(Elem{c});
        for (std::size_t i = 0; i < P.elems.size(); ++i)
            for (std::size_t j = i + 1; j < P.elems.size(); ++j) {
                long long a = static_cast<long long>(i) + 1, b = static_cast<long long>(j) + 1;
                P.relators.push_back(Word{a, b, -a, -b});
            }
        break;
    case Kind::Finite: {
        P.elems = minimal_generators(H);
        FiniteSpan sp = finite_span(G, P.elems);
        const int n = G.order();
        auto tree_word = [&](int x) {
            Word w;
            for (; sp.parent[static_cast<std::size_t>(x)] >= 0; x = sp.parent[static_cast<std::size_t>(x)])
                w.push_back(sp.parent_gen[static_cast<std::size_t>(x)] + 1);
            return Word(w.rbegin(), w.rend());
        };
        for (int x : sp.elements)
            for (std::size_t j = 0; j < P.elems.size(); ++j) {
                int y = G.table().mul[static_cast<std::size_t>(x * n + P.elems[j].v[0])];
                if (sp.parent[static_cast<std::size_t>(y)] == x && sp.parent_gen[static_cast<std::size_t>(y)] == static_cast<int>(j)) continue;
                Word r = word::mul(word::mul(tree_word(x), Word{static_cast<long long>(j) + 1}), word::inv(tree_word(y)));
                if (!r.empty()) P.relators.push_back(r);
            }
        break;
    }
    }
    for (std::size_t i = 0; i < P.elems.size(); ++i) P.names.push_back(name(i));
    return P;
}

std::optional<Word> express_in_presentation(const Subgroup& H, const Presentation& P, const Elem& x0) {
    const Group& G = *H.group();
    Elem x = G.normalize(x0);
    switch (G.kind()) {
    case Kind::Free: return H.core().basis_word(x.v);
    case Kind::Abelian: {
        auto y = lattice::solve_in_basis(H.hnf(), x.v);
        if (!y) return std::nullopt;
        Word w;
        for (std::size_t i = 0; i < y->size(); ++i) w = word::mul(w, word::pow(Word{static_cast<long long>(i) + 1}, (*y)[i]));
        return w;
    }
    case Kind::Finite: {
        FiniteSpan sp = finite_span(G, P.elems);
        int e = static_cast<int>(x.v[0]);
        if (!sp.member[static_cast<std::size_t>(e)]) return std::nullopt;
        Word w;
        for (; sp.parent[static_cast<std::size_t>(e)] >= 0; e = sp.parent[static_cast<std::size_t>(e)])
            w.push_back(sp.parent_gen[static_cast<std::size_t>(e)] + 1);
        return Word(w.rbegin(), w.rend());
    }
    }
    return std::nullopt;
}

}  // namespace gog
