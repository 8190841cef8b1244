#include "gog/testkit.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace gog::testkit {

bool all_finite(const GraphOfGroups& A) {
    auto fin = [](const GroupPtr& G) { return G->kind() == Kind::Finite || G->is_trivial(); };
    return std::all_of(A.vgroup.begin(), A.vgroup.end(), fin) && std::all_of(A.egroup.begin(), A.egroup.end(), fin);
}

namespace {

// Representative of g * image(m): the identity for the image itself, else the smallest element.
Elem coset_rep(const Group& G, const MonoMap& m, const Elem& g) {
    Elem best = g;
    bool first = true;
    for (const Elem& h : m.image().enumerate()) {
        Elem x = G.mul(g, h);
        if (G.is_id(x)) return x;
        if (first || x < best) best = x;
        first = false;
    }
    return best;
}

}  // namespace

APath normal_form(const GraphOfGroups& A, const APath& p0) {
    APath p = reduce_a_path(A, p0).path;
    int v = p.start;
    for (std::size_t i = 0; i < p.e.size(); ++i) {
        const int e = p.e[i];
        const Group& G = A.vg(v);
        const MonoMap& alpha = A.alpha_of(e);
        Elem t = coset_rep(G, alpha, p.a[i]);
        auto c = alpha.preimage(G.mul(G.inv(t), p.a[i]));
        if (!c) throw std::logic_error("coset representative outside the coset");
        p.a[i] = t;
        v = A.t(e);
        p.a[i + 1] = A.vg(v).mul(A.omega_of(e).apply(*c), p.a[i + 1]);
    }
    return p;
}

bool same_element(const GraphOfGroups& A, const APath& p, const APath& q) {
    return normal_form(A, p) == normal_form(A, q);
}

namespace {

APath drop_last(const GraphOfGroups& A, APath p) {
    p.a.back() = A.vg(path_end(A, p)).id();
    return p;
}

}  // namespace

int ball_index(const GraphOfGroups& A, const TreeBall& ball, const APath& p) {
    APath x = drop_last(A, normal_form(A, p));
    for (std::size_t i = 0; i < ball.vertices.size(); ++i)
        if (ball.vertices[i] == x) return static_cast<int>(i);
    return -1;
}

TreeBall bass_serre_ball(const GraphOfGroups& A, int v0, int r, std::size_t cap) {
    if (!all_finite(A)) throw std::invalid_argument("tree balls need finite vertex and edge groups");
    TreeBall ball;
    ball.radius = r;
    std::map<APath, int, bool (*)(const APath&, const APath&)> index([](const APath& x, const APath& y) {
        return std::tie(x.start, x.a, x.e) < std::tie(y.start, y.a, y.e);
    });
    auto add = [&](const APath& x, int d, int parent) {
        auto [it, fresh] = index.emplace(x, static_cast<int>(ball.vertices.size()));
        if (fresh) {
            if (ball.vertices.size() >= cap) throw std::invalid_argument("tree ball exceeds the size cap");
            ball.vertices.push_back(x);
            ball.depth.push_back(d);
            ball.parent.push_back(parent);
            ball.adjacent.emplace_back();
        }
        return it->second;
    };
    add(identity_path(A, v0), 0, -1);
    for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
        if (ball.depth[i] >= r) continue;
        const APath x = ball.vertices[i];
        const int v = path_end(A, x);
        for (int e : A.graph.out_edges(v))
            for (const Elem& s : A.vg(v).elements()) {
                APath step{v, {s, A.vg(A.t(e)).id()}, {e}};
                APath y = drop_last(A, normal_form(A, path_compose(A, x, step)));
                if (y.length() <= x.length()) continue;
                const int j = add(y, ball.depth[i] + 1, static_cast<int>(i));
                auto& adj = ball.adjacent[i];
                if (std::find(adj.begin(), adj.end(), j) == adj.end()) {
                    adj.push_back(j);
                    ball.adjacent[static_cast<std::size_t>(j)].push_back(static_cast<int>(i));
                }
            }
    }
    return ball;
}

BruteForce::BruteForce(const GraphOfGroups& A, int v0, std::vector<APath> S, int query_length, std::size_t cap)
    : A_(A), v0_(v0), query_length_(query_length), cap_(cap) {
    if (!all_finite(A)) throw std::invalid_argument("brute force membership needs finite groups");
    int lmax = 0;
    for (const auto& s : S) {
        if (s.start != v0 || path_end(A, s) != v0) throw std::invalid_argument("generator not based at the base vertex");
        APath r = normal_form(A, s);
        lmax = std::max(lmax, r.length());
        gens_.push_back(r);
        gens_.push_back(normal_form(A, path_invert(A, r)));
    }
    APath one = identity_path(A, v0);
    seen_.insert(key(one));
    inner_.insert(key(one));
    frontier_.push_back(one);
    radius_ = query_length;
    expand_to(radius_);
    std::size_t prev = inner_.size();
    for (;;) {
        if (seen_.size() >= cap_) return;
        expand_to(radius_ + 1);
        ++radius_;
        if (seen_.size() >= cap_) return;
        if (inner_.size() == prev && radius_ >= query_length + 2 * lmax) break;
        if (pending_.empty() && frontier_.empty()) break;
        prev = inner_.size();
    }
    exact_ = true;
}

BruteForce::Key BruteForce::key(const APath& p) const {
    Key k{p.start};
    for (std::size_t i = 0; i < p.a.size(); ++i) {
        k.insert(k.end(), p.a[i].v.begin(), p.a[i].v.end());
        if (i < p.e.size()) k.push_back(-1 - p.e[i]);
    }
    return k;
}

void BruteForce::expand_to(int R) {
    for (auto it = pending_.begin(); it != pending_.end() && it->first <= R;) {
        for (auto& p : it->second) frontier_.push_back(std::move(p));
        it = pending_.erase(it);
    }
    std::deque<APath> q(frontier_.begin(), frontier_.end());
    frontier_.clear();
    while (!q.empty() && seen_.size() < cap_) {
        APath x = std::move(q.front());
        q.pop_front();
        for (const auto& s : gens_) {
            APath y = normal_form(A_, path_compose(A_, x, s));
            Key k = key(y);
            if (seen_.count(k)) continue;
            seen_.insert(k);
            if (y.length() <= query_length_) inner_.insert(k);
            if (y.length() <= R)
                q.push_back(std::move(y));
            else
                pending_[y.length()].push_back(std::move(y));
        }
    }
    for (auto& x : q) frontier_.push_back(std::move(x));
}

BruteForceVerdict BruteForce::query(const APath& p) const {
    APath n = normal_form(A_, p);
    if (n.length() > query_length_) throw std::invalid_argument("query longer than the prepared length");
    return {inner_.count(key(n)) > 0, exact_, radius_};
}

BruteForceVerdict brute_force_membership(const GraphOfGroups& A, int v0, const std::vector<APath>& S, const APath& p,
                                         std::size_t cap) {
    BruteForce bf(A, v0, S, normal_form(A, p).length(), cap);
    return bf.query(p);
}

namespace {

long long vertex_value(const GraphOfGroups& A, const HomSpec& h, int v, const Elem& x) {
    const Group& G = A.vg(v);
    const auto& img = h.vertex_images.at(static_cast<std::size_t>(v));
    switch (G.kind()) {
    case Kind::Free: {
        long long s = 0;
        for (long long l : x.v) s += (l > 0 ? 1 : -1) * img.at(static_cast<std::size_t>(std::llabs(l) - 1));
        return s;
    }
    case Kind::Abelian: {
        long long s = 0;
        for (std::size_t i = 0; i < x.v.size(); ++i) s += x.v[i] * img.at(i);
        return s;
    }
    case Kind::Finite: return 0;
    }
    return 0;
}

}  // namespace

void validate_hom(const GraphOfGroups& A, const HomSpec& h) {
    if (static_cast<int>(h.vertex_images.size()) != A.graph.num_vertices ||
        static_cast<int>(h.edge_images.size()) != A.graph.num_pairs())
        throw std::invalid_argument("homomorphism images have the wrong shape");
    for (int v = 0; v < A.graph.num_vertices; ++v) {
        const Group& G = A.vg(v);
        const auto& img = h.vertex_images[static_cast<std::size_t>(v)];
        if (img.size() != G.generators().size()) throw std::invalid_argument("one image per vertex generator required");
        if (G.kind() == Kind::Finite && std::any_of(img.begin(), img.end(), [](long long x) { return x != 0; }))
            throw std::invalid_argument("a finite group maps trivially to Z");
    }
    for (int e = 0; e < A.graph.num_edges(); e += 2)
        for (const Elem& c : A.egroup[static_cast<std::size_t>(e)]->generators())
            if (vertex_value(A, h, A.o(e), A.alpha_of(e).apply(c)) != vertex_value(A, h, A.t(e), A.omega_of(e).apply(c)))
                throw std::invalid_argument("homomorphism breaks the relation of edge " + A.edge_names[static_cast<std::size_t>(e)]);
}

long long hom_value(const GraphOfGroups& A, const HomSpec& h, const APath& p) {
    long long s = 0;
    int v = p.start;
    for (std::size_t i = 0; i < p.a.size(); ++i) {
        s += vertex_value(A, h, v, p.a[i]);
        if (i < p.e.size()) {
            const int e = p.e[i];
            const long long te = h.edge_images.at(static_cast<std::size_t>(e / 2));
            s += e % 2 == 0 ? te : -te;
            v = A.t(e);
        }
    }
    return s;
}

std::optional<HomCertificate> hom_certificate(const GraphOfGroups& A, const HomSpec& h, const std::vector<APath>& S,
                                              const APath& p) {
    validate_hom(A, h);
    long long d = 0;
    for (const auto& s : S) d = std::gcd(d, std::llabs(hom_value(A, h, s)));
    const long long x = hom_value(A, h, p);
    const bool outside = d == 0 ? x != 0 : x % d != 0;
    if (!outside) return std::nullopt;
    return HomCertificate{x, d};
}

}  // namespace gog::testkit
