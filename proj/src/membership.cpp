#include "gog/membership.hpp"

#include <stdexcept>

namespace gog {

MembershipResult decide_membership(const AGraph& B, const APath& p0, bool check_folded) {
    const GraphOfGroups& A = B.ambient();
    const int v0 = B.vtype(B.base());
    if (auto errs = check_path(A, p0); !errs.empty()) throw std::invalid_argument("invalid path: " + errs.front());
    if (p0.start != v0 || path_end(A, p0) != v0) throw std::invalid_argument("query path not based at the base vertex type");
    if (check_folded && !is_folded(B)) throw std::invalid_argument("membership needs a folded graph");

    MembershipResult res;
    MembershipCertificate cert;
    cert.path = reduce_a_path(A, p0).path;
    cert.q.start = B.base();
    const APath& p = cert.path;
    const int k = p.length();

    int u = B.base();
    Elem a = p.a[0];
    for (int i = 0; i < k; ++i) {
        const int e = p.e[static_cast<std::size_t>(i)];
        const Group& G = B.vertex_group(u);
        const MonoMap& alpha = A.alpha_of(e);
        struct Hit {
            int f;
            CosetWitness w;
        };
        std::vector<Hit> hits;
        for (int f : B.out_edges(u)) {
            if (B.etype(f) != e) continue;
            const Elem fa = B.fa(f);
            auto w = coset_intersection_witness(conjugate_subgroup(B.group(u), fa), G.mul(G.inv(fa), a), alpha);
            if (w)
                hits.push_back({f, *w});
            else
                res.trace.push_back("level " + std::to_string(i) + ", vertex " + std::to_string(u) + ", edge " +
                                    std::to_string(f) + ": coset test empty");
        }
        if (hits.size() > 1) throw std::logic_error("two edges admit a witness; the graph is not folded");
        if (hits.empty()) {
            res.trace.push_back("level " + std::to_string(i) + ", vertex " + std::to_string(u) + ": no edge of type " +
                                A.edge_names[static_cast<std::size_t>(e)] + " continues the path");
            return res;
        }
        const int f = hits[0].f;
        const Elem fa = B.fa(f);
        const Elem b = G.prod(fa, hits[0].w.h, G.inv(fa));
        const Elem c = alpha.source()->inv(hits[0].w.c);
        auto bx = B.group(u).express(b);
        if (!bx) throw std::logic_error("coset witness outside the vertex group");
        cert.q.b.push_back(b);
        cert.q.f.push_back(f);
        cert.b_expr.push_back(*bx);
        cert.c.push_back(c);
        const int w = B.t(f);
        const Group& Gt = B.vertex_group(w);
        a = Gt.prod(Gt.inv(B.fw(f)), A.omega_of(e).apply(c), p.a[static_cast<std::size_t>(i + 1)]);
        u = w;
    }
    if (u != B.base()) {
        res.trace.push_back("path ends at vertex " + std::to_string(u) + ", not at the base vertex");
        return res;
    }
    auto bx = B.group(u).express(a);
    if (!bx) {
        res.trace.push_back("final element " + B.vertex_group(u).format(a) + " not in the base vertex group");
        return res;
    }
    cert.q.b.push_back(a);
    cert.b_expr.push_back(*bx);
    res.member = true;
    res.trace.clear();
    res.certificate = std::move(cert);
    return res;
}

namespace {

bool verify_certificate_unchecked(const AGraph& B, const APath& p, const MembershipCertificate& cert) {
    const GraphOfGroups& A = B.ambient();
    if (!check_path(A, p).empty() || !(reduce_a_path(A, p).path == cert.path)) return false;
    const APath& r = cert.path;
    const BPath& q = cert.q;
    const std::size_t k = r.e.size();
    if (q.f.size() != k || q.b.size() != k + 1 || cert.c.size() != k || cert.b_expr.size() != k + 1) return false;
    if (q.start != B.base()) return false;
    int u = q.start;
    for (std::size_t i = 0; i <= k; ++i) {
        const Subgroup& H = B.group(u);
        const Group& G = B.vertex_group(u);
        if (!H.contains(q.b[i]) || G.eval(cert.b_expr[i], H.gens()) != q.b[i]) return false;
        Elem rhs = q.b[i];
        if (i > 0) {
            const int f = q.f[i - 1];
            const int e = r.e[i - 1];
            const Elem& c = cert.c[i - 1];
            if (A.egroup[static_cast<std::size_t>(e)]->normalize(c) != c) return false;
            rhs = G.prod(G.inv(A.omega_of(e).apply(c)), B.fw(f), rhs);
        }
        if (i < k) {
            const int f = q.f[i];
            const int e = r.e[i];
            if (f < 0 || f >= B.num_edges() || B.o(f) != u || B.etype(f) != e) return false;
            rhs = G.prod(rhs, B.fa(f), A.alpha_of(e).apply(cert.c[i]));
            u = B.t(f);
        }
        if (rhs != r.a[i]) return false;
    }
    return u == B.base();
}

}  // namespace

bool verify_certificate(const AGraph& B, const APath& p, const MembershipCertificate& cert) {
    try {
        return verify_certificate_unchecked(B, p, cert);
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace gog
