#include "gog/catalog.hpp"

#include <map>
#include <stdexcept>

#include "gog/subgroup.hpp"

namespace gog::catalog {

GroupPtr from_permutations(const std::vector<std::vector<int>>& gens) {
    if (gens.empty()) return Group::cyclic(1);
    const std::size_t d = gens[0].size();
    std::vector<int> idp(d);
    for (std::size_t i = 0; i < d; ++i) idp[i] = static_cast<int>(i);
    std::map<std::vector<int>, int> index{{idp, 0}};
    std::vector<std::vector<int>> elems{idp};
    // Right action: (p * q)(i) = q(p(i)).
    auto compose = [&](const std::vector<int>& p, const std::vector<int>& q) {
        std::vector<int> r(d);
        for (std::size_t i = 0; i < d; ++i) r[i] = q[static_cast<std::size_t>(p[i])];
        return r;
    };
    for (std::size_t k = 0; k < elems.size(); ++k)
        for (const auto& g : gens) {
            auto r = compose(elems[k], g);
            if (index.emplace(r, static_cast<int>(elems.size())).second) elems.push_back(r);
        }
    const std::size_t n = elems.size();
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) table[i][j] = index.at(compose(elems[i], elems[j]));
    std::vector<int> gi;
    for (const auto& g : gens) gi.push_back(index.at(g));
    return Group::finite(table, gi);
}

GroupPtr dihedral(int n) {
    std::vector<int> r(static_cast<std::size_t>(n)), s(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        r[static_cast<std::size_t>(i)] = (i + 1) % n;
        s[static_cast<std::size_t>(i)] = (n - i) % n;
    }
    return from_permutations({r, s});
}

GroupPtr symmetric(int n) {
    if (n <= 1) return Group::cyclic(1);
    std::vector<int> c(static_cast<std::size_t>(n)), t(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        c[static_cast<std::size_t>(i)] = (i + 1) % n;
        t[static_cast<std::size_t>(i)] = i;
    }
    std::swap(t[0], t[1]);
    return from_permutations({t, c});
}

GroupPtr alternating4() { return from_permutations({{1, 2, 0, 3}, {1, 0, 3, 2}}); }

GroupPtr quaternion8() {
    // i and j acting on {±1, ±i, ±j, ±k} encoded as 0..7.
    // order: 1, i, j, k, -1, -i, -j, -k; right multiplication.
    const int mul[4][4][2] = {{{0, 0}, {1, 0}, {2, 0}, {3, 0}},
                              {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
                              {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
                              {{3, 0}, {2, 0}, {1, 1}, {0, 1}}};
    auto right = [&](int unit) {
        std::vector<int> p(8);
        for (int x = 0; x < 8; ++x) {
            int base = x % 4, neg = x / 4;
            int r = mul[base][unit][0], s = (mul[base][unit][1] + neg) % 2;
            p[static_cast<std::size_t>(x)] = r + 4 * s;
        }
        return p;
    };
    return from_permutations({right(1), right(2)});
}

GroupPtr direct_product(const Group& a, const Group& b) {
    const int na = a.order(), nb = b.order();
    std::vector<std::vector<int>> t(static_cast<std::size_t>(na * nb), std::vector<int>(static_cast<std::size_t>(na * nb)));
    auto idx = [&](int x, int y) { return x * nb + y; };
    for (int x1 = 0; x1 < na; ++x1)
        for (int y1 = 0; y1 < nb; ++y1)
            for (int x2 = 0; x2 < na; ++x2)
                for (int y2 = 0; y2 < nb; ++y2)
                    t[static_cast<std::size_t>(idx(x1, y1))][static_cast<std::size_t>(idx(x2, y2))] =
                        idx(a.table().mul[static_cast<std::size_t>(x1 * na + x2)], b.table().mul[static_cast<std::size_t>(y1 * nb + y2)]);
    std::vector<int> gens;
    for (const auto& g : a.generators()) gens.push_back(idx(static_cast<int>(g.v[0]), b.table().identity));
    for (const auto& g : b.generators()) gens.push_back(idx(a.table().identity, static_cast<int>(g.v[0])));
    return Group::finite(t, gens);
}

std::vector<GroupPtr> small_finite_groups(int max_order) {
    std::vector<GroupPtr> out;
    auto add = [&](GroupPtr g) {
        if (g->order() <= max_order) out.push_back(std::move(g));
    };
    for (int n = 1; n <= max_order; ++n) add(Group::cyclic(n));
    add(direct_product(*Group::cyclic(2), *Group::cyclic(2)));
    add(symmetric(3));
    add(dihedral(4));
    add(quaternion8());
    add(direct_product(*Group::cyclic(2), *Group::cyclic(4)));
    add(direct_product(*Group::cyclic(3), *Group::cyclic(3)));
    add(dihedral(5));
    add(dihedral(6));
    add(alternating4());
    add(direct_product(*Group::cyclic(2), *Group::cyclic(6)));
    return out;
}

std::vector<std::vector<Elem>> embeddings(const Group& source, const Group& target) {
    std::vector<std::vector<Elem>> out;
    const auto& sg = source.generators();
    const int n = target.order();
    std::vector<int> choice(sg.size(), 0);
    auto S = std::shared_ptr<const Group>(std::shared_ptr<const Group>{}, &source);
    auto T = std::shared_ptr<const Group>(std::shared_ptr<const Group>{}, &target);
    for (;;) {
        std::vector<Elem> imgs;
        for (int c : choice) imgs.push_back(Elem{{c}});
        if (!MonoMap(S, T, imgs).check()) out.push_back(imgs);
        std::size_t i = 0;
        while (i < choice.size() && ++choice[i] == n) choice[i++] = 0;
        if (i == choice.size()) break;
    }
    return out;
}

}  // namespace gog::catalog
