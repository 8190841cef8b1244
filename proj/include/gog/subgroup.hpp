#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gog/core_graph.hpp"
#include "gog/group.hpp"
#include "gog/lattice.hpp"

namespace gog {

// Enumerated subgroup of a finite group with a generator word for each element.
struct FiniteSpan {
    std::vector<char> member;          // indexed by element
    std::vector<int> elements;         // BFS order
    std::vector<int> parent;           // element -> previous element, -1 at identity
    std::vector<int> parent_gen;       // generator index used to reach the element
};

FiniteSpan finite_span(const Group& G, const std::vector<Elem>& gens);

// Finitely generated subgroup <X> of a backend group with its cached normal form.
class Subgroup {
public:
    Subgroup() = default;
    Subgroup(GroupPtr G, std::vector<Elem> gens);
    static Subgroup trivial(GroupPtr G) { return Subgroup(std::move(G), {}); }
    static Subgroup whole(GroupPtr G) {
        auto gens = G->generators();
        return Subgroup(std::move(G), std::move(gens));
    }

    const GroupPtr& group() const { return G_; }
    const std::vector<Elem>& gens() const { return gens_; }

    bool contains(const Elem& g) const;
    bool contains(const Subgroup& K) const;
    // Membership with a word over gens() evaluating to g.
    std::optional<Expr> express(const Elem& g) const;
    bool is_trivial() const;
    // Minimal number of generators of the subgroup.
    int rank() const;
    // Elements of a subgroup of a finite group.
    std::vector<Elem> enumerate() const;

    const CoreGraph& core() const;
    const lattice::Hnf& hnf() const;
    const FiniteSpan& span() const;

private:
    struct Cache;
    GroupPtr G_;
    std::vector<Elem> gens_;
    std::shared_ptr<const Cache> cache_;
};

// Homomorphism given by the images of the source's standard generators.
class MonoMap {
public:
    MonoMap() = default;
    MonoMap(GroupPtr source, GroupPtr target, std::vector<Elem> images);

    const GroupPtr& source() const { return src_; }
    const GroupPtr& target() const { return dst_; }
    const std::vector<Elem>& images() const { return images_; }
    const Subgroup& image() const { return image_; }

    Elem apply(const Elem& c) const;
    std::optional<Elem> preimage(const Elem& x) const;
    // Empty when the map is a well-defined injective homomorphism.
    std::optional<std::string> check() const;

private:
    GroupPtr src_, dst_;
    std::vector<Elem> images_;
    Subgroup image_;
    std::vector<Elem> table_;  // finite source: image of every element
    std::optional<std::string> error_;
};

struct CosetWitness {
    Elem h;  // in the subgroup
    Elem c;  // in the edge group, h = g * m(c)
};

// Some h in H with h in g*m(E), or none when the intersection is empty.
std::optional<CosetWitness> coset_intersection_witness(const Subgroup& H, const Elem& g, const MonoMap& m);
// m^-1(image(m) meet H) as a subgroup of the source.
Subgroup image_intersection(const Subgroup& H, const MonoMap& m);
Subgroup intersect(const Subgroup& A, const Subgroup& B);
bool edge_subgroups_equal(const Subgroup& A, const Subgroup& B);
// g^-1 H g
Subgroup conjugate_subgroup(const Subgroup& H, const Elem& g);
Subgroup subgroup_join(const Subgroup& A, const Subgroup& B);
Subgroup subgroup_join(const Subgroup& A, const std::vector<Elem>& extra);

struct Presentation {
    std::vector<std::string> names;
    std::vector<Elem> elems;     // the generators as subgroup elements
    std::vector<Word> relators;  // words over +/-(i+1)
};

Presentation subgroup_presentation(const Subgroup& H);
// Word over the presentation generators for an element of H.
std::optional<Word> express_in_presentation(const Subgroup& H, const Presentation& P, const Elem& x);

// Rational-subset path for free edge groups of rank at least two.
bool rational_cosets_enabled();

}  // namespace gog
