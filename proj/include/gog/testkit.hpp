#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "gog/graph_of_groups.hpp"

namespace gog::testkit {

// Every vertex and edge group finite.
bool all_finite(const GraphOfGroups& A);

// Reduced path rewritten as t0 e1 t1 ... ek ak with each t_i the chosen representative
// of its left coset of alpha_{e_{i+1}}(A). Equal elements have equal normal forms.
APath normal_form(const GraphOfGroups& A, const APath& p);
bool same_element(const GraphOfGroups& A, const APath& p, const APath& q);

struct TreeBall {
    int radius = 0;
    std::vector<APath> vertices;  // normal forms with trivial last element
    std::vector<int> depth;
    std::vector<int> parent;      // -1 at the root
    std::vector<std::vector<int>> adjacent;
};

// Throws std::invalid_argument for infinite groups or when the ball exceeds cap vertices.
TreeBall bass_serre_ball(const GraphOfGroups& A, int v0, int r, std::size_t cap = 200000);
// Position of the class of p A_v in the ball, or -1.
int ball_index(const GraphOfGroups& A, const TreeBall& ball, const APath& p);

struct BruteForceVerdict {
    bool member = false;
    bool exact = false;
    int radius = 0;
};

// Elements of <S> reached by products staying within a growing tree radius. The search stops once
// the part within query_length is unchanged across a radius step and the radius is at least
// query_length + 2 * (longest generator).
class BruteForce {
public:
    BruteForce(const GraphOfGroups& A, int v0, std::vector<APath> S, int query_length, std::size_t cap = 400000);
    BruteForceVerdict query(const APath& p) const;
    bool exact() const { return exact_; }
    int radius() const { return radius_; }
    std::size_t explored() const { return seen_.size(); }

private:
    using Key = std::vector<long long>;
    Key key(const APath& p) const;
    void expand_to(int R);

    const GraphOfGroups& A_;
    int v0_;
    std::vector<APath> gens_;  // S and inverses, reduced
    int query_length_;
    std::size_t cap_;
    std::set<Key> seen_;
    std::set<Key> inner_;  // seen elements within query_length
    std::vector<APath> frontier_;
    std::map<int, std::vector<APath>> pending_;  // by normal form length
    int radius_ = 0;
    bool exact_ = false;
};

BruteForceVerdict brute_force_membership(const GraphOfGroups& A, int v0, const std::vector<APath>& S, const APath& p,
                                         std::size_t cap = 400000);

// Homomorphism to Z: images of each vertex group's standard generators and one value per edge pair.
struct HomSpec {
    std::vector<std::vector<long long>> vertex_images;
    std::vector<long long> edge_images;
};

struct HomCertificate {
    long long value = 0;    // image of the query
    long long modulus = 0;  // generator of the image of <S>
};

// Throws std::invalid_argument when the images do not respect the defining relations.
void validate_hom(const GraphOfGroups& A, const HomSpec& h);
long long hom_value(const GraphOfGroups& A, const HomSpec& h, const APath& p);
std::optional<HomCertificate> hom_certificate(const GraphOfGroups& A, const HomSpec& h, const std::vector<APath>& S,
                                              const APath& p);

}  // namespace gog::testkit
