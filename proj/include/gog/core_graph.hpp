#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gog/group.hpp"

namespace gog {

// Folded, trimmed Stallings graph of a subgroup of a free group, based at vertex 0.
// Each directed edge carries a tag: a word in the subgroup's generators such that the
// tags along any closed path at the base evaluate to the path's label.
class CoreGraph {
public:
    static CoreGraph build(int alphabet, const std::vector<Word>& gens);
    // Core of the product graph at (base, base); carries no tags.
    static CoreGraph product(const CoreGraph& a, const CoreGraph& b);

    int alphabet() const { return alphabet_; }
    int num_vertices() const { return static_cast<int>(out_.size()); }
    int num_edges() const;
    int subgroup_rank() const { return num_edges() - num_vertices() + 1; }
    bool has_tags() const { return has_tags_; }

    static int slot(long long letter) {
        return letter > 0 ? static_cast<int>(2 * (letter - 1)) : static_cast<int>(2 * (-letter - 1) + 1);
    }
    int target(int v, long long letter) const { return out_[static_cast<std::size_t>(v)][static_cast<std::size_t>(slot(letter))]; }
    std::optional<int> read(int v, const Word& w) const;
    bool accepts(const Word& w) const;
    // Word in the generators (+/-(j+1)) evaluating to w, when w is accepted.
    std::optional<Word> expression(const Word& w) const;

    // Free basis read from the complement of a BFS spanning tree.
    const std::vector<Word>& basis() const { return basis_; }
    std::optional<Word> basis_word(const Word& w) const;
    const Word& tree_word(int v) const { return tree_word_[static_cast<std::size_t>(v)]; }

private:
    void finish();

    int alphabet_ = 0;
    bool has_tags_ = false;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<Word>> tag_;
    std::vector<std::vector<int>> basis_id_;
    std::vector<Word> tree_word_;
    std::vector<Word> basis_;
};

// Decides g in H*K for subgroups H, K given by core graphs; on success returns (h, k)
// with h in H, k in K and g = h*k. Uses reduced-word saturation of the concatenated
// automaton, so it works for K of any rank.
std::optional<std::pair<Word, Word>> product_set_witness(const CoreGraph& H, const CoreGraph& K, const Word& g);

}  // namespace gog
