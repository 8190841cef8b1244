#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gog/agraph.hpp"

namespace gog {

enum class MoveKind { A0, A1, A2, F1, F2, F3, F4, F5, F6 };

const char* move_name(MoveKind k);
bool is_fold_move(MoveKind k);

struct Move {
    MoveKind kind = MoveKind::A0;
    int vertex = -1;        // A0
    int f1 = -1, f2 = -1;   // A1, A2, F5, F6 use f1
    Elem g;                 // A0: g, A1: c, A2: a'
    std::vector<Move> internal;  // A0 steps performed inside F1/F2
};

// B_u becomes g B_u g^-1. With admissible set, the base vertex is refused.
AGraph apply_a0(const AGraph& B, int u, const Elem& g, bool admissible = false);
// f_a becomes f_a alpha(c)^-1 and f_w becomes omega(c) f_w.
AGraph apply_a1(const AGraph& B, int f, const Elem& c);
// f_a becomes a' f_a; requires a' in B_o(f).
AGraph apply_a2(const AGraph& B, int f, const Elem& a_prime);

// A2 then A1 on f2 so that both edges carry the same first label. Throws on a stale violation.
AGraph prepare_fold_site(const AGraph& B, const PairViolation& v, std::vector<Move>* log = nullptr);

// Subtype F1-F4 by the topology of f1 and f2.
MoveKind fold_kind(const AGraph& B, int f1, int f2);
// Identifies f1 and f2, which must share origin, type and first label.
AGraph apply_fold(const AGraph& B, int f1, int f2, Move* record = nullptr);
// F5 or F6 at f; throws when both pullbacks already agree.
AGraph apply_equalize(const AGraph& B, int f, Move* record = nullptr);
AGraph apply_move(const AGraph& B, const Move& m);

// Circle per path of positive length, length-0 paths generate the base group.
AGraph build_wedge(std::shared_ptr<const GraphOfGroups> A, int v0, const std::vector<APath>& S);

enum class FoldStatus { Folded, StepBudgetExceeded };
enum class FoldPolicy { F1234First };

struct FoldOptions {
    FoldPolicy policy = FoldPolicy::F1234First;
    // Counts F-moves. Unset selects 10 * pairs + 200; 0 means unlimited and needs Noetherian edge groups.
    std::optional<int> max_steps;
};

struct FoldStep {
    Move move;
    AGraph after;
};

// Growth of a vertex group under F5/F6.
struct Growth {
    int step = 0;  // index into steps
    int vertex = -1;
    Subgroup before, after;
    bool strict = false;
};

struct FoldTrace {
    AGraph initial;
    std::vector<FoldStep> steps;
    AGraph final;
    FoldStatus status = FoldStatus::Folded;
    int fold_moves = 0;
    int max_steps = 0;
    std::vector<Growth> growth;
    std::vector<std::string> diagnostics;
};

bool noetherian_edge_groups(const GraphOfGroups& A);
FoldTrace fold_to_completion(const AGraph& B, const FoldOptions& opt = {});
AGraph replay(const FoldTrace& trace);
std::vector<MoveKind> fold_move_kinds(const FoldTrace& trace);

struct EdgeBoundary {
    int f = -1;  // even edge of the folded graph
    bool tree = false;
    int stable = -1;  // generator index of the stable letter
    Subgroup edge_group;
};

struct InducedSplitting {
    std::vector<std::string> names;
    std::vector<Word> relators;
    std::vector<APath> images;      // each generator as a path in the ambient graph of groups
    std::vector<int> vertex_of;     // -1 for stable letters
    std::vector<Presentation> vertex_presentations;
    std::vector<int> first_gen;     // per vertex, index of its first generator
    std::vector<EdgeBoundary> edges;
};

// Throws std::invalid_argument unless B is folded.
InducedSplitting extract_induced_splitting(const AGraph& B);
// Relators evaluate to the identity through the generator images.
bool verify_splitting(const AGraph& B, const InducedSplitting& s);
int abelianized_rank(int generators, const std::vector<Word>& relators);
std::string format_relator(const InducedSplitting& s, const Word& r);

struct GrushkoReport {
    std::vector<int> complexity;  // initial value, then after every F-move
    bool monotone = true;
    bool folded = false;
    int final_value = 0;
    FoldTrace trace;
};

// Throws std::invalid_argument when some edge group is nontrivial.
GrushkoReport grushko_check(std::shared_ptr<const GraphOfGroups> A, int v0, const std::vector<APath>& S,
                            const FoldOptions& opt = {});

}  // namespace gog
