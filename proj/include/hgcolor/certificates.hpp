#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hgcolor/hypergraph.hpp"
#include "hgcolor/recolor.hpp"

namespace hgcolor {

// Directed graph on the edges of the hypergraph: an arc (f1, f2) records
// that some vertex of f1 was recolored while f2 was the monochromatic
// edge it was charged to. Self-charges are not arcs.
struct BlameGraph {
    int edge_count = 0;
    std::vector<std::pair<int, int>> arcs;
    bool acyclic = true;
};

// Derives the blame graph of a trace and verifies the trace replays
// exactly against (h, input); inconsistencies raise IntegrityError.
BlameGraph build_blame_graph(const Hypergraph& h, const RunTrace& trace,
                             const RunInput& input);

// Rooted tree whose nodes carry hypergraph edges and whose tree edges
// carry a shared vertex of the two incident node labels.
struct HTree {
    struct Node {
        int edge = -1;           // hypergraph edge index
        int parent = -1;         // node index, -1 for the root
        int parent_vertex = -1;  // label of the tree edge to the parent
    };
    std::vector<Node> nodes;  // nodes[0] is the root; children follow parents

    int size() const { return static_cast<int>(nodes.size()); }
    std::vector<std::vector<int>> children() const;
};

// Raised when extraction is asked to run although some edge is both
// degenerate and dangerous under the input.
struct DegenerateDangerousError : std::runtime_error {
    int witness_edge;
    explicit DegenerateDangerousError(int e)
        : std::runtime_error("edge " + std::to_string(e) +
                             " is both degenerate and dangerous; extraction refused"),
          witness_edge(e) {}
};

// Builds the failure certificate of a non-proper run: the tree of blame
// paths rooted at failed_edge, node-labelled by the last edge of each path
// and edge-labelled by the charging vertex. Requires a Failed trace whose
// input admits no degenerate dangerous edge.
HTree extract_complete_htree(const Hypergraph& h, const RunTrace& trace,
                             const RunInput& input, int failed_edge,
                             long long node_budget = 10'000'000);

bool is_htree(const HTree& t, const Hypergraph& h);

// Distinct node labels pairwise intersect in at most one vertex and only
// when the nodes are adjacent in the tree.
bool is_disjoint(const HTree& t, const Hypergraph& h);

bool is_alternating(const HTree& t, const Hypergraph& h, const RunInput& input);
bool is_downward_complete(const HTree& t, const Hypergraph& h, const RunInput& input);
bool is_complete(const HTree& t, const Hypergraph& h, const RunInput& input);

// Exhaustive enumeration of all disjoint h-trees with `size` nodes whose
// label set touches v. Trees come out canonically ordered (children
// sorted by node label) and deduplicated. Desk scale only; exceeding the
// budget of visited label subsets raises ResourceError.
std::vector<HTree> enumerate_disjoint_htrees(const Hypergraph& h, int v, int size,
                                             long long budget = 10'000'000);

struct CycleSeq {
    std::vector<int> edges;
    int length() const { return static_cast<int>(edges.size()); }
};

// All simple cycles of the given length through v, counted as sequences
// that start at an edge containing v (both directions are distinct). In a
// simple cycle each edge meets exactly its two cyclic neighbours.
std::vector<CycleSeq> enumerate_simple_cycles(const Hypergraph& h, int v, int length,
                                              long long budget = 10'000'000);

enum class CycleVariant { Simple, AP };

// Bad-cycle classification for arithmetic-progression hypergraphs:
// type 0 is a 2-cycle over a big free intersection, types 1 and 2 split
// longer cycles by the size of the wrap-around intersection.
std::optional<int> bad_cycle_type(const CycleSeq& c, const Hypergraph& h,
                                  const RunInput& input);

// Simple variant: length >= 3, all edges dangerous, and the dominating
// colors of path-consecutive edges differ by exactly one mod r. The AP
// variant additionally excludes degenerate edges and admits 2-cycles of
// type 0.
bool is_bad_cycle(const CycleSeq& c, const Hypergraph& h, const RunInput& input,
                  CycleVariant variant);

}  // namespace hgcolor
