#include "hgcolor/certificates.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <set>

namespace hgcolor {

namespace {

// Replays the trace against (h, input), checking every event: the charged
// edge must be monochromatic at that moment and the vertex its free,
// minimum-weight, not-yet-recolored member. Returns vertex -> charged
// edge (-1 when the vertex never moved).
std::vector<int> replay_blames(const Hypergraph& h, const RunTrace& trace,
                               const RunInput& input) {
    validate_input(h, input);
    const int nv = h.vertex_count();
    std::vector<int> colors = input.c0;
    std::vector<char> recolored(static_cast<size_t>(nv), 0);
    std::vector<int> blamed(static_cast<size_t>(nv), -1);

    for (size_t k = 0; k < trace.events.size(); ++k) {
        const TraceEvent& ev = trace.events[k];
        if (ev.step != static_cast<int>(k)) throw IntegrityError("trace steps out of order");
        if (ev.vertex < 0 || ev.vertex >= nv) throw IntegrityError("trace vertex out of range");
        if (ev.blamed_edge < 0 || ev.blamed_edge >= h.edge_count()) {
            throw IntegrityError("trace blames a nonexistent edge");
        }
        if (recolored[static_cast<size_t>(ev.vertex)]) {
            throw IntegrityError("trace recolors vertex " + std::to_string(ev.vertex) + " twice");
        }
        if (!input.is_free(ev.vertex)) {
            throw IntegrityError("trace recolors non-free vertex " + std::to_string(ev.vertex));
        }
        if (colors[static_cast<size_t>(ev.vertex)] != ev.old_color) {
            throw IntegrityError("trace old color mismatch at step " + std::to_string(k));
        }
        if (ev.new_color == ev.old_color || ev.new_color < 0) {
            throw IntegrityError("trace new color invalid at step " + std::to_string(k));
        }
        if (trace.algorithm == Algorithm::Recolor &&
            ev.new_color != (ev.old_color + 1) % input.r) {
            throw IntegrityError("trace new color is not old+1 mod r at step " +
                                 std::to_string(k));
        }
        const auto& e = h.edge(ev.blamed_edge);
        const int mono = colors[static_cast<size_t>(e[0])];
        for (int v : e) {
            if (colors[static_cast<size_t>(v)] != mono) {
                throw IntegrityError("blamed edge not monochromatic at step " +
                                     std::to_string(k));
            }
        }
        bool member = false;
        for (int v : e) {
            if (v == ev.vertex) member = true;
            if (!recolored[static_cast<size_t>(v)] && v != ev.vertex &&
                input.sigma[static_cast<size_t>(v)] <
                    input.sigma[static_cast<size_t>(ev.vertex)]) {
                throw IntegrityError("recolored vertex is not the first pending one at step " +
                                     std::to_string(k));
            }
        }
        if (!member) throw IntegrityError("recolored vertex lies outside the blamed edge");

        colors[static_cast<size_t>(ev.vertex)] = ev.new_color;
        recolored[static_cast<size_t>(ev.vertex)] = 1;
        blamed[static_cast<size_t>(ev.vertex)] = ev.blamed_edge;
    }

    if (colors != trace.final_coloring) {
        throw IntegrityError("trace final coloring does not match its events");
    }
    return blamed;
}

bool arcs_acyclic(int node_count, const std::vector<std::pair<int, int>>& arcs) {
    std::vector<std::vector<int>> out(static_cast<size_t>(node_count));
    std::vector<int> indegree(static_cast<size_t>(node_count), 0);
    for (const auto& [a, b] : arcs) {
        out[static_cast<size_t>(a)].push_back(b);
        indegree[static_cast<size_t>(b)]++;
    }
    std::vector<int> queue;
    for (int i = 0; i < node_count; ++i) {
        if (indegree[static_cast<size_t>(i)] == 0) queue.push_back(i);
    }
    int removed = 0;
    while (!queue.empty()) {
        const int i = queue.back();
        queue.pop_back();
        ++removed;
        for (int j : out[static_cast<size_t>(i)]) {
            if (--indegree[static_cast<size_t>(j)] == 0) queue.push_back(j);
        }
    }
    return removed == node_count;
}

}  // namespace

BlameGraph build_blame_graph(const Hypergraph& h, const RunTrace& trace,
                             const RunInput& input) {
    const std::vector<int> blamed = replay_blames(h, trace, input);
    const auto incidence = h.incidence();
    std::set<std::pair<int, int>> arcs;
    for (int v = 0; v < h.vertex_count(); ++v) {
        const int target = blamed[static_cast<size_t>(v)];
        if (target < 0) continue;
        for (int g : incidence[static_cast<size_t>(v)]) {
            if (g != target) arcs.insert({g, target});
        }
    }
    BlameGraph graph;
    graph.edge_count = h.edge_count();
    graph.arcs.assign(arcs.begin(), arcs.end());
    graph.acyclic = arcs_acyclic(graph.edge_count, graph.arcs);
    return graph;
}

std::vector<std::vector<int>> HTree::children() const {
    std::vector<std::vector<int>> result(nodes.size());
    for (size_t i = 1; i < nodes.size(); ++i) {
        result[static_cast<size_t>(nodes[i].parent)].push_back(static_cast<int>(i));
    }
    return result;
}

HTree extract_complete_htree(const Hypergraph& h, const RunTrace& trace,
                             const RunInput& input, int failed_edge,
                             long long node_budget) {
    if (trace.outcome != Outcome::Failed) {
        throw ValidationError("extraction needs a failed trace");
    }
    if (std::find(trace.monochromatic_edges.begin(), trace.monochromatic_edges.end(),
                  failed_edge) == trace.monochromatic_edges.end()) {
        throw ValidationError("edge " + std::to_string(failed_edge) +
                              " is not monochromatic in the final coloring");
    }
    for (int i = 0; i < h.edge_count(); ++i) {
        const EdgeClassification cls = classify_edge(h, i, input);
        if (cls.degenerate && cls.kind == EdgeKind::Dangerous) {
            throw DegenerateDangerousError(i);
        }
    }

    const std::vector<int> blamed = replay_blames(h, trace, input);

    // children of an edge g: the edges charged by recolored vertices of g,
    // each reached through its unique charging vertex
    auto edge_children = [&](int g) {
        std::vector<std::pair<int, int>> result;  // (child edge, via vertex)
        for (int v : h.edge(g)) {
            const int target = blamed[static_cast<size_t>(v)];
            if (target >= 0 && target != g) result.push_back({target, v});
        }
        std::sort(result.begin(), result.end());
        return result;
    };

    HTree tree;
    tree.nodes.push_back({failed_edge, -1, -1});
    // BFS over blame paths; acyclicity of the blame graph bounds the depth
    for (size_t i = 0; i < tree.nodes.size(); ++i) {
        std::set<int> on_path;  // edges along the path to the root
        for (int x = static_cast<int>(i); x != -1; x = tree.nodes[static_cast<size_t>(x)].parent) {
            on_path.insert(tree.nodes[static_cast<size_t>(x)].edge);
        }
        for (const auto& [child, via] : edge_children(tree.nodes[i].edge)) {
            if (on_path.count(child)) {
                throw IntegrityError("blame cycle encountered during extraction");
            }
            tree.nodes.push_back({child, static_cast<int>(i), via});
            if (static_cast<long long>(tree.nodes.size()) > node_budget) {
                throw ResourceError("certificate tree exceeded the node budget");
            }
        }
    }
    return tree;
}

bool is_htree(const HTree& t, const Hypergraph& h) {
    if (t.nodes.empty()) return false;
    if (t.nodes[0].parent != -1 || t.nodes[0].parent_vertex != -1) return false;
    for (size_t i = 0; i < t.nodes.size(); ++i) {
        const auto& node = t.nodes[i];
        if (node.edge < 0 || node.edge >= h.edge_count()) return false;
        if (i == 0) continue;
        if (node.parent < 0 || node.parent >= static_cast<int>(i)) return false;
        const int v = node.parent_vertex;
        if (v < 0 || v >= h.vertex_count()) return false;
        if (!h.edge_contains(node.edge, v)) return false;
        if (!h.edge_contains(t.nodes[static_cast<size_t>(node.parent)].edge, v)) return false;
    }
    return true;
}

bool is_disjoint(const HTree& t, const Hypergraph& h) {
    for (size_t i = 0; i < t.nodes.size(); ++i) {
        for (size_t j = i + 1; j < t.nodes.size(); ++j) {
            const int shared =
                intersection_size(h.edge(t.nodes[i].edge), h.edge(t.nodes[j].edge));
            if (shared > 1) return false;
            const bool adjacent = t.nodes[j].parent == static_cast<int>(i) ||
                                  t.nodes[i].parent == static_cast<int>(j);
            if (shared == 1 && !adjacent) return false;
        }
    }
    return true;
}

namespace {

// first vertex of the edge with the given initial color, by weight
std::optional<int> first_vertex_of_color(const Hypergraph& h, int edge,
                                         const RunInput& input, int color) {
    std::optional<int> best;
    for (int v : h.edge(edge)) {
        if (input.c0[static_cast<size_t>(v)] != color) continue;
        if (!best || input.sigma[static_cast<size_t>(v)] <
                         input.sigma[static_cast<size_t>(*best)]) {
            best = v;
        }
    }
    return best;
}

struct AlternatingCheck {
    const HTree& tree;
    const Hypergraph& h;
    const RunInput& input;
    std::vector<std::vector<int>> children;
    std::vector<EdgeClassification> cls;

    AlternatingCheck(const HTree& t, const Hypergraph& hg, const RunInput& in)
        : tree(t), h(hg), input(in), children(t.children()) {
        cls.reserve(t.nodes.size());
        for (const auto& node : t.nodes) cls.push_back(classify_edge(h, node.edge, in));
    }

    bool alternating(int x) const {
        const EdgeClassification& c = cls[static_cast<size_t>(x)];
        if (c.kind != EdgeKind::Dangerous || c.degenerate) return false;
        // a childless node is the one-node base case: no cover condition
        if (children[static_cast<size_t>(x)].empty()) return true;
        const int i = c.dominating_color;
        const int prev = (i + input.r - 1) % input.r;
        std::set<int> child_firsts;
        for (int y : children[static_cast<size_t>(x)]) {
            if (!alternating(y)) return false;
            const EdgeClassification& cy = cls[static_cast<size_t>(y)];
            if (cy.dominating_color != prev) return false;
            const auto first = first_vertex_of_color(h, tree.nodes[static_cast<size_t>(y)].edge,
                                                     input, prev);
            if (!first) return false;
            if (!h.edge_contains(tree.nodes[static_cast<size_t>(x)].edge, *first)) return false;
            child_firsts.insert(*first);
        }
        // every free prev-colored vertex of e(x) must be covered by a child
        for (int v : h.edge(tree.nodes[static_cast<size_t>(x)].edge)) {
            if (input.is_free(v) && input.c0[static_cast<size_t>(v)] == prev &&
                !child_firsts.count(v)) {
                return false;
            }
        }
        return true;
    }

    bool leaves_initially_monochromatic() const {
        for (size_t x = 0; x < tree.nodes.size(); ++x) {
            if (!children[x].empty()) continue;
            const int dom = cls[x].dominating_color;
            const int prev = (dom + input.r - 1) % input.r;
            for (int v : h.edge(tree.nodes[x].edge)) {
                if (input.is_free(v) && input.c0[static_cast<size_t>(v)] == prev) return false;
            }
        }
        return true;
    }

    bool root_without_free_dominating() const {
        const int dom = cls[0].dominating_color;
        for (int v : h.edge(tree.nodes[0].edge)) {
            if (input.is_free(v) && input.c0[static_cast<size_t>(v)] == dom) return false;
        }
        return true;
    }
};

}  // namespace

bool is_alternating(const HTree& t, const Hypergraph& h, const RunInput& input) {
    if (t.nodes.empty()) return false;
    return AlternatingCheck(t, h, input).alternating(0);
}

bool is_downward_complete(const HTree& t, const Hypergraph& h, const RunInput& input) {
    if (t.nodes.empty()) return false;
    AlternatingCheck check(t, h, input);
    return check.alternating(0) && check.leaves_initially_monochromatic();
}

bool is_complete(const HTree& t, const Hypergraph& h, const RunInput& input) {
    if (t.nodes.empty()) return false;
    AlternatingCheck check(t, h, input);
    return check.alternating(0) && check.leaves_initially_monochromatic() &&
           check.root_without_free_dominating();
}

std::vector<HTree> enumerate_disjoint_htrees(const Hypergraph& h, int v, int size,
                                             long long budget) {
    if (size < 1) throw ValidationError("h-tree size must be at least 1");
    if (v < 0 || v >= h.vertex_count()) throw ValidationError("vertex out of range");
    const int m = h.edge_count();
    std::vector<HTree> result;
    if (size > m) return result;

    // In a disjoint h-tree the label set S determines everything: pairs
    // sharing a vertex must be tree-adjacent, so the intersection graph of
    // S must itself be a tree, and each choice of root yields one h-tree.
    std::vector<int> subset(static_cast<size_t>(size));
    for (int i = 0; i < size; ++i) subset[static_cast<size_t>(i)] = i;
    long long visited = 0;

    auto process = [&](const std::vector<int>& s) {
        bool touches_v = false;
        for (int e : s) {
            if (h.edge_contains(e, v)) touches_v = true;
        }
        if (!touches_v) return;

        std::vector<std::pair<int, int>> links;  // positions in s sharing one vertex
        for (size_t a = 0; a < s.size(); ++a) {
            for (size_t b = a + 1; b < s.size(); ++b) {
                const int shared = intersection_size(h.edge(s[a]), h.edge(s[b]));
                if (shared >= 2) return;
                if (shared == 1) links.push_back({static_cast<int>(a), static_cast<int>(b)});
            }
        }
        if (static_cast<int>(links.size()) != size - 1) return;
        // connectivity: union-find over the candidate tree edges
        std::vector<int> parent(static_cast<size_t>(size));
        for (int i = 0; i < size; ++i) parent[static_cast<size_t>(i)] = i;
        std::function<int(int)> find = [&](int x) {
            while (parent[static_cast<size_t>(x)] != x) {
                parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
                x = parent[static_cast<size_t>(x)];
            }
            return x;
        };
        for (const auto& [a, b] : links) {
            const int ra = find(a), rb = find(b);
            if (ra == rb) return;  // cycle in the intersection graph
            parent[static_cast<size_t>(ra)] = rb;
        }

        std::vector<std::vector<int>> adjacency(static_cast<size_t>(size));
        for (const auto& [a, b] : links) {
            adjacency[static_cast<size_t>(a)].push_back(b);
            adjacency[static_cast<size_t>(b)].push_back(a);
        }
        for (int root = 0; root < size; ++root) {
            HTree tree;
            tree.nodes.push_back({s[static_cast<size_t>(root)], -1, -1});
            std::vector<int> position_of(static_cast<size_t>(size), -1);
            std::vector<int> frontier{root};
            position_of[static_cast<size_t>(root)] = 0;
            while (!frontier.empty()) {
                const int x = frontier.front();
                frontier.erase(frontier.begin());
                auto neighbours = adjacency[static_cast<size_t>(x)];
                std::sort(neighbours.begin(), neighbours.end(),
                          [&](int a, int b) { return s[static_cast<size_t>(a)] < s[static_cast<size_t>(b)]; });
                for (int y : neighbours) {
                    if (position_of[static_cast<size_t>(y)] != -1) continue;
                    std::vector<int> common;
                    std::set_intersection(h.edge(s[static_cast<size_t>(x)]).begin(),
                                          h.edge(s[static_cast<size_t>(x)]).end(),
                                          h.edge(s[static_cast<size_t>(y)]).begin(),
                                          h.edge(s[static_cast<size_t>(y)]).end(),
                                          std::back_inserter(common));
                    tree.nodes.push_back({s[static_cast<size_t>(y)],
                                          position_of[static_cast<size_t>(x)], common[0]});
                    position_of[static_cast<size_t>(y)] =
                        static_cast<int>(tree.nodes.size()) - 1;
                    frontier.push_back(y);
                }
            }
            result.push_back(std::move(tree));
        }
    };

    // lexicographic walk over all size-subsets of the edge set
    for (;;) {
        if (++visited > budget) {
            throw ResourceError("h-tree enumeration exceeded its subset budget");
        }
        process(subset);
        int i = size - 1;
        while (i >= 0 && subset[static_cast<size_t>(i)] == m - size + i) --i;
        if (i < 0) break;
        subset[static_cast<size_t>(i)]++;
        for (int j = i + 1; j < size; ++j) {
            subset[static_cast<size_t>(j)] = subset[static_cast<size_t>(j - 1)] + 1;
        }
    }
    return result;
}

std::vector<CycleSeq> enumerate_simple_cycles(const Hypergraph& h, int v, int length,
                                              long long budget) {
    if (length < 2) throw ValidationError("cycle length must be at least 2");
    if (v < 0 || v >= h.vertex_count()) throw ValidationError("vertex out of range");
    const int m = h.edge_count();
    std::vector<CycleSeq> result;
    long long visited = 0;

    std::vector<int> sequence;
    std::vector<char> used(static_cast<size_t>(m), 0);

    auto intersects = [&](int a, int b) {
        return intersection_size(h.edge(a), h.edge(b)) > 0;
    };

    std::function<void()> extend = [&]() {
        if (++visited > budget) {
            throw ResourceError("cycle enumeration exceeded its budget");
        }
        const int k = static_cast<int>(sequence.size());
        if (k == length) {
            if (length > 2 && !intersects(sequence.back(), sequence.front())) return;
            result.push_back({sequence});
            return;
        }
        for (int e = 0; e < m; ++e) {
            if (used[static_cast<size_t>(e)]) continue;
            if (!intersects(sequence.back(), e)) continue;
            // a simple cycle meets non-neighbours in nothing
            bool ok = true;
            const bool closing = k == length - 1;
            for (int j = 0; j < k - 1 && ok; ++j) {
                if (j == 0 && closing) continue;  // wrap-around neighbour
                if (intersects(sequence[static_cast<size_t>(j)], e)) ok = false;
            }
            if (!ok) continue;
            used[static_cast<size_t>(e)] = 1;
            sequence.push_back(e);
            extend();
            sequence.pop_back();
            used[static_cast<size_t>(e)] = 0;
        }
    };

    for (int e0 = 0; e0 < m; ++e0) {
        if (!h.edge_contains(e0, v)) continue;
        used[static_cast<size_t>(e0)] = 1;
        sequence.push_back(e0);
        extend();
        sequence.pop_back();
        used[static_cast<size_t>(e0)] = 0;
    }
    return result;
}

namespace {

bool consecutive_dominating_ok(const std::vector<EdgeClassification>& cls, int r) {
    for (size_t j = 0; j + 1 < cls.size(); ++j) {
        const int a = cls[j].dominating_color;
        const int b = cls[j + 1].dominating_color;
        const int diff = ((a - b) % r + r) % r;
        if (diff != 1 && diff != r - 1) return false;
    }
    return true;
}

}  // namespace

std::optional<int> bad_cycle_type(const CycleSeq& c, const Hypergraph& h,
                                  const RunInput& input) {
    const int k = c.length();
    if (k < 2) return std::nullopt;
    std::vector<EdgeClassification> cls;
    cls.reserve(c.edges.size());
    for (int e : c.edges) cls.push_back(classify_edge(h, e, input));
    for (const auto& cl : cls) {
        if (cl.kind != EdgeKind::Dangerous || cl.degenerate) return std::nullopt;
    }
    if (!consecutive_dominating_ok(cls, input.r)) return std::nullopt;

    if (k == 2) {
        const auto& e0 = h.edge(c.edges[0]);
        const auto& e1 = h.edge(c.edges[1]);
        if (intersection_size(e0, e1) < 2) return std::nullopt;
        for (int v : e0) {
            if (h.edge_contains(c.edges[1], v) && !input.is_free(v)) return std::nullopt;
        }
        return 0;
    }
    for (size_t j = 0; j + 1 < c.edges.size(); ++j) {
        if (intersection_size(h.edge(c.edges[j]), h.edge(c.edges[j + 1])) != 1) {
            return std::nullopt;
        }
    }
    const int wrap = intersection_size(h.edge(c.edges.front()), h.edge(c.edges.back()));
    return 2 * wrap <= h.n() ? 1 : 2;
}

bool is_bad_cycle(const CycleSeq& c, const Hypergraph& h, const RunInput& input,
                  CycleVariant variant) {
    if (variant == CycleVariant::AP) return bad_cycle_type(c, h, input).has_value();
    const int k = c.length();
    if (k < 3) return false;
    std::vector<EdgeClassification> cls;
    cls.reserve(c.edges.size());
    for (int e : c.edges) cls.push_back(classify_edge(h, e, input));
    for (const auto& cl : cls) {
        if (cl.kind != EdgeKind::Dangerous) return false;
    }
    return consecutive_dominating_ok(cls, input.r);
}

}  // namespace hgcolor
