#ifndef ENPG_GRAPH_HPP
#define ENPG_GRAPH_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace enpg {

using Label = std::string;
using LabelSet = std::set<Label>;

/// Simple undirected graph over opaque string labels. Adjacency is kept
/// symmetric and loop-free; vertices are iterated in label order so every
/// operation downstream is deterministic.
class Graph {
public:
    Graph() = default;

    void add_vertex(const Label& v);
    /// Adds both endpoints if missing. Throws std::invalid_argument on loops.
    void add_edge(const Label& u, const Label& v);

    bool has_vertex(const Label& v) const { return adj_.count(v) > 0; }
    bool has_edge(const Label& u, const Label& v) const;

    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const;

    /// Labels in sorted order.
    std::vector<Label> vertices() const;
    /// Edges as (u, v) with u < v, sorted.
    std::vector<std::pair<Label, Label>> edges() const;

    const LabelSet& neighbors(const Label& v) const;
    std::size_t degree(const Label& v) const { return neighbors(v).size(); }

    Graph induced(const LabelSet& verts) const;

    /// Named vertex sets carried through files and pipelines (clique sides,
    /// stable sets). Not consulted by algorithms unless stated.
    void set_annotation(const std::string& name, const LabelSet& verts);
    const LabelSet* annotation(const std::string& name) const;
    const std::map<std::string, LabelSet>& annotations() const { return annotations_; }

    bool operator==(const Graph& other) const {
        return adj_ == other.adj_;
    }

private:
    std::map<Label, LabelSet> adj_;
    std::map<std::string, LabelSet> annotations_;
};

struct CoBipartition {
    LabelSet K;
    LabelSet K_prime;
};

struct SplitPartition {
    LabelSet K;  // clique, maximal after normalization
    LabelSet S;  // stable set
};

std::vector<Graph> connected_components(const Graph& g);

/// Removes adjacent twins until none remain, keeping the lexicographically
/// smallest member of each twin class. Second result maps every removed
/// vertex to its kept representative.
std::pair<Graph, std::map<Label, Label>> remove_twins(const Graph& g);

/// Two-colors the complement. Some partition is returned iff the complement
/// is bipartite; the lexicographically smallest vertex of every complement
/// component lands in K, and K' is forced non-empty whenever |V| >= 2.
std::optional<CoBipartition> find_cobipartition(const Graph& g);

/// Degree-sequence split recognition. K is maximal: no vertex of S is
/// adjacent to all of K.
std::optional<SplitPartition> find_split_partition(const Graph& g);

/// One vertex per edge of g, labeled "e:u-v" with u < v.
Graph line_graph(const Graph& g);

struct RegularityCheck {
    bool ok = false;
    // on failure: either a vertex of wrong degree, or 4 vertices inducing a diamond
    std::optional<Label> bad_degree_vertex;
    std::vector<Label> diamond;
};

/// True iff every vertex has degree d and no 4 vertices induce K4 minus an
/// edge.
RegularityCheck check_regular_diamond_free(const Graph& g, std::size_t d);

Graph complement_graph(const Graph& g);

}  // namespace enpg

#endif
