#ifndef ENPG_COBIPARTITE_HPP
#define ENPG_COBIPARTITE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "enpg/difference.hpp"
#include "enpg/graph.hpp"
#include "enpg/grid.hpp"

namespace enpg {

/// Co-bipartite graph in compact form: two cliques given as vertex lists and
/// the cross edges between them. Clique edges are implicit, so the size of
/// this object is O(|K| + |K'| + |E|) and all recognition steps stay linear.
struct CobipGraph {
    std::vector<Label> labels;            // index -> label
    std::vector<int> side;                // 0 = K, 1 = K'
    std::vector<std::vector<int>> cross;  // cross adjacency by index

    std::size_t size() const { return labels.size(); }
    std::size_t cross_edge_count() const;
    int index_of(const Label& v) const;  // -1 when absent

    static CobipGraph from_graph(const Graph& g, const CoBipartition& part);
    /// Materializes clique edges; only sensible at desk scale.
    Graph to_graph() const;
    BipartiteGraph cross_view() const;
};

/// (removed vertex, kept representative) pairs in vertex order.
using TwinMap = std::vector<std::pair<Label, Label>>;

/// Removes adjacent twins (same side with equal cross neighborhoods, or the
/// universal-vertex pair across sides), keeping the lexicographically
/// smallest label of each class.
std::pair<CobipGraph, TwinMap> remove_twins_compact(const CobipGraph& g);

struct ZedSet {
    std::vector<Label> vertices;  // at most 4
};

/// Induced subgraph of the co-bipartite graph on `verts` is a P4 or an
/// induced subgraph of one.
bool is_zed(const CobipGraph& g, const std::vector<Label>& verts);

/// Minimum superset of z that is a zed of G and a bimodule of G_B, or none.
/// Two closure rounds: vertices distinguishing the two same-side members are
/// forced in; any further growth leaves the zed shape.
std::optional<ZedSet> find_bimodule_zed(const CobipGraph& g, const ZedSet& z);

struct TypeICert {
    std::vector<Label> zed;
    DegreeLevels levels;  // of G_B minus the zed
};

struct TypeIIComponent {
    LabelSet k_part, k2_part;
    DegreeLevels levels;
};

struct TypeIICert {
    std::vector<TypeIIComponent> components;  // at most two
    std::vector<Label> isolated;              // at most one per side
};

enum class CobipKind { TypeI, TypeII, None };

struct TraceEntry {
    std::vector<Label> zed;
    std::string reason;  // e.g. "not a difference graph", "closure is not a zed"
    std::optional<TwoKTwo> twok2;
};

struct RecognizerStats {
    int difference_checks = 0;  // bounded by 5^5 per the recursion accounting
    int bimodule_calls = 0;
};

struct CobipOutcome {
    bool decision = false;
    CobipKind kind = CobipKind::None;
    CobipGraph reduced;   // twin-free graph the certificate refers to
    TwinMap twin_map;     // removed -> kept representative
    std::optional<TypeICert> type_i;
    std::optional<TypeIICert> type_ii;
    std::vector<TraceEntry> refutation; // populated on no
    RecognizerStats stats;
};

/// Decision procedure on the twin-free graph. `z` seeds the recursion.
std::optional<TypeICert> is_type_i(const CobipGraph& g, const ZedSet& z,
                                   RecognizerStats* stats = nullptr,
                                   std::vector<TraceEntry>* trace = nullptr);

std::optional<TypeIICert> is_type_ii(const CobipGraph& g,
                                     std::vector<TraceEntry>* trace = nullptr);

/// Full pipeline: twin reduction, Type II check, Type I recursion. When both
/// types hold the outcome reports Type II. Disconnected inputs reduce to the
/// trivial Type II case.
CobipOutcome recognize_cobipartite_compact(const CobipGraph& g);

/// Wrapper for materialized graphs: uses the supplied co-bipartition or finds
/// one, failing with std::invalid_argument when the graph is not co-bipartite.
CobipOutcome recognize_cobipartite(const Graph& g,
                                   std::optional<CoBipartition> part = std::nullopt);

/// Builders expect the reduced graph and the matching certificate and emit a
/// representation of it; build_cobip_rep lifts through the twin map so the
/// result covers the original vertex set.
Representation build_type_i_rep(const CobipGraph& reduced, const TypeICert& cert);
Representation build_type_ii_rep(const CobipGraph& reduced, const TypeIICert& cert);
Representation build_cobip_rep(const CobipOutcome& outcome);

/// Independent oracle: enumerates every vertex subset of size at most four
/// and tests the Type I conditions literally (definition-level bimodule and
/// 2K2 searches), plus the literal Type II component check. Guarded to 24
/// vertices.
CobipOutcome brute_force_zed_oracle(const CobipGraph& g, std::size_t guard = 24);

}  // namespace enpg

#endif
