#ifndef ENPG_CONSTRUCTIONS_HPP
#define ENPG_CONSTRUCTIONS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "enpg/cobipartite.hpp"
#include "enpg/graph.hpp"
#include "enpg/grid.hpp"
#include "enpg/split.hpp"

namespace enpg {

/// C_k on labels "0".."k-1".
Graph cycle_graph(int k);

/// One-bend representation of C_k. k = 3 uses three identical unit-edge
/// paths, k = 4 and 5 are fixed layouts, k >= 6 wraps overlapping two- and
/// three-edge arcs around a rectangle.
Representation build_cycle_rep(int k);

struct TreeTrace {
    std::map<Label, BoundingBox> subtree_box;  // per subtree root, final frame
    std::map<Label, GridPoint> endpoint_corner;  // the box corner the root path ends on
    std::map<Label, GridPoint> bend_corner;      // the box corner it bends on
};

/// One-bend representation of a tree, built by the side-by-side subtree
/// composition. Every path has exactly one bend and the union of all paths is
/// a tree. Throws std::invalid_argument when t is not a tree.
Representation build_tree_rep(const Graph& t, const Label& root);
Representation build_tree_rep_traced(const Graph& t, const Label& root, TreeTrace& trace);

/// Deterministic splitmix64 stream; the same seed always yields the same
/// sequence of draws.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    /// uniform draw in [0, n)
    std::uint64_t below(std::uint64_t n);

private:
    std::uint64_t state_;
};

/// Uniform labeled tree on n vertices via a random Pruefer sequence.
Graph gen_random_tree(int n, std::uint64_t seed);
std::vector<int> pruefer_encode(const Graph& t);
Graph pruefer_decode(const std::vector<int>& seq);

enum class CobipModel { Difference, TwoComponents, Noise };

/// Random co-bipartite instance in compact form; sides "a0..", "b0..".
/// The difference model draws a level per vertex and joins i+j > t, so its
/// cross graph is always a difference graph. two-components lays two such
/// blocks side by side; noise joins each cross pair with probability 1/3.
CobipGraph gen_random_cobip_compact(int kn, int kn2, CobipModel model, std::uint64_t seed);
Graph gen_random_cobip(int kn, int kn2, CobipModel model, std::uint64_t seed);

/// Two random edge-disjoint Hamiltonian cycles whose union is simple,
/// 4-regular and diamond-free; retries until success. Throws
/// std::runtime_error after max_tries failures.
std::pair<Graph, HamDecomposition> gen_ham_decomposable_4regular(int n, std::uint64_t seed,
                                                                 int max_tries = 500);

}  // namespace enpg

#endif
