#ifndef ENPG_SPLIT_HPP
#define ENPG_SPLIT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "enpg/graph.hpp"
#include "enpg/grid.hpp"

namespace enpg {

/// Class of a stable-set vertex in a split witness. X names the side of e_K
/// the common segment sits on, the kind how the neighborhood reads off the
/// permutations: H and V are intervals of sigma_{X,H} / sigma_{X,V}, HH is a
/// prefix of sigma_{X,H} intersected with the opposite horizontal part, HV a
/// suffix of sigma_{X,H} joined with K_{X,V}.
enum class SClass { LH, LV, LHH, LHV, RH, RV, RHH, RHV };

const char* to_string(SClass c);
std::optional<SClass> sclass_from_string(const std::string& s);

struct SAssignment {
    SClass cls = SClass::LH;
    int lo = 1, hi = 0;  // 1-based inclusive rank range; lo = hi+1 encodes empty
};

/// Witness for the split characterization: the four clique parts with their
/// permutations and one classed range per stable vertex.
struct SplitWitness {
    // indexed [X][Y]: X 0 = L, 1 = R; Y 0 = H, 1 = V
    LabelSet k_parts[2][2];
    std::vector<Label> sigmas[2][2];
    std::map<Label, SAssignment> s_classes;
};

struct WitnessCheck {
    bool ok = false;
    std::string violated;  // "structure" or "i".."vi"
    std::vector<Label> offenders;
    std::string detail;
};

/// Tests the six witness conditions against g. Structural breaches (parts not
/// partitioning K, sigma not a permutation of its part, unknown classes or
/// ranges) throw std::invalid_argument; condition failures come back with the
/// first violated condition and the offending vertices.
WitnessCheck check_split_witness(const Graph& g, const SplitPartition& part,
                                 const SplitWitness& w);

/// Canonical representation for a checked witness. Every path gets at most
/// one bend and verify_rep(result, g, 1) holds. Witnesses are normalized
/// first (HV entries with an empty suffix become full V intervals; HV with an
/// empty vertical part becomes a plain interval). Two or more HV vertices
/// with non-empty suffixes on one side with a non-empty vertical part are not
/// realizable by this layout and are rejected.
Representation build_split_rep(const Graph& g, const SplitPartition& part,
                               const SplitWitness& w);

struct SizeFilterResult {
    bool pass = true;
    std::size_t d = 0;
    std::size_t count = 0;
    long long bound = 0;
};

/// Necessary condition |S_d| <= 2(|K|+2-d). Failure proves the graph is not
/// representable with one bend per path; passing is inconclusive. Expects a
/// twin-free and false-twin-free input.
SizeFilterResult split_size_filter(const Graph& g, const SplitPartition& part);

struct InequalityReport {
    bool ok = true;
    std::string which;
    std::size_t d = 0;
};

/// The five per-class counting bounds, evaluated from a witness's class
/// assignment (test support).
InequalityReport check_witness_inequalities(const Graph& g, const SplitPartition& part,
                                            const SplitWitness& w);

struct BruteForceOptions {
    std::size_t max_k = 8;
    std::size_t max_s = 12;
    bool force = false;
};

/// Exhaustive witness search over vertical-part choices, class assignments
/// and permutations, with interval-consistency pruning. A candidate is
/// accepted only after check_split_witness, build_split_rep and verify_rep
/// all succeed, so every returned witness is constructively valid.
/// Throws std::length_error when the instance exceeds the guard and force is
/// not set.
std::optional<SplitWitness> brute_force_split_recognize(const Graph& g,
                                                        const SplitPartition& part,
                                                        const BruteForceOptions& opts = {});

struct HamDecomposition {
    std::vector<Label> cycle_a;
    std::vector<Label> cycle_b;
};

/// G'' = S(K, S, E) from a 4-regular diamond-free graph: drop the smallest
/// vertex v, take K = V(G'), one stable vertex per remaining edge plus
/// s1..s4 with neighborhoods K - v_i. Annotated with K and S.
Graph reduce_ham_decomp_to_split(const Graph& g4);

/// Witness for the reduced graph from a Hamiltonian decomposition of g4:
/// sigma_{L,H} and sigma_{R,H} are the two paths left after removing v, edge
/// vertices become consecutive intervals, the four specials the length-(n-1)
/// intervals. Throws std::invalid_argument on an invalid decomposition.
SplitWitness ham_decomp_to_witness(const Graph& g4, const HamDecomposition& d);

/// The 34-vertex split graph whose stable set packs 23 degree-2 vertices:
/// consecutive pairs of the identity permutation and of
/// (0,5,10,4,9,3,8,2,7,1,6), plus {0,2},{0,3},{0,4}.
Graph fixture_non_b1_split();

}  // namespace enpg

#endif
