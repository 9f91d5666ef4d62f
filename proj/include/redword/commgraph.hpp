// Commutation classes of reduced words, the class graph with its BFS metrics,
// and the word-level graph kept as an independent cross-check.
//
// A class is identified by its signature: one bit per 321-triple of w,
// recording which of the triple's two extreme inversions happens later along
// any word of the class. Signatures are constant on commutation classes, so
// class deduplication is a hash lookup.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "redword/permutation.hpp"
#include "redword/signature.hpp"
#include "redword/words.hpp"

namespace redword {

/// Per-permutation context shared by signature computations.
class GammaContext {
public:
    explicit GammaContext(Permutation w);

    const Permutation& perm() const { return w_; }
    const std::vector<Triple321>& triples() const { return triples_; }

    /// Signature of a reduced word: bit k is 1 iff, for the k-th triple
    /// (x,y,z), inversion (y,x) is created after inversion (z,y).
    BitSignature signature_of(const Word& a) const;

private:
    Permutation w_;
    int len_;
    std::vector<Triple321> triples_;
};

BitSignature gamma(const Permutation& w, const Word& a);

/// Number of triples on which the signatures of a and b disagree.
int t_distance(const Permutation& w, const Word& a, const Word& b);

struct CommClass {
    BitSignature signature;
    Word representative;   // lexicographically least member
    std::uint64_t size = 0;
    bool size_exact = true;
    int rank = 0;          // popcount of the signature
};

int rank(const CommClass& c);

/// Closure of a under single commutations. The signature is exact even when
/// the closure hits the word cap; size and representative are then partial.
CommClass commutation_class(const Permutation& w, const Word& a,
                            std::uint64_t word_cap = 1'000'000);

struct BuildOptions {
    std::uint64_t word_cap = 1'000'000;   // per-class closure size cap
    std::uint64_t class_cap = 100'000;    // total class count cap
    int threads = 0;                      // 0 = library default
};

/// The class graph: vertices are commutation classes, edges single braid
/// rewrites between classes. Indices follow breadth-first discovery from the
/// class of a_min, ties within a level broken by representative word order.
struct CommGraph {
    Permutation w = Permutation::identity(1);
    std::vector<Triple321> triples;
    std::vector<CommClass> classes;
    std::vector<std::pair<int, int>> edges;     // i < j, sorted
    std::vector<std::vector<int>> adjacency;
    bool partial = false;
    std::optional<std::vector<int>> eccentricities;  // metrics cache

    /// Index of the class with the given signature, -1 if absent.
    int index_of(const BitSignature& sig) const;
};

CommGraph build_graph(const Permutation& w, const BuildOptions& opts = {});

/// Unweighted distances from one class to all others. Refuses partial graphs.
std::vector<int> bfs_distances(const CommGraph& g, int source);

struct GraphMetrics {
    int diameter = 0;
    int radius = 0;
    std::vector<int> eccentricities;
};

/// Eccentricity per class via all-source BFS; diameter and radius are the
/// extremes. Results are cached on the graph. Refuses partial graphs.
GraphMetrics metrics(CommGraph& g, int threads = 0);

std::vector<int> eccentricities_serial(const std::vector<std::vector<int>>& adjacency);
std::vector<int> eccentricities_parallel(const std::vector<std::vector<int>>& adjacency,
                                         int threads = 0);

struct PosetReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Checks the graded structure: unique all-zero and all-one classes at ranks 0
/// and |triples|, every edge changing rank by exactly one, and every
/// non-extremal class having neighbors one rank below and one above.
PosetReport poset_check(const CommGraph& g);

/// Word-level graph: vertices are all reduced words, edges single commutations
/// or single braid rewrites. Kept separate from the class machinery so it can
/// serve as a contraction cross-check.
struct WordGraph {
    Permutation w = Permutation::identity(1);
    std::vector<Word> words;  // lexicographic order
    std::vector<std::pair<int, int>> commutation_edges;
    std::vector<std::pair<int, int>> braid_edges;
    bool truncated = false;
};

WordGraph build_word_graph(const Permutation& w, std::uint64_t cap);

/// Quotient of the word graph by its commutation edges. Components are found
/// by BFS over commutation edges only; braid edges project to quotient edges.
struct ContractedGraph {
    std::vector<int> component_of;            // per word index
    std::vector<Word> component_rep;          // lex-least word per component
    std::vector<std::pair<int, int>> edges;   // i < j, sorted, deduped
    int self_loops = 0;
};

ContractedGraph contract_commutation_edges(const WordGraph& g);

bool is_bipartite(int vertex_count, const std::vector<std::pair<int, int>>& edges);

/// JSON schema: {"w","triples","classes","edges","diameter","radius"} with
/// signatures as 0/1 strings in lex triple order.
nlohmann::json graph_to_json(CommGraph& g);
CommGraph graph_from_json(const nlohmann::json& j);

/// DOT output with classes clustered by rank; hasse orients edges from lower
/// to higher rank.
std::string graph_to_dot(const CommGraph& g, bool hasse = false);

}  // namespace redword
