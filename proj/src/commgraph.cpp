#include "redword/commgraph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace redword {

namespace {

int resolve_threads(int threads) {
#ifdef _OPENMP
    return threads > 0 ? threads : omp_get_max_threads();
#else
    (void)threads;
    return 1;
#endif
}

std::string encode_word(const Word& a) {
    std::string s;
    s.reserve(a.letters.size());
    for (const int x : a.letters) s.push_back(static_cast<char>(x));
    return s;
}

Word decode_word(int n, const std::string& s) {
    std::vector<int> letters;
    letters.reserve(s.size());
    for (const char c : s) letters.push_back(static_cast<int>(c));
    return Word(n, std::move(letters));
}

}  // namespace

GammaContext::GammaContext(Permutation w)
    : w_(std::move(w)), len_(length(w_)), triples_(triples_321(w_)) {}

BitSignature GammaContext::signature_of(const Word& a) const {
    const int n = w_.size();
    if (a.n != n || a.size() != len_) {
        throw std::invalid_argument("gamma: word is not reduced for w");
    }
    // Replay the word, recording the step at which each inversion appears.
    std::vector<int> cur(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) cur[static_cast<size_t>(i)] = i + 1;
    std::vector<int> label(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
    int step = 0;
    for (const int letter : a.letters) {
        ++step;
        if (letter < 1 || letter >= n) {
            throw std::invalid_argument("gamma: letter out of range");
        }
        int& lo = cur[static_cast<size_t>(letter) - 1];
        int& hi = cur[static_cast<size_t>(letter)];
        if (lo > hi) {
            throw std::invalid_argument("gamma: word is not reduced for w");
        }
        label[static_cast<size_t>(hi - 1) * static_cast<size_t>(n) +
              static_cast<size_t>(lo - 1)] = step;
        std::swap(lo, hi);
    }
    for (int i = 0; i < n; ++i) {
        if (cur[static_cast<size_t>(i)] != w_(i + 1)) {
            throw std::invalid_argument("gamma: word is not reduced for w");
        }
    }
    BitSignature sig(static_cast<int>(triples_.size()));
    for (size_t k = 0; k < triples_.size(); ++k) {
        const auto& [x, y, z] = triples_[k];
        const int lab_yx = label[static_cast<size_t>(y - 1) * static_cast<size_t>(n) +
                                 static_cast<size_t>(x - 1)];
        const int lab_zy = label[static_cast<size_t>(z - 1) * static_cast<size_t>(n) +
                                 static_cast<size_t>(y - 1)];
        sig.set(static_cast<int>(k), lab_yx > lab_zy);
    }
    return sig;
}

BitSignature gamma(const Permutation& w, const Word& a) {
    return GammaContext(w).signature_of(a);
}

int t_distance(const Permutation& w, const Word& a, const Word& b) {
    const GammaContext ctx(w);
    return ctx.signature_of(a).hamming(ctx.signature_of(b));
}

int rank(const CommClass& c) { return c.rank; }

namespace {

struct Closure {
    std::vector<std::string> members;  // visit order
    std::string representative;
    bool truncated = false;
};

// Breadth-first closure of a word under single commutations.
Closure commutation_closure(const std::string& seed, std::uint64_t word_cap) {
    Closure out;
    std::unordered_set<std::string> visited{seed};
    std::deque<std::string> queue{seed};
    out.representative = seed;
    while (!queue.empty()) {
        const std::string s = std::move(queue.front());
        queue.pop_front();
        if (s < out.representative) out.representative = s;
        out.members.push_back(s);
        const auto& word = out.members.back();
        for (size_t i = 0; i + 1 < word.size(); ++i) {
            const int d = word[i] - word[i + 1];
            if (d >= 2 || d <= -2) {
                std::string t = word;
                std::swap(t[i], t[i + 1]);
                if (visited.insert(t).second) {
                    if (visited.size() > word_cap) {
                        out.truncated = true;
                        return out;
                    }
                    queue.push_back(std::move(t));
                }
            }
        }
    }
    return out;
}

struct Expansion {
    std::string representative;
    std::uint64_t size = 0;
    bool truncated = false;
    // One braid-reachable neighbor word per distinct neighbor signature.
    std::vector<std::pair<BitSignature, std::string>> targets;
};

Expansion expand_class(const GammaContext& ctx, const std::string& seed,
                       std::uint64_t word_cap) {
    Expansion exp;
    Closure closure = commutation_closure(seed, word_cap);
    exp.representative = closure.representative;
    exp.size = closure.members.size();
    exp.truncated = closure.truncated;
    const int n = ctx.perm().size();
    std::unordered_map<BitSignature, std::string, BitSignatureHash> targets;
    for (const auto& word : closure.members) {
        for (size_t j = 1; j + 1 < word.size(); ++j) {
            const int left = word[j - 1];
            const int mid = word[j];
            const int right = word[j + 1];
            if (left != right || (mid - left != 1 && left - mid != 1)) continue;
            std::string t = word;
            t[j - 1] = static_cast<char>(mid);
            t[j] = static_cast<char>(left);
            t[j + 1] = static_cast<char>(mid);
            BitSignature sig = ctx.signature_of(decode_word(n, t));
            targets.try_emplace(std::move(sig), std::move(t));
        }
    }
    exp.targets.assign(targets.begin(), targets.end());
    return exp;
}

}  // namespace

CommClass commutation_class(const Permutation& w, const Word& a, std::uint64_t word_cap) {
    const GammaContext ctx(w);
    BitSignature sig = ctx.signature_of(a);  // throws when a is not reduced
    Closure closure = commutation_closure(encode_word(a), word_cap);
    CommClass c;
    c.rank = sig.popcount();
    c.signature = std::move(sig);
    c.representative = decode_word(w.size(), closure.representative);
    c.size = closure.members.size();
    c.size_exact = !closure.truncated;
    return c;
}

int CommGraph::index_of(const BitSignature& sig) const {
    for (size_t i = 0; i < classes.size(); ++i) {
        if (classes[i].signature == sig) return static_cast<int>(i);
    }
    return -1;
}

CommGraph build_graph(const Permutation& w, const BuildOptions& opts) {
    const GammaContext ctx(w);
    CommGraph g;
    g.w = w;
    g.triples = ctx.triples();
    const int threads = resolve_threads(opts.threads);
    const int n = w.size();

    const std::string seed = encode_word(a_min(w));
    BitSignature seed_sig = ctx.signature_of(decode_word(n, seed));
    Expansion seed_exp = expand_class(ctx, seed, opts.word_cap);

    std::unordered_map<BitSignature, int, BitSignatureHash> index;
    std::set<std::pair<int, int>> edge_set;
    bool partial = seed_exp.truncated;

    g.classes.push_back(CommClass{seed_sig, decode_word(n, seed_exp.representative),
                                  seed_exp.size, !seed_exp.truncated, seed_sig.popcount()});
    index.emplace(seed_sig, 0);

    std::vector<std::pair<int, Expansion>> frontier;
    frontier.emplace_back(0, std::move(seed_exp));

    while (!frontier.empty() && !partial) {
        std::vector<std::pair<BitSignature, std::string>> fresh;
        std::unordered_set<BitSignature, BitSignatureHash> fresh_seen;
        std::vector<std::pair<int, BitSignature>> pending_edges;
        for (const auto& [idx, exp] : frontier) {
            for (const auto& [sig, target] : exp.targets) {
                const auto it = index.find(sig);
                if (it != index.end()) {
                    edge_set.insert(std::minmax(idx, it->second));
                } else {
                    if (fresh_seen.insert(sig).second) fresh.emplace_back(sig, target);
                    pending_edges.emplace_back(idx, sig);
                }
            }
        }
        if (fresh.empty()) break;
        if (g.classes.size() + fresh.size() > opts.class_cap) {
            partial = true;
            break;
        }
        std::sort(fresh.begin(), fresh.end(), [](const auto& a, const auto& b) {
            return a.second < b.second;
        });

        std::vector<Expansion> exps(fresh.size());
#ifdef _OPENMP
#pragma omp parallel for num_threads(threads) schedule(dynamic)
#endif
        for (std::int64_t k = 0; k < static_cast<std::int64_t>(fresh.size()); ++k) {
            exps[static_cast<size_t>(k)] =
                expand_class(ctx, fresh[static_cast<size_t>(k)].second, opts.word_cap);
        }

        std::vector<size_t> order(fresh.size());
        for (size_t k = 0; k < order.size(); ++k) order[k] = k;
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            return exps[a].representative < exps[b].representative;
        });

        std::vector<std::pair<int, Expansion>> next;
        next.reserve(order.size());
        for (const size_t k : order) {
            const int idx = static_cast<int>(g.classes.size());
            const BitSignature& sig = fresh[k].first;
            partial = partial || exps[k].truncated;
            g.classes.push_back(CommClass{sig, decode_word(n, exps[k].representative),
                                          exps[k].size, !exps[k].truncated, sig.popcount()});
            index.emplace(sig, idx);
            next.emplace_back(idx, std::move(exps[k]));
        }
        for (const auto& [src, sig] : pending_edges) {
            edge_set.insert(std::minmax(src, index.at(sig)));
        }
        frontier = std::move(next);
    }

    g.partial = partial;
    g.edges.assign(edge_set.begin(), edge_set.end());
    g.adjacency.assign(g.classes.size(), {});
    for (const auto& [i, j] : g.edges) {
        g.adjacency[static_cast<size_t>(i)].push_back(j);
        g.adjacency[static_cast<size_t>(j)].push_back(i);
    }
    return g;
}

namespace {

std::vector<int> bfs_from(const std::vector<std::vector<int>>& adjacency, int source) {
    std::vector<int> dist(adjacency.size(), -1);
    std::deque<int> queue{source};
    dist[static_cast<size_t>(source)] = 0;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (const int u : adjacency[static_cast<size_t>(v)]) {
            if (dist[static_cast<size_t>(u)] < 0) {
                dist[static_cast<size_t>(u)] = dist[static_cast<size_t>(v)] + 1;
                queue.push_back(u);
            }
        }
    }
    return dist;
}

int eccentricity_from(const std::vector<std::vector<int>>& adjacency, int source) {
    const std::vector<int> dist = bfs_from(adjacency, source);
    int ecc = 0;
    for (const int d : dist) {
        if (d < 0) throw std::runtime_error("eccentricity: graph is disconnected");
        ecc = std::max(ecc, d);
    }
    return ecc;
}

}  // namespace

std::vector<int> bfs_distances(const CommGraph& g, int source) {
    if (g.partial) {
        throw std::invalid_argument("bfs_distances: refusing a partial graph");
    }
    if (source < 0 || source >= static_cast<int>(g.classes.size())) {
        throw std::invalid_argument("bfs_distances: bad source index");
    }
    return bfs_from(g.adjacency, source);
}

std::vector<int> eccentricities_serial(const std::vector<std::vector<int>>& adjacency) {
    std::vector<int> out(adjacency.size(), 0);
    for (size_t s = 0; s < adjacency.size(); ++s) {
        out[s] = eccentricity_from(adjacency, static_cast<int>(s));
    }
    return out;
}

std::vector<int> eccentricities_parallel(const std::vector<std::vector<int>>& adjacency,
                                         int threads) {
    std::vector<int> out(adjacency.size(), 0);
    const int t = resolve_threads(threads);
#ifdef _OPENMP
#pragma omp parallel for num_threads(t) schedule(dynamic, 16)
#else
    (void)t;
#endif
    for (std::int64_t s = 0; s < static_cast<std::int64_t>(adjacency.size()); ++s) {
        out[static_cast<size_t>(s)] = eccentricity_from(adjacency, static_cast<int>(s));
    }
    return out;
}

GraphMetrics metrics(CommGraph& g, int threads) {
    if (g.partial) {
        throw std::invalid_argument("metrics: refusing a partial graph");
    }
    if (!g.eccentricities) {
        g.eccentricities = eccentricities_parallel(g.adjacency, threads);
    }
    GraphMetrics m;
    m.eccentricities = *g.eccentricities;
    m.diameter = 0;
    m.radius = m.eccentricities.empty() ? 0 : m.eccentricities.front();
    for (const int e : m.eccentricities) {
        m.diameter = std::max(m.diameter, e);
        m.radius = std::min(m.radius, e);
    }
    return m;
}

PosetReport poset_check(const CommGraph& g) {
    PosetReport report;
    const auto fail = [&](std::string msg) {
        report.ok = false;
        report.violations.push_back(std::move(msg));
    };
    if (g.partial) {
        fail("graph is partial");
        return report;
    }
    const int top = static_cast<int>(g.triples.size());
    int zero_count = 0;
    int one_count = 0;
    for (size_t i = 0; i < g.classes.size(); ++i) {
        const auto& c = g.classes[i];
        if (c.rank != c.signature.popcount()) {
            fail("class " + std::to_string(i) + ": rank does not match signature");
        }
        if (c.signature.all_zero()) {
            ++zero_count;
            if (c.rank != 0) fail("class " + std::to_string(i) + ": all-zero class has rank > 0");
        }
        if (c.signature.all_one()) {
            ++one_count;
            if (c.rank != top) {
                fail("class " + std::to_string(i) + ": all-one class is not at top rank");
            }
        }
    }
    if (zero_count != 1) fail("expected exactly one all-zero class, found " +
                              std::to_string(zero_count));
    if (one_count != 1) fail("expected exactly one all-one class, found " +
                             std::to_string(one_count));
    for (const auto& [i, j] : g.edges) {
        const int di = g.classes[static_cast<size_t>(i)].rank;
        const int dj = g.classes[static_cast<size_t>(j)].rank;
        if (di - dj != 1 && dj - di != 1) {
            fail("edge (" + std::to_string(i) + "," + std::to_string(j) +
                 ") changes rank by " + std::to_string(dj - di));
        }
    }
    for (size_t i = 0; i < g.classes.size(); ++i) {
        const int r = g.classes[i].rank;
        bool has_lower = false;
        bool has_upper = false;
        for (const int u : g.adjacency[i]) {
            const int ru = g.classes[static_cast<size_t>(u)].rank;
            if (ru == r - 1) has_lower = true;
            if (ru == r + 1) has_upper = true;
        }
        if (r > 0 && !has_lower) {
            fail("class " + std::to_string(i) + " at rank " + std::to_string(r) +
                 " has no lower cover");
        }
        if (r < top && !has_upper) {
            fail("class " + std::to_string(i) + " at rank " + std::to_string(r) +
                 " has no upper cover");
        }
    }
    return report;
}

WordGraph build_word_graph(const Permutation& w, std::uint64_t cap) {
    WordGraph g;
    g.w = w;
    EnumStatus status;
    g.words = reduced_words(w, cap, &status);
    if (status == EnumStatus::truncated) {
        g.truncated = true;
        g.words.clear();
        return g;
    }
    std::unordered_map<std::string, int> index;
    index.reserve(g.words.size() * 2);
    for (size_t i = 0; i < g.words.size(); ++i) {
        index.emplace(encode_word(g.words[i]), static_cast<int>(i));
    }
    for (size_t i = 0; i < g.words.size(); ++i) {
        const Word& a = g.words[i];
        for (const int pos : commutation_moves(a)) {
            const int j = index.at(encode_word(apply_commutation(a, pos)));
            if (j > static_cast<int>(i)) g.commutation_edges.emplace_back(static_cast<int>(i), j);
        }
        for (const int center : braid_moves(a)) {
            const int j = index.at(encode_word(apply_braid(a, center)));
            if (j > static_cast<int>(i)) g.braid_edges.emplace_back(static_cast<int>(i), j);
        }
    }
    return g;
}

ContractedGraph contract_commutation_edges(const WordGraph& g) {
    if (g.truncated) {
        throw std::invalid_argument("contract: refusing a truncated word graph");
    }
    ContractedGraph out;
    const size_t nwords = g.words.size();
    std::vector<std::vector<int>> comm_adj(nwords);
    for (const auto& [i, j] : g.commutation_edges) {
        comm_adj[static_cast<size_t>(i)].push_back(j);
        comm_adj[static_cast<size_t>(j)].push_back(i);
    }
    out.component_of.assign(nwords, -1);
    for (size_t i = 0; i < nwords; ++i) {
        if (out.component_of[i] >= 0) continue;
        const int comp = static_cast<int>(out.component_rep.size());
        // Words are listed lexicographically, so the first one found is the
        // least member of its component.
        out.component_rep.push_back(g.words[i]);
        std::deque<int> queue{static_cast<int>(i)};
        out.component_of[i] = comp;
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            for (const int u : comm_adj[static_cast<size_t>(v)]) {
                if (out.component_of[static_cast<size_t>(u)] < 0) {
                    out.component_of[static_cast<size_t>(u)] = comp;
                    queue.push_back(u);
                }
            }
        }
    }
    std::set<std::pair<int, int>> edges;
    for (const auto& [i, j] : g.braid_edges) {
        const int ci = out.component_of[static_cast<size_t>(i)];
        const int cj = out.component_of[static_cast<size_t>(j)];
        if (ci == cj) {
            ++out.self_loops;
        } else {
            edges.insert(std::minmax(ci, cj));
        }
    }
    out.edges.assign(edges.begin(), edges.end());
    return out;
}

bool is_bipartite(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(static_cast<size_t>(vertex_count));
    for (const auto& [i, j] : edges) {
        adj[static_cast<size_t>(i)].push_back(j);
        adj[static_cast<size_t>(j)].push_back(i);
    }
    std::vector<int> color(static_cast<size_t>(vertex_count), -1);
    for (int s = 0; s < vertex_count; ++s) {
        if (color[static_cast<size_t>(s)] >= 0) continue;
        color[static_cast<size_t>(s)] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            for (const int u : adj[static_cast<size_t>(v)]) {
                if (color[static_cast<size_t>(u)] < 0) {
                    color[static_cast<size_t>(u)] = 1 - color[static_cast<size_t>(v)];
                    queue.push_back(u);
                } else if (color[static_cast<size_t>(u)] == color[static_cast<size_t>(v)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

nlohmann::json graph_to_json(CommGraph& g) {
    const GraphMetrics m = metrics(g);
    nlohmann::json j;
    j["w"] = g.w.oneline();
    nlohmann::json triples = nlohmann::json::array();
    for (const auto& t : g.triples) triples.push_back({t.x, t.y, t.z});
    j["triples"] = std::move(triples);
    nlohmann::json classes = nlohmann::json::array();
    for (size_t i = 0; i < g.classes.size(); ++i) {
        const auto& c = g.classes[i];
        classes.push_back({{"id", i},
                           {"signature", c.signature.to_string()},
                           {"rank", c.rank},
                           {"size", c.size},
                           {"representative", c.representative.str()}});
    }
    j["classes"] = std::move(classes);
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [a, b] : g.edges) edges.push_back({a, b});
    j["edges"] = std::move(edges);
    j["diameter"] = m.diameter;
    j["radius"] = m.radius;
    return j;
}

CommGraph graph_from_json(const nlohmann::json& j) {
    CommGraph g;
    g.w = Permutation(j.at("w").get<std::vector<int>>());
    for (const auto& t : j.at("triples")) {
        g.triples.push_back({t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>()});
    }
    const int n = g.w.size();
    for (const auto& c : j.at("classes")) {
        CommClass cc;
        cc.signature = BitSignature::from_string(c.at("signature").get<std::string>());
        cc.representative = Word::parse(n, c.at("representative").get<std::string>());
        cc.size = c.at("size").get<std::uint64_t>();
        cc.rank = c.at("rank").get<int>();
        g.classes.push_back(std::move(cc));
    }
    for (const auto& e : j.at("edges")) {
        g.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    g.adjacency.assign(g.classes.size(), {});
    for (const auto& [a, b] : g.edges) {
        if (a < 0 || b < 0 || a >= static_cast<int>(g.classes.size()) ||
            b >= static_cast<int>(g.classes.size())) {
            throw std::invalid_argument("graph json: edge endpoint out of range");
        }
        g.adjacency[static_cast<size_t>(a)].push_back(b);
        g.adjacency[static_cast<size_t>(b)].push_back(a);
    }
    return g;
}

std::string graph_to_dot(const CommGraph& g, bool hasse) {
    std::ostringstream os;
    const char* kind = hasse ? "digraph" : "graph";
    const char* connector = hasse ? " -> " : " -- ";
    os << kind << " \"C(" << g.w.compact_str() << ")\" {\n";
    os << "  node [shape=box];\n";
    int max_rank = 0;
    for (const auto& c : g.classes) max_rank = std::max(max_rank, c.rank);
    for (int r = 0; r <= max_rank; ++r) {
        bool any = false;
        for (size_t i = 0; i < g.classes.size(); ++i) {
            if (g.classes[i].rank == r) {
                any = true;
                break;
            }
        }
        if (!any) continue;
        os << "  subgraph cluster_rank_" << r << " {\n";
        os << "    label=\"rank " << r << "\";\n";
        os << "    rank=same;\n";
        for (size_t i = 0; i < g.classes.size(); ++i) {
            const auto& c = g.classes[i];
            if (c.rank != r) continue;
            os << "    c" << i << " [label=\"" << c.representative.str() << "\"];\n";
        }
        os << "  }\n";
    }
    for (const auto& [a, b] : g.edges) {
        int lo = a;
        int hi = b;
        if (hasse &&
            g.classes[static_cast<size_t>(a)].rank > g.classes[static_cast<size_t>(b)].rank) {
            std::swap(lo, hi);
        }
        os << "  c" << lo << connector << "c" << hi << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace redword
