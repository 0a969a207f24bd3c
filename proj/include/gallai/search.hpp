#pragma once

// Symmetry-reduced exhaustive search for Ramsey-type values and
// multiplicities, with prefix sharding for parallelism and checkpointing,
// plus a simulated-annealing mode that produces upper bounds when the space
// is out of reach.
//
// All DFS work happens in colex edge order, so a copy of a target pattern is
// detected or counted exactly when its highest-ranked edge is assigned.
// Shards are the subtrees below a fixed assignment prefix; per-shard results
// are deterministic (no cross-shard bound sharing) and merged in shard-id
// order, which makes reports independent of thread count and of
// checkpoint/resume splits.

#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "canonical.hpp"
#include "core.hpp"
#include "enumerate.hpp"
#include "patterns.hpp"

#include <json.hpp>

namespace gallai {

enum class SearchKind { ramsey, gallai_ramsey, multiplicity_m, multiplicity_gm, local_ramsey, realizations };
enum class SearchMode { exhaustive, heuristic };

struct Budget {
    unsigned long long max_nodes = 1'000'000'000ULL;
    double max_seconds = 600.0;
};

struct SearchTask {
    SearchKind kind = SearchKind::gallai_ramsey;
    std::optional<SubgraphPattern> rainbow_target;   // G
    std::optional<SubgraphPattern> mono_target;      // H, same in every color
    std::vector<SubgraphPattern> per_color_targets;  // H_1..H_k (ramsey kinds)
    int k = 1;
    Exactness exactness = Exactness::exact;
    Symmetry symmetry = Symmetry::full_canonical;
    int n_max = 12;
    std::optional<int> host;  // fixed host order for multiplicity kinds
    SearchMode mode = SearchMode::exhaustive;
    Budget budget;
    std::string checkpoint_path;
    int jobs = 1;
    unsigned seed = 1;
    int sa_restarts = 32;
    long long sa_steps = 20000;
    std::optional<EdgeColoring> warm_start; // optional extra annealing start
};

struct ScanEntry {
    int n = 0;
    enum class Status { vacuous, avoider, forces, incomplete } status = Status::vacuous;
};

struct SearchReport {
    SearchKind kind = SearchKind::gallai_ramsey;
    bool exhaustive = true;
    bool budget_exhausted = false;
    std::optional<long long> value;
    std::string bound_side = "exact"; // "exact", "upper", "lower"
    std::vector<EdgeColoring> witnesses;
    unsigned long long nodes = 0;
    double elapsed_seconds = 0;
    std::vector<ScanEntry> scan;
    std::optional<long long> labeled_count;   // realizations
    std::optional<long long> canonical_count; // realizations
    std::string enumeration_desc;
    int shard_count = 0;
    int shards_completed = 0;

    nlohmann::json to_json(bool deterministic = false) const {
        nlohmann::json j;
        const char* kinds[] = {"ramsey", "gallai_ramsey", "multiplicity_m",
                               "multiplicity_gm", "local_ramsey", "realizations"};
        j["kind"] = kinds[static_cast<int>(kind)];
        j["exhaustive"] = exhaustive;
        j["budget_exhausted"] = budget_exhausted;
        if (value) j["value"] = *value;
        j["bound_side"] = bound_side;
        j["nodes"] = nodes;
        if (!deterministic) j["elapsed_seconds"] = elapsed_seconds;
        nlohmann::json ws = nlohmann::json::array();
        for (const auto& w : witnesses) ws.push_back(gallai::to_json(w));
        j["witnesses"] = ws;
        if (!scan.empty()) {
            nlohmann::json sc = nlohmann::json::array();
            const char* st[] = {"vacuous", "avoider", "forces", "incomplete"};
            for (const auto& e : scan) sc.push_back({{"n", e.n}, {"status", st[static_cast<int>(e.status)]}});
            j["scan"] = sc;
        }
        if (labeled_count) j["labeled_count"] = *labeled_count;
        if (canonical_count) j["canonical_count"] = *canonical_count;
        j["enumeration"] = enumeration_desc;
        j["shards"] = shard_count;
        j["shards_completed"] = shards_completed;
        return j;
    }
};

// ---- forbidden-substructure specification ----

struct AvoidSpec {
    std::optional<SubgraphPattern> rainbow;          // no rainbow G
    std::optional<SubgraphPattern> mono_any;         // no mono H in any color
    std::vector<SubgraphPattern> mono_per_color;     // no H_i in color i
};

namespace detail {

inline int partial_color_degree(const EdgeColoring& c, int v) {
    std::vector<char> seen(c.k + 1, 0);
    int d = 0;
    for (int u = 0; u < c.n; ++u) {
        if (u == v) continue;
        Color col = c.color(u, v);
        if (col >= 1 && !seen[col]) { seen[col] = 1; ++d; }
    }
    return d;
}

// exists an s-matching of the given adjacency inside mask (early exit)
inline bool exists_matching(const std::vector<std::uint32_t>& adj, std::uint32_t mask, int s) {
    if (s == 0) return true;
    if (__builtin_popcount(mask) < 2 * s) return false;
    int v = __builtin_ctz(mask);
    std::uint32_t rest = mask & (mask - 1);
    std::uint32_t nb = adj[v] & rest;
    while (nb) {
        int u = __builtin_ctz(nb);
        nb &= nb - 1;
        if (exists_matching(adj, rest & ~(1u << u), s - 1)) return true;
    }
    return exists_matching(adj, rest, s); // v unmatched
}

inline bool has_mono_through(const EdgeColoring& c, const SubgraphPattern& p, Color col, int u, int v) {
    if (p.vertex_count > c.n) return false;
    if (p.kind == SubgraphPattern::Kind::matching) {
        if (p.a == 1) return true;
        auto adj = color_class_masks(c, col);
        std::uint32_t mask = ((1u << c.n) - 1) & ~(1u << u) & ~(1u << v);
        return exists_matching(adj, mask, p.a - 1);
    }
    for (int e = 0; e < p.edge_count(); ++e) {
        if (count_embeddings(c.n, p, [&](int a, int b, int) { return c.color(a, b) == col; },
                             false, e, u, v) > 0)
            return true;
        if (count_embeddings(c.n, p, [&](int a, int b, int) { return c.color(a, b) == col; },
                             false, e, v, u) > 0)
            return true;
    }
    return false;
}

inline bool has_rainbow_through(const EdgeColoring& c, const SubgraphPattern& p, int u, int v) {
    if (p.vertex_count > c.n) return false;
    if (p.kind == SubgraphPattern::Kind::star)
        return partial_color_degree(c, u) >= p.a || partial_color_degree(c, v) >= p.a;
    if (p.kind == SubgraphPattern::Kind::triangle) {
        Color a = c.color(u, v);
        for (int w = 0; w < c.n; ++w) {
            if (w == u || w == v) continue;
            Color b = c.color(u, w), d = c.color(v, w);
            if (b >= 1 && d >= 1 && a != b && a != d && b != d) return true;
        }
        return false;
    }
    if (p.kind == SubgraphPattern::Kind::matching) {
        if (p.a == 1) return true;
        std::vector<char> excluded(c.k + 1, 0);
        excluded[c.color(u, v)] = 1;
        return count_rainbow_matchings(c, p.a - 1, false, (1u << u) | (1u << v), &excluded) > 0;
    }
    for (int e = 0; e < p.edge_count(); ++e) {
        if (count_rainbow_embeddings(c, p, false, e, u, v) > 0) return true;
        if (count_rainbow_embeddings(c, p, false, e, v, u) > 0) return true;
    }
    return false;
}

inline bool violates(const EdgeColoring& c, const AvoidSpec& spec, int u, int v) {
    Color col = c.color(u, v);
    if (spec.mono_any && has_mono_through(c, *spec.mono_any, col, u, v)) return true;
    if (!spec.mono_per_color.empty() && col - 1 < static_cast<int>(spec.mono_per_color.size()) &&
        has_mono_through(c, spec.mono_per_color[col - 1], col, u, v))
        return true;
    if (spec.rainbow && has_rainbow_through(c, *spec.rainbow, u, v)) return true;
    return false;
}

// objective increment: new copies closed by the edge (u,v)
inline long long objective_delta(const EdgeColoring& c, const AvoidSpec& spec, int u, int v) {
    long long delta = 0;
    Color col = c.color(u, v);
    if (spec.mono_any) delta += count_monochromatic_through(c, *spec.mono_any, col, u, v);
    if (!spec.mono_per_color.empty() && col - 1 < static_cast<int>(spec.mono_per_color.size()))
        delta += count_monochromatic_through(c, spec.mono_per_color[col - 1], col, u, v);
    if (spec.rainbow) delta += count_rainbow_through(c, *spec.rainbow, u, v);
    return delta;
}

// full-objective recomputation, used for witness re-verification and annealing
inline long long objective_full(const EdgeColoring& c, const AvoidSpec& spec) {
    long long total = 0;
    if (spec.mono_any)
        for (Color col = 1; col <= c.k; ++col)
            total += count_monochromatic(c, *spec.mono_any, col);
    for (std::size_t i = 0; i < spec.mono_per_color.size(); ++i)
        total += count_monochromatic(c, spec.mono_per_color[i], static_cast<Color>(i + 1));
    if (spec.rainbow) total += count_rainbow(c, *spec.rainbow);
    return total;
}

// ---- shared DFS machinery ----
//
// One edge-rank DFS serves all three symmetry modes; full_canonical adds an
// is_canonical gate whenever a colex block completes (the grown prefix is the
// induced coloring on one more vertex).

struct DfsParams {
    int n = 0;
    int k = 0;
    Exactness exactness = Exactness::exact;
    Symmetry symmetry = Symmetry::full_canonical;
    std::optional<int> local_bound;
};

inline bool block_boundary(int rank, int n) {
    auto [u, v] = edge_of_rank(rank);
    return u == v - 1 || rank == pair_count(n) - 1; // last edge (v-1, v) of block v
}

inline bool prefix_canonical_ok(const EdgeColoring& c, int rank) {
    auto [u, v] = edge_of_rank(rank);
    if (u != v - 1) return true; // block for vertex v completes at edge (v-1, v)
    EdgeColoring prefix = prefix_coloring(c, v + 1);
    return is_canonical(prefix);
}

struct ShardPrefix {
    std::vector<std::uint8_t> chi; // first `depth` edge colors
    int max_used = 0;
};

// Depth (in edges) at which the tree is split into shards: a whole number of
// colex blocks, aiming for at most ~4k roots.
inline int shard_depth(const DfsParams& params) {
    int total = pair_count(params.n);
    int depth = 0;
    double width = 1;
    for (int m = 2; m <= params.n; ++m) {
        int block = m - 1;
        for (int i = 0; i < block; ++i) width *= params.k;
        if (width > 4096 || pair_count(m) >= total) break;
        depth = pair_count(m);
    }
    return std::max(depth, std::min(1, total));
}

template <typename OnNode, typename OnLeaf>
void dfs_range(EdgeColoring& c, int rank, int end, const DfsParams& params, int max_used,
               OnNode&& on_node, OnLeaf&& on_leaf) {
    if (rank == end) {
        on_leaf(c, max_used);
        return;
    }
    int total = pair_count(params.n);
    if (params.exactness == Exactness::exact && params.symmetry != Symmetry::labeled &&
        params.k - max_used > total - rank)
        return;
    auto [u, v] = edge_of_rank(rank);
    int hi = params.symmetry == Symmetry::labeled ? params.k : std::min(params.k, max_used + 1);
    for (int col = 1; col <= hi; ++col) {
        c.chi[rank] = static_cast<std::uint8_t>(col);
        if (params.local_bound && !local_bound_ok(c, u, v, *params.local_bound)) continue;
        if (!on_node(c, u, v, rank)) continue;
        if (params.symmetry == Symmetry::full_canonical && !prefix_canonical_ok(c, rank)) continue;
        dfs_range(c, rank + 1, end, params, std::max(max_used, col), on_node, on_leaf);
    }
    c.chi[rank] = 0;
}

template <typename OnNode>
std::vector<ShardPrefix> enumerate_shards(const DfsParams& params, OnNode&& on_node) {
    std::vector<ShardPrefix> shards;
    int depth = shard_depth(params);
    EdgeColoring c(params.n, params.k);
    dfs_range(c, 0, depth, params, 0,
              on_node,
              [&](const EdgeColoring& partial, int max_used) {
                  ShardPrefix sp;
                  sp.chi.assign(partial.chi.begin(), partial.chi.begin() + depth);
                  sp.max_used = max_used;
                  shards.push_back(std::move(sp));
              });
    return shards;
}

// ---- checkpoints ----

struct CheckpointFile {
    std::string path;
    std::string fingerprint;
    // (stage, shard) -> result line
    std::map<std::pair<int, int>, nlohmann::json> done;

    void load() {
        if (path.empty()) return;
        std::ifstream in(path);
        if (!in) return;
        std::string line;
        bool first = true;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            auto j = nlohmann::json::parse(line);
            if (first) {
                first = false;
                if (j.value("fingerprint", "") != fingerprint)
                    throw std::runtime_error("checkpoint fingerprint mismatch; refusing to resume");
                continue;
            }
            done[{j.value("stage", 0), j.at("shard").get<int>()}] = j;
        }
    }

    void start(std::ofstream& out) const {
        out << nlohmann::json{{"fingerprint", fingerprint}}.dump() << "\n";
        for (const auto& [key, j] : done) out << j.dump() << "\n";
        out.flush();
    }
};

inline std::string task_fingerprint(const std::string& desc) {
    // FNV-1a over the semantic task description
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : desc) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    char buf[19];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct BudgetTracker {
    const Budget* budget;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    std::atomic<unsigned long long> nodes{0};
    std::atomic<bool> exhausted{false};

    explicit BudgetTracker(const Budget& b) : budget(&b) {}

    // returns false when the budget ran out
    bool tick(unsigned long long batch = 1) {
        auto total = nodes.fetch_add(batch, std::memory_order_relaxed) + batch;
        if (total > budget->max_nodes) {
            exhausted.store(true, std::memory_order_relaxed);
            return false;
        }
        if ((total & 0xfff) == 0) {
            double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            if (s > budget->max_seconds) {
                exhausted.store(true, std::memory_order_relaxed);
                return false;
            }
        }
        return !exhausted.load(std::memory_order_relaxed);
    }
};

// run fn(shard_id) for all pending shards on a small pool; results keyed by id
template <typename Fn>
void run_shards(int count, int jobs, const std::set<int>& skip, Fn&& fn) {
    std::atomic<int> next{0};
    auto worker = [&]() {
        while (true) {
            int i = next.fetch_add(1);
            if (i >= count) return;
            if (skip.count(i)) continue;
            fn(i);
        }
    };
    int threads = std::max(1, std::min(jobs, count));
    if (threads == 1) {
        worker();
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

} // namespace detail

// ---- existence of an avoiding coloring on a fixed host ----

struct ExistenceOutcome {
    bool vacuous = false;       // the host admits no coloring under the spec
    bool avoider_found = false;
    std::optional<EdgeColoring> witness;
    unsigned long long nodes = 0;
    bool completed = true;      // false when the budget ran out first
    int shard_count = 0;
    int shards_completed = 0;
};

namespace detail {

struct ShardResult {
    bool found = false;
    std::optional<EdgeColoring> witness;
    unsigned long long nodes = 0;
    bool done = false;
};

inline ExistenceOutcome exists_avoider(int n, const DfsParams& params_in, const AvoidSpec& spec,
                                       int jobs, BudgetTracker& budget,
                                       CheckpointFile* checkpoint, int stage,
                                       std::ofstream* checkpoint_out) {
    DfsParams params = params_in;
    params.n = n;
    ExistenceOutcome out;
    int total = pair_count(n);
    if (params.exactness == Exactness::exact && params.k > total) {
        out.vacuous = true;
        return out;
    }
    if (total == 0) {
        out.vacuous = params.exactness == Exactness::exact && params.k > 0;
        if (!out.vacuous) {
            out.avoider_found = true;
            out.witness = EdgeColoring(n, params.k);
        }
        return out;
    }

    auto on_node = [&spec](const EdgeColoring& c, int u, int v, int) {
        return !violates(c, spec, u, v);
    };
    auto shards = enumerate_shards(params, on_node);
    int depth = shard_depth(params);
    out.shard_count = static_cast<int>(shards.size());

    std::vector<ShardResult> results(shards.size());
    std::set<int> skip;
    if (checkpoint) {
        for (auto& [key, j] : checkpoint->done) {
            if (key.first != stage) continue;
            int id = key.second;
            if (id < 0 || id >= static_cast<int>(shards.size()))
                throw std::runtime_error("checkpoint shard out of range");
            ShardResult r;
            r.done = true;
            r.nodes = j.value("nodes", 0ULL);
            r.found = j.value("found", false);
            if (r.found) r.witness = coloring_from_json(j.at("witness"));
            results[id] = std::move(r);
            skip.insert(id);
        }
    }

    std::atomic<int> best_found{static_cast<int>(shards.size())};
    for (int i = 0; i < static_cast<int>(shards.size()); ++i)
        if (results[i].done && results[i].found) {
            int cur = best_found.load();
            while (i < cur && !best_found.compare_exchange_weak(cur, i)) {}
        }
    std::mutex io_mutex;

    detail::run_shards(static_cast<int>(shards.size()), jobs, skip, [&](int id) {
        if (id > best_found.load(std::memory_order_relaxed)) return; // cannot matter
        if (budget.exhausted.load(std::memory_order_relaxed)) return;
        ShardResult r;
        unsigned long long local_nodes = 0;
        EdgeColoring c(params.n, params.k);
        std::copy(shards[id].chi.begin(), shards[id].chi.end(), c.chi.begin());
        bool aborted = false;
        auto on_node_counted = [&](const EdgeColoring& cc, int u, int v, int rank) {
            ++local_nodes;
            if ((local_nodes & 0x3ff) == 0 && !budget.tick(0x400)) {
                aborted = true;
                return false;
            }
            (void)rank;
            return !violates(cc, spec, u, v);
        };
        auto exact_at_leaf = [&](const EdgeColoring& cc, int max_used) {
            if (params.exactness != Exactness::exact) return true;
            if (params.symmetry != Symmetry::labeled) return max_used == params.k;
            return static_cast<int>(cc.used_colors().size()) == params.k;
        };
        bool stopped = false;
        std::function<void(int, int)> walk = [&](int rank, int max_used) {
            if (stopped || aborted) return;
            if (rank == pair_count(params.n)) {
                if (!exact_at_leaf(c, max_used)) return;
                r.found = true;
                r.witness = c;
                stopped = true;
                return;
            }
            if (params.exactness == Exactness::exact &&
                params.symmetry != Symmetry::labeled &&
                params.k - max_used > pair_count(params.n) - rank)
                return;
            auto [u, v] = edge_of_rank(rank);
            int hi = params.symmetry == Symmetry::labeled ? params.k
                                                          : std::min(params.k, max_used + 1);
            for (int col = 1; col <= hi && !stopped && !aborted; ++col) {
                c.chi[rank] = static_cast<std::uint8_t>(col);
                if (params.local_bound && !local_bound_ok(c, u, v, *params.local_bound)) continue;
                if (!on_node_counted(c, u, v, rank)) continue;
                if (params.symmetry == Symmetry::full_canonical && !prefix_canonical_ok(c, rank))
                    continue;
                walk(rank + 1, std::max(max_used, col));
            }
            c.chi[rank] = 0;
        };
        walk(depth, shards[id].max_used);
        r.nodes = local_nodes;
        budget.tick(local_nodes & 0x3ff);
        if (aborted) return; // not recorded as done
        r.done = true;
        if (r.found) {
            int cur = best_found.load();
            while (id < cur && !best_found.compare_exchange_weak(cur, id)) {}
        }
        {
            std::lock_guard<std::mutex> lock(io_mutex);
            results[id] = std::move(r);
            if (checkpoint_out) {
                nlohmann::json line{{"stage", stage}, {"shard", id},
                                    {"nodes", results[id].nodes}, {"found", results[id].found}};
                if (results[id].found) line["witness"] = gallai::to_json(*results[id].witness);
                *checkpoint_out << line.dump() << "\n";
                checkpoint_out->flush();
            }
        }
    });

    // merge in shard order: the reported witness is the first one in global
    // DFS order among completed shards
    bool all_done = true;
    for (int i = 0; i < static_cast<int>(shards.size()); ++i) {
        const auto& r = results[i];
        out.nodes += r.nodes;
        if (!r.done && i <= best_found.load()) all_done = false;
        if (r.done && r.found && !out.avoider_found) {
            out.avoider_found = true;
            out.witness = r.witness;
        }
        if (r.done) ++out.shards_completed;
        if (out.avoider_found) break; // later shards cannot produce an earlier witness
    }
    out.completed = all_done || out.avoider_found;
    if (shards.empty()) {
        // the whole prefix tree is already pruned: no avoider exists
        out.completed = true;
    }
    return out;
}

} // namespace detail

// ---- public search operations ----

namespace detail {

inline std::string patterns_desc(const SearchTask& t) {
    std::string s;
    if (t.rainbow_target) s += "G=" + t.rainbow_target->describe() + " ";
    if (t.mono_target) s += "H=" + t.mono_target->describe() + " ";
    for (const auto& p : t.per_color_targets) s += p.describe() + ",";
    return s;
}

inline const char* symmetry_name(Symmetry s) {
    switch (s) {
    case Symmetry::labeled: return "labeled";
    case Symmetry::color_canonical: return "color-canonical";
    case Symmetry::full_canonical: return "full-canonical";
    }
    return "?";
}

// value scans share this driver: find the least n in [2, n_max] such that no
// coloring of K_n under `params` avoids `spec`
inline SearchReport scan_for_value(SearchTask task, DfsParams params, const AvoidSpec& spec,
                                   const std::string& desc) {
    SearchReport report;
    report.kind = task.kind;
    auto t0 = std::chrono::steady_clock::now();
    detail::BudgetTracker budget(task.budget);

    CheckpointFile ckpt;
    std::ofstream ckpt_out;
    if (!task.checkpoint_path.empty()) {
        ckpt.path = task.checkpoint_path;
        ckpt.fingerprint = task_fingerprint(desc);
        ckpt.load();
        ckpt_out.open(task.checkpoint_path, std::ios::trunc);
        ckpt.start(ckpt_out);
    }
    report.enumeration_desc = desc;

    std::optional<EdgeColoring> last_avoider;
    for (int n = 2; n <= task.n_max; ++n) {
        auto outcome = exists_avoider(n, params, spec, task.jobs, budget,
                                      ckpt.path.empty() ? nullptr : &ckpt, n,
                                      ckpt_out.is_open() ? &ckpt_out : nullptr);
        report.nodes += outcome.nodes;
        report.shard_count += outcome.shard_count;
        report.shards_completed += outcome.shards_completed;
        ScanEntry entry;
        entry.n = n;
        if (!outcome.completed) {
            entry.status = ScanEntry::Status::incomplete;
            report.scan.push_back(entry);
            report.budget_exhausted = true;
            report.exhaustive = false;
            report.value = n;
            report.bound_side = "lower"; // forced at least up to here
            break;
        }
        if (outcome.vacuous) {
            entry.status = ScanEntry::Status::vacuous;
        } else if (outcome.avoider_found) {
            entry.status = ScanEntry::Status::avoider;
            last_avoider = outcome.witness;
        } else {
            entry.status = ScanEntry::Status::forces;
        }
        report.scan.push_back(entry);
        if (entry.status == ScanEntry::Status::forces) {
            report.value = n;
            report.bound_side = "exact";
            break;
        }
    }
    if (!report.value) {
        report.value = task.n_max + 1;
        report.bound_side = "lower";
        report.exhaustive = false;
        report.budget_exhausted = report.budget_exhausted || false;
    }
    if (last_avoider) {
        // re-verify the witness through the counting module before reporting
        if (spec.rainbow && has_rainbow(*last_avoider, *spec.rainbow))
            throw std::logic_error("witness re-verification failed (rainbow)");
        if (spec.mono_any)
            for (Color col = 1; col <= last_avoider->k; ++col)
                if (has_monochromatic(*last_avoider, *spec.mono_any, col))
                    throw std::logic_error("witness re-verification failed (mono)");
        for (std::size_t i = 0; i < spec.mono_per_color.size(); ++i)
            if (has_monochromatic(*last_avoider, spec.mono_per_color[i], static_cast<Color>(i + 1)))
                throw std::logic_error("witness re-verification failed (per-color)");
        report.witnesses.push_back(*last_avoider);
    }
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

} // namespace detail

// r(H_1,...,H_k): least n such that every coloring with colors 1..k has a
// monochromatic H_i in color i. At-most quantification; symmetry reduction
// only when the per-color targets coincide.
inline SearchReport compute_ramsey(SearchTask task) {
    if (task.per_color_targets.empty()) throw std::invalid_argument("ramsey needs per-color targets");
    task.kind = SearchKind::ramsey;
    task.k = static_cast<int>(task.per_color_targets.size());
    bool identical = true;
    for (const auto& p : task.per_color_targets)
        if (p.describe() != task.per_color_targets[0].describe()) identical = false;
    detail::DfsParams params;
    params.k = task.k;
    params.exactness = Exactness::at_most;
    params.symmetry = identical ? task.symmetry : Symmetry::labeled;
    AvoidSpec spec;
    spec.mono_per_color = task.per_color_targets;
    std::string desc = "ramsey " + detail::patterns_desc(task) + " k=" + std::to_string(task.k) +
                       " at-most " + detail::symmetry_name(params.symmetry);
    return detail::scan_for_value(task, params, spec, desc);
}

// gr_k(G:H): least n such that every exact k-coloring of K_n has a rainbow G
// or a monochromatic H. Hosts too small to carry k colors count as
// non-forcing (the lower-bound convention of the threshold lemma).
inline SearchReport compute_gallai_ramsey(SearchTask task) {
    if (!task.rainbow_target || !task.mono_target)
        throw std::invalid_argument("gallai_ramsey needs G and H");
    task.kind = SearchKind::gallai_ramsey;
    detail::DfsParams params;
    params.k = task.k;
    params.exactness = task.exactness;
    params.symmetry = task.symmetry;
    AvoidSpec spec;
    spec.rainbow = task.rainbow_target;
    spec.mono_any = task.mono_target;
    std::string desc = "gallai-ramsey " + detail::patterns_desc(task) +
                       " k=" + std::to_string(task.k) +
                       (params.exactness == Exactness::exact ? " exact " : " at-most ") +
                       detail::symmetry_name(params.symmetry);
    return detail::scan_for_value(task, params, spec, desc);
}

// r^k_loc(H): least n such that every local k-coloring of K_n has a
// monochromatic H; enumeration is color-canonical over an alphabet bounded by
// the edge count
inline SearchReport compute_local_ramsey(SearchTask task) {
    if (!task.mono_target) throw std::invalid_argument("local_ramsey needs H");
    task.kind = SearchKind::local_ramsey;
    detail::DfsParams params;
    params.exactness = Exactness::at_most;
    params.symmetry = Symmetry::color_canonical;
    params.local_bound = task.k;
    AvoidSpec spec;
    spec.mono_any = task.mono_target;
    SearchReport report;
    // the color alphabet grows with the host, so scan hosts one by one
    auto t0 = std::chrono::steady_clock::now();
    detail::BudgetTracker budget(task.budget);
    report.kind = task.kind;
    report.enumeration_desc = "local-ramsey " + detail::patterns_desc(task) +
                              " local-bound=" + std::to_string(task.k) + " color-canonical";
    std::optional<EdgeColoring> last_avoider;
    for (int n = 2; n <= task.n_max; ++n) {
        detail::DfsParams p = params;
        p.n = n;
        p.k = pair_count(n);
        auto outcome = detail::exists_avoider(n, p, spec, task.jobs, budget, nullptr, n, nullptr);
        report.nodes += outcome.nodes;
        report.shard_count += outcome.shard_count;
        report.shards_completed += outcome.shards_completed;
        ScanEntry entry;
        entry.n = n;
        if (!outcome.completed) {
            entry.status = ScanEntry::Status::incomplete;
            report.scan.push_back(entry);
            report.budget_exhausted = true;
            report.exhaustive = false;
            report.value = n;
            report.bound_side = "lower";
            break;
        }
        entry.status = outcome.avoider_found ? ScanEntry::Status::avoider : ScanEntry::Status::forces;
        if (outcome.avoider_found) last_avoider = outcome.witness;
        report.scan.push_back(entry);
        if (entry.status == ScanEntry::Status::forces) {
            report.value = n;
            report.bound_side = "exact";
            break;
        }
    }
    if (!report.value) {
        report.value = task.n_max + 1;
        report.bound_side = "lower";
        report.exhaustive = false;
    }
    if (last_avoider) report.witnesses.push_back(*last_avoider);
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

// ---- multiplicities ----

namespace detail {

struct MinimizeShardResult {
    std::optional<long long> best;
    long long rep_count = 0;     // argmin representatives in this shard
    long long labeled_sum = 0;   // sum of orbit sizes of those representatives
    std::vector<EdgeColoring> reps; // capped
    unsigned long long nodes = 0;
    bool done = false;
};

// distinct labeled colorings in the orbit of c under S_n x S_{k}
inline long long orbit_size(const EdgeColoring& c, int k_avail) {
    std::vector<int> vperm(c.n);
    std::iota(vperm.begin(), vperm.end(), 0);
    std::set<std::vector<std::uint8_t>> images;
    do {
        std::vector<int> cperm(k_avail + 1);
        std::iota(cperm.begin(), cperm.end(), 0);
        do {
            EdgeColoring img(c.n, k_avail);
            for (int v = 1; v < c.n; ++v)
                for (int u = 0; u < v; ++u)
                    img.set_color(vperm[u], vperm[v], cperm[c.color(u, v)]);
            images.insert(img.chi);
        } while (std::next_permutation(cperm.begin() + 1, cperm.end()));
    } while (std::next_permutation(vperm.begin(), vperm.end()));
    return static_cast<long long>(images.size());
}

constexpr int kMaxWitnesses = 64;

} // namespace detail

// Minimum of the copy-count objective over the colorings of a fixed host
// (exact k-colorings for GM; per-color totals for M/R), with every argmin
// representative tallied. mode=heuristic anneals instead and reports an
// upper bound.
inline SearchReport compute_multiplicity(SearchTask task) {
    if (!task.host) throw std::invalid_argument("multiplicity needs a fixed host order");
    if (task.kind != SearchKind::multiplicity_m && task.kind != SearchKind::multiplicity_gm &&
        task.kind != SearchKind::realizations)
        task.kind = task.rainbow_target ? SearchKind::multiplicity_gm : SearchKind::multiplicity_m;
    AvoidSpec spec;
    if (task.kind == SearchKind::multiplicity_m ||
        (task.kind == SearchKind::realizations && !task.per_color_targets.empty())) {
        if (task.per_color_targets.empty())
            throw std::invalid_argument("multiplicity M needs per-color targets");
        task.k = static_cast<int>(task.per_color_targets.size());
        task.exactness = Exactness::at_most; // the plain multiplicities range over all colorings
        bool identical = true;
        for (const auto& p : task.per_color_targets)
            if (p.describe() != task.per_color_targets[0].describe()) identical = false;
        if (identical) {
            spec.mono_any = task.per_color_targets[0];
        } else {
            spec.mono_per_color = task.per_color_targets;
            task.symmetry = Symmetry::labeled;
        }
    } else {
        if (!task.rainbow_target || !task.mono_target)
            throw std::invalid_argument("multiplicity GM needs G and H");
        spec.rainbow = task.rainbow_target;
        spec.mono_any = task.mono_target;
    }

    int n = *task.host;
    auto t0 = std::chrono::steady_clock::now();
    SearchReport report;
    report.kind = task.kind == SearchKind::realizations ? SearchKind::realizations : task.kind;

    if (task.mode == SearchMode::heuristic) {
        // simulated annealing over single-edge recolorings, geometric cooling
        report.exhaustive = false;
        report.bound_side = "upper";
        report.enumeration_desc = "simulated-annealing restarts=" + std::to_string(task.sa_restarts);
        std::mt19937_64 rng(task.seed);
        int total = pair_count(n);
        std::optional<long long> best;
        std::optional<EdgeColoring> best_witness;
        auto consider_start = [&](EdgeColoring state, int restart_idx) {
            long long obj = detail::objective_full(state, spec);
            if (!best || obj < *best) {
                best = obj;
                best_witness = state;
            }
            double temperature = 2.0 + 0.5 * restart_idx;
            for (long long step = 0; step < task.sa_steps; ++step) {
                int r = static_cast<int>(rng() % total);
                Color old = state.chi[r];
                Color next = 1 + static_cast<Color>(rng() % task.k);
                if (next == old) continue;
                if (task.exactness == Exactness::exact) {
                    int remaining = 0;
                    for (auto col : state.chi)
                        if (col == old) ++remaining;
                    if (remaining == 1) continue; // would lose a color
                }
                state.chi[r] = static_cast<std::uint8_t>(next);
                long long cand = detail::objective_full(state, spec);
                long long delta = cand - obj;
                if (delta <= 0 ||
                    std::generate_canonical<double, 32>(rng) < std::exp(-delta / temperature)) {
                    obj = cand;
                    if (!best || obj < *best) {
                        best = obj;
                        best_witness = state;
                    }
                } else {
                    state.chi[r] = static_cast<std::uint8_t>(old);
                }
                temperature *= 0.9995;
                report.nodes++;
            }
        };
        for (int restart = 0; restart < task.sa_restarts; ++restart) {
            EdgeColoring state(n, task.k);
            // random exact start: spray the k colors, then fill uniformly
            std::vector<int> ranks(total);
            std::iota(ranks.begin(), ranks.end(), 0);
            std::shuffle(ranks.begin(), ranks.end(), rng);
            for (int i = 0; i < total; ++i)
                state.chi[ranks[i]] =
                    static_cast<std::uint8_t>(i < task.k ? i + 1 : 1 + rng() % task.k);
            consider_start(std::move(state), restart);
        }
        if (task.warm_start) consider_start(*task.warm_start, 0);
        report.value = best;
        if (best_witness) {
            if (detail::objective_full(*best_witness, spec) != *best)
                throw std::logic_error("annealing witness re-verification failed");
            report.witnesses.push_back(*best_witness);
        }
        report.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return report;
    }

    detail::DfsParams params;
    params.n = n;
    params.k = task.k;
    params.exactness = task.exactness;
    params.symmetry = task.symmetry;
    std::string desc = "multiplicity " + detail::patterns_desc(task) + " host=" + std::to_string(n) +
                       " k=" + std::to_string(task.k) + " " + detail::symmetry_name(params.symmetry);
    report.enumeration_desc = desc;

    detail::BudgetTracker budget(task.budget);
    detail::CheckpointFile ckpt;
    std::ofstream ckpt_out;
    if (!task.checkpoint_path.empty()) {
        ckpt.path = task.checkpoint_path;
        ckpt.fingerprint = detail::task_fingerprint(desc);
        ckpt.load();
        ckpt_out.open(task.checkpoint_path, std::ios::trunc);
        ckpt.start(ckpt_out);
    }

    auto accept_all = [](const EdgeColoring&, int, int, int) { return true; };
    auto shards = detail::enumerate_shards(params, accept_all);
    int depth = detail::shard_depth(params);
    report.shard_count = static_cast<int>(shards.size());

    std::vector<detail::MinimizeShardResult> results(shards.size());
    std::set<int> skip;
    for (auto& [key, j] : ckpt.done) {
        if (key.first != 0) continue;
        int id = key.second;
        if (id < 0 || id >= static_cast<int>(shards.size()))
            throw std::runtime_error("checkpoint shard out of range");
        detail::MinimizeShardResult r;
        r.done = true;
        r.nodes = j.value("nodes", 0ULL);
        if (j.contains("best") && !j.at("best").is_null()) {
            r.best = j.at("best").get<long long>();
            r.rep_count = j.value("rep_count", 0LL);
            r.labeled_sum = j.value("labeled_sum", 0LL);
            for (const auto& w : j.value("reps", nlohmann::json::array()))
                r.reps.push_back(coloring_from_json(w));
        }
        results[id] = std::move(r);
        skip.insert(id);
    }
    std::mutex io_mutex;

    detail::run_shards(static_cast<int>(shards.size()), task.jobs, skip, [&](int id) {
        if (budget.exhausted.load(std::memory_order_relaxed)) return;
        detail::MinimizeShardResult r;
        EdgeColoring c(params.n, params.k);
        std::copy(shards[id].chi.begin(), shards[id].chi.end(), c.chi.begin());
        // objective accumulated by the shard prefix
        long long base_obj = 0;
        for (int rank = 0; rank < depth; ++rank) {
            auto [u, v] = edge_of_rank(rank);
            EdgeColoring scratch = c;
            for (int later = rank + 1; later < depth; ++later) scratch.chi[later] = 0;
            base_obj += detail::objective_delta(scratch, spec, u, v);
        }
        bool aborted = false;
        std::function<void(int, int, long long)> walk = [&](int rank, int max_used, long long obj) {
            if (aborted) return;
            ++r.nodes;
            if ((r.nodes & 0x3ff) == 0 && !budget.tick(0x400)) {
                aborted = true;
                return;
            }
            if (r.best && obj > *r.best) return;
            if (rank == pair_count(params.n)) {
                if (params.exactness == Exactness::exact) {
                    if (params.symmetry == Symmetry::labeled) {
                        if (static_cast<int>(c.used_colors().size()) != params.k) return;
                    } else if (max_used != params.k) {
                        return;
                    }
                }
                if (!r.best || obj < *r.best) {
                    r.best = obj;
                    r.rep_count = 0;
                    r.labeled_sum = 0;
                    r.reps.clear();
                }
                if (obj == *r.best) {
                    ++r.rep_count;
                    if (params.symmetry == Symmetry::full_canonical)
                        r.labeled_sum += detail::orbit_size(c, params.k);
                    else
                        r.labeled_sum += 1;
                    if (static_cast<int>(r.reps.size()) < detail::kMaxWitnesses) r.reps.push_back(c);
                }
                return;
            }
            if (params.exactness == Exactness::exact && params.symmetry != Symmetry::labeled &&
                params.k - max_used > pair_count(params.n) - rank)
                return;
            auto [u, v] = edge_of_rank(rank);
            int hi = params.symmetry == Symmetry::labeled ? params.k
                                                          : std::min(params.k, max_used + 1);
            for (int col = 1; col <= hi && !aborted; ++col) {
                c.chi[rank] = static_cast<std::uint8_t>(col);
                if (params.symmetry == Symmetry::full_canonical && !detail::prefix_canonical_ok(c, rank))
                    continue;
                long long delta = detail::objective_delta(c, spec, u, v);
                walk(rank + 1, std::max(max_used, col), obj + delta);
            }
            c.chi[rank] = 0;
        };
        walk(depth, shards[id].max_used, base_obj);
        budget.tick(r.nodes & 0x3ff);
        if (aborted) return;
        r.done = true;
        {
            std::lock_guard<std::mutex> lock(io_mutex);
            if (ckpt_out.is_open()) {
                nlohmann::json line{{"stage", 0}, {"shard", id}, {"nodes", r.nodes}};
                if (r.best) {
                    line["best"] = *r.best;
                    line["rep_count"] = r.rep_count;
                    line["labeled_sum"] = r.labeled_sum;
                    nlohmann::json reps = nlohmann::json::array();
                    for (const auto& w : r.reps) reps.push_back(gallai::to_json(w));
                    line["reps"] = reps;
                } else {
                    line["best"] = nullptr;
                }
                ckpt_out << line.dump() << "\n";
                ckpt_out.flush();
            }
            results[id] = std::move(r);
        }
    });

    std::optional<long long> best;
    long long rep_count = 0, labeled_sum = 0;
    bool all_done = true;
    for (const auto& r : results) {
        report.nodes += r.nodes;
        if (!r.done) {
            all_done = false;
            continue;
        }
        ++report.shards_completed;
        if (!r.best) continue;
        if (!best || *r.best < *best) {
            best = r.best;
            rep_count = 0;
            labeled_sum = 0;
            report.witnesses.clear();
        }
        if (*r.best == *best) {
            rep_count += r.rep_count;
            labeled_sum += r.labeled_sum;
            for (const auto& w : r.reps)
                if (static_cast<int>(report.witnesses.size()) < detail::kMaxWitnesses)
                    report.witnesses.push_back(w);
        }
    }
    report.exhaustive = all_done;
    report.budget_exhausted = !all_done;
    report.value = best;
    report.bound_side = all_done ? "exact" : "upper";
    if (best) {
        report.canonical_count = params.symmetry == Symmetry::full_canonical
                                     ? std::optional<long long>(rep_count)
                                     : std::nullopt;
        report.labeled_count = labeled_sum;
        for (const auto& w : report.witnesses)
            if (detail::objective_full(w, spec) != *best)
                throw std::logic_error("multiplicity witness re-verification failed");
    }
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

// Argmin-coloring counts under both conventions: raw labeled colorings and
// canonical equivalence classes. Requires the multiplicity sweep to be
// exhaustive; labeled-mode runs dedupe classes by canonical key.
inline SearchReport compute_realizations(SearchTask task) {
    if (task.mode == SearchMode::heuristic)
        throw std::invalid_argument("realization counts require an exhaustive multiplicity search");
    task.kind = SearchKind::realizations;
    auto report = compute_multiplicity(task);
    if (!report.exhaustive)
        throw std::runtime_error("realization counts require an exhaustive multiplicity search "
                                 "(budget exhausted)");
    if (!report.canonical_count && report.value) {
        // labeled enumeration: classes recovered from the collected argmins
        std::set<std::string> keys;
        for (const auto& w : report.witnesses) keys.insert(canonical_key_string(w));
        report.canonical_count = static_cast<long long>(keys.size());
    }
    return report;
}

// Checks the comparison hypothesis for two rainbow targets against a common
// H: when gr_k(P5:H) = gr_k(K13:H), the P5 multiplicity cannot exceed the
// K13 multiplicity.
struct ObservationTwoReport {
    bool applicable = false;  // k >= 4
    bool hypothesis_holds = false;
    long long gr_p5 = 0, gr_k13 = 0;
    std::optional<long long> gm_p5, gm_k13;
    bool inequality_holds = false;
    nlohmann::json to_json() const {
        nlohmann::json j{{"applicable", applicable},
                         {"hypothesis_holds", hypothesis_holds},
                         {"gr_p5", gr_p5},
                         {"gr_k13", gr_k13}};
        if (gm_p5) j["gm_p5"] = *gm_p5;
        if (gm_k13) j["gm_k13"] = *gm_k13;
        if (hypothesis_holds) j["inequality_holds"] = inequality_holds;
        return j;
    }
};

inline ObservationTwoReport verify_observation_2(const SubgraphPattern& h, int k, int n_max,
                                                 int jobs = 1) {
    ObservationTwoReport rep;
    if (k < 4) return rep; // the observation is stated for k >= 4
    rep.applicable = true;
    SearchTask t;
    t.k = k;
    t.n_max = n_max;
    t.jobs = jobs;
    t.mono_target = h;
    t.rainbow_target = SubgraphPattern::path(5);
    auto p5 = compute_gallai_ramsey(t);
    t.rainbow_target = SubgraphPattern::star(3);
    auto k13 = compute_gallai_ramsey(t);
    if (!p5.exhaustive || !k13.exhaustive || p5.bound_side != "exact" || k13.bound_side != "exact")
        throw std::runtime_error("observation check needs exhaustive gr values");
    rep.gr_p5 = *p5.value;
    rep.gr_k13 = *k13.value;
    rep.hypothesis_holds = rep.gr_p5 == rep.gr_k13;
    if (!rep.hypothesis_holds) return rep;
    SearchTask m;
    m.k = k;
    m.jobs = jobs;
    m.host = static_cast<int>(rep.gr_p5);
    m.mono_target = h;
    m.rainbow_target = SubgraphPattern::path(5);
    m.kind = SearchKind::multiplicity_gm;
    auto gm_p5 = compute_multiplicity(m);
    m.rainbow_target = SubgraphPattern::star(3);
    auto gm_k13 = compute_multiplicity(m);
    rep.gm_p5 = gm_p5.value;
    rep.gm_k13 = gm_k13.value;
    rep.inequality_holds = gm_p5.value && gm_k13.value && *gm_p5.value <= *gm_k13.value;
    return rep;
}

} // namespace gallai
