#include "achain/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

namespace achain {

namespace {

using u64 = std::uint64_t;

constexpr int kMaxDepth = 128;
constexpr int kSplitDepth = 3;
constexpr u64 kFlushEvery = 1024;
constexpr std::size_t kNoTask = std::numeric_limits<std::size_t>::max();

// State shared by every worker searching one depth.
struct SharedState {
  u64 max_nodes = 0;
  std::atomic<u64> global_nodes{0};
  std::atomic<bool> budget_exhausted{false};
  std::atomic<std::size_t> best_task{kNoTask};
  bool deterministic = true;

  bool should_stop(std::size_t task) const {
    if (budget_exhausted.load(std::memory_order_relaxed)) return true;
    std::size_t best = best_task.load(std::memory_order_relaxed);
    return deterministic ? best < task : best != kNoTask;
  }

  void record_success(std::size_t task) {
    std::size_t cur = best_task.load();
    while (task < cur && !best_task.compare_exchange_weak(cur, task)) {
    }
  }
};

// Depth-first branch and bound for chains of exactly `depth` steps.
//
// Pruning, with s steps left after element a_k = top:
//  * top * 2^s >= n (nothing grows faster than doubling);
//  * unless n = top * 2^s exactly, some step is not a doubling of the
//    current maximum, which caps the result at (top + a_{k-1}) * 2^{s-1}.
class DepthSearch {
 public:
  DepthSearch(u64 n, int depth, bool star, SharedState& shared)
      : n_(n), depth_(depth), star_(star), shared_(shared) {
    if (depth_ > kMaxDepth) throw std::logic_error("search depth limit exceeded");
    for (int s = 0; s <= depth_ + 1 && s <= kMaxDepth; ++s) {
      need_[s] = s >= 64 ? 1 : ((n_ - 1) >> s) + 1;
    }
    a_[0] = 1;
    candidates_.resize(static_cast<std::size_t>(depth_) + 1);
    for (std::size_t k = 0; k < candidates_.size(); ++k) candidates_[k].reserve((k + 1) * (k + 2) / 2);
  }

  // Prefix phase: collect every node at `split` depth as a task, in
  // expansion order. Returns true if a full chain turns up before `split`.
  bool collect(int split, std::vector<std::vector<u64>>& tasks) {
    split_ = split;
    tasks_ = &tasks;
    return visit(0);
  }

  bool run_task(std::span<const u64> prefix, std::size_t task) {
    split_ = -1;
    task_ = task;
    std::copy(prefix.begin(), prefix.end(), a_.begin());
    return visit(static_cast<int>(prefix.size()) - 1);
  }

  std::vector<u64> solution() const { return {a_.begin(), a_.begin() + depth_ + 1}; }
  u64 nodes() const { return nodes_; }
  bool aborted() const { return aborted_; }

  void flush() {
    shared_.global_nodes.fetch_add(unflushed_, std::memory_order_relaxed);
    unflushed_ = 0;
  }

 private:
  bool visit(int k) {
    ++nodes_;
    if (++unflushed_ >= kFlushEvery) {
      flush();
      if (shared_.global_nodes.load(std::memory_order_relaxed) > shared_.max_nodes) {
        shared_.budget_exhausted = true;
      }
      if (split_ < 0 && shared_.should_stop(task_)) aborted_ = true;
      if (shared_.budget_exhausted) aborted_ = true;
    }
    if (aborted_) return false;

    const int s = depth_ - k;
    const u64 top = a_[k];
    if (top < need_[s]) return false;
    if (s < 64 && (top << s) == n_ && (top << s) >> s == top) {
      for (int t = k + 1; t <= depth_; ++t) a_[t] = a_[t - 1] * 2;
      return true;
    }
    if (k >= 1 && top + a_[k - 1] < need_[s - 1]) return false;

    if (s == 1) return finish(k);
    if (k == split_) {
      tasks_->emplace_back(a_.begin(), a_.begin() + k + 1);
      return false;
    }

    std::vector<u64>& candidates = candidates_[static_cast<std::size_t>(k)];
    gather(k, candidates);
    const u64 floor = need_[s - 1];
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (candidates[c] < floor) break;
      a_[k + 1] = candidates[c];
      if (visit(k + 1)) return true;
      if (aborted_) return false;
    }
    return false;
  }

  // Last step: n = a_x + a_y for some x >= y.
  bool finish(int k) {
    for (int x = k; x >= 0 && 2 * a_[x] >= n_; --x) {
      if (star_ && x != k) break;
      const u64 rest = n_ - a_[x];
      if (std::binary_search(a_.begin(), a_.begin() + x + 1, rest)) {
        a_[k + 1] = n_;
        return true;
      }
    }
    return false;
  }

  // Distinct sums in (a_k, n), descending.
  void gather(int k, std::vector<u64>& out) const {
    const u64 top = a_[k];
    out.clear();
    if (star_) {
      for (int j = k; j >= 0; --j) {
        const u64 v = top + a_[j];
        if (v < n_) out.push_back(v);
      }
      return;
    }
    for (int i = k; i >= 0; --i) {
      if (2 * a_[i] <= top) break;
      for (int j = i; j >= 0; --j) {
        const u64 v = a_[i] + a_[j];
        if (v <= top) break;
        if (v < n_) out.push_back(v);
      }
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }

  u64 n_;
  int depth_;
  bool star_;
  SharedState& shared_;
  std::array<u64, kMaxDepth + 2> need_{};
  std::array<u64, kMaxDepth + 2> a_{};
  std::vector<std::vector<u64>> candidates_;
  int split_ = -1;
  std::size_t task_ = 0;
  std::vector<std::vector<u64>>* tasks_ = nullptr;
  u64 nodes_ = 0;
  u64 unflushed_ = 0;
  bool aborted_ = false;
};

struct DepthResult {
  bool found = false;
  bool budget_exhausted = false;
  std::vector<u64> chain;
  u64 nodes = 0;
};

DepthResult search_depth(u64 n, int depth, const SearchConfig& cfg, u64 nodes_so_far) {
  SharedState shared;
  shared.max_nodes = cfg.max_nodes > nodes_so_far ? cfg.max_nodes - nodes_so_far : 0;
  shared.deterministic = cfg.deterministic;

  DepthResult result;
  std::vector<std::vector<u64>> tasks;
  DepthSearch prefix(n, depth, cfg.star_only, shared);
  const bool prefix_found = prefix.collect(std::min(kSplitDepth, std::max(depth - 2, 0)), tasks);
  prefix.flush();
  result.nodes = prefix.nodes();
  if (prefix.aborted()) {
    result.budget_exhausted = true;
    return result;
  }

  std::vector<u64> task_nodes(tasks.size(), 0);
  std::vector<std::vector<u64>> task_solution(tasks.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (;;) {
      const std::size_t t = next.fetch_add(1);
      if (t >= tasks.size() || shared.should_stop(t)) return;
      DepthSearch dfs(n, depth, cfg.star_only, shared);
      const bool found = dfs.run_task(tasks[t], t);
      dfs.flush();
      task_nodes[t] = dfs.nodes();
      if (found) {
        task_solution[t] = dfs.solution();
        shared.record_success(t);
      }
    }
  };

  const unsigned workers = std::max(1u, cfg.worker_count);
  if (workers == 1 || tasks.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  const std::size_t best = shared.best_task.load();
  if (best != kNoTask) {
    result.found = true;
    result.chain = task_solution[best];
    const std::size_t counted = cfg.deterministic ? best + 1 : tasks.size();
    for (std::size_t t = 0; t < counted; ++t) result.nodes += task_nodes[t];
    return result;
  }
  for (u64 c : task_nodes) result.nodes += c;
  if (shared.budget_exhausted) {
    result.budget_exhausted = true;
    return result;
  }
  if (prefix_found) {
    result.found = true;
    result.chain = prefix.solution();
  }
  return result;
}

SearchOutcome run_search(u64 n, const SearchConfig& cfg) {
  if (n == 0) throw DomainError("search target must be >= 1");
  if (n > kMaxSearchTarget) throw DomainError("search target too large: " + std::to_string(n));
  if (cfg.max_nodes < 1) throw std::invalid_argument("max_nodes must be >= 1");
  if (cfg.worker_count < 1) throw std::invalid_argument("worker_count must be >= 1");

  SearchOutcome out;
  out.n = n;
  if (n == 1) {
    out.proven_minimal = true;
    return out;
  }

  const Chain upper = binary_chain(n);
  for (int depth = static_cast<int>(lower_bound(n));; ++depth) {
    DepthResult r = search_depth(n, depth, cfg, out.nodes_expanded);
    out.nodes_expanded += r.nodes;
    if (r.budget_exhausted) {
      out.length = upper.length();
      out.certificate = upper;
      out.proven_minimal = false;
      return out;
    }
    if (r.found) {
      std::vector<BigInt> elements(r.chain.begin(), r.chain.end());
      out.certificate = validate(std::move(elements));
      out.length = out.certificate.length();
      out.proven_minimal = true;
      return out;
    }
    if (depth > static_cast<int>(upper.length())) {
      throw std::logic_error("search passed the binary-method bound for " + std::to_string(n));
    }
  }
}

}  // namespace

SearchOutcome exact_length(std::uint64_t n, const SearchConfig& cfg) { return run_search(n, cfg); }

SearchOutcome minimal_star_length(std::uint64_t n, SearchConfig cfg) {
  cfg.star_only = true;
  return run_search(n, cfg);
}

namespace {

// Enumerates every ascending chain of exactly `depth` steps whose elements
// stay <= limit, skipping prefixes that can no longer reach an unresolved
// value, and resolves each unresolved chain end at this depth.
class LayerEnumerator {
 public:
  LayerEnumerator(u64 limit, int depth, std::set<u64>& unresolved, std::vector<int>& table)
      : limit_(limit), depth_(depth), unresolved_(unresolved), table_(table) {}

  void run() {
    chain_.assign(1, 1);
    extend();
  }

 private:
  bool reachable(u64 top, int steps_left) const {
    u64 hi = limit_;
    if (steps_left < 63 && (top << steps_left) >> steps_left == top) {
      hi = std::min(limit_, top << steps_left);
    }
    auto it = unresolved_.upper_bound(top);
    return it != unresolved_.end() && *it <= hi;
  }

  void extend() {
    const int k = static_cast<int>(chain_.size()) - 1;
    const u64 top = chain_.back();
    if (k == depth_) {
      if (unresolved_.erase(top) > 0) table_[top] = depth_;
      return;
    }
    if (!reachable(top, depth_ - k)) return;
    std::vector<u64> next;
    for (std::size_t i = 0; i < chain_.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        const u64 v = chain_[i] + chain_[j];
        if (v > top && v <= limit_) next.push_back(v);
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    for (u64 v : next) {
      chain_.push_back(v);
      extend();
      chain_.pop_back();
      if (unresolved_.empty()) return;
    }
  }

  u64 limit_;
  int depth_;
  std::set<u64>& unresolved_;
  std::vector<int>& table_;
  std::vector<u64> chain_;
};

}  // namespace

std::vector<int> bfs_oracle(std::uint64_t limit) {
  if (limit > kOracleLimit) {
    throw LimitTooLarge("bfs_oracle limit " + std::to_string(limit) + " exceeds " +
                        std::to_string(kOracleLimit));
  }
  std::vector<int> table(limit + 1, -1);
  if (limit == 0) return table;
  std::set<u64> unresolved;
  for (u64 v = 1; v <= limit; ++v) unresolved.insert(v);
  for (int depth = 0; !unresolved.empty(); ++depth) {
    LayerEnumerator(limit, depth, unresolved, table).run();
  }
  return table;
}

}  // namespace achain
