#pragma once

// Node budgets and deterministic fan-out for the exhaustive counting searches.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace hyperperm {

/// Input rejected by a constructor or a precondition check.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A search visited more nodes than its configured budget allows. Distinct
/// from a zero count.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::uint64_t limit)
      : std::runtime_error("node budget of " + std::to_string(limit) + " exceeded"),
        limit_(limit) {}
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
};

class UnsupportedDimension : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 1'000'000'000ULL;

struct SearchOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
  unsigned threads = 1;
};

inline unsigned default_thread_count() {
  return std::max(1U, std::thread::hardware_concurrency());
}

/// Shared node counter. Workers charge it through a NodeMeter, which flushes
/// in batches to keep the atomic off the hot path.
class NodeBudget {
 public:
  explicit NodeBudget(std::uint64_t limit) : limit_(limit) {
    if (limit == 0) throw ValidationError("node budget must be positive");
  }
  NodeBudget(const NodeBudget&) = delete;
  NodeBudget& operator=(const NodeBudget&) = delete;

  void charge(std::uint64_t nodes) {
    const std::uint64_t before = used_.fetch_add(nodes, std::memory_order_relaxed);
    if (before + nodes > limit_) throw BudgetExceeded(limit_);
  }
  std::uint64_t used() const { return used_.load(std::memory_order_relaxed); }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::atomic<std::uint64_t> used_{0};
};

class NodeMeter {
 public:
  explicit NodeMeter(NodeBudget& budget) : budget_(budget) {}
  NodeMeter(const NodeMeter&) = delete;
  NodeMeter& operator=(const NodeMeter&) = delete;

  void tick() {
    if (++pending_ >= kBatch) flush();
  }
  void flush() {
    if (pending_ == 0) return;
    const std::uint64_t n = pending_;
    pending_ = 0;
    budget_.charge(n);
  }

 private:
  static constexpr std::uint64_t kBatch = 1024;
  NodeBudget& budget_;
  std::uint64_t pending_ = 0;
};

/// Runs task(i) for i in [0, count) on up to `threads` workers and returns
/// the results in index order, so any fold over them is independent of the
/// schedule. The first exception thrown by a task is rethrown here.
template <typename Result, typename Task>
std::vector<Result> run_indexed(std::size_t count, unsigned threads, Task&& task) {
  std::vector<Result> results(count);
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(std::max(1U, threads), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = task(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (!failed.load(std::memory_order_relaxed)) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        results[i] = task(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return results;
}

}  // namespace hyperperm
