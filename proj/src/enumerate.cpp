#include "cubal/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <condition_variable>
#include <map>
#include <mutex>
#include <optional>
#include <thread>

#include "cubal/errors.hpp"

namespace cubal {

namespace {

constexpr int kMaxCells = kHardMaxEnumeration * kHardMaxEnumeration;
constexpr std::int8_t kUnset = -1;

using Table = std::array<std::int8_t, kMaxCells>;

// Backtracking over cells in row-major order. After each assignment every
// associativity triple that has just become fully evaluable is checked; a
// triple becomes evaluable exactly when its last missing lookup is filled, and
// that lookup is the new cell in one of four positions.
class Search {
public:
  explicit Search(int m) : m_(m) { table_.fill(kUnset); }

  Search(int m, const Table& prefix) : m_(m), table_(prefix) {}

  int size() const { return m_; }
  const Table& table() const { return table_; }

  // Depth-first from cell `pos`, calling `leaf(table)` on every complete table.
  template <class Leaf>
  void run(int pos, Leaf&& leaf) {
    if (pos == m_ * m_) {
      leaf(table_);
      return;
    }
    const int i = pos / m_;
    const int j = pos % m_;
    for (int v = 0; v < m_; ++v) {
      table_[pos] = static_cast<std::int8_t>(v);
      if (consistent(i, j, v)) run(pos + 1, leaf);
    }
    table_[pos] = kUnset;
  }

  // Valid partial tables with the first `depth` cells assigned, in lexicographic order.
  std::vector<Table> prefixes(int depth) {
    std::vector<Table> out;
    collect(0, depth, out);
    return out;
  }

private:
  int at(int x, int y) const { return table_[x * m_ + y]; }

  void collect(int pos, int depth, std::vector<Table>& out) {
    if (pos == depth) {
      out.push_back(table_);
      return;
    }
    const int i = pos / m_;
    const int j = pos % m_;
    for (int v = 0; v < m_; ++v) {
      table_[pos] = static_cast<std::int8_t>(v);
      if (consistent(i, j, v)) collect(pos + 1, depth, out);
    }
    table_[pos] = kUnset;
  }

  bool consistent(int i, int j, int v) const {
    const int m = m_;
    // (x,y) = (i,j): a(v,z) = a(i, a(j,z))
    for (int z = 0; z < m; ++z) {
      const int lhs = at(v, z);
      const int jz = at(j, z);
      if (lhs < 0 || jz < 0) continue;
      const int rhs = at(i, jz);
      if (rhs >= 0 && lhs != rhs) return false;
    }
    // (y,z) = (i,j): a(a(x,i), j) = a(x, v)
    for (int x = 0; x < m; ++x) {
      const int rhs = at(x, v);
      const int xi = at(x, i);
      if (rhs < 0 || xi < 0) continue;
      const int lhs = at(xi, j);
      if (lhs >= 0 && lhs != rhs) return false;
    }
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y) {
        // a(x,y) = i, z = j: v = a(x, a(y,j))
        if (at(x, y) == i) {
          const int yj = at(y, j);
          if (yj >= 0) {
            const int rhs = at(x, yj);
            if (rhs >= 0 && rhs != v) return false;
          }
        }
        // x = i, a(y',z') = j with (y',z') = (x,y): a(a(i,x), y) = v
        if (at(x, y) == j) {
          const int ix = at(i, x);
          if (ix >= 0) {
            const int lhs = at(ix, y);
            if (lhs >= 0 && lhs != v) return false;
          }
        }
      }
    return true;
  }

  int m_;
  Table table_;
};

Operation to_operation(int m, const Table& t) {
  std::vector<std::uint8_t> cells(t.begin(), t.begin() + m * m);
  return Operation::from_cells(m, std::move(cells), Checking::Unchecked);
}

int split_depth(int m, int jobs) {
  // Enough prefixes to keep every worker busy.
  const long target = 8L * jobs;
  int depth = 0;
  long count = 1;
  while (count < target && depth < m * m) {
    count *= m;
    ++depth;
  }
  return depth;
}

// Runs `work(task_index, prefix)` over the prefixes on `jobs` threads and hands
// each result to `emit` strictly in prefix order.
template <class Result, class Work, class Emit>
void run_partitioned(const std::vector<Table>& prefixes, int jobs, Work&& work, Emit&& emit) {
  std::vector<std::optional<Result>> slots(prefixes.size());
  std::mutex mutex;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    while (true) {
      const std::size_t task = next.fetch_add(1);
      if (task >= prefixes.size()) return;
      Result r = work(prefixes[task]);
      {
        std::lock_guard lock(mutex);
        slots[task] = std::move(r);
      }
      ready.notify_all();
    }
  };

  std::vector<std::jthread> threads;
  threads.reserve(static_cast<std::size_t>(jobs));
  for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);

  for (std::size_t task = 0; task < slots.size(); ++task) {
    Result r;
    {
      std::unique_lock lock(mutex);
      ready.wait(lock, [&] { return slots[task].has_value(); });
      r = std::move(*slots[task]);
      slots[task].reset();
    }
    emit(std::move(r));
  }
}

}  // namespace

void check_enumeration_budget(int m, const EnumOptions& options) {
  const int limit = std::min(options.max_m, kHardMaxEnumeration);
  if (m < 1 || m > limit) {
    std::string msg = "enumeration of associative operations for m=" + std::to_string(m) +
                      " is outside the budget 1.." + std::to_string(limit);
    if (m > limit && m <= kHardMaxEnumeration)
      msg += "; m=6 needs an explicit override (--allow-m6 or CUBAL_MAX_M=6)";
    else if (m > kHardMaxEnumeration)
      msg += "; sizes above " + std::to_string(kHardMaxEnumeration) + " are not supported";
    throw CapacityError(msg);
  }
  if (options.jobs < 1) throw PreconditionError("jobs must be >= 1");
}

void enumerate_operations(int m, const std::function<void(const Operation&)>& visit,
                          const EnumOptions& options) {
  check_enumeration_budget(m, options);
  if (options.jobs == 1) {
    Search(m).run(0, [&](const Table& t) { visit(to_operation(m, t)); });
    return;
  }
  const auto prefixes = Search(m).prefixes(split_depth(m, options.jobs));
  run_partitioned<std::vector<Operation>>(
      prefixes, options.jobs,
      [m](const Table& prefix) {
        std::vector<Operation> found;
        const int depth = static_cast<int>(
            std::find(prefix.begin(), prefix.begin() + m * m, kUnset) - prefix.begin());
        Search(m, prefix).run(depth, [&](const Table& t) { found.push_back(to_operation(m, t)); });
        return found;
      },
      [&](std::vector<Operation> found) {
        for (const auto& op : found) visit(op);
      });
}

std::vector<Operation> all_operations(int m, const EnumOptions& options) {
  std::vector<Operation> out;
  enumerate_operations(m, [&](const Operation& op) { out.push_back(op); }, options);
  return out;
}

std::uint64_t count_operations(int m, const EnumOptions& options) {
  check_enumeration_budget(m, options);
  if (options.jobs == 1) {
    std::uint64_t total = 0;
    Search(m).run(0, [&](const Table&) { ++total; });
    return total;
  }
  const auto prefixes = Search(m).prefixes(split_depth(m, options.jobs));
  std::uint64_t total = 0;
  run_partitioned<std::uint64_t>(
      prefixes, options.jobs,
      [m](const Table& prefix) {
        std::uint64_t n = 0;
        const int depth = static_cast<int>(
            std::find(prefix.begin(), prefix.begin() + m * m, kUnset) - prefix.begin());
        Search(m, prefix).run(depth, [&](const Table&) { ++n; });
        return n;
      },
      [&](std::uint64_t n) { total += n; });
  return total;
}

Operation canonical_representative(const Operation& a) {
  std::optional<Operation> best;
  for (const auto& pi : Permutation::all(a.size())) {
    auto b = act(pi, a);
    if (!best || b < *best) best = std::move(b);
  }
  return *best;
}

CensusResult orbit_census(int m, const EnumOptions& options) {
  if (m > kMaxOrbitCensus)
    throw CapacityError("orbit census is limited to m <= " + std::to_string(kMaxOrbitCensus) +
                        ", got m=" + std::to_string(m));
  std::map<Operation, std::uint64_t> sizes;
  CensusResult out;
  out.m = m;
  enumerate_operations(
      m,
      [&](const Operation& op) {
        ++sizes[canonical_representative(op)];
        ++out.total;
      },
      options);
  for (auto& [rep, size] : sizes) out.orbits.push_back({rep, size});
  return out;
}

}  // namespace cubal
