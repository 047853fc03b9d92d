#include "hstar/enumerate.hpp"

#include "hstar/canonical.hpp"
#include "hstar/error.hpp"
#include "hstar/fp_matrix.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>

namespace hstar {
namespace {

bool order_allowed(const EnumerationBounds& b, std::int64_t order) {
  if (order == 1 || b.allowed_orders.empty()) return true;
  return std::find(b.allowed_orders.begin(), b.allowed_orders.end(), order) != b.allowed_orders.end();
}

// Every divisor > 1 of the exponent occurs as an element order.
bool exponent_allowed(const EnumerationBounds& b, std::int64_t exponent) {
  for (std::int64_t e = 2; e <= exponent; ++e)
    if (exponent % e == 0 && !order_allowed(b, e)) return false;
  return true;
}

void extend_sequences(const EnumerationBounds& b, std::vector<std::int64_t>& seq, std::int64_t product,
                      std::vector<std::vector<std::int64_t>>& out) {
  out.push_back(seq);
  if (seq.size() >= b.max_rank || seq.size() >= b.n) return;
  const std::int64_t start = seq.empty() ? 2 : seq.back();
  for (std::int64_t o = start; product * o <= b.max_order; o += seq.empty() ? 1 : seq.back()) {
    if (!exponent_allowed(b, o)) continue;
    seq.push_back(o);
    extend_sequences(b, seq, product * o, out);
    seq.pop_back();
  }
}

// Shared state of one enumeration run.
class Collector {
 public:
  Collector(const EnumerationBounds& b, const GroupFilter& keep) : bounds_(b), keep_(keep) {}

  // False once the budget is gone; workers stop then.
  bool charge() {
    if (exhausted_.load(std::memory_order_relaxed)) return false;
    if (examined_.fetch_add(1, std::memory_order_relaxed) + 1 > bounds_.budget) {
      exhausted_.store(true);
      return false;
    }
    return true;
  }
  bool exhausted() const { return exhausted_.load(); }

  void offer(const SimplexGroup& g, std::set<SimplexGroup>& local) {
    if (keep_ && !keep_(g)) return;
    local.insert(canonical_form(g));
  }

  void merge(std::set<SimplexGroup>& local) {
    std::lock_guard lock(mu_);
    result_.merge(local);
  }

  std::uint64_t examined() const { return std::min<std::uint64_t>(examined_.load(), bounds_.budget); }
  std::set<SimplexGroup>& result() { return result_; }

 private:
  const EnumerationBounds& bounds_;
  const GroupFilter& keep_;
  std::atomic<std::uint64_t> examined_{0};
  std::atomic<bool> exhausted_{false};
  std::mutex mu_;
  std::set<SimplexGroup> result_;
};

// Runs task(i) for i in [0, count) on a small pool.
template <class Task>
void run_parallel(std::size_t count, std::size_t threads, Task task) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) task(i);
  };
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
}

// Groups with invariant factors `inv`: multisets of n characters, a
// character being a tuple (c_1, ..., c_r) with c_i in Z/o_i.
void enumerate_type(const EnumerationBounds& b, const std::vector<std::int64_t>& inv, Collector& col) {
  const std::size_t n = b.n;
  const std::size_t r = inv.size();
  if (r == 0) {
    if (!b.exclude_pyramids || n == 0) {
      std::set<SimplexGroup> local;
      if (col.charge()) col.offer(SimplexGroup::trivial(n), local);
      col.merge(local);
    }
    return;
  }
  const std::int64_t exponent = inv.back();
  const std::int64_t order = std::accumulate(inv.begin(), inv.end(), std::int64_t{1}, std::multiplies<>());
  std::vector<std::vector<std::int64_t>> types;
  {
    std::vector<std::int64_t> t(r, 0);
    while (true) {
      types.push_back(t);
      std::size_t i = r;
      while (i > 0 && ++t[i - 1] == inv[i - 1]) t[--i] = 0;
      if (i == 0) break;
    }
  }
  const std::size_t first = b.exclude_pyramids ? 1 : 0;  // type 0 is the zero character

  run_parallel(types.size() - first, b.threads, [&](std::size_t lead_offset) {
    std::set<SimplexGroup> local;
    std::vector<std::size_t> pick(n, first + lead_offset);
    std::vector<std::vector<std::int64_t>> rows(r, std::vector<std::int64_t>(n));
    // Non-decreasing sequences with pick[0] fixed.
    while (true) {
      if (!col.charge()) break;
      bool heights_ok = true;
      for (std::size_t i = 0; i < r && heights_ok; ++i) {
        std::int64_t sum = 0;
        for (std::size_t j = 0; j < n; ++j) sum += types[pick[j]][i];
        heights_ok = sum % inv[i] == 0;
      }
      if (heights_ok) {
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < n; ++j) rows[i][j] = types[pick[j]][i] * (exponent / inv[i]);
        const SimplexGroup g = SimplexGroup::generated(n, exponent, rows, static_cast<std::size_t>(order));
        if (static_cast<std::int64_t>(g.order()) == order) col.offer(g, local);
      }
      std::size_t j = n;
      while (j > 1 && pick[j - 1] + 1 == types.size()) --j;
      if (j <= 1) break;
      const std::size_t v = ++pick[j - 1];
      std::fill(pick.begin() + static_cast<std::ptrdiff_t>(j), pick.end(), v);
    }
    col.merge(local);
  });
}

// Subspaces of F_p^n of dimension 1..max_rank as reduced row echelon
// matrices, deduplicated by column multiset before canonicalization.
void enumerate_elementary(const EnumerationBounds& b, Collector& col) {
  const std::int64_t p = *b.elementary_prime;
  const std::size_t n = b.n;
  std::size_t max_rank = b.max_rank;
  for (std::int64_t order = p, r = 1; r <= static_cast<std::int64_t>(max_rank); ++r, order *= p)
    if (order > b.max_order) {
      max_rank = static_cast<std::size_t>(r - 1);
      break;
    }
  max_rank = std::min(max_rank, n);

  {
    std::set<SimplexGroup> local;
    if (col.charge() && !b.exclude_pyramids) col.offer(SimplexGroup::trivial(n), local);
    col.merge(local);
  }

  // Pivot sets of every size, each one a parallel task.
  std::vector<std::vector<std::size_t>> pivot_sets;
  for (std::size_t r = 1; r <= max_rank; ++r) {
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(r), true);
    do {
      std::vector<std::size_t> piv;
      for (std::size_t j = 0; j < n; ++j)
        if (mask[j]) piv.push_back(j);
      pivot_sets.push_back(std::move(piv));
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }

  run_parallel(pivot_sets.size(), b.threads, [&](std::size_t task) {
    const auto& piv = pivot_sets[task];
    const std::size_t r = piv.size();
    // Free slots: (row i, column j) with j > piv[i] and j not a pivot.
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = piv[i] + 1; j < n; ++j)
        if (std::find(piv.begin(), piv.end(), j) == piv.end()) free.emplace_back(i, j);

    std::set<SimplexGroup> local;
    std::unordered_set<std::string> seen;
    std::vector<std::vector<std::int64_t>> m(r, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < r; ++i) m[i][piv[i]] = 1;
    std::vector<std::int64_t> digits(free.size(), 0);
    while (true) {
      if (!col.charge()) break;
      for (std::size_t f = 0; f < free.size(); ++f) m[free[f].first][free[f].second] = digits[f];

      bool ok = true;
      for (std::size_t i = 0; i < r && ok; ++i) ok = std::accumulate(m[i].begin(), m[i].end(), std::int64_t{0}) % p == 0;
      std::vector<std::int64_t> cols(n, 0);
      for (std::size_t j = 0; j < n && ok; ++j) {
        for (std::size_t i = 0; i < r; ++i) cols[j] = cols[j] * p + m[i][j];
        if (b.exclude_pyramids && cols[j] == 0) ok = false;
      }
      if (ok) {
        std::sort(cols.begin(), cols.end());
        std::string key(reinterpret_cast<const char*>(cols.data()), cols.size() * sizeof(std::int64_t));
        if (seen.insert(std::move(key)).second) col.offer(SimplexGroup::generated(n, p, m), local);
      }

      std::size_t f = 0;
      while (f < digits.size() && ++digits[f] == p) digits[f++] = 0;
      if (f == digits.size()) break;
    }
    col.merge(local);
  });
}

}  // namespace

void EnumerationBounds::validate() const {
  if (n < 1) throw Error(ErrorCode::RangeViolated, "n must be at least 1");
  if (max_order < 1) throw Error(ErrorCode::RangeViolated, "max order must be at least 1");
  if (max_rank < 1) throw Error(ErrorCode::RangeViolated, "max rank must be at least 1");
  if (static_cast<std::uint64_t>(max_order) > SimplexGroup::kDefaultCap)
    throw Error(ErrorCode::RangeViolated, "max order exceeds the group cap");
  for (auto o : allowed_orders)
    if (o < 1) throw Error(ErrorCode::RangeViolated, "element orders must be positive");
  if (elementary_prime && !is_prime(*elementary_prime))
    throw Error(ErrorCode::NotPrime, std::to_string(*elementary_prime) + " is not prime");
}

std::string EnumerationBounds::to_string() const {
  std::ostringstream os;
  os << "n=" << n << " max_order=" << max_order << " max_rank=" << max_rank;
  if (!allowed_orders.empty()) {
    os << " orders={";
    for (std::size_t i = 0; i < allowed_orders.size(); ++i) os << (i ? "," : "") << allowed_orders[i];
    os << '}';
  }
  if (elementary_prime) os << " elementary=" << *elementary_prime;
  if (exclude_pyramids) os << " non-pyramid";
  return os.str();
}

std::vector<std::vector<std::int64_t>> invariant_factor_sequences(const EnumerationBounds& bounds) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> seq;
  extend_sequences(bounds, seq, 1, out);
  return out;
}

std::vector<SimplexGroup> enumerate_groups(const EnumerationBounds& bounds, const GroupFilter& keep,
                                           EnumerationStats* stats) {
  bounds.validate();
  Collector col(bounds, keep);
  if (bounds.elementary_prime) {
    if (order_allowed(bounds, *bounds.elementary_prime)) enumerate_elementary(bounds, col);
  } else {
    for (const auto& inv : invariant_factor_sequences(bounds)) {
      enumerate_type(bounds, inv, col);
      if (col.exhausted()) break;
    }
  }
  const std::uint64_t found = col.result().size();
  if (stats) *stats = {col.examined(), found};
  if (col.exhausted())
    throw BudgetExceededError("enumeration stopped after " + std::to_string(bounds.budget) + " candidates",
                              col.examined(), found);

  std::vector<SimplexGroup> out(col.result().begin(), col.result().end());
  std::stable_sort(out.begin(), out.end(),
                   [](const SimplexGroup& a, const SimplexGroup& b) { return a.order() < b.order(); });
  return out;
}

}  // namespace hstar
