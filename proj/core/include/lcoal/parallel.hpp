#ifndef LCOAL_PARALLEL_HPP
#define LCOAL_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <optional>
#include <thread>
#include <vector>

namespace lcoal
{

// Number of worker threads for exhaustive checks. 1 means run on the calling thread.
struct Parallelism
{
  unsigned jobs = 1;
};

// Smallest i in [0, count) with ok(i) == false, or nullopt. Workers scan interleaved
// blocks in increasing order and stop once they pass the best failure found so far, so
// the answer is the same for every job count.
template <class Check>
std::optional<std::size_t> first_failure(std::size_t count, Parallelism par, const Check &ok)
{
  if (par.jobs <= 1 || count < 2)
  {
    for (std::size_t i = 0; i < count; ++i)
      if (!ok(i))
        return i;
    return std::nullopt;
  }

  constexpr std::size_t block = 16;
  const unsigned jobs = std::min<std::size_t>(par.jobs, (count + block - 1) / block);
  std::atomic<std::size_t> best{count};
  auto worker = [&](unsigned id) {
    for (std::size_t start = id * block; start < count; start += jobs * block)
    {
      const std::size_t end = std::min(count, start + block);
      for (std::size_t i = start; i < end; ++i)
      {
        if (i >= best.load(std::memory_order_relaxed))
          return;
        if (!ok(i))
        {
          std::size_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i))
            ;
          return;
        }
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (unsigned id = 0; id < jobs; ++id)
    pool.emplace_back(worker, id);
  for (auto &t : pool)
    t.join();
  const std::size_t found = best.load();
  if (found == count)
    return std::nullopt;
  return found;
}

}  // namespace lcoal

#endif  // LCOAL_PARALLEL_HPP
