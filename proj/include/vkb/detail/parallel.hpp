#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace vkb::detail {

// Splits [0, total) into contiguous chunks, runs `work(acc, begin, end)` on
// each chunk with its own accumulator, then folds the accumulators in chunk
// order. Small ranges run on the calling thread.
template <class Acc, class MakeAcc, class Work, class Merge>
Acc parallel_reduce(std::uint64_t total, unsigned threads, MakeAcc make_acc, Work work, Merge merge) {
  constexpr std::uint64_t kMinChunk = 1U << 12;
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  const std::uint64_t max_workers = std::max<std::uint64_t>(1, total / kMinChunk);
  const auto workers = static_cast<unsigned>(std::min<std::uint64_t>(threads, max_workers));

  if (workers <= 1) {
    Acc acc = make_acc();
    work(acc, std::uint64_t{0}, total);
    return acc;
  }

  std::vector<Acc> accs;
  accs.reserve(workers);
  for (unsigned i = 0; i < workers; ++i) accs.push_back(make_acc());
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) {
      const std::uint64_t begin = total * i / workers;
      const std::uint64_t end = total * (i + 1) / workers;
      pool.emplace_back([&, i, begin, end] { work(accs[i], begin, end); });
    }
  }
  Acc result = std::move(accs[0]);
  for (unsigned i = 1; i < workers; ++i) merge(result, std::move(accs[i]));
  return result;
}

}  // namespace vkb::detail
