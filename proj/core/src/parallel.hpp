#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace polypell::detail {

// Splits [1, hi] into contiguous chunks, runs body(lo, hi, out) on each and
// concatenates the per-chunk results in chunk order, so the merged output is
// identical to a single sequential scan.
template <typename T, typename Body>
std::vector<T> chunked_scan(unsigned long hi, unsigned jobs, Body&& body) {
  std::vector<T> merged;
  if (hi == 0) return merged;
  jobs = std::max(1u, jobs);
  if (jobs == 1 || hi < 2 * jobs) {
    body(1ul, hi, merged);
    return merged;
  }

  const unsigned long chunk = (hi + jobs - 1) / jobs;
  std::vector<std::vector<T>> parts(jobs);
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (unsigned j = 0; j < jobs; ++j) {
    const unsigned long lo = 1 + static_cast<unsigned long>(j) * chunk;
    if (lo > hi) break;
    const unsigned long up = std::min(hi, lo + chunk - 1);
    workers.emplace_back([&, lo, up, j] { body(lo, up, parts[j]); });
  }
  for (auto& w : workers) w.join();
  for (auto& part : parts) {
    merged.insert(merged.end(), std::make_move_iterator(part.begin()),
                  std::make_move_iterator(part.end()));
  }
  return merged;
}

}  // namespace polypell::detail
