#include "curvlab/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace curvlab {

double max_over_trials(int trials, const std::function<double(int)>& fn) {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  int nthreads = std::min({static_cast<int>(hw), trials, 8});
  if (nthreads <= 1) {
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) worst = std::max(worst, fn(t));
    return worst;
  }

  std::atomic<int> next{0};
  std::vector<double> worst(nthreads, 0.0);
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (int w = 0; w < nthreads; ++w)
    pool.emplace_back([&, w] {
      for (;;) {
        int t = next.fetch_add(1);
        if (t >= trials) return;
        try {
          worst[w] = std::max(worst[w], fn(t));
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return *std::max_element(worst.begin(), worst.end());
}

}  // namespace curvlab
