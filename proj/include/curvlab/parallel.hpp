#pragma once

#include <functional>

namespace curvlab {

/// Max of fn(0), ..., fn(trials-1) over a small thread pool. fn must depend
/// only on its argument (derive per-trial seeds), so scheduling cannot
/// change the merged value; exceptions from workers are rethrown.
double max_over_trials(int trials, const std::function<double(int)>& fn);

}  // namespace curvlab
