#include "illab/subspace.hpp"

namespace illab {

const char* to_string(LimitStatus s) { return s == LimitStatus::Converged ? "Converged" : "NotConverged"; }

SubspaceLimit subspace_limit(const std::vector<Frame>& frames, const SubspaceOptions& opts) {
  return subspace_limit_impl<double>(frames, opts);
}

}  // namespace illab
