#include "hubsim/nvme/queue.hpp"

// Ring is header-only; this TU anchors the template's typical instantiations
// so debug builds don't re-instantiate per test file.
namespace hubsim::nvme {
template class Ring<NvmeCommand>;
template class Ring<Completion>;
} // namespace hubsim::nvme
