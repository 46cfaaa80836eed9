#ifndef IW_UTIL_HPP
#define IW_UTIL_HPP

#include <cstddef>
#include <functional>

namespace iw {

// Runs fn(k) for k in [0, count) across hardware threads.  Work items must be
// independent; callers preallocate result slots so output order is fixed
// regardless of scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace iw

#endif
