#pragma once

#include <cstddef>

namespace slub {

// Serial is the reference path; Parallel must produce bit-identical results.
enum class Exec { Serial, Parallel };

template <class F>
void parallel_for(std::ptrdiff_t n, Exec exec, F&& f)
{
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < n; ++i)
            f(i);
    } else {
        for (std::ptrdiff_t i = 0; i < n; ++i)
            f(i);
    }
}

} // namespace slub
