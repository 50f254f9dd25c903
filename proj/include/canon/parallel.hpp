#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <optional>
#include <vector>

namespace canon {

// threads <= 0 means the OpenMP default.
int resolve_threads(int threads);

// Runs work(i) for i in [0, count) and passes each result to emit(i, result) in index
// order. With one thread, work and emit alternate and nothing is buffered. Otherwise
// windows of 2 * threads items are computed in parallel, then emitted in order.
// emit returns false to stop; remaining items are not started. An exception from
// work surfaces when its item would be emitted.
template <class Work, class Emit>
void run_ordered(std::size_t count, int threads, Work &&work, Emit &&emit) {
    threads = resolve_threads(threads);
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i)
            if (!emit(i, work(i)))
                return;
        return;
    }
    using Result = decltype(work(std::size_t{}));
    const std::size_t window = 2 * static_cast<std::size_t>(threads);
    std::vector<std::optional<Result>> slots(window);
    std::vector<std::exception_ptr> errors(window);
    for (std::size_t base = 0; base < count; base += window) {
        const std::size_t len = std::min(window, count - base);
        const long long signed_len = static_cast<long long>(len);
#pragma omp parallel for schedule(dynamic) num_threads(threads)
        for (long long k = 0; k < signed_len; ++k) {
            try {
                slots[k].emplace(work(base + static_cast<std::size_t>(k)));
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
        for (std::size_t k = 0; k < len; ++k) {
            if (errors[k])
                std::rethrow_exception(errors[k]);
            Result r = std::move(*slots[k]);
            slots[k].reset();
            if (!emit(base + k, std::move(r)))
                return;
        }
    }
}

} // namespace canon
