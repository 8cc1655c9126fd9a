#include "symdom/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace symdom {

unsigned thread_count()
{
    if (const char* env = std::getenv("SYMDOM_THREADS")) {
        try {
            int v = std::stoi(env);
            if (v > 0)
                return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn)
{
    const std::size_t workers = std::min<std::size_t>(thread_count(), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < workers; ++t)
        pool.emplace_back(work);
    work();
    for (auto& th : pool)
        th.join();
    if (error)
        std::rethrow_exception(error);
}

}  // namespace symdom
