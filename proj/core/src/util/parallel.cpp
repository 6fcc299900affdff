#include <lvcert/util/parallel.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace lvcert {

int default_jobs()
{
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body)
{
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&]() {
        for (std::size_t i = next++; i < count && !failed; i = next++) {
            try {
                body(i);
            }
            catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                failed = true;
            }
        }
    };

    int threads = static_cast<int>(std::min<std::size_t>(std::max(1, jobs), std::max<std::size_t>(count, 1)));
    {
        std::vector<std::jthread> pool;
        for (int k = 1; k < threads; ++k)
            pool.emplace_back(worker);
        worker();
    }
    if (error)
        std::rethrow_exception(error);
}

}  // namespace lvcert
