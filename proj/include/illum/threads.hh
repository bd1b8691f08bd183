#ifndef ILLUM_THREADS_HH
#define ILLUM_THREADS_HH

// Tiny deterministic work-sharing helper: split `count` independent jobs
// across a fixed number of threads.  Jobs are claimed from a shared atomic
// counter, so scheduling varies between runs, but each job writes only its
// own output slot; callers that assemble results in job order stay
// byte-deterministic regardless of the thread count.

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace illum {

// Effective worker count: explicit request, else ILLUM_THREADS, else the
// hardware concurrency (at least 1).
inline int resolve_thread_count(int requested = 0) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("ILLUM_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

// Run fn(job) for job = 0 .. count-1 on `threads` workers.  fn must only
// touch state owned by its job index.  Exceptions raised by jobs are
// rethrown on the calling thread (the first one by job order wins).
inline void parallel_for_jobs(int count, int threads, const std::function<void(int)>& fn) {
    if (count <= 0) return;
    threads = std::min(std::max(threads, 1), count);
    if (threads == 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::exception_ptr> errors(static_cast<size_t>(count));
    auto worker = [&] {
        for (;;) {
            const int job = next.fetch_add(1);
            if (job >= count) return;
            try {
                fn(job);
            } catch (...) {
                errors[static_cast<size_t>(job)] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace illum

#endif // ILLUM_THREADS_HH
