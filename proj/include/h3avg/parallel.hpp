#ifndef H3AVG_PARALLEL_HPP
#define H3AVG_PARALLEL_HPP

#include <cmath>
#include <condition_variable>
#include <functional>
#include <map>
#include <mutex>
#include <thread>
#include <vector>

namespace h3avg {

int default_threads();

// Runs compute(i) for i in [0, n) across `threads` workers and calls
// deliver(i, result) strictly in index order on the calling thread.  The
// in-flight window is bounded, so results never pile up; output is
// byte-identical for any thread count.
template <class T>
void parallel_ordered(long long n, int threads,
                      const std::function<T(long long)>& compute,
                      const std::function<void(long long, T&)>& deliver) {
    if (threads <= 0) threads = default_threads();
    if (n <= 0) return;
    if (threads == 1) {
        for (long long i = 0; i < n; ++i) {
            T r = compute(i);
            deliver(i, r);
        }
        return;
    }

    std::mutex mtx;
    std::condition_variable cv_work, cv_done;
    std::map<long long, T> ready;
    long long next_claim = 0, next_deliver = 0;
    const long long window = 2 * threads + 2;
    bool failed = false;
    std::exception_ptr error;

    auto worker = [&]() {
        for (;;) {
            long long i;
            {
                std::unique_lock<std::mutex> lk(mtx);
                cv_work.wait(lk, [&] {
                    return failed || next_claim >= n || next_claim < next_deliver + window;
                });
                if (failed || next_claim >= n) return;
                i = next_claim++;
            }
            try {
                T r = compute(i);
                std::lock_guard<std::mutex> lk(mtx);
                ready.emplace(i, std::move(r));
                cv_done.notify_all();
            } catch (...) {
                std::lock_guard<std::mutex> lk(mtx);
                failed = true;
                if (!error) error = std::current_exception();
                cv_done.notify_all();
                cv_work.notify_all();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);

    while (next_deliver < n) {
        T item;
        {
            std::unique_lock<std::mutex> lk(mtx);
            cv_done.wait(lk, [&] { return failed || ready.count(next_deliver); });
            if (failed) break;
            item = std::move(ready.at(next_deliver));
            ready.erase(next_deliver);
        }
        deliver(next_deliver, item);
        {
            std::lock_guard<std::mutex> lk(mtx);
            ++next_deliver;
        }
        cv_work.notify_all();
    }
    {
        std::lock_guard<std::mutex> lk(mtx);
        if (!failed) next_claim = n;   // let idle workers exit
        cv_work.notify_all();
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

// Neumaier compensated accumulator; fixed-order sums are reproducible.
struct KahanSum {
    double sum = 0, comp = 0;
    void add(double v) {
        double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

} // namespace h3avg

#endif
