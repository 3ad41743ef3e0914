// Copyright (c) 2026 The pig authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <atomic>
#include <condition_variable>
#include <functional>
#include <mutex>
#include <queue>
#include <thread>
#include <vector>

namespace pig {

// Fixed-size worker pool. Tasks write to caller-owned slots; callers reduce
// results in task order so run results stay deterministic regardless of
// scheduling.
class ThreadPool {
public:
    explicit ThreadPool(int workers) {
        if (workers < 1) workers = 1;
        for (int i = 0; i < workers; ++i) {
            threads_.emplace_back([this] { worker_loop(); });
        }
    }
    ~ThreadPool() {
        {
            std::lock_guard<std::mutex> lk(mu_);
            stopping_ = true;
        }
        cv_.notify_all();
        for (auto& t : threads_) t.join();
    }

    ThreadPool(const ThreadPool&) = delete;
    ThreadPool& operator=(const ThreadPool&) = delete;

    int size() const { return int(threads_.size()); }

    // Runs all tasks, blocks until done. Exceptions are rethrown (first one).
    void run_tasks(std::vector<std::function<void()>> tasks) {
        if (tasks.empty()) return;
        if (threads_.size() == 1 || tasks.size() == 1) {
            for (auto& t : tasks) t();
            return;
        }
        std::atomic<size_t> remaining{tasks.size()};
        std::exception_ptr err;
        std::mutex err_mu;
        std::condition_variable done_cv;
        std::mutex done_mu;
        {
            std::lock_guard<std::mutex> lk(mu_);
            for (auto& t : tasks) {
                queue_.push([&, task = std::move(t)] {
                    try {
                        task();
                    } catch (...) {
                        std::lock_guard<std::mutex> elk(err_mu);
                        if (!err) err = std::current_exception();
                    }
                    if (remaining.fetch_sub(1) == 1) {
                        std::lock_guard<std::mutex> dlk(done_mu);
                        done_cv.notify_all();
                    }
                });
            }
        }
        cv_.notify_all();
        std::unique_lock<std::mutex> dlk(done_mu);
        done_cv.wait(dlk, [&] { return remaining.load() == 0; });
        if (err) std::rethrow_exception(err);
    }

    // Static chunking: item i handled by chunk i / chunk_size; chunk results
    // must be independent.
    void parallel_for(int n, const std::function<void(int)>& fn) {
        if (n <= 0) return;
        int w = int(threads_.size());
        if (w == 1 || n == 1) {
            for (int i = 0; i < n; ++i) fn(i);
            return;
        }
        int chunks = std::min(n, w * 4);
        std::vector<std::function<void()>> tasks;
        tasks.reserve(chunks);
        for (int c = 0; c < chunks; ++c) {
            int lo = int(int64_t(n) * c / chunks);
            int hi = int(int64_t(n) * (c + 1) / chunks);
            tasks.push_back([lo, hi, &fn] {
                for (int i = lo; i < hi; ++i) fn(i);
            });
        }
        run_tasks(std::move(tasks));
    }

private:
    void worker_loop() {
        for (;;) {
            std::function<void()> job;
            {
                std::unique_lock<std::mutex> lk(mu_);
                cv_.wait(lk, [this] { return stopping_ || !queue_.empty(); });
                if (stopping_ && queue_.empty()) return;
                job = std::move(queue_.front());
                queue_.pop();
            }
            job();
        }
    }

    std::vector<std::thread> threads_;
    std::queue<std::function<void()>> queue_;
    std::mutex mu_;
    std::condition_variable cv_;
    bool stopping_ = false;
};

}  // namespace pig
