// Copyright 2025 The emsf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <memory>
#include <mutex>
#include <thread>
#include <vector>

namespace emsf {

namespace detail {
inline thread_local bool tls_inside_pool = false;
}

// Persistent worker pool. parallel_for splits [0, n) into contiguous chunks;
// which thread runs a chunk is scheduler-dependent, but every chunk's content
// is a pure function of its index, so results are independent of thread count
// and scheduling. Nested calls (from inside a chunk) run inline and serial.
class ThreadPool {
 public:
  static ThreadPool& instance() {
    static ThreadPool pool;
    return pool;
  }

  int threads() const { return n_threads_; }

  void set_threads(int n) {
    n = std::clamp(n, 1, 256);
    if (n == n_threads_) return;
    stop_workers();
    n_threads_ = n;
    start_workers();
  }

  void for_range(int64_t n, int64_t grain,
                 std::function<void(int64_t, int64_t)> fn) {
    if (n <= 0) return;
    if (grain < 1) grain = 1;
    const int64_t max_chunks = (n + grain - 1) / grain;
    const int64_t n_chunks = std::min<int64_t>(n_threads_, max_chunks);
    if (n_chunks <= 1 || detail::tls_inside_pool || workers_.empty()) {
      detail::tls_inside_pool = true;
      fn(0, n);
      detail::tls_inside_pool = false;
      return;
    }

    auto job = std::make_shared<Job>();
    job->fn = std::move(fn);
    job->n = n;
    job->chunks = n_chunks;
    {
      std::lock_guard<std::mutex> lk(mu_);
      job_ = job;
      ++generation_;
    }
    cv_.notify_all();

    run_chunks(*job);  // caller participates

    std::unique_lock<std::mutex> lk(mu_);
    done_cv_.wait(lk, [&] { return job->done.load() >= job->chunks; });
    job_.reset();
  }

 private:
  struct Job {
    std::function<void(int64_t, int64_t)> fn;
    int64_t n = 0;
    int64_t chunks = 0;
    std::atomic<int64_t> next{0};
    std::atomic<int64_t> done{0};
  };

  ThreadPool() {
    int n = static_cast<int>(std::thread::hardware_concurrency());
    if (const char* env = std::getenv("EMSF_THREADS")) {
      int e = std::atoi(env);
      if (e >= 1) n = e;
    }
    n_threads_ = std::clamp(n, 1, 256);
    start_workers();
  }

  ~ThreadPool() { stop_workers(); }

  // A worker that arrives late simply sees next >= chunks and leaves; the
  // shared_ptr keeps the job (and its fn) alive until the last reference drops.
  void run_chunks(Job& job) {
    detail::tls_inside_pool = true;
    for (;;) {
      const int64_t c = job.next.fetch_add(1, std::memory_order_relaxed);
      if (c >= job.chunks) break;
      const int64_t begin = c * job.n / job.chunks;
      const int64_t end = (c + 1) * job.n / job.chunks;
      job.fn(begin, end);
      if (job.done.fetch_add(1) + 1 == job.chunks) {
        std::lock_guard<std::mutex> lk(mu_);
        done_cv_.notify_all();
      }
    }
    detail::tls_inside_pool = false;
  }

  void worker_loop() {
    uint64_t seen = 0;
    for (;;) {
      std::shared_ptr<Job> job;
      {
        std::unique_lock<std::mutex> lk(mu_);
        cv_.wait(lk, [&] { return stop_ || generation_ != seen; });
        if (stop_) return;
        seen = generation_;
        job = job_;
      }
      if (job) run_chunks(*job);
    }
  }

  void start_workers() {
    stop_ = false;
    for (int i = 1; i < n_threads_; ++i) {
      workers_.emplace_back([this] { worker_loop(); });
    }
  }

  void stop_workers() {
    {
      std::lock_guard<std::mutex> lk(mu_);
      stop_ = true;
    }
    cv_.notify_all();
    for (auto& w : workers_) w.join();
    workers_.clear();
  }

  std::mutex mu_;
  std::condition_variable cv_;
  std::condition_variable done_cv_;
  std::vector<std::thread> workers_;
  bool stop_ = false;
  int n_threads_ = 1;
  uint64_t generation_ = 0;
  std::shared_ptr<Job> job_;
};

inline void set_num_threads(int n) { ThreadPool::instance().set_threads(n); }
inline int num_threads() { return ThreadPool::instance().threads(); }

template <class F>
inline void parallel_for(int64_t n, int64_t grain, F&& fn) {
  ThreadPool::instance().for_range(n, grain, std::forward<F>(fn));
}

template <class F>
inline void parallel_for(int64_t n, F&& fn) {
  parallel_for(n, 1, std::forward<F>(fn));
}

}  // namespace emsf
