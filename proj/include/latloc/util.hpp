#pragma once

#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace latloc {

// All library failures carry a stable machine-readable code (e.g. "NON_COCOMPACT",
// "FIBER_NOT_FOUND") so the CLI can map them to structured reports.
struct Error : std::runtime_error {
    std::string code;
    Error(std::string code_, const std::string& msg)
        : std::runtime_error(code_ + ": " + msg), code(std::move(code_)) {}
};

// Chunked parallel loop over [0, n). With threads <= 1 runs inline. The body must be
// safe to run concurrently for distinct indices; result merging is the caller's job.
template <typename Fn>
void parallel_for(int n, int threads, Fn&& body) {
    if (threads <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    int workers = std::min(threads, n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) {
        pool.emplace_back([&, t] {
            for (int i = t; i < n; i += workers) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace latloc
