#ifndef ARTINDIV_PARALLEL_HPP_
#define ARTINDIV_PARALLEL_HPP_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace artindiv {

  // Maps f over [0, count) on up to `jobs` threads. Results are stored by
  // index, so the output does not depend on scheduling. The first exception
  // (by index) is rethrown after all workers finish.
  template <typename T, typename F>
  std::vector<T> parallel_map(std::size_t count, unsigned jobs, F const& f) {
    std::vector<std::optional<T>>   slots(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t>        next{0};
    auto                            worker = [&] {
      for (std::size_t i; (i = next++) < count;) {
        try {
          slots[i].emplace(f(i));
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    };
    unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
    if (n <= 1) {
      worker();
    } else {
      std::vector<std::thread> threads;
      for (unsigned t = 0; t < n; ++t) {
        threads.emplace_back(worker);
      }
      for (auto& t : threads) {
        t.join();
      }
    }
    for (auto const& e : errors) {
      if (e) {
        std::rethrow_exception(e);
      }
    }
    std::vector<T> out;
    out.reserve(count);
    for (auto& s : slots) {
      out.push_back(std::move(*s));
    }
    return out;
  }

}  // namespace artindiv

#endif  // ARTINDIV_PARALLEL_HPP_
