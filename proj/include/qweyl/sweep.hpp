#pragma once

// Box windows [-R, R]^n of Z^n and serial / OpenMP sweeps over them.

#include <cstdint>
#include <exception>
#include <optional>
#include <vector>

namespace qweyl {

using Point = std::vector<std::int64_t>;

class Window {
public:
  Window(int n, std::int64_t radius) : n_(n), r_(radius) {
    size_ = 1;
    for (int i = 0; i < n; ++i) size_ *= static_cast<std::size_t>(2 * radius + 1);
  }

  int n() const { return n_; }
  std::int64_t radius() const { return r_; }
  std::size_t size() const { return size_; }

  Point point(std::size_t index) const {
    Point p(static_cast<std::size_t>(n_));
    auto side = static_cast<std::size_t>(2 * r_ + 1);
    for (int i = n_ - 1; i >= 0; --i) {
      p[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(index % side) - r_;
      index /= side;
    }
    return p;
  }

  bool contains(const Point& p, std::int64_t margin = 0) const {
    for (auto v : p) {
      if (v < -r_ + margin || v > r_ - margin) return false;
    }
    return true;
  }

  std::optional<std::size_t> index(const Point& p) const {
    if (!contains(p)) return std::nullopt;
    std::size_t idx = 0;
    auto side = static_cast<std::size_t>(2 * r_ + 1);
    for (auto v : p) idx = idx * side + static_cast<std::size_t>(v + r_);
    return idx;
  }

private:
  int n_;
  std::int64_t r_;
  std::size_t size_;
};

/// Calls f(index) for every window index in order.
template <class F>
void sweep_serial(const Window& w, F&& f) {
  for (std::size_t i = 0; i < w.size(); ++i) f(i);
}

/// Data-parallel sweep. f must only write to per-index slots; the first
/// exception raised by any iteration is rethrown after the loop.
template <class F>
void sweep_parallel(const Window& w, F&& f) {
  std::exception_ptr error;
  const auto count = static_cast<std::int64_t>(w.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      f(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(qweyl_sweep_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

enum class Exec { Serial, Parallel };

template <class F>
void sweep(const Window& w, Exec exec, F&& f) {
  if (exec == Exec::Parallel) {
    sweep_parallel(w, std::forward<F>(f));
  } else {
    sweep_serial(w, std::forward<F>(f));
  }
}

}  // namespace qweyl
