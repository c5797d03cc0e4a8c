#include "cassini/circle_search.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace cassini {

std::span<const double> circle_table(std::size_t n) {
  static std::mutex mu;
  static std::map<std::size_t, std::unique_ptr<std::vector<double>>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) {
    auto t = std::make_unique<std::vector<double>>(2 * n);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
    for (std::size_t k = 0; k < n; ++k) {
      (*t)[2 * k] = std::cos(step * static_cast<double>(k));
      (*t)[2 * k + 1] = std::sin(step * static_cast<double>(k));
    }
    slot = std::move(t);
  }
  return *slot;
}

double wrap_angle(double theta) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double t = std::fmod(theta, two_pi);
  if (t <= -std::numbers::pi) t += two_pi;
  if (t > std::numbers::pi) t -= two_pi;
  return t;
}

}  // namespace cassini
