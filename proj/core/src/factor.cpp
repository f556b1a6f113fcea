#include "curvecount/factor.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace curvecount {

PolyFp find_irreducible(std::uint32_t p, int k) {
  if (k < 1) throw std::invalid_argument("extension degree must be at least 1");
  const PrimeField F(p);
  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, int>, PolyFp> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find({p, k}); it != cache.end()) return it->second;
  }
  PolyRing<PrimeField> R(F);
  PolyFp found;
  if (k == 1) {
    found = R.x();
  } else {
    // Counter over the k lower coefficients, constant term least significant.
    std::vector<std::uint32_t> c(static_cast<std::size_t>(k) + 1, 0);
    c.back() = 1;
    for (;;) {
      PolyFp f = R.make(c);
      if (is_irreducible(R, f)) {
        found = std::move(f);
        break;
      }
      std::size_t i = 0;
      while (i < static_cast<std::size_t>(k) && ++c[i] == p) c[i++] = 0;
      if (i == static_cast<std::size_t>(k)) throw std::logic_error("no irreducible polynomial found");
    }
  }
  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(std::pair{p, k}, found);
  return found;
}

}  // namespace curvecount
