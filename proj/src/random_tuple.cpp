#include "ofa/random_tuple.hpp"

#include <random>
#include <stdexcept>
#include <vector>

namespace ofa {

StringTuple random_tuple(std::size_t n, std::size_t m, std::size_t alphabet, std::uint64_t seed) {
  if (n == 0 || m == 0) throw std::invalid_argument("random_tuple: n and m must be positive");
  if (alphabet < 1 || alphabet > 26)
    throw std::invalid_argument("random_tuple: alphabet size must be in 1..26");
  if (alphabet == 1 && n > 1)
    throw std::invalid_argument(
        "random_tuple: a one-letter alphabet cannot keep adjacent strings distinct");

  std::mt19937_64 rng(seed);
  std::vector<std::u32string> strings;
  strings.reserve(n);
  while (strings.size() < n) {
    std::u32string s(m, U'a');
    for (std::size_t j = 0; j < m; ++j)
      s[j] = static_cast<Symbol>(U'a' + rng() % alphabet);
    if (!strings.empty() && s == strings.back()) continue;
    strings.push_back(std::move(s));
  }
  return StringTuple(std::move(strings));
}

}  // namespace ofa
