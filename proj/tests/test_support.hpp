#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ofa/commonality_index.hpp"
#include "ofa/cost_model.hpp"
#include "ofa/dp_solver.hpp"
#include "ofa/random_tuple.hpp"
#include "ofa/string_tuple.hpp"

namespace support {

inline bool same_tables(const ofa::DpTables& a, const ofa::DpTables& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t i2 = i; i2 < a.size(); ++i2) {
      if (a.d(i, i2) != b.d(i, i2)) return false;
      if (i < i2 && a.kstar(i, i2) != b.kstar(i, i2)) return false;
    }
  return true;
}

// Worked 4x3 example with optimum 10; several expected values in the
// tests below are hand-derived from it.
inline ofa::StringTuple example4x3() {
  return ofa::StringTuple::parse("aaa\nbbc\naab\nacb\n");
}

// Positions common to S_i..S_i2, by direct scan. Reference for the
// precomputed tables, so it must not touch CommonalityIndex.
inline std::vector<std::size_t> com_by_scan(const ofa::StringTuple& t, std::size_t i,
                                            std::size_t i2) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < t.length(); ++k) {
    bool same = true;
    for (std::size_t r = i; r < i2 && same; ++r) same = t.at(r, k) == t.at(r + 1, k);
    if (same) out.push_back(k);
  }
  return out;
}

inline std::vector<ofa::Run> runs_by_scan(const ofa::StringTuple& t, std::size_t i, std::size_t i2,
                                          std::size_t k) {
  std::vector<ofa::Run> out;
  std::size_t j = i;
  while (j <= i2) {
    std::size_t j2 = j;
    while (j2 + 1 <= i2 && t.at(j2 + 1, k) == t.at(j, k)) ++j2;
    out.push_back(ofa::Run{j, j2, t.at(j, k)});
    j = j2 + 1;
  }
  return out;
}

// Edge count of the order-respecting trie that tests `ks` in list
// order, splitting children at maximal runs. An automaton the solver
// could always fall back to, hence an upper bound on its optimum.
inline std::size_t fixed_order_trie_size(const ofa::StringTuple& t, std::size_t i, std::size_t i2,
                                         const std::vector<std::size_t>& ks, std::size_t idx = 0) {
  if (idx == ks.size()) return 0;
  std::size_t total = 0;
  for (const ofa::Run& r : runs_by_scan(t, i, i2, ks[idx]))
    total += 1 + fixed_order_trie_size(t, r.first, r.last, ks, idx + 1);
  return total;
}

struct Drawn {
  ofa::StringTuple tuple;
  std::size_t n, m, alphabet;
  std::uint64_t seed;
};

// Deterministic instance: n in [1,max_n], m in [1,max_m], two- or
// three-letter alphabet, everything derived from the seed.
inline Drawn draw_instance(std::uint64_t seed, std::size_t max_n, std::size_t max_m) {
  std::mt19937_64 rng(seed);
  const std::size_t n = 1 + rng() % max_n;
  const std::size_t m = 1 + rng() % max_m;
  const std::size_t alphabet = 2 + rng() % 2;
  return {ofa::random_tuple(n, m, alphabet, rng()), n, m, alphabet, seed};
}

// Entries drawn from [0,5]: choice per position, unify per
// (position, alphabet symbol) on top of a drawn default.
inline ofa::CostModel draw_cost_model(std::size_t m, std::size_t alphabet, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<ofa::Cost> choice(m);
  for (ofa::Cost& c : choice) c = static_cast<ofa::Cost>(rng() % 6);
  ofa::CostModel model(std::move(choice), static_cast<ofa::Cost>(rng() % 6));
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t s = 0; s < alphabet; ++s)
      model.set_unify(k, static_cast<ofa::Symbol>(U'a' + s), static_cast<ofa::Cost>(rng() % 6));
  return model;
}

}  // namespace support
