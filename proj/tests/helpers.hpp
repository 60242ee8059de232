#ifndef FOLRES_TESTS_HELPERS_HPP
#define FOLRES_TESTS_HELPERS_HPP

#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "folres/ideal.hpp"
#include "folres/linalg.hpp"
#include "folres/parse.hpp"

namespace folres::testing {

/// Seed for randomized property tests; FOLRES_SEED overrides.
inline std::uint64_t test_seed() {
  if (const char* s = std::getenv("FOLRES_SEED")) return std::strtoull(s, nullptr, 10);
  return 20437;
}

inline std::mt19937_64 make_rng(std::uint64_t salt = 0) { return std::mt19937_64(test_seed() + salt); }

inline Poly random_poly(std::mt19937_64& rng, const RingPtr& ring, unsigned max_deg,
                        unsigned max_terms) {
  std::uniform_int_distribution<unsigned> nterms(0, max_terms);
  std::uniform_int_distribution<unsigned> deg(0, max_deg);
  std::uniform_int_distribution<std::uint32_t> coeff(0, ring->p() - 1);
  Poly f = Poly::zero(ring);
  unsigned k = nterms(rng);
  for (unsigned t = 0; t < k; ++t) {
    Exp e(ring->nvars(), 0);
    unsigned d = deg(rng);
    std::uniform_int_distribution<std::size_t> pick(0, ring->nvars() - 1);
    for (unsigned j = 0; j < d; ++j) e[pick(rng)] += 1;
    f.add_term(e, Fp(coeff(rng), ring->p()));
  }
  return f;
}

inline Poly random_nonzero_poly(std::mt19937_64& rng, const RingPtr& ring, unsigned max_deg,
                                unsigned max_terms) {
  for (;;) {
    Poly f = random_poly(rng, ring, max_deg, max_terms);
    if (!f.is_zero()) return f;
  }
}

inline std::vector<Exp> monomials_up_to(const RingPtr& ring, unsigned max_deg) {
  std::vector<Exp> out;
  Exp cur(ring->nvars(), 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i == ring->nvars()) {
      out.push_back(cur);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      cur[i] = e;
      rec(i + 1, left - e);
    }
    cur[i] = 0;
  };
  rec(0, max_deg);
  return out;
}

/// Independent ideal-membership oracle: decide whether f = sum q_i g_i with
/// deg q_i <= bound by plain linear algebra over the monomial basis. Used to
/// cross-check the Groebner route; deliberately avoids it.
inline bool brute_force_membership(const Poly& f, const std::vector<Poly>& gens, unsigned bound) {
  const RingPtr& ring = f.ring();
  unsigned target_deg = bound;
  for (const auto& g : gens) target_deg = std::max(target_deg, bound + g.degree());
  target_deg = std::max(target_deg, f.degree());

  std::vector<Exp> rows = monomials_up_to(ring, target_deg);
  std::map<Exp, std::size_t> row_of;
  for (std::size_t i = 0; i < rows.size(); ++i) row_of[rows[i]] = i;

  std::vector<Exp> mults = monomials_up_to(ring, bound);
  std::size_t ncols = gens.size() * mults.size();
  FpMatrix m(rows.size(), ncols + 1, ring->p());
  std::size_t col = 0;
  for (const auto& g : gens) {
    for (const auto& e : mults) {
      Poly prod = g.times_term(e, Fp(1, ring->p()));
      for (const auto& [me, mc] : prod.terms()) m.at(row_of.at(me), col) = mc;
      ++col;
    }
  }
  for (const auto& [me, mc] : f.terms()) m.at(row_of.at(me), ncols) = mc;

  // solvable iff augmenting does not raise the rank
  FpMatrix a(rows.size(), ncols, ring->p());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < ncols; ++c) a.at(r, c) = m.at(r, c);
  return a.rank() == m.rank();
}

}  // namespace folres::testing

#endif
