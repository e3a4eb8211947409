#pragma once

// Test-side oracles, implemented independently of the library's strategy,
// Smith-form, and critical-pair code paths wherever they are used to judge
// those paths.

#include <optional>
#include <random>
#include <set>
#include <vector>

#include "trsbound/int_matrix.hpp"
#include "trsbound/term.hpp"
#include "trsbound/trs.hpp"

namespace trsbound::testing {

/// Every result of a single rewrite step on t: any rule, any position.
std::vector<Term> all_rewrites(const Trs& trs, const Term& t);

/// All normal forms reachable from t, by exhaustive breadth-first search
/// over distinct terms.  nullopt when more than max_terms distinct terms
/// are visited (non-terminating or too large).
std::optional<std::set<Term>> reachable_normal_forms(const Trs& trs, const Term& t,
                                                     int max_terms = 20000);

/// A random term over sig with variables x1..xn_vars, at most max_depth deep.
Term random_term(std::mt19937& rng, const Signature& sig, int max_depth, int n_vars,
                 bool allow_var = true);

/// Random small systems that are provably terminating (every rule strictly
/// shrinks terms and duplicates no variable) and exhaustively checked to be
/// locally confluent, with degree 0 or prime.  Deterministic in the seed.
std::vector<Trs> random_complete_corpus(unsigned seed, int count);

/// Elementary divisors via the gcd-of-k-by-k-minors characterization:
/// d_k = gcd(all k-minors) / gcd(all (k-1)-minors), stopping at the first k
/// whose minors are all zero.
std::vector<Int> divisors_by_minors(const IntMatrix& a);

}  // namespace trsbound::testing
