// Murnaghan-Nakayama recursions for symmetric and hyperoctahedral groups.
// Internal to the weyl module; the test suite re-derives these values through
// independent routes (explicit traces, Jacobi-Trudi determinants).

#pragma once

#include "qgreen/partition.hpp"
#include "qgreen/scalar.hpp"

namespace qgreen::rules {

// chi^lambda evaluated at the class of cycle type mu (|lambda| = |mu|).
Rational sym_char(const Partition& lambda, const Partition& mu);

// Irreducible character of B_n indexed by the bipartition (alpha, beta),
// evaluated at the class with positive cycle type lambda and negative cycle
// type mu.
Rational bip_char(const Bipartition& chr, const Bipartition& cls);

// All ways to remove a border strip of size k: (sign, remaining partition).
std::vector<std::pair<int, Partition>> strip_removals(const Partition& lambda, int k);

}  // namespace qgreen::rules
