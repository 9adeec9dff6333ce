#pragma once

#include <cstdint>
#include <random>

#include "highwater/element.hpp"
#include "highwater/report.hpp"

namespace highwater {

/// Random element with at most `support` terms over keys with indices in [-index_bound, index_bound].
/// Coefficients are small fractions.
Element random_element(const Field& F, std::mt19937_64& rng, std::size_t support, long index_bound = 12);

/// Random ideal generator with a-, s- and p-parts and at most `support` terms. Most samples have
/// weight zero and an a-part that is a multiple of a short ideal-type pattern.
Element random_generator(const Field& F, std::mt19937_64& rng, std::size_t support);

/// weight(xy) = weight(x)weight(y) and (xy, z) = (x, yz) on random triples.
Report baric_frobenius_check(const Field& F, std::size_t samples, std::size_t support, std::uint64_t seed);

/// For ideals of random generators: basis elements are members, generators reduce to zero,
/// tau(1) preserves the ideal and a0 is not in any proper ideal.
Report ideal_engine_check(const Field& F, std::size_t samples, std::size_t support, std::uint64_t seed);

/// Random monic tuples up to length max_k: the ideal they define, regenerated from a few of its elements,
/// gives back the same tuple and has codimension 2(k-1) in J. Also (p(1,3)) = J up to level 12.
Report jideal_check(const Field& F, long max_k, std::size_t samples, std::uint64_t seed);

}  // namespace highwater
