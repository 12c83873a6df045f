#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pisot/word.hpp"

namespace pisot {

/// An elementary Nielsen automorphism together with its inverse.
struct NielsenMove {
  Endomorphism map;
  Endomorphism inverse;
  std::string label;
};

/// Transpositions of two generators, inversion of one generator, and
/// x_i -> x_i x_j^(+-1), x_i -> x_j^(+-1) x_i for i != j.
const std::vector<NielsenMove>& nielsen_moves(int rank = kDefaultRank);

/// Exact integer determinant (fraction-free elimination).
std::int64_t determinant(std::vector<std::vector<std::int64_t>> m);

struct InversionOptions {
  int max_depth = 12;
  std::size_t expansion_budget = 200'000;
};

/// Inverse of an automorphism found by length-guided search over products of
/// Nielsen moves. Throws NotInvertible when the abelianization is not
/// unimodular; returns nullopt when the search gives up.
std::optional<Endomorphism> invert_automorphism(const Endomorphism& phi, int max_depth = 12);
std::optional<Endomorphism> invert_automorphism(const Endomorphism& phi,
                                                const InversionOptions& options);

}  // namespace pisot
