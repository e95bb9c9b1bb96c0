#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ecodim/matroid.hpp"
#include "ecodim/subsets.hpp"

namespace ecodim::kernels {

// The subset-scan kernels below exist in two variants: a serial reference
// and an OpenMP one. The unsuffixed entry point dispatches on problem size.
// Both variants return identical results (the parallel witnesses are
// reduced to the lexicographically smallest).

struct AxiomWitness {
  Axiom axiom;
  Mask f = 0;
  int x = 0;
  int y = 0;
};

std::optional<AxiomWitness> check_rank_axioms_serial(
    const std::vector<std::uint8_t>& table, int n);
std::optional<AxiomWitness> check_rank_axioms_parallel(
    const std::vector<std::uint8_t>& table, int n);
std::optional<AxiomWitness> check_rank_axioms(
    const std::vector<std::uint8_t>& table, int n);

// rk(S) = max over bases B of #(S & B).
std::vector<std::uint8_t> rank_from_bases_serial(int n,
                                                 const std::vector<Mask>& bases);
std::vector<std::uint8_t> rank_from_bases_parallel(
    int n, const std::vector<Mask>& bases);
std::vector<std::uint8_t> rank_from_bases(int n, const std::vector<Mask>& bases);

// comp[e-1] = intersection of all separators containing e. With the table of
// a matroid this is exactly its connected-component partition.
std::vector<Mask> component_meet_serial(const std::vector<std::uint8_t>& table,
                                        int n);
std::vector<Mask> component_meet_parallel(const std::vector<std::uint8_t>& table,
                                          int n);
std::vector<Mask> component_meet(const std::vector<std::uint8_t>& table, int n);

// Dense (n+1)^3 cube of pair counts for the trivariate generating function:
// counts[(a*(n+1)+b)*(n+1)+c] = #{S subseteq T : #S-rk S = a, k-rk T = b,
// #T-#S = c}. Iterates nested pairs via submask enumeration (3^n steps).
std::vector<std::uint64_t> nested_pair_counts_serial(
    const std::vector<std::uint8_t>& table, int n);
std::vector<std::uint64_t> nested_pair_counts_parallel(
    const std::vector<std::uint8_t>& table, int n);
std::vector<std::uint64_t> nested_pair_counts(
    const std::vector<std::uint8_t>& table, int n);

}  // namespace ecodim::kernels
