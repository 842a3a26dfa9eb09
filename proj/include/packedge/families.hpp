#pragma once

#include <string>

#include "packedge/graph.hpp"

namespace packedge {

enum class Family {
  Petersen,
  Tietze,
  GeneralizedPetersen,  // n >= 3, 1 <= k < n/2
  FlowerSnark,          // odd n >= 3
  Prism,                // n >= 3
  TreeT,                // i >= 1
  TreeTPrime,           // i >= 1
  Fig6,                 // smallest non-(1,1,2,2,2)-colorable cubic graph
};

struct FamilySpec {
  Family family = Family::Petersen;
  int n = 0;
  int k = 0;
  int i = 0;

  static FamilySpec petersen() { return {Family::Petersen}; }
  static FamilySpec tietze() { return {Family::Tietze}; }
  static FamilySpec fig6() { return {Family::Fig6}; }
  static FamilySpec gp(int n, int k) { return {Family::GeneralizedPetersen, n, k}; }
  static FamilySpec flower(int n) { return {Family::FlowerSnark, n}; }
  static FamilySpec prism(int n) { return {Family::Prism, n}; }
  static FamilySpec tree(int i) { return {Family::TreeT, 0, 0, i}; }
  static FamilySpec tree_prime(int i) { return {Family::TreeTPrime, 0, 0, i}; }

  std::string name() const;
};

// Vertex numbering:
//   GP(n,k)   outer cycle 0..n-1, inner n..2n-1, spokes i--n+i,
//             inner edges n+i -- n+((i+k) mod n).
//   Prism(n)  = GP(n,1).
//   Petersen  = GP(5,2).
//   J_n       centres a_i = i, b_i = n+i, c_i = 2n+i, d_i = 3n+i; b's form an
//             n-cycle, c_0..c_{n-1} d_0..d_{n-1} form one 2n-cycle.
//   T_i/T'_i  BFS order from the centre 0; each generation appends two leaves
//             to every degree-1 vertex in increasing index order.
Graph generate(const FamilySpec& spec);

/// Largest line-graph distance. Throws DomainError for disconnected graphs
/// or graphs without edges.
int line_graph_diameter(const Graph& g);

}  // namespace packedge
