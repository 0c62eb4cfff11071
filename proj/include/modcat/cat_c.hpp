#pragma once

#include "modcat/chartable.hpp"
#include "modcat/matched_pair.hpp"

namespace modcat {

struct GradingNotRespected : GroupError {
    GradingNotRespected() : GroupError("module action does not respect the grading") {}
};

/// Simple object of the coset category: an orbit of <| on M together with
/// an irreducible character of the base-point stabilizer in G.
struct SimpleObjectC {
    std::vector<int> orbit;   // sorted M points
    int base = 0;             // smallest index in orbit
    std::vector<int> stab;    // {u in G : base <| u = base}, sorted
    ClassFunction chi;        // irreducible character of stab
    int table_row = 0;        // row index in character_table(stab)
};

std::vector<SimpleObjectC> simples_C(const CosetFactorization& f);

/// Dual object: orbit of left inverses, with the base-point character
/// obtained from chi_{(V*)_{s^L}}(s |> z) = chi_{(V_s)*}(z) and transport.
SimpleObjectC dual_C(const CosetFactorization& f, const SimpleObjectC& V);

/// Explicit M-graded G-module: grades per basis vector and one matrix per
/// element of G (by position in G.elements), row convention
/// (xi_i <|bar u) = sum_j act[u][i][j] xi_j.
struct GradedModuleC {
    std::vector<int> grades;                               // M points
    std::vector<std::vector<std::vector<Cyclotomic>>> act; // [G position][i][j]
};

/// Multiplicities of each simple (by index into simples) in T.
std::vector<int> decompose_graded_module(const CosetFactorization& f,
                                         const std::vector<SimpleObjectC>& simples,
                                         const GradedModuleC& T);

/// True iff the two simples are isomorphic: same orbit and the characters
/// agree after transport to a common base point.
bool isomorphic_C(const CosetFactorization& f, const SimpleObjectC& a, const SimpleObjectC& b);

/// A connecting element u with s <| u = t, breadth-first from s.
int connect_in_orbit(const CosetFactorization& f, int s, int t);

}  // namespace modcat
