#pragma once

#include <optional>

#include "modcat/cat_d.hpp"

namespace modcat {

using CycMatrix = std::vector<std::vector<Cyclotomic>>;

struct RelationReport {
    struct Item {
        std::string name;
        bool holds = false;
        std::string witness;  // first failing coordinate, empty if holds
    };
    std::vector<Item> items;
    bool all() const;
    const Item* find(const std::string& name) const;
};

struct ModularData {
    std::vector<int> order;    // permutation of simple indices (matrix order)
    std::vector<std::string> labels;
    CycMatrix s_tilde;
    CycMatrix t_mat;           // diagonal of Theta
    CycMatrix c_mat;           // charge conjugation permutation
    std::optional<CycMatrix> s_normalized;  // S~ / sqrt(P+P-) when the root is rational
    Cyclotomic p_plus, p_minus;
    std::optional<Rational> sqrt_pp;        // sqrt(P+ P-) when exact
    RelationReport report;
};

/// Closed-form S~ entry: the categorical trace of the double braiding on
/// V (x) W in its group-character form (sum over grade pairs of transported
/// fiber characters).
Cyclotomic s_tilde_entry(const CategoryD& cat, const SimpleObjectD& V, const SimpleObjectD& W);

/// Build all matrices and evaluate the relation report. `ordering` permutes
/// the simples (matrix row k describes simples()[ordering[k]]).
ModularData build_modular_data(const CategoryD& cat, std::vector<int> ordering = {},
                               std::vector<std::string> labels = {}, int threads = 1);

struct ModularityReport {
    bool finitely_many = false;
    bool schur_labels_distinct = false;
    bool s_invertible = false;
    bool all() const { return finitely_many && schur_labels_distinct && s_invertible; }
};

ModularityReport verify_modular(const CategoryD& cat, const ModularData& md);

// small exact matrix helpers
CycMatrix mat_mul(const CycMatrix& a, const CycMatrix& b);
bool mat_equal(const CycMatrix& a, const CycMatrix& b, std::string* witness = nullptr);
CycMatrix mat_scale(const CycMatrix& a, const Cyclotomic& c);
Cyclotomic mat_det(CycMatrix a);

}  // namespace modcat
