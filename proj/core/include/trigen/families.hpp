#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trigen/graph.hpp"

namespace trigen {

enum class FamilyKind { Prism, Wheel, K3pVariant, Complete, K5MinusE, Petersen };

/// size_param is r for wheels, p for K_{3,p} variants, n for complete
/// graphs; extra_edges (0..3) only applies to K_{3,p} variants.
struct FamilySpec {
    FamilyKind kind = FamilyKind::Prism;
    int size_param = 0;
    int extra_edges = 0;
};

Graph build(const FamilySpec& spec);

// Fixed reference labelings so fixtures and canonical codes are run-stable.
Graph prism();                        // triangles {0,1,2},{3,4,5}, matching (i,i+3)
Graph wheel(int r);                   // rim 0..r-1, hub r
Graph k3p_variant(int p, int extra);  // classes {0,1,2} and {3..p+2}
Graph complete(int n);
Graph k5_minus_e();
Graph petersen();

/// All prism-free 3-connected graphs of exactly rank r: {K4} at r=3,
/// {K5, K5\e, W4} at r=4, and {W_r, K_{3,r-2} and its three variants} for
/// r >= 5.
std::vector<Graph> dirac_catalog(int r);

bool is_wheel(const Graph& g);

std::string family_name(FamilyKind kind);
std::optional<FamilyKind> family_from_name(const std::string& name);

} // namespace trigen
