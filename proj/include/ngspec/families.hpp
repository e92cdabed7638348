#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ngspec/graph.hpp"

namespace ngspec {

enum class FamilyKind {
    complete,              // (n)
    empty,                 // (n)
    path,                  // (n)
    cycle,                 // (n), n >= 3
    complete_bipartite,    // (a, b)
    complete_split,        // (n, alpha): independent set of size alpha joined to K_{n-alpha}
    complete_multipartite, // (part sizes...)
    paley,                 // (p), p prime, p = 1 mod 4
    star,                  // (n): K_{1,n-1}
    join_clique_empty,     // (r, s): K_r joined to s independent vertices
};

struct FamilySpec {
    FamilyKind kind;
    std::vector<int> params;
};

std::string_view family_name(FamilyKind kind);
FamilyKind family_from_name(std::string_view name);

Graph make_family(const FamilySpec& spec);

bool is_prime(int p);

} // namespace ngspec
