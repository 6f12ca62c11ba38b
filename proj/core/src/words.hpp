#pragma once

#include <vector>

#include "endograph/group.hpp"

// Internal helpers shared by group.cpp and morphism.cpp; not installed.
namespace endograph::detail {

// BFS over right multiplication by generators, recording how each element is
// reached so generator-image assignments can be evaluated over the whole
// group in one pass.
struct WordTable {
  std::vector<ElementId> order;  // BFS order, order[0] == 0
  std::vector<int> parent;       // parent element id, -1 for identity
  std::vector<int> via;          // generator index used from parent
};

WordTable bfs_words(const Group& g, const std::vector<ElementId>& gens);

// Evaluates the generator-image assignment across the word table, taking
// products in `target`. f[0] = 0, f[order[i]] = f[parent] * images[via].
void evaluate_words(const Group& target, const WordTable& wt,
                    const std::vector<ElementId>& images,
                    std::vector<ElementId>& f);

bool is_endomorphism_table(const Group& g, const std::vector<ElementId>& f);

}  // namespace endograph::detail
