#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sinv/homology.hpp"
#include "sinv/simplicial_complex.hpp"

namespace sinv {

/// Edge-path group presentation: one generator per non-tree edge, one relator
/// per triangle. Words are freely reduced sequences of (generator, exponent)
/// with exponents +-1.
struct GroupPresentation {
    using Word = std::vector<std::pair<int, int>>;

    std::vector<Simplex> generators;  // edges outside the spanning tree
    std::vector<Word> relators;

    /// "< x1, x2 | x1 x2 x1^-1, ... >" with generators named x1..xn.
    std::string to_string() const;
};

/// Breadth-first spanning tree from the least vertex; n-1 edges. Throws
/// DomainError if the 1-skeleton is disconnected.
std::vector<Simplex> spanning_tree(const SimplicialComplex& complex);

/// Edge-path presentation of the fundamental group relative to the BFS
/// spanning tree: each 2-face w0w1w2 contributes (w0w1)(w1w2)(w0w2)^-1 with
/// tree-edge factors elided; empty relators are dropped.
GroupPresentation presentation(const SimplicialComplex& complex);

/// First homology of the presented group: Smith reduction of the
/// exponent-sum matrix.
AbelianGroup abelianization(const GroupPresentation& presentation);

/// Tietze cleanup: kills generators with length-1 relators (substituting the
/// identity), drops empty and duplicate relators (a relator equal to another
/// one or to its inverse). Preserves the abelianization.
GroupPresentation simplify(GroupPresentation presentation);

} // namespace sinv
