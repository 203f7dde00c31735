#include "sinv/fundamental_group.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "sinv/errors.hpp"
#include "sinv/smith.hpp"

namespace sinv {

std::string GroupPresentation::to_string() const {
    std::string out = "< ";
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (i) out += ", ";
        out += "x" + std::to_string(i + 1);
    }
    out += " | ";
    for (std::size_t r = 0; r < relators.size(); ++r) {
        if (r) out += ", ";
        if (relators[r].empty()) out += "1";
        for (std::size_t p = 0; p < relators[r].size(); ++p) {
            if (p) out += " ";
            out += "x" + std::to_string(relators[r][p].first + 1);
            if (relators[r][p].second == -1) out += "^-1";
        }
    }
    out += " >";
    return out;
}

std::vector<Simplex> spanning_tree(const SimplicialComplex& complex) {
    int n = complex.vertex_count();
    std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(n));
    for (const Simplex& e : complex.faces(1)) {
        adjacency[static_cast<std::size_t>(e.vertex(0))].push_back(e.vertex(1));
        adjacency[static_cast<std::size_t>(e.vertex(1))].push_back(e.vertex(0));
    }
    for (auto& list : adjacency) std::sort(list.begin(), list.end());

    std::vector<Simplex> tree;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::queue<int> queue;
    queue.push(0);
    seen[0] = true;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        for (int w : adjacency[static_cast<std::size_t>(v)]) {
            if (seen[static_cast<std::size_t>(w)]) continue;
            seen[static_cast<std::size_t>(w)] = true;
            tree.push_back(Simplex{std::min(v, w), std::max(v, w)});
            queue.push(w);
        }
    }
    if (static_cast<int>(tree.size()) != n - 1)
        throw DomainError("spanning tree: 1-skeleton is not connected");
    std::sort(tree.begin(), tree.end());
    return tree;
}

namespace {

void append_reduced(GroupPresentation::Word& word, int gen, int exp) {
    if (!word.empty() && word.back().first == gen && word.back().second == -exp)
        word.pop_back();
    else
        word.push_back({gen, exp});
}

GroupPresentation::Word inverse_word(const GroupPresentation::Word& word) {
    GroupPresentation::Word out;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        out.push_back({it->first, -it->second});
    return out;
}

} // namespace

GroupPresentation presentation(const SimplicialComplex& complex) {
    auto tree = spanning_tree(complex);
    std::set<Simplex> tree_edges(tree.begin(), tree.end());

    GroupPresentation result;
    std::map<Simplex, int> generator_of;
    for (const Simplex& e : complex.faces(1)) {
        if (tree_edges.contains(e)) continue;
        generator_of[e] = static_cast<int>(result.generators.size());
        result.generators.push_back(e);
    }

    for (const Simplex& t : complex.faces(2)) {
        int w0 = t.vertex(0), w1 = t.vertex(1), w2 = t.vertex(2);
        GroupPresentation::Word word;
        auto factor = [&](int a, int b, int exp) {
            Simplex e{a, b};
            auto it = generator_of.find(e);
            if (it != generator_of.end()) append_reduced(word, it->second, exp);
        };
        factor(w0, w1, 1);
        factor(w1, w2, 1);
        factor(w0, w2, -1);
        if (!word.empty()) result.relators.push_back(std::move(word));
    }
    return result;
}

AbelianGroup abelianization(const GroupPresentation& presentation) {
    IntegerRing z;
    int rows = static_cast<int>(presentation.relators.size());
    int cols = static_cast<int>(presentation.generators.size());
    SparseMatrix<IntegerRing> exponents(rows, cols);
    for (int r = 0; r < rows; ++r) {
        std::map<int, long> sums;
        for (const auto& [gen, exp] : presentation.relators[static_cast<std::size_t>(r)])
            sums[gen] += exp;
        for (const auto& [gen, total] : sums)
            if (total != 0) exponents.set(z, r, gen, mpz_class(total));
    }
    auto snf = smith_normal_form(z, exponents);
    AbelianGroup group;
    group.free_rank = cols - snf.rank();
    for (const auto& d : snf.diagonal)
        if (d > 1) group.torsion.push_back(d);
    return group;
}

GroupPresentation simplify(GroupPresentation presentation) {
    bool changed = true;
    while (changed) {
        changed = false;

        // Free reduction and empty-relator removal.
        for (auto& word : presentation.relators) {
            GroupPresentation::Word reduced;
            for (const auto& [gen, exp] : word) append_reduced(reduced, gen, exp);
            word = std::move(reduced);
        }
        std::erase_if(presentation.relators,
                      [](const GroupPresentation::Word& w) { return w.empty(); });

        // Duplicates, up to inversion.
        std::set<GroupPresentation::Word> seen;
        std::vector<GroupPresentation::Word> kept;
        for (auto& word : presentation.relators) {
            if (seen.contains(word) || seen.contains(inverse_word(word))) {
                changed = true;
                continue;
            }
            seen.insert(word);
            kept.push_back(std::move(word));
        }
        presentation.relators = std::move(kept);

        // A length-1 relator kills its generator everywhere.
        int dead = -1;
        for (const auto& word : presentation.relators)
            if (word.size() == 1) {
                dead = word[0].first;
                break;
            }
        if (dead < 0) continue;
        changed = true;

        std::vector<GroupPresentation::Word> rewritten;
        for (const auto& word : presentation.relators) {
            GroupPresentation::Word next;
            for (const auto& [gen, exp] : word) {
                if (gen == dead) continue;
                int shifted = gen > dead ? gen - 1 : gen;
                append_reduced(next, shifted, exp);
            }
            if (!next.empty()) rewritten.push_back(std::move(next));
        }
        presentation.relators = std::move(rewritten);
        presentation.generators.erase(presentation.generators.begin() + dead);
    }
    return presentation;
}

} // namespace sinv
