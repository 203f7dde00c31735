#include "sinv/morse.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "sinv/errors.hpp"

namespace sinv {

namespace {

// Pair digraph for one dimension level (lows of dimension k-1, highs of
// dimension k): node = matched pair, edge a -> b when b's low is a face of
// a's high. V-cycles live entirely inside one level.
struct LevelGraph {
    // low face index -> pair id, high face index -> pair id
    std::map<int, int> pair_of_low;
    std::map<int, int> pair_of_high;
    std::vector<std::pair<int, int>> pairs;  // (low index, high index)
    const std::vector<std::vector<int>>* high_boundaries = nullptr;
};

std::vector<std::vector<int>> boundary_lists(const SimplicialComplex& complex, int k) {
    const auto& highs = complex.faces(k);
    std::vector<std::vector<int>> lists(highs.size());
    for (std::size_t j = 0; j < highs.size(); ++j)
        for (const Simplex& f : highs[j].boundary_faces())
            lists[j].push_back(*complex.face_index(f));
    return lists;
}

// Depth-first cycle search over the pair digraph; fills `cycle` with the
// face sequence low_0, high_0, low_1, high_1, ... when a cycle exists.
bool find_cycle(const LevelGraph& g, const SimplicialComplex& complex, int k,
                std::vector<Simplex>& cycle) {
    const auto& lists = *g.high_boundaries;
    int n = static_cast<int>(g.pairs.size());
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);

    for (int start = 0; start < n; ++start) {
        if (color[static_cast<std::size_t>(start)] != 0) continue;
        std::vector<std::pair<int, std::size_t>> stack;
        stack.push_back({start, 0});
        color[static_cast<std::size_t>(start)] = 1;
        while (!stack.empty()) {
            auto& [node, edge_pos] = stack.back();
            const auto& bnd = lists[static_cast<std::size_t>(g.pairs[static_cast<std::size_t>(node)].second)];
            bool advanced = false;
            while (edge_pos < bnd.size()) {
                int low = bnd[edge_pos++];
                if (low == g.pairs[static_cast<std::size_t>(node)].first) continue;
                auto it = g.pair_of_low.find(low);
                if (it == g.pair_of_low.end()) continue;
                int next = it->second;
                if (color[static_cast<std::size_t>(next)] == 1) {
                    // Back edge: walk parents from `node` to `next`.
                    std::vector<int> chain{node};
                    for (int p = node; p != next; p = parent[static_cast<std::size_t>(p)])
                        chain.push_back(parent[static_cast<std::size_t>(p)]);
                    std::reverse(chain.begin(), chain.end());
                    const auto& lows = complex.faces(k - 1);
                    const auto& highs = complex.faces(k);
                    for (int id : chain) {
                        cycle.push_back(lows[static_cast<std::size_t>(
                            g.pairs[static_cast<std::size_t>(id)].first)]);
                        cycle.push_back(highs[static_cast<std::size_t>(
                            g.pairs[static_cast<std::size_t>(id)].second)]);
                    }
                    return true;
                }
                if (color[static_cast<std::size_t>(next)] == 0) {
                    color[static_cast<std::size_t>(next)] = 1;
                    parent[static_cast<std::size_t>(next)] = node;
                    stack.push_back({next, 0});
                    advanced = true;
                    break;
                }
            }
            if (!advanced && stack.back().second >= bnd.size()) {
                color[static_cast<std::size_t>(node)] = 2;
                stack.pop_back();
            }
        }
    }
    return false;
}

} // namespace

MatchingValidation validate_matching(const SimplicialComplex& complex,
                                     const MorseMatching& matching) {
    MatchingValidation result;

    for (const auto& pair : matching.pairs) {
        if (pair.high.dimension() != pair.low.dimension() + 1 ||
            !pair.high.contains(pair.low) || !complex.face_index(pair.low) ||
            !complex.face_index(pair.high))
            throw DomainError("matching pair (" + complex.format_simplex(pair.low) + ", " +
                              complex.format_simplex(pair.high) + ") is not a Hasse edge");
    }

    std::set<Simplex> used;
    for (const auto& pair : matching.pairs) {
        for (const Simplex* s : {&pair.low, &pair.high}) {
            if (!used.insert(*s).second) {
                result.ok = false;
                result.doubly_matched = *s;
                result.message = "face " + complex.format_simplex(*s) + " occurs in two pairs";
                return result;
            }
        }
    }

    // Group pairs by the dimension of the high face.
    std::map<int, LevelGraph> levels;
    for (const auto& pair : matching.pairs) {
        int k = pair.high.dimension();
        LevelGraph& g = levels[k];
        int low = *complex.face_index(pair.low);
        int high = *complex.face_index(pair.high);
        int id = static_cast<int>(g.pairs.size());
        g.pairs.push_back({low, high});
        g.pair_of_low[low] = id;
        g.pair_of_high[high] = id;
    }

    for (auto& [k, g] : levels) {
        auto lists = boundary_lists(complex, k);
        g.high_boundaries = &lists;
        std::vector<Simplex> cycle;
        if (find_cycle(g, complex, k, cycle)) {
            result.ok = false;
            result.cycle = std::move(cycle);
            std::string names;
            for (const Simplex& s : result.cycle) {
                if (!names.empty()) names += " -> ";
                names += complex.format_simplex(s);
            }
            result.message = "directed cycle: " + names;
            return result;
        }
    }
    return result;
}

std::vector<Simplex> critical_faces(const SimplicialComplex& complex,
                                    const MorseMatching& matching) {
    MatchingValidation v = validate_matching(complex, matching);
    if (!v.ok) throw DomainError("critical_faces: invalid matching: " + v.message);

    std::set<Simplex> matched;
    for (const auto& pair : matching.pairs) {
        matched.insert(pair.low);
        matched.insert(pair.high);
    }
    std::vector<Simplex> critical;
    for (int k = 0; k <= complex.dimension(); ++k)
        for (const Simplex& s : complex.faces(k))
            if (!matched.contains(s)) critical.push_back(s);
    return critical;
}

namespace {

std::uint64_t face_key(std::uint64_t seed, const Simplex& s) {
    // FNV-1a over the vertex sequence, seeded; 0 keeps plain lex order.
    std::uint64_t h = 1469598103934665603ull ^ seed;
    for (int v : s.vertices()) {
        h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace

MorseMatching greedy_matching(const SimplicialComplex& complex, std::uint64_t seed) {
    MorseMatching matching;
    int d = complex.dimension();

    // Faces matched at the level above (as lows) are skipped when their
    // dimension comes up as the high side.
    std::set<Simplex> matched;

    for (int k = d; k >= 1; --k) {
        const auto& highs = complex.faces(k);
        const auto& lows = complex.faces(k - 1);
        auto bnd = boundary_lists(complex, k);
        std::vector<std::vector<int>> cofaces(lows.size());
        for (std::size_t j = 0; j < highs.size(); ++j)
            for (int i : bnd[j]) cofaces[static_cast<std::size_t>(i)].push_back(static_cast<int>(j));

        auto order_key = [&](const std::vector<Simplex>& faces, int idx) {
            return seed == 0 ? static_cast<std::uint64_t>(idx)
                             : face_key(seed, faces[static_cast<std::size_t>(idx)]);
        };

        std::vector<bool> high_alive(highs.size(), false);
        std::set<std::pair<std::uint64_t, int>> alive;  // (key, high index)
        for (std::size_t j = 0; j < highs.size(); ++j) {
            if (matched.contains(highs[j])) continue;
            high_alive[j] = true;
            alive.insert({order_key(highs, static_cast<int>(j)), static_cast<int>(j)});
        }

        std::vector<int> low_pair(lows.size(), -1);     // low index -> high index
        std::vector<int> high_pair(highs.size(), -1);   // high index -> low index
        std::vector<bool> low_available(lows.size(), true);

        std::vector<int> coface_count(lows.size(), 0);
        for (std::size_t j = 0; j < highs.size(); ++j)
            if (high_alive[j])
                for (int i : bnd[j]) ++coface_count[static_cast<std::size_t>(i)];

        std::set<std::pair<std::uint64_t, int>> free_faces;
        auto refresh_free = [&](int i) {
            std::pair<std::uint64_t, int> entry{order_key(lows, i), i};
            bool should = low_available[static_cast<std::size_t>(i)] &&
                          coface_count[static_cast<std::size_t>(i)] == 1;
            if (should)
                free_faces.insert(entry);
            else
                free_faces.erase(entry);
        };
        for (std::size_t i = 0; i < lows.size(); ++i) refresh_free(static_cast<int>(i));

        // A new pair (low i, high j) closes a V-cycle exactly when an
        // alternating path from j reaches i through existing pairs.
        auto creates_cycle = [&](int i, int j) {
            std::vector<int> stack{j};
            std::set<int> visited{j};
            while (!stack.empty()) {
                int t = stack.back();
                stack.pop_back();
                int own_low = t == j ? i : high_pair[static_cast<std::size_t>(t)];
                for (int s : bnd[static_cast<std::size_t>(t)]) {
                    if (s == own_low) continue;
                    if (s == i) return true;
                    int next = low_pair[static_cast<std::size_t>(s)];
                    if (next >= 0 && visited.insert(next).second) stack.push_back(next);
                }
            }
            return false;
        };

        auto remove_high = [&](int j) {
            high_alive[static_cast<std::size_t>(j)] = false;
            alive.erase({order_key(highs, j), j});
            for (int i : bnd[static_cast<std::size_t>(j)]) {
                --coface_count[static_cast<std::size_t>(i)];
                refresh_free(i);
            }
        };

        auto match_pair = [&](int i, int j) {
            low_pair[static_cast<std::size_t>(i)] = j;
            high_pair[static_cast<std::size_t>(j)] = i;
            low_available[static_cast<std::size_t>(i)] = false;
            matched.insert(lows[static_cast<std::size_t>(i)]);
            matched.insert(highs[static_cast<std::size_t>(j)]);
            remove_high(j);
            refresh_free(i);
            matching.add(lows[static_cast<std::size_t>(i)], highs[static_cast<std::size_t>(j)]);
        };

        while (!alive.empty()) {
            bool progressed = false;
            while (!free_faces.empty()) {
                int i = free_faces.begin()->second;
                int j = -1;
                for (int cj : cofaces[static_cast<std::size_t>(i)]) {
                    if (high_alive[static_cast<std::size_t>(cj)]) {
                        j = cj;
                        break;
                    }
                }
                if (j < 0 || creates_cycle(i, j)) {
                    // A blocked unique-coface pair never unblocks: counts only
                    // decrease and existing paths persist.
                    free_faces.erase(free_faces.begin());
                    continue;
                }
                match_pair(i, j);
                progressed = true;
                break;
            }
            if (progressed) continue;
            if (alive.empty()) break;

            int j = alive.begin()->second;
            std::vector<std::pair<std::uint64_t, int>> candidates;
            for (int i : bnd[static_cast<std::size_t>(j)])
                if (low_available[static_cast<std::size_t>(i)])
                    candidates.push_back({order_key(lows, i), i});
            std::sort(candidates.begin(), candidates.end());
            bool done = false;
            for (const auto& [key, i] : candidates) {
                if (creates_cycle(i, j)) continue;
                match_pair(i, j);
                done = true;
                break;
            }
            if (!done) remove_high(j);  // critical
        }
    }
    return matching;
}

MorseMatching parse_matching(const SimplicialComplex& complex, std::string_view text) {
    std::map<std::string, int> id;
    for (int v = 0; v < complex.vertex_count(); ++v) id[complex.label(v)] = v;

    auto resolve = [&](const std::string& line_part) {
        std::istringstream in(line_part);
        std::vector<int> vs;
        std::string token;
        while (in >> token) {
            auto it = id.find(token);
            if (it == id.end())
                throw InputError("matching: unknown vertex label '" + token + "'");
            vs.push_back(it->second);
        }
        return Simplex::from_vertices(std::move(vs));
    };

    MorseMatching matching;
    std::istringstream stream{std::string(text)};
    std::string line;
    while (std::getline(stream, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw InputError("matching: expected 'low : high' in line: " + line);
        matching.add(resolve(line.substr(0, colon)), resolve(line.substr(colon + 1)));
    }
    return matching;
}

std::string format_matching(const SimplicialComplex& complex, const MorseMatching& matching) {
    std::ostringstream out;
    for (const auto& pair : matching.pairs) {
        bool first = true;
        for (int v : pair.low.vertices()) {
            if (!first) out << ' ';
            out << complex.label(v);
            first = false;
        }
        out << " : ";
        first = true;
        for (int v : pair.high.vertices()) {
            if (!first) out << ' ';
            out << complex.label(v);
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

} // namespace sinv
