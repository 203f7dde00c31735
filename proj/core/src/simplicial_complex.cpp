#include "sinv/simplicial_complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "sinv/errors.hpp"

namespace sinv {

std::string FVector::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(counts[i]);
    }
    out += ')';
    return out;
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<Simplex> facets,
                                                 std::vector<std::string> labels) {
    facets.erase(std::remove_if(facets.begin(), facets.end(),
                                [](const Simplex& s) { return s.empty(); }),
                 facets.end());
    if (facets.empty()) throw InputError("empty complex: no facets given");

    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

    // Drop faces contained in another facet.
    std::vector<Simplex> maximal;
    bool absorbed = false;
    for (const Simplex& s : facets) {
        bool is_maximal = true;
        for (const Simplex& t : facets) {
            if (s != t && t.contains(s)) {
                is_maximal = false;
                break;
            }
        }
        if (is_maximal)
            maximal.push_back(s);
        else
            absorbed = true;
    }

    int max_vertex = -1;
    for (const Simplex& s : maximal)
        for (int v : s.vertices()) max_vertex = std::max(max_vertex, v);

    SimplicialComplex c;
    c.facets_ = std::move(maximal);
    c.absorbed_nonmaximal_ = absorbed;
    for (const Simplex& s : c.facets_) c.dim_ = std::max(c.dim_, s.dimension());
    if (labels.empty()) {
        labels.reserve(static_cast<std::size_t>(max_vertex) + 1);
        for (int v = 0; v <= max_vertex; ++v) labels.push_back(std::to_string(v));
    } else if (static_cast<int>(labels.size()) != max_vertex + 1) {
        throw InputError("label table size does not match the vertex range");
    }
    c.labels_ = std::move(labels);
    c.face_cache_.resize(static_cast<std::size_t>(c.dim_) + 2);
    return c;
}

SimplicialComplex::SimplicialComplex(const SimplicialComplex& other)
    : facets_(other.facets_),
      labels_(other.labels_),
      dim_(other.dim_),
      absorbed_nonmaximal_(other.absorbed_nonmaximal_) {
    face_cache_.resize(other.face_cache_.size());
}

SimplicialComplex& SimplicialComplex::operator=(const SimplicialComplex& other) {
    if (this == &other) return *this;
    facets_ = other.facets_;
    labels_ = other.labels_;
    dim_ = other.dim_;
    absorbed_nonmaximal_ = other.absorbed_nonmaximal_;
    face_cache_.clear();
    face_cache_.resize(other.face_cache_.size());
    return *this;
}

namespace {

void enumerate_subsets(std::span<const int> pool, int take, std::size_t start,
                       std::vector<int>& current, std::set<Simplex>& out) {
    if (take == 0) {
        Simplex s = Simplex::from_vertices(current);
        out.insert(std::move(s));
        return;
    }
    for (std::size_t i = start; i + static_cast<std::size_t>(take) <= pool.size(); ++i) {
        current.push_back(pool[i]);
        enumerate_subsets(pool, take - 1, i + 1, current, out);
        current.pop_back();
    }
}

const std::vector<Simplex> kNoFaces;

} // namespace

const std::vector<Simplex>& SimplicialComplex::faces(int k) const {
    if (k < -1 || k > dim_) return kNoFaces;
    std::size_t slot = static_cast<std::size_t>(k + 1);
    std::lock_guard<std::mutex> lock(*cache_mutex_);
    if (face_cache_[slot]) return *face_cache_[slot];

    auto result = std::make_unique<std::vector<Simplex>>();
    if (k == -1) {
        result->push_back(Simplex{});
    } else {
        std::set<Simplex> found;
        std::vector<int> scratch;
        for (const Simplex& f : facets_) {
            if (f.dimension() < k) continue;
            enumerate_subsets(f.vertices(), k + 1, 0, scratch, found);
        }
        result->assign(found.begin(), found.end());
    }
    face_cache_[slot] = std::move(result);
    return *face_cache_[slot];
}

std::optional<int> SimplicialComplex::face_index(const Simplex& s) const {
    const std::vector<Simplex>& fs = faces(s.dimension());
    auto it = std::lower_bound(fs.begin(), fs.end(), s);
    if (it == fs.end() || *it != s) return std::nullopt;
    return static_cast<int>(it - fs.begin());
}

bool SimplicialComplex::is_face(const Simplex& s) const {
    if (s.empty()) return true;
    for (const Simplex& f : facets_)
        if (f.contains(s)) return true;
    return false;
}

FVector SimplicialComplex::f_vector() const {
    FVector f;
    f.counts.reserve(static_cast<std::size_t>(dim_) + 1);
    for (int k = 0; k <= dim_; ++k) f.counts.push_back(face_count(k));
    return f;
}

std::size_t SimplicialComplex::size() const {
    std::size_t total = 0;
    for (const Simplex& f : facets_) total += f.vertices().size();
    return total;
}

bool SimplicialComplex::is_pure() const {
    for (const Simplex& f : facets_)
        if (f.dimension() != dim_) return false;
    return true;
}

long SimplicialComplex::euler_characteristic() const {
    long chi = 0;
    for (int k = 0; k <= dim_; ++k) chi += (k % 2 == 0 ? 1 : -1) * face_count(k);
    return chi;
}

std::string SimplicialComplex::format_simplex(const Simplex& s) const {
    if (s.empty()) return "{}";
    std::string out = "{";
    bool first = true;
    for (int v : s.vertices()) {
        if (!first) out += ' ';
        out += label(v);
        first = false;
    }
    out += '}';
    return out;
}

SimplicialComplex SimplicialComplex::link(const Simplex& s) const {
    if (!is_face(s)) throw DomainError("link: " + format_simplex(s) + " is not a face");

    std::vector<Simplex> link_facets;
    for (const Simplex& f : facets_) {
        if (!f.contains(s)) continue;
        std::vector<int> rest;
        for (int v : f.vertices())
            if (!s.has_vertex(v)) rest.push_back(v);
        if (!rest.empty()) link_facets.push_back(Simplex::from_vertices(rest));
    }
    if (link_facets.empty()) throw DomainError("link: empty (simplex is a facet)");

    // Re-densify vertex ids, keeping the original order and labels.
    std::set<int> used;
    for (const Simplex& f : link_facets)
        for (int v : f.vertices()) used.insert(v);
    std::map<int, int> remap;
    std::vector<std::string> labels;
    int next = 0;
    for (int v : used) {
        remap[v] = next++;
        labels.push_back(label(v));
    }
    for (Simplex& f : link_facets) {
        std::vector<int> vs;
        for (int v : f.vertices()) vs.push_back(remap[v]);
        f = Simplex::from_vertices(std::move(vs));
    }
    return from_facets(std::move(link_facets), std::move(labels));
}

std::string SimplicialComplex::to_facet_list() const {
    std::ostringstream out;
    for (const Simplex& f : facets_) {
        bool first = true;
        for (int v : f.vertices()) {
            if (!first) out << ' ';
            out << label(v);
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

SimplicialComplex parse_facets(std::string_view text) {
    std::vector<std::vector<std::string>> lines;
    std::string token;
    std::istringstream stream{std::string(text)};
    std::string raw_line;
    while (std::getline(stream, raw_line)) {
        if (auto hash = raw_line.find('#'); hash != std::string::npos)
            raw_line.erase(hash);
        std::istringstream ls(raw_line);
        std::vector<std::string> tokens;
        while (ls >> token) tokens.push_back(token);
        if (!tokens.empty()) lines.push_back(std::move(tokens));
    }
    if (lines.empty()) throw InputError("empty complex: no facet lines in document");

    for (const auto& tokens : lines) {
        std::set<std::string> seen(tokens.begin(), tokens.end());
        if (seen.size() != tokens.size())
            throw InputError("malformed facet: repeated vertex in line");
    }

    // Vertex order: numeric if every token is a decimal integer, else
    // lexicographic. Orientation signs downstream depend on this order.
    std::set<std::string> all_tokens;
    for (const auto& tokens : lines) all_tokens.insert(tokens.begin(), tokens.end());
    bool all_numeric = true;
    for (const std::string& t : all_tokens) {
        if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos) {
            all_numeric = false;
            break;
        }
    }
    std::vector<std::string> ordered(all_tokens.begin(), all_tokens.end());
    if (all_numeric) {
        std::sort(ordered.begin(), ordered.end(), [](const std::string& a, const std::string& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a < b;
        });
    }
    std::map<std::string, int> id;
    for (std::size_t i = 0; i < ordered.size(); ++i) id[ordered[i]] = static_cast<int>(i);

    std::vector<Simplex> facets;
    for (const auto& tokens : lines) {
        std::vector<int> vs;
        vs.reserve(tokens.size());
        for (const std::string& t : tokens) vs.push_back(id[t]);
        facets.push_back(Simplex::from_vertices(std::move(vs)));
    }
    return SimplicialComplex::from_facets(std::move(facets), std::move(ordered));
}

SimplicialComplex wedge(const SimplicialComplex& a, int v,
                        const SimplicialComplex& b, int v2) {
    if (v < 0 || v >= a.vertex_count())
        throw DomainError("wedge: vertex " + std::to_string(v) + " not in first complex");
    if (v2 < 0 || v2 >= b.vertex_count())
        throw DomainError("wedge: vertex " + std::to_string(v2) + " not in second complex");

    int offset = a.vertex_count();
    auto map_b = [&](int w) {
        if (w == v2) return v;
        return w < v2 ? offset + w : offset + w - 1;
    };

    std::vector<Simplex> facets = a.facets();
    for (const Simplex& f : b.facets()) {
        std::vector<int> vs;
        for (int w : f.vertices()) vs.push_back(map_b(w));
        facets.push_back(Simplex::from_vertices(std::move(vs)));
    }
    return SimplicialComplex::from_facets(std::move(facets));
}

} // namespace sinv
