#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sinv/simplex.hpp"

namespace sinv {

/// Face counts (f_0, ..., f_d).
struct FVector {
    std::vector<long> counts;

    bool operator==(const FVector&) const = default;
    std::string to_string() const;
};

/// An immutable finite simplicial complex, stored by its inclusion-maximal
/// faces. Vertex ids are dense 0..n-1; an optional label table preserves the
/// original input tokens. Face sets are enumerated lazily per dimension and
/// cached; a built complex is safe to share across threads.
class SimplicialComplex {
public:
    /// Builds a complex from facet candidates. Non-maximal entries are
    /// absorbed (the warning flag records that this happened). Vertex ids must
    /// already be dense; labels default to the decimal ids.
    /// Throws InputError if no facets are given.
    static SimplicialComplex from_facets(std::vector<Simplex> facets,
                                         std::vector<std::string> labels = {});

    int dimension() const { return dim_; }
    int vertex_count() const { return static_cast<int>(labels_.size()); }
    const std::vector<Simplex>& facets() const { return facets_; }
    long facet_count() const { return static_cast<long>(facets_.size()); }
    bool absorbed_nonmaximal() const { return absorbed_nonmaximal_; }

    /// All k-faces in lexicographic order. k = -1 yields the empty simplex;
    /// k > dim yields an empty list.
    const std::vector<Simplex>& faces(int k) const;
    long face_count(int k) const { return static_cast<long>(faces(k).size()); }

    /// Index of a simplex within faces(k), if present.
    std::optional<int> face_index(const Simplex& s) const;
    bool is_face(const Simplex& s) const;

    FVector f_vector() const;
    /// Number of vertex-facet incidences.
    std::size_t size() const;
    bool is_pure() const;
    long euler_characteristic() const;

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
    /// "{a b c}" using the label table.
    std::string format_simplex(const Simplex& s) const;

    /// Subcomplex of all faces disjoint from s whose union with s is a face.
    /// Vertices are re-densified; labels carry over. Throws DomainError if s
    /// is not a face.
    SimplicialComplex link(const Simplex& s) const;

    /// Facet-list document that parses back to an identical complex.
    std::string to_facet_list() const;

    SimplicialComplex(const SimplicialComplex& other);
    SimplicialComplex& operator=(const SimplicialComplex& other);
    SimplicialComplex(SimplicialComplex&&) noexcept = default;
    SimplicialComplex& operator=(SimplicialComplex&&) noexcept = default;

private:
    SimplicialComplex() = default;

    std::vector<Simplex> facets_;
    std::vector<std::string> labels_;
    int dim_ = -1;
    bool absorbed_nonmaximal_ = false;

    mutable std::unique_ptr<std::mutex> cache_mutex_ = std::make_unique<std::mutex>();
    mutable std::vector<std::unique_ptr<const std::vector<Simplex>>> face_cache_;
};

/// Parses the facet-list format: one facet per line, whitespace-separated
/// vertex tokens, `#` starts a comment, blank lines ignored. If every token is
/// a decimal integer the vertex order is numeric, otherwise lexicographic on
/// tokens. Throws InputError on a repeated vertex within a line or an empty
/// document.
SimplicialComplex parse_facets(std::string_view text);

/// One-point union: vertex v of a is identified with vertex v2 of b. a keeps
/// its ids; the other vertices of b are appended in order.
SimplicialComplex wedge(const SimplicialComplex& a, int v,
                        const SimplicialComplex& b, int v2);

} // namespace sinv
