#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace sinv {

/// An abstract simplex: a strictly increasing sequence of vertex ids.
/// The empty sequence is the (-1)-dimensional simplex used by reduced homology.
class Simplex {
public:
    Simplex() = default;

    /// Builds a simplex from an unsorted vertex list. Throws InputError on a
    /// repeated vertex or a negative id.
    static Simplex from_vertices(std::vector<int> vertices);

    Simplex(std::initializer_list<int> vertices);

    int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
    bool empty() const { return vertices_.empty(); }
    std::span<const int> vertices() const { return vertices_; }
    int vertex(int i) const { return vertices_[static_cast<std::size_t>(i)]; }

    bool has_vertex(int v) const;
    /// True if every vertex of `other` is a vertex of this simplex.
    bool contains(const Simplex& other) const;
    /// Position of v in the vertex sequence, or -1.
    int index_of(int v) const;

    /// Simplex with v removed (v must be present).
    Simplex without(int v) const;
    /// Simplex with v inserted (v must be absent).
    Simplex with(int v) const;

    /// Codimension-1 faces in the order of the boundary formula: the i-th
    /// entry omits the i-th vertex.
    std::vector<Simplex> boundary_faces() const;

    /// Ids joined by spaces, e.g. "0 1 2"; "()" for the empty simplex.
    std::string to_string() const;

    auto operator<=>(const Simplex&) const = default;

private:
    std::vector<int> vertices_;
};

} // namespace sinv
