#include "sinv/simplex.hpp"

#include <algorithm>

#include "sinv/errors.hpp"

namespace sinv {

Simplex Simplex::from_vertices(std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] < 0)
            throw InputError("simplex vertex ids must be non-negative");
        if (i > 0 && vertices[i] == vertices[i - 1])
            throw InputError("repeated vertex " + std::to_string(vertices[i]) +
                             " in simplex");
    }
    Simplex s;
    s.vertices_ = std::move(vertices);
    return s;
}

Simplex::Simplex(std::initializer_list<int> vertices)
    : Simplex(from_vertices(std::vector<int>(vertices))) {}

bool Simplex::has_vertex(int v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::contains(const Simplex& other) const {
    return std::includes(vertices_.begin(), vertices_.end(),
                         other.vertices_.begin(), other.vertices_.end());
}

int Simplex::index_of(int v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) return -1;
    return static_cast<int>(it - vertices_.begin());
}

Simplex Simplex::without(int v) const {
    Simplex s;
    s.vertices_.reserve(vertices_.size() - 1);
    for (int w : vertices_)
        if (w != v) s.vertices_.push_back(w);
    return s;
}

Simplex Simplex::with(int v) const {
    Simplex s;
    s.vertices_.reserve(vertices_.size() + 1);
    bool placed = false;
    for (int w : vertices_) {
        if (!placed && v < w) {
            s.vertices_.push_back(v);
            placed = true;
        }
        s.vertices_.push_back(w);
    }
    if (!placed) s.vertices_.push_back(v);
    return s;
}

std::vector<Simplex> Simplex::boundary_faces() const {
    std::vector<Simplex> faces;
    faces.reserve(vertices_.size());
    for (int v : vertices_) faces.push_back(without(v));
    return faces;
}

std::string Simplex::to_string() const {
    if (vertices_.empty()) return "()";
    std::string out;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(vertices_[i]);
    }
    return out;
}

} // namespace sinv
