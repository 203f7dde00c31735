#pragma once

#include <map>
#include <string>

#include "sinv/rings.hpp"
#include "sinv/simplex.hpp"
#include "sinv/simplicial_complex.hpp"

namespace sinv {

/// A formal linear combination of k-simplices with coefficients in R. Zero
/// coefficients are never stored. Cochains use the same representation via the
/// canonical basis identification; evaluation is coefficient lookup.
template <typename R>
class Chain {
public:
    using Element = typename R::Element;

    Chain() = default;
    explicit Chain(int dimension) : dim_(dimension) {}

    int dimension() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }
    const std::map<Simplex, Element>& terms() const { return terms_; }

    Element coefficient(const R& ring, const Simplex& s) const {
        auto it = terms_.find(s);
        return it == terms_.end() ? ring.zero() : it->second;
    }

    void add_term(const R& ring, const Simplex& s, Element c) {
        auto [it, inserted] = terms_.emplace(s, c);
        if (!inserted) {
            it->second = ring.add(it->second, c);
            if (ring.is_zero(it->second)) terms_.erase(it);
        } else if (ring.is_zero(it->second)) {
            terms_.erase(it);
        }
    }

    void add(const R& ring, const Chain& other) {
        for (const auto& [s, c] : other.terms_) add_term(ring, s, c);
    }

    void add_scaled(const R& ring, const Element& factor, const Chain& other) {
        if (ring.is_zero(factor)) return;
        for (const auto& [s, c] : other.terms_) add_term(ring, s, ring.mul(factor, c));
    }

    Chain scaled(const R& ring, const Element& factor) const {
        Chain out(dim_);
        out.add_scaled(ring, factor, *this);
        return out;
    }

    Chain negated(const R& ring) const {
        Chain out(dim_);
        for (const auto& [s, c] : terms_) out.terms_.emplace(s, ring.neg(c));
        return out;
    }

    bool operator==(const Chain&) const = default;

    /// "+{0 1} -2{1 2}" style, using the complex's labels.
    std::string to_string(const R& ring, const SimplicialComplex& complex) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [s, c] : terms_) {
            std::string cs = ring.to_string(c);
            if (!out.empty()) out += ' ';
            if (!cs.empty() && cs[0] == '-') {
                out += "- ";
                cs.erase(0, 1);
            } else if (!out.empty()) {
                out += "+ ";
            }
            if (cs != "1") out += cs + "*";
            out += complex.format_simplex(s);
        }
        return out;
    }

private:
    int dim_ = 0;
    std::map<Simplex, Element> terms_;
};

/// Cochains are chains under the canonical basis identification.
template <typename R>
using Cochain = Chain<R>;

/// Evaluation pairing <f, c> of a cochain against a chain of the same degree.
template <typename R>
typename R::Element evaluate(const R& ring, const Cochain<R>& f, const Chain<R>& c) {
    typename R::Element total = ring.zero();
    for (const auto& [s, coeff] : c.terms())
        total = ring.add(total, ring.mul(f.coefficient(ring, s), coeff));
    return total;
}

} // namespace sinv
