#pragma once

#include <map>
#include <string>
#include <vector>

#include "sinv/fundamental_group.hpp"
#include "sinv/homology.hpp"
#include "sinv/manifold.hpp"
#include "sinv/morse.hpp"
#include "sinv/simplicial_complex.hpp"

// Ring-erased report records plus text/JSON rendering. The templated
// converters live here; the renderers are ordinary functions.

namespace sinv {

struct TermRecord {
    std::vector<std::string> vertices;  // labels
    std::string coeff;
};

struct ChainRecord {
    int dimension = 0;
    std::vector<TermRecord> terms;
};

struct GroupRecord {
    long free_rank = 0;
    std::vector<std::string> torsion;
};

struct HomologyRecord {
    std::string ring;
    bool cohomological = false;
    bool reduced = false;
    std::string strategy;
    std::vector<GroupRecord> groups;
    bool with_reps = false;
    std::vector<std::vector<ChainRecord>> free_reps;     // per degree
    std::vector<std::vector<ChainRecord>> torsion_reps;  // per degree
};

struct CupTableRecord {
    std::string ring;
    std::vector<GroupRecord> groups;
    std::vector<std::vector<ChainRecord>> generators;
    struct Product {
        int deg_a, idx_a, deg_b, idx_b;
        std::vector<std::string> coords;
    };
    std::vector<Product> products;
};

struct FormRecord {
    std::vector<std::vector<std::string>> gram;
    std::string parity;
    long signature = 0;
    bool unimodular = false;
    std::vector<ChainRecord> basis;
};

struct StiefelWhitneyRecord {
    struct ClassRecord {
        ChainRecord raw;
        ChainRecord sparse;
        bool null_homologous = false;
    };
    std::vector<ClassRecord> classes;
};

struct PresentationRecord {
    std::vector<std::vector<std::string>> generator_edges;  // label pairs
    std::vector<std::string> relators;                      // rendered words
    GroupRecord abelianization;
    std::string rendered;
    std::size_t simplified_generators = 0;
    std::size_t simplified_relators = 0;
};

struct MorseRecord {
    std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> pairs;
    std::vector<std::vector<std::string>> critical;  // label lists
    bool valid = true;
    std::string violation;
};

struct InfoRecord {
    int dimension = -1;
    std::vector<long> f_vector;
    long facets = 0;
    std::size_t size = 0;
    bool pure = false;
    long euler = 0;
    std::string facet_list;
};

template <typename R>
ChainRecord chain_record(const R& ring, const SimplicialComplex& complex, const Chain<R>& c) {
    ChainRecord record;
    record.dimension = c.dimension();
    for (const auto& [s, coeff] : c.terms()) {
        TermRecord term;
        for (int v : s.vertices()) term.vertices.push_back(complex.label(v));
        term.coeff = ring.to_string(coeff);
        record.terms.push_back(std::move(term));
    }
    return record;
}

inline GroupRecord group_record(const AbelianGroup& g) {
    GroupRecord record;
    record.free_rank = g.free_rank;
    for (const auto& t : g.torsion) record.torsion.push_back(t.get_str());
    return record;
}

template <typename R>
HomologyRecord homology_record(const R& ring, const SimplicialComplex& complex,
                               const HomologyResult<R>& result) {
    HomologyRecord record;
    record.ring = ring.name();
    record.cohomological = result.cohomological;
    record.reduced = result.reduced;
    record.strategy = result.strategy == Strategy::morse ? "morse" : "raw";
    for (const auto& degree : result.degrees) record.groups.push_back(group_record(degree.group));
    record.with_reps = false;
    for (const auto& degree : result.degrees) {
        record.free_reps.emplace_back();
        record.torsion_reps.emplace_back();
        for (const auto& rep : degree.free_reps) {
            record.with_reps = true;
            record.free_reps.back().push_back(chain_record(ring, complex, rep));
        }
        for (const auto& rep : degree.torsion_reps) {
            record.with_reps = true;
            record.torsion_reps.back().push_back(chain_record(ring, complex, rep));
        }
    }
    return record;
}

template <typename R>
CupTableRecord cup_table_record(const R& ring, const SimplicialComplex& complex,
                                const CupTable<R>& table) {
    CupTableRecord record;
    record.ring = ring.name();
    for (const auto& g : table.groups) record.groups.push_back(group_record(g));
    for (const auto& degree : table.generators) {
        record.generators.emplace_back();
        for (const auto& gen : degree)
            record.generators.back().push_back(chain_record(ring, complex, gen));
    }
    for (const auto& [key, coords] : table.products) {
        CupTableRecord::Product p;
        p.deg_a = std::get<0>(key);
        p.idx_a = std::get<1>(key);
        p.deg_b = std::get<2>(key);
        p.idx_b = std::get<3>(key);
        for (const auto& c : coords) p.coords.push_back(ring.to_string(c));
        record.products.push_back(std::move(p));
    }
    return record;
}

FormRecord form_record(const SimplicialComplex& complex, const BilinearFormReport& report);
StiefelWhitneyRecord stiefel_whitney_record(const SimplicialComplex& complex,
                                            const StiefelWhitneyReport& report);
PresentationRecord presentation_record(const SimplicialComplex& complex,
                                       const GroupPresentation& p,
                                       const GroupPresentation& simplified);
MorseRecord morse_record(const SimplicialComplex& complex, const MorseMatching& matching,
                         const MatchingValidation& validation,
                         const std::vector<Simplex>& critical);
InfoRecord info_record(const SimplicialComplex& complex);

// Text rendering (stable key order).
std::string to_text(const InfoRecord&);
std::string to_text(const HomologyRecord&);
std::string to_text(const CupTableRecord&);
std::string to_text(const FormRecord&);
std::string to_text(const StiefelWhitneyRecord&);
std::string to_text(const PresentationRecord&);
std::string to_text(const MorseRecord&);

// JSON rendering.
std::string to_json(const InfoRecord&);
std::string to_json(const HomologyRecord&);
std::string to_json(const CupTableRecord&);
std::string to_json(const FormRecord&);
std::string to_json(const StiefelWhitneyRecord&);
std::string to_json(const PresentationRecord&);
std::string to_json(const MorseRecord&);

} // namespace sinv
