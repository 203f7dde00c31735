#include "sinv/serialize.hpp"

#include <sstream>

#include <json.hpp>

namespace sinv {

using nlohmann::json;

namespace {

std::string render_simplex(const std::vector<std::string>& labels) {
    std::string out = "{";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) out += ' ';
        out += labels[i];
    }
    out += '}';
    return out;
}

std::string render_chain(const ChainRecord& chain) {
    if (chain.terms.empty()) return "0";
    std::string out;
    for (const auto& term : chain.terms) {
        std::string c = term.coeff;
        bool negative = !c.empty() && c[0] == '-';
        if (negative) c.erase(0, 1);
        if (out.empty()) {
            if (negative) out += "- ";
        } else {
            out += negative ? " - " : " + ";
        }
        if (c != "1") out += c + "*";
        out += render_simplex(term.vertices);
    }
    return out;
}

std::string render_group(const GroupRecord& group) {
    if (group.free_rank == 0 && group.torsion.empty()) return "0";
    std::string out;
    if (group.free_rank == 1) out = "Z";
    if (group.free_rank > 1) out = "Z^" + std::to_string(group.free_rank);
    for (const auto& t : group.torsion) {
        if (!out.empty()) out += " + ";
        out += "Z/" + t;
    }
    return out;
}

json chain_json(const ChainRecord& chain) {
    json terms = json::array();
    for (const auto& term : chain.terms)
        terms.push_back({{"simplex", term.vertices}, {"coeff", term.coeff}});
    return json{{"dimension", chain.dimension}, {"terms", terms}};
}

json group_json(const GroupRecord& group) {
    return json{{"free_rank", group.free_rank}, {"torsion", group.torsion}};
}

} // namespace

FormRecord form_record(const SimplicialComplex& complex, const BilinearFormReport& report) {
    FormRecord record;
    record.gram.reserve(report.gram.size());
    for (const auto& row : report.gram) {
        std::vector<std::string> out;
        for (const auto& v : row) out.push_back(v.get_str());
        record.gram.push_back(std::move(out));
    }
    record.parity = report.even ? "even" : "odd";
    record.signature = report.signature;
    record.unimodular = report.unimodular;
    IntegerRing z;
    for (const auto& b : report.basis) record.basis.push_back(chain_record(z, complex, b));
    return record;
}

StiefelWhitneyRecord stiefel_whitney_record(const SimplicialComplex& complex,
                                            const StiefelWhitneyReport& report) {
    StiefelWhitneyRecord record;
    PrimeField f2(2);
    for (const auto& data : report.classes) {
        StiefelWhitneyRecord::ClassRecord c;
        c.raw = chain_record(f2, complex, data.raw);
        c.sparse = chain_record(f2, complex, data.sparse);
        c.null_homologous = data.null_homologous;
        record.classes.push_back(std::move(c));
    }
    return record;
}

PresentationRecord presentation_record(const SimplicialComplex& complex,
                                       const GroupPresentation& p,
                                       const GroupPresentation& simplified) {
    PresentationRecord record;
    for (const auto& e : p.generators)
        record.generator_edges.push_back({complex.label(e.vertex(0)), complex.label(e.vertex(1))});
    for (const auto& word : p.relators) {
        std::string rendered;
        for (std::size_t i = 0; i < word.size(); ++i) {
            if (i) rendered += ' ';
            rendered += "x" + std::to_string(word[i].first + 1);
            if (word[i].second == -1) rendered += "^-1";
        }
        record.relators.push_back(std::move(rendered));
    }
    record.abelianization = group_record(abelianization(p));
    record.rendered = p.to_string();
    record.simplified_generators = simplified.generators.size();
    record.simplified_relators = simplified.relators.size();
    return record;
}

MorseRecord morse_record(const SimplicialComplex& complex, const MorseMatching& matching,
                         const MatchingValidation& validation,
                         const std::vector<Simplex>& critical) {
    MorseRecord record;
    auto labels_of = [&](const Simplex& s) {
        std::vector<std::string> out;
        for (int v : s.vertices()) out.push_back(complex.label(v));
        return out;
    };
    for (const auto& pair : matching.pairs)
        record.pairs.push_back({labels_of(pair.low), labels_of(pair.high)});
    for (const auto& s : critical) record.critical.push_back(labels_of(s));
    record.valid = validation.ok;
    record.violation = validation.message;
    return record;
}

InfoRecord info_record(const SimplicialComplex& complex) {
    InfoRecord record;
    record.dimension = complex.dimension();
    record.f_vector = complex.f_vector().counts;
    record.facets = complex.facet_count();
    record.size = complex.size();
    record.pure = complex.is_pure();
    record.euler = complex.euler_characteristic();
    record.facet_list = complex.to_facet_list();
    return record;
}

std::string to_text(const InfoRecord& record) {
    std::ostringstream out;
    out << "# dimension " << record.dimension << '\n';
    out << "# f-vector (";
    for (std::size_t i = 0; i < record.f_vector.size(); ++i) {
        if (i) out << ',';
        out << record.f_vector[i];
    }
    out << ")\n";
    out << "# facets " << record.facets << '\n';
    out << "# size " << record.size << '\n';
    out << "# pure " << (record.pure ? "yes" : "no") << '\n';
    out << "# euler " << record.euler << '\n';
    out << record.facet_list;
    return out.str();
}

std::string to_text(const HomologyRecord& record) {
    std::ostringstream out;
    const char* symbol = record.cohomological ? "H^" : "H_";
    out << "ring " << record.ring << (record.reduced ? ", reduced" : "") << '\n';
    for (std::size_t k = 0; k < record.groups.size(); ++k) {
        out << symbol << k << " = " << render_group(record.groups[k]) << '\n';
        if (!record.with_reps) continue;
        for (const auto& rep : record.free_reps[k])
            out << "  generator: " << render_chain(rep) << '\n';
        for (std::size_t t = 0; t < record.torsion_reps[k].size(); ++t)
            out << "  generator (order " << record.groups[k].torsion[t]
                << "): " << render_chain(record.torsion_reps[k][t]) << '\n';
    }
    return out.str();
}

std::string to_text(const CupTableRecord& record) {
    std::ostringstream out;
    out << "ring " << record.ring << '\n';
    for (std::size_t k = 0; k < record.generators.size(); ++k) {
        for (std::size_t i = 0; i < record.generators[k].size(); ++i)
            out << "g" << k << "_" << i << " = " << render_chain(record.generators[k][i]) << '\n';
    }
    for (const auto& p : record.products) {
        out << "g" << p.deg_a << "_" << p.idx_a << " * g" << p.deg_b << "_" << p.idx_b << " =";
        int target = p.deg_a + p.deg_b;
        bool any = false;
        for (std::size_t j = 0; j < p.coords.size(); ++j) {
            if (p.coords[j] == "0") continue;
            out << ' ';
            if (any) out << "+ ";
            if (p.coords[j] != "1") out << p.coords[j] << "*";
            out << "g" << target << "_" << j;
            any = true;
        }
        if (!any) out << " 0";
        out << '\n';
    }
    return out.str();
}

std::string to_text(const FormRecord& record) {
    std::ostringstream out;
    out << "rank " << record.gram.size() << '\n';
    out << "gram" << '\n';
    for (const auto& row : record.gram) {
        out << " ";
        for (const auto& v : row) out << ' ' << v;
        out << '\n';
    }
    out << "parity " << record.parity << '\n';
    out << "signature " << record.signature << '\n';
    out << "unimodular " << (record.unimodular ? "yes" : "no") << '\n';
    for (std::size_t i = 0; i < record.basis.size(); ++i)
        out << "basis " << i << ": " << render_chain(record.basis[i]) << '\n';
    return out.str();
}

std::string to_text(const StiefelWhitneyRecord& record) {
    std::ostringstream out;
    for (std::size_t k = 0; k < record.classes.size(); ++k) {
        const auto& c = record.classes[k];
        out << "w_" << k << " (" << (c.null_homologous ? "null-homologous" : "non-trivial")
            << ")\n";
        out << "  raw: " << render_chain(c.raw) << '\n';
        out << "  sparse: " << render_chain(c.sparse) << '\n';
    }
    return out.str();
}

std::string to_text(const PresentationRecord& record) {
    std::ostringstream out;
    out << record.rendered << '\n';
    out << "generators " << record.generator_edges.size() << ":";
    for (std::size_t i = 0; i < record.generator_edges.size(); ++i)
        out << " x" << i + 1 << "={" << record.generator_edges[i][0] << ' '
            << record.generator_edges[i][1] << "}";
    out << '\n';
    out << "relators " << record.relators.size() << '\n';
    out << "abelianization " << render_group(record.abelianization) << '\n';
    out << "simplified: " << record.simplified_generators << " generators, "
        << record.simplified_relators << " relators\n";
    return out.str();
}

std::string to_text(const MorseRecord& record) {
    std::ostringstream out;
    out << (record.valid ? "valid matching" : "INVALID matching") << ", " << record.pairs.size()
        << " pairs\n";
    if (!record.valid) out << "violation: " << record.violation << '\n';
    for (const auto& [low, high] : record.pairs)
        out << render_simplex(low).substr(1, render_simplex(low).size() - 2) << " : "
            << render_simplex(high).substr(1, render_simplex(high).size() - 2) << '\n';
    out << "critical " << record.critical.size() << ":";
    for (const auto& c : record.critical) out << ' ' << render_simplex(c);
    out << '\n';
    return out.str();
}

std::string to_json(const InfoRecord& record) {
    json j{{"dimension", record.dimension}, {"f_vector", record.f_vector},
           {"facets", record.facets},      {"size", record.size},
           {"pure", record.pure},          {"euler_characteristic", record.euler},
           {"facet_list", record.facet_list}};
    return j.dump(2);
}

std::string to_json(const HomologyRecord& record) {
    json groups = json::array();
    for (const auto& g : record.groups) groups.push_back(group_json(g));
    json j{{"dimension", record.groups.empty() ? -1 : static_cast<long>(record.groups.size()) - 1},
           {"ring", record.ring},
           {"reduced", record.reduced},
           {"cohomological", record.cohomological},
           {"strategy", record.strategy},
           {"groups", groups}};
    if (record.with_reps) {
        json reps = json::array();
        for (std::size_t k = 0; k < record.groups.size(); ++k) {
            json free = json::array();
            for (const auto& rep : record.free_reps[k]) free.push_back(chain_json(rep));
            json torsion = json::array();
            for (const auto& rep : record.torsion_reps[k]) torsion.push_back(chain_json(rep));
            reps.push_back({{"degree", k}, {"free", free}, {"torsion", torsion}});
        }
        j["representatives"] = reps;
    }
    return j.dump(2);
}

std::string to_json(const CupTableRecord& record) {
    json groups = json::array();
    for (const auto& g : record.groups) groups.push_back(group_json(g));
    json gens = json::array();
    for (std::size_t k = 0; k < record.generators.size(); ++k) {
        json per_degree = json::array();
        for (const auto& g : record.generators[k]) per_degree.push_back(chain_json(g));
        gens.push_back(per_degree);
    }
    json products = json::array();
    for (const auto& p : record.products)
        products.push_back({{"deg_a", p.deg_a},
                            {"idx_a", p.idx_a},
                            {"deg_b", p.deg_b},
                            {"idx_b", p.idx_b},
                            {"coords", p.coords}});
    json j{{"ring", record.ring}, {"groups", groups}, {"generators", gens},
           {"products", products}};
    return j.dump(2);
}

std::string to_json(const FormRecord& record) {
    json basis = json::array();
    for (const auto& b : record.basis) basis.push_back(chain_json(b));
    json j{{"rank", record.gram.size()},   {"gram", record.gram},
           {"parity", record.parity},      {"signature", record.signature},
           {"unimodular", record.unimodular}, {"basis", basis}};
    return j.dump(2);
}

std::string to_json(const StiefelWhitneyRecord& record) {
    json classes = json::array();
    for (std::size_t k = 0; k < record.classes.size(); ++k) {
        const auto& c = record.classes[k];
        classes.push_back({{"degree", k},
                           {"raw", chain_json(c.raw)},
                           {"sparse", chain_json(c.sparse)},
                           {"null_homologous", c.null_homologous}});
    }
    return json{{"classes", classes}}.dump(2);
}

std::string to_json(const PresentationRecord& record) {
    json j{{"generators", record.generator_edges},
           {"relators", record.relators},
           {"abelianization", group_json(record.abelianization)},
           {"presentation", record.rendered},
           {"simplified",
            {{"generators", record.simplified_generators},
             {"relators", record.simplified_relators}}}};
    return j.dump(2);
}

std::string to_json(const MorseRecord& record) {
    json pairs = json::array();
    for (const auto& [low, high] : record.pairs)
        pairs.push_back({{"low", low}, {"high", high}});
    json critical = json::array();
    for (const auto& c : record.critical) critical.push_back(c);
    json j{{"valid", record.valid},
           {"violation", record.violation},
           {"pairs", pairs},
           {"critical", critical}};
    return j.dump(2);
}

} // namespace sinv
