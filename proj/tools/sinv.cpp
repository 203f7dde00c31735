// sinv: algebraic invariants of finite simplicial complexes.
//
// Subcommands: info, homology, cohomology, morse, cup-table,
// intersection-form, stiefel-whitney, pi1. Complexes come from a facet-list
// file (--input) or a named builtin (--builtin). Exit codes: 0 success,
// 1 domain error (e.g. intersection form of a non-manifold), 2 usage or
// parse error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sinv/errors.hpp"
#include "sinv/fundamental_group.hpp"
#include "sinv/generators.hpp"
#include "sinv/homology.hpp"
#include "sinv/manifold.hpp"
#include "sinv/morse.hpp"
#include "sinv/serialize.hpp"

namespace {

struct Options {
    std::string input_path;
    std::string builtin;
    std::string ring = "z";
    std::string strategy = "raw";
    std::string format = "text";
    std::string matching_path;
    bool reduced = false;
    bool with_reps = false;
    std::uint64_t seed = 0;
    int jobs = 1;
};

void add_input_options(CLI::App* cmd, Options& opts) {
    auto* input = cmd->add_option("--input,-i", opts.input_path, "facet-list file");
    auto* builtin = cmd->add_option("--builtin,-b", opts.builtin,
                                    "builtin complex: boundary_simplex:<d>, ck:<k>, rp2_6, "
                                    "cp2_9, cylinder, s2xs2");
    input->excludes(builtin);
    cmd->add_option("--format,-f", opts.format, "output format: text | json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--jobs,-j", opts.jobs, "worker threads for per-degree eliminations")
        ->check(CLI::PositiveNumber);
}

void add_ring_option(CLI::App* cmd, Options& opts) {
    cmd->add_option("--ring,-r", opts.ring, "coefficient ring: z | q | zp:<prime>");
}

sinv::SimplicialComplex load_complex(const Options& opts) {
    if (!opts.builtin.empty()) {
        auto c = sinv::make_builtin(opts.builtin);
        if (!c) throw sinv::InputError("unknown builtin '" + opts.builtin + "'");
        return *std::move(c);
    }
    if (opts.input_path.empty())
        throw sinv::InputError("one of --input or --builtin is required");
    std::ifstream in(opts.input_path);
    if (!in) throw sinv::InputError("cannot read file '" + opts.input_path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return sinv::parse_facets(text.str());
}

template <typename Record>
void emit(const Options& opts, const Record& record) {
    if (opts.format == "json")
        std::cout << sinv::to_json(record) << '\n';
    else
        std::cout << sinv::to_text(record);
}

void run_info(const Options& opts) {
    auto complex = load_complex(opts);
    emit(opts, sinv::info_record(complex));
}

void run_homology(const Options& opts, bool cohomological) {
    auto complex = load_complex(opts);
    sinv::Ring ring = sinv::parse_ring(opts.ring);
    if (opts.strategy != "raw" && opts.strategy != "morse")
        throw sinv::InputError("unknown strategy '" + opts.strategy + "'");
    std::visit(
        [&](const auto& r) {
            if (cohomological) {
                auto result = sinv::cohomology(r, complex, opts.with_reps, opts.jobs);
                emit(opts, sinv::homology_record(r, complex, result));
            } else {
                sinv::HomologyOptions options;
                options.reduced = opts.reduced;
                options.strategy =
                    opts.strategy == "morse" ? sinv::Strategy::morse : sinv::Strategy::raw;
                options.with_reps = opts.with_reps;
                options.seed = opts.seed;
                options.jobs = opts.jobs;
                auto result = sinv::homology(r, complex, options);
                emit(opts, sinv::homology_record(r, complex, result));
            }
        },
        ring);
}

void run_morse(const Options& opts) {
    auto complex = load_complex(opts);
    sinv::MorseMatching matching;
    if (!opts.matching_path.empty()) {
        std::ifstream in(opts.matching_path);
        if (!in) throw sinv::InputError("cannot read file '" + opts.matching_path + "'");
        std::ostringstream text;
        text << in.rdbuf();
        matching = sinv::parse_matching(complex, text.str());
    } else {
        matching = sinv::greedy_matching(complex, opts.seed);
    }
    auto validation = sinv::validate_matching(complex, matching);
    std::vector<sinv::Simplex> critical;
    if (validation.ok) critical = sinv::critical_faces(complex, matching);
    emit(opts, sinv::morse_record(complex, matching, validation, critical));
    if (!validation.ok) throw sinv::DomainError("matching is invalid: " + validation.message);
}

void run_cup_table(const Options& opts) {
    auto complex = load_complex(opts);
    sinv::Ring ring = sinv::parse_ring(opts.ring);
    std::visit(
        [&](const auto& r) {
            auto table = sinv::cohomology_ring_table(r, complex);
            emit(opts, sinv::cup_table_record(r, complex, table));
        },
        ring);
}

void run_intersection_form(const Options& opts) {
    auto complex = load_complex(opts);
    auto report = sinv::intersection_form(complex);
    emit(opts, sinv::form_record(complex, report));
}

void run_stiefel_whitney(const Options& opts) {
    auto complex = load_complex(opts);
    auto report = sinv::stiefel_whitney_classes(complex);
    emit(opts, sinv::stiefel_whitney_record(complex, report));
}

void run_pi1(const Options& opts) {
    auto complex = load_complex(opts);
    auto p = sinv::presentation(complex);
    auto simplified = sinv::simplify(p);
    emit(opts, sinv::presentation_record(complex, p, simplified));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"algebraic invariants of finite simplicial complexes"};
    app.require_subcommand(1);

    Options opts;

    auto* info = app.add_subcommand("info", "f-vector, size, and a re-emittable facet list");
    add_input_options(info, opts);

    auto* homology = app.add_subcommand("homology", "homology groups, optionally with cycles");
    add_input_options(homology, opts);
    add_ring_option(homology, opts);
    homology->add_flag("--reduced", opts.reduced, "augment with the empty simplex");
    homology->add_option("--strategy", opts.strategy, "raw | morse");
    homology->add_flag("--with-representatives", opts.with_reps, "emit generating cycles");
    homology->add_option("--seed", opts.seed, "tie-break seed for the morse strategy");

    auto* cohomology = app.add_subcommand("cohomology", "cohomology groups and cocycles");
    add_input_options(cohomology, opts);
    add_ring_option(cohomology, opts);
    cohomology->add_flag("--with-representatives", opts.with_reps, "emit generating cocycles");

    auto* morse = app.add_subcommand("morse",
                                     "greedy Morse matching, or validation of a given one");
    add_input_options(morse, opts);
    morse->add_option("--seed", opts.seed, "tie-break seed for the greedy matching");
    morse->add_option("--matching", opts.matching_path,
                      "validate this matching file ('low : high' per line) instead");

    auto* cup = app.add_subcommand("cup-table", "cup-product multiplication table");
    add_input_options(cup, opts);
    add_ring_option(cup, opts);

    auto* form = app.add_subcommand("intersection-form",
                                    "intersection form of a closed oriented 4-manifold");
    add_input_options(form, opts);

    auto* sw = app.add_subcommand("stiefel-whitney", "Stiefel-Whitney homology classes mod 2");
    add_input_options(sw, opts);

    auto* pi1 = app.add_subcommand("pi1", "edge-path group presentation and abelianization");
    add_input_options(pi1, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (info->parsed()) run_info(opts);
        if (homology->parsed()) run_homology(opts, false);
        if (cohomology->parsed()) run_homology(opts, true);
        if (morse->parsed()) run_morse(opts);
        if (cup->parsed()) run_cup_table(opts);
        if (form->parsed()) run_intersection_form(opts);
        if (sw->parsed()) run_stiefel_whitney(opts);
        if (pi1->parsed()) run_pi1(opts);
    } catch (const sinv::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const sinv::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
