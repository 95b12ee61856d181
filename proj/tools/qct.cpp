// qct: generate, enumerate, verify and use weak composition tables.
//
// Exit codes: 0 success, 1 mismatch or inconsistent network, 2 usage or I/O
// error. Run statistics go to stderr; tables are only written to files.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qct/ct_io.hpp"
#include "qct/error.hpp"
#include "qct/generator.hpp"
#include "qct/oracle.hpp"
#include "qct/reasoner.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_usage = 2;

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw qct::Error("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string join_params(const std::vector<std::string>& params) {
    std::string out;
    for (const auto& p : params) {
        if (!out.empty()) out += ',';
        out += p;
    }
    return out;
}

void print_diff(const qct::CompositionTable& table, const qct::CtDiff& diff) {
    const auto& schema = *table.schema();
    std::cout << "missing: " << diff.missing.size() << "\n";
    for (const auto& t : diff.missing) std::cout << "- " << qct::to_string(schema, t) << "\n";
    std::cout << "extra: " << diff.extra.size() << "\n";
    for (const auto& t : diff.extra) std::cout << "+ " << qct::to_string(schema, t) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weak composition tables of qualitative calculi"};
    app.require_subcommand(1);
    std::uint64_t seed = 1;

    // generate
    auto* gen = app.add_subcommand("generate", "Sample random element triples into a table");
    std::string calculus;
    std::vector<std::string> params;
    std::uint64_t max_loops = 0, stall = 0, target = 0;
    unsigned shards = 1;
    std::string out_path;
    bool no_shortcut = false, no_seed_identity = false, hits = false, witnesses = false;
    gen->add_option("--calculus", calculus, "Domain token, e.g. ia, rcc8-disk, opra2-polar")->required();
    gen->add_option("--param", params, "Domain parameters, e.g. M=8 or M1=4,M2=16")->required();
    gen->add_option("--max-loops", max_loops, "Stop after this many loops");
    gen->add_option("--stall", stall, "Stop when no new triad appeared for this many loops");
    gen->add_option("--target", target, "Stop once this many triads are recorded");
    gen->add_option("--shards", shards, "Independent seeded runs merged by union")->check(CLI::Range(1u, 256u));
    gen->add_option("--out", out_path, "Output table")->required();
    gen->add_option("--seed", seed, "Random seed");
    gen->add_flag("--no-converse-shortcut", no_shortcut, "Relate all six ordered pairs");
    gen->add_flag("--no-seed-identity", no_seed_identity, "Do not pre-record identity triads");
    gen->add_flag("--hits", hits, "Record per-triad hit counts");
    gen->add_flag("--witnesses", witnesses, "Record and re-check one element triple per triad");

    // enumerate
    auto* en = app.add_subcommand("enumerate", "Exhaustive table over all element triples");
    std::uint64_t budget = qct::default_triple_budget;
    en->add_option("--calculus", calculus)->required();
    en->add_option("--param", params)->required();
    en->add_option("--out", out_path)->required();
    en->add_option("--budget", budget, "Maximum number of triples");
    en->add_option("--seed", seed);

    // diff / verify
    auto* diff = app.add_subcommand("diff", "Triads in one table but not the other");
    std::string left_path, right_path;
    diff->add_option("a", left_path)->required();
    diff->add_option("b", right_path)->required();
    diff->add_option("--seed", seed);

    auto* verify = app.add_subcommand("verify", "Check a table against a reference");
    verify->add_option("table", left_path)->required();
    verify->add_option("--against", right_path)->required();
    verify->add_option("--seed", seed);

    // compose
    auto* compose = app.add_subcommand("compose", "Print the weak composition of two relations");
    std::string table_path, left_rel, right_rel;
    bool probabilities = false;
    compose->add_option("table", table_path)->required();
    compose->add_option("--left", left_rel, "Relation, comma separated symbols")->required();
    compose->add_option("--right", right_rel)->required();
    compose->add_flag("--probabilities", probabilities, "Print empirical probabilities from hit counts");
    compose->add_option("--seed", seed);

    // closure
    auto* closure = app.add_subcommand("closure", "Algebraic closure of a constraint network");
    std::string network_path;
    closure->add_option("--table", table_path)->required();
    closure->add_option("--network", network_path)->required();
    closure->add_option("--out", out_path);
    closure->add_option("--seed", seed);

    // indu-filter
    auto* filter = app.add_subcommand("indu-filter", "INDU candidate triads from IA and PA tables");
    std::string ia_path, pa_path;
    filter->add_option("--ia", ia_path)->required();
    filter->add_option("--pa", pa_path)->required();
    filter->add_option("--out", out_path)->required();
    filter->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (gen->parsed()) {
            const auto spec = qct::DomainSpec::parse(calculus, join_params(params));
            std::vector<qct::TerminationCondition> parts;
            if (max_loops) parts.push_back(qct::TerminationCondition::max_loops(max_loops));
            if (stall) parts.push_back(qct::TerminationCondition::stall_window(stall));
            if (target) parts.push_back(qct::TerminationCondition::target_triads(target));
            const auto psi = parts.empty() ? qct::TerminationCondition::standard()
                                           : qct::TerminationCondition::all_of(parts);
            qct::GenOptions opts;
            opts.use_converse_shortcut = !no_shortcut;
            opts.seed_identity = !no_seed_identity;
            opts.record_hits = hits;
            opts.record_witnesses = witnesses;
            auto result = qct::generate_sharded(spec, psi, seed, opts, shards);
            if (witnesses) {
                const auto checked = qct::verify_witnesses(result.table, spec);
                std::cerr << "witnesses verified: " << checked << "\n";
            }
            result.table.set_provenance("shards", std::to_string(shards));
            qct::write_ct_file(result.table, out_path);
            std::cerr << qct::to_string(result.stats) << "\n";
            return exit_ok;
        }
        if (en->parsed()) {
            const auto spec = qct::DomainSpec::parse(calculus, join_params(params));
            const auto table = qct::enumerate_ct(spec, budget);
            qct::write_ct_file(table, out_path);
            const std::uint64_t size = qct::domain_size(spec);
            qct::GenStats stats{size * size * size, table.triad_count(), std::nullopt};
            std::cerr << qct::to_string(stats) << "\n";
            return exit_ok;
        }
        if (diff->parsed() || verify->parsed()) {
            const auto a = qct::read_ct_file(left_path);
            const auto b = qct::read_ct_file(right_path);
            const auto d = qct::diff_ct(a, b);
            if (diff->parsed()) {
                print_diff(a, d);
            } else if (d.identical()) {
                std::cout << "OK " << a.triad_count() << " triads\n";
            } else {
                std::cout << "MISMATCH missing=" << d.missing.size() << " extra=" << d.extra.size() << "\n";
                print_diff(a, d);
            }
            return d.identical() ? exit_ok : exit_mismatch;
        }
        if (compose->parsed()) {
            const auto table = qct::read_ct_file(table_path);
            const auto lhs = qct::RelationSet::parse(table.schema(), left_rel);
            const auto rhs = qct::RelationSet::parse(table.schema(), right_rel);
            const auto cell = qct::weak_compose(table, lhs, rhs);
            std::cout << cell.to_string() << "\n";
            if (probabilities) {
                if (lhs.count() != 1 || rhs.count() != 1)
                    throw qct::Error("--probabilities needs basic relations on both sides");
                if (!table.has_hits()) throw qct::Error("table has no hit counts");
                for (const auto& [g, p] :
                     qct::composition_probabilities(table, lhs.members().front(), rhs.members().front()))
                    std::cout << table.schema()->symbol(g) << " " << p << "\n";
            }
            return exit_ok;
        }
        if (closure->parsed()) {
            const auto table = qct::read_ct_file(table_path);
            const auto net = qct::ConstraintNetwork::parse(table.schema(), read_text(network_path));
            const auto closed = qct::algebraic_closure(net, table);
            if (!closed) {
                std::cout << "INCONSISTENT\n";
                return exit_mismatch;
            }
            if (out_path.empty()) {
                std::cout << closed->to_text();
            } else {
                std::ofstream out(out_path, std::ios::binary);
                if (!out) throw qct::Error("cannot open " + out_path + " for writing");
                out << closed->to_text();
            }
            return exit_ok;
        }
        if (filter->parsed()) {
            const auto ia = qct::read_ct_file(ia_path);
            const auto pa = qct::read_ct_file(pa_path);
            const auto table = qct::indu_candidate_filter(ia, pa);
            qct::write_ct_file(table, out_path);
            std::cerr << qct::to_string(qct::GenStats{0, table.triad_count(), std::nullopt}) << "\n";
            return exit_ok;
        }
    } catch (const std::exception& e) {
        std::cerr << "qct: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
