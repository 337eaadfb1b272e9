// sct: supercharacter theories and central Schur rings from the command
// line. JSON in, JSON (or text/DOT) out, exact values only.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "sct/io.hpp"
#include "sct/lattice.hpp"
#include "sct/products.hpp"
#include "sct/superinduction.hpp"

namespace {

using sct::json;

struct GlobalOptions {
    std::string group;
    std::string group2;
    std::string format = "json";
    int max_order = 2000;
    int threads = 1;
    int max_classes = 14;
};

json read_json_argument(const std::string& text) {
    if (!text.empty() && (text.front() == '{' || text.front() == '[')) {
        return json::parse(text);
    }
    std::ifstream file(text);
    if (!file.good()) throw std::invalid_argument("cannot read JSON argument or file: " + text);
    json j;
    file >> j;
    return j;
}

sct::GroupPtr load_group(const GlobalOptions& opts, const std::string& which) {
    if (which.empty()) throw std::invalid_argument("missing --group");
    return sct::build_group(sct::parse_group_argument(which), opts.max_order);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

/// Theories arrive as {"classes": [[...]], "chars": [[...]]}; when "chars"
/// is absent the character side is recovered through the bijection. A
/// "group" hash, when present, must match the group being worked on.
sct::SupercharacterTheory load_theory(const json& j, const sct::TablePtr& table) {
    if (j.contains("group") && j.at("group").get<std::string>() != sct::group_hash(*table->group())) {
        throw std::invalid_argument("theory JSON belongs to a different group");
    }
    const sct::Partition classes =
        sct::partition_from_json(j.contains("classes") ? j.at("classes") : j.at("blocks"));
    if (j.contains("chars")) {
        return sct::validate_sct(table, sct::partition_from_json(j.at("chars")), classes);
    }
    sct::SchurPartition s = sct::make_schur_partition(table->group(), classes);
    if (!s.central) {
        throw sct::ValidationError(sct::Violation{
            "not_central", "superclass blocks must be unions of conjugacy classes", {}});
    }
    return sct::sring_to_sct(s, table);
}

std::vector<int> parse_generators(const std::string& text) {
    return read_json_argument(text).get<std::vector<int>>();
}

std::string text_summary(const sct::SupercharacterTheory& c) {
    std::string out = "|C|=" + std::to_string(c.size()) + " classes=";
    for (const auto& block : c.class_part) {
        out += "{";
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(block[i]);
        }
        out += "}";
    }
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"supercharacter theories and central Schur rings of finite groups"};
    app.require_subcommand(1);
    GlobalOptions opts;
    app.add_option("--group", opts.group, "group spec: family:n shorthand, JSON, or a file path");
    app.add_option("--group2", opts.group2, "second group (direct product verb)");
    app.add_option("--format", opts.format, "output format: json|text|dot")
        ->check(CLI::IsMember({"json", "text", "dot"}));
    app.add_option("--max-order", opts.max_order, "largest allowed group order");
    app.add_option("--threads", opts.threads, "worker threads for enumeration");
    app.add_option("--max-classes", opts.max_classes, "enumeration cap on conjugacy classes");

    std::string theory_arg, a_arg, b_arg, n_arg, m_arg, h_arg, phi_arg;

    CLI::App* table_cmd = app.add_subcommand("table", "exact character table");
    CLI::App* classes_cmd = app.add_subcommand("classes", "conjugacy classes");
    CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "all supercharacter theories");
    CLI::App* verify_cmd = app.add_subcommand("verify", "validate a theory or Schur partition");
    verify_cmd->add_option("--theory", theory_arg, "theory/partition JSON or file")->required();
    CLI::App* join_cmd = app.add_subcommand("join", "lattice join of two theories");
    join_cmd->add_option("--a", a_arg, "first theory")->required();
    join_cmd->add_option("--b", b_arg, "second theory")->required();
    CLI::App* meet_cmd = app.add_subcommand("meet", "lattice meet via full enumeration");
    meet_cmd->add_option("--a", a_arg, "first theory")->required();
    meet_cmd->add_option("--b", b_arg, "second theory")->required();
    CLI::App* star_cmd = app.add_subcommand("star", "star product over a normal subgroup");
    star_cmd->add_option("--n", n_arg, "generators of N (JSON array of elements)")->required();
    star_cmd->add_option("--a", a_arg, "theory of N (local indices)")->required();
    star_cmd->add_option("--b", b_arg, "theory of G/N (coset indices)")->required();
    CLI::App* wedge_cmd = app.add_subcommand("wedge", "wedge product over a chain N <= M");
    wedge_cmd->add_option("--n", n_arg, "generators of N")->required();
    wedge_cmd->add_option("--m", m_arg, "generators of M")->required();
    wedge_cmd->add_option("--a", a_arg, "theory of M (local indices)")->required();
    wedge_cmd->add_option("--b", b_arg, "theory of G/N (coset indices)")->required();
    CLI::App* direct_cmd = app.add_subcommand("direct", "direct product of two theories");
    direct_cmd->add_option("--a", a_arg, "theory of the first group")->required();
    direct_cmd->add_option("--b", b_arg, "theory of the second group")->required();
    CLI::App* restrict_cmd = app.add_subcommand("restrict", "restrict to a C-normal subgroup");
    restrict_cmd->add_option("--n", n_arg, "generators of N")->required();
    restrict_cmd->add_option("--theory", theory_arg, "theory of G")->required();
    CLI::App* deflate_cmd = app.add_subcommand("deflate", "deflate to the quotient by a C-normal subgroup");
    deflate_cmd->add_option("--n", n_arg, "generators of N")->required();
    deflate_cmd->add_option("--theory", theory_arg, "theory of G")->required();
    CLI::App* superinduce_cmd = app.add_subcommand("superinduce", "superinduce a function from a subgroup");
    superinduce_cmd->set_help_flag("--help", "print help");  // frees -h/--h
    superinduce_cmd->add_option("--h", h_arg, "generators of H")->required();
    superinduce_cmd->add_option("--phi", phi_arg, "values of phi on H, one per member")->required();
    superinduce_cmd->add_option("--theory", theory_arg, "theory of G (default: ordinary classes)");
    CLI::App* hasse_cmd = app.add_subcommand("hasse", "Hasse diagram of the theory lattice");

    // Global flags may appear after the verb.
    for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    app.parse(argc, argv);

    const auto lattice_for = [&](const sct::TablePtr& table) {
        return sct::enumerate_sup(table, opts.max_classes, opts.threads);
    };

    if (table_cmd->parsed()) {
        const auto g = load_group(opts, opts.group);
        const auto t = sct::build_character_table(g);
        if (opts.format == "text") {
            std::cout << "order " << g->order() << ", " << g->num_classes() << " classes\n";
            for (int i = 0; i < t->num_irreducibles(); ++i) {
                std::cout << "chi_" << i << " (deg " << t->degree(i) << "):";
                for (int c = 0; c < g->num_classes(); ++c) {
                    std::cout << " " << t->value(i, c).to_string();
                }
                std::cout << "\n";
            }
        } else {
            emit(sct::table_to_json(*t));
        }
        return 0;
    }
    if (classes_cmd->parsed()) {
        const auto g = load_group(opts, opts.group);
        if (opts.format == "text") {
            for (const auto& c : g->classes()) {
                std::cout << "{";
                for (std::size_t i = 0; i < c.size(); ++i) std::cout << (i ? "," : "") << c[i];
                std::cout << "}\n";
            }
        } else {
            emit(json{{"group", sct::group_hash(*g)},
                      {"order", g->order()},
                      {"classes", g->classes()}});
        }
        return 0;
    }
    if (enumerate_cmd->parsed()) {
        const auto g = load_group(opts, opts.group);
        const auto lattice = lattice_for(sct::build_character_table(g));
        if (opts.format == "text") {
            for (const auto& c : lattice.theories) std::cout << text_summary(c) << "\n";
        } else {
            json theories = json::array();
            for (const auto& c : lattice.theories) theories.push_back(sct::theory_to_json(c));
            emit(json{{"group", sct::group_hash(*g)},
                      {"count", lattice.size()},
                      {"theories", theories}});
        }
        return 0;
    }
    if (verify_cmd->parsed()) {
        const auto g = load_group(opts, opts.group);
        const json j = read_json_argument(theory_arg);
        const auto t = sct::build_character_table(g);
        const sct::Partition classes =
            sct::partition_from_json(j.contains("classes") ? j.at("classes") : j.at("blocks"));
        std::optional<sct::Violation> violation;
        if (j.contains("chars")) {
            violation = sct::find_sct_violation(*t, sct::partition_from_json(j.at("chars")), classes);
        } else {
            violation = sct::find_schur_violation(*g, sct::canonicalize_partition(classes));
            if (!violation && !sct::make_schur_partition(g, classes).central) {
                violation = sct::Violation{
                    "not_central", "superclass blocks must be unions of conjugacy classes", {}};
            }
        }
        if (violation) {
            emit(sct::violation_to_json(*violation));
            return 1;
        }
        emit(json{{"valid", true}, {"group", sct::group_hash(*g)}});
        return 0;
    }
    if (join_cmd->parsed() || meet_cmd->parsed()) {
        const auto g = load_group(opts, opts.group);
        const auto t = sct::build_character_table(g);
        const auto a = load_theory(read_json_argument(a_arg), t);
        const auto b = load_theory(read_json_argument(b_arg), t);
        if (join_cmd->parsed()) {
            emit(sct::theory_to_json(sct::sct_join(a, b)));
        } else {
            emit(sct::theory_to_json(sct::sct_meet(a, b, lattice_for(t))));
        }
        return 0;
    }
    if (star_cmd->parsed()) {
        const auto g = load_group(opts, opts.group);
        const auto t = sct::build_character_table(g);
        const sct::Subgroup n = sct::subgroup_closure(g, parse_generators(n_arg));
        const sct::StarContext ctx = sct::make_star_context(g, t, n);
        const auto a = load_theory(read_json_argument(a_arg), ctx.table_n);
        const auto b = load_theory(read_json_argument(b_arg), ctx.table_q);
        emit(sct::theory_to_json(sct::star_product(ctx, a, b)));
        return 0;
    }
    if (wedge_cmd->parsed()) {
        const auto g = load_group(opts, opts.group);
        const auto t = sct::build_character_table(g);
        const sct::Subgroup n = sct::subgroup_closure(g, parse_generators(n_arg));
        const sct::Subgroup m = sct::subgroup_closure(g, parse_generators(m_arg));
        const sct::WedgeContext ctx = sct::make_wedge_context(g, t, n, m);
        const auto a = load_theory(read_json_argument(a_arg), ctx.table_m);
        const auto b = load_theory(read_json_argument(b_arg), ctx.n_ctx.table_q);
        emit(sct::theory_to_json(sct::wedge_product(ctx, a, b)));
        return 0;
    }
    if (direct_cmd->parsed()) {
        const auto ga = load_group(opts, opts.group);
        const auto gb = load_group(opts, opts.group2);
        const auto ta = sct::build_character_table(ga);
        const auto tb = sct::build_character_table(gb);
        const auto a = load_theory(read_json_argument(a_arg), ta);
        const auto b = load_theory(read_json_argument(b_arg), tb);
        const auto prod = sct::product_group(ga, gb);
        const auto tprod = sct::build_character_table(prod);
        emit(sct::theory_to_json(sct::direct_product(a, b, prod, tprod)));
        return 0;
    }
    if (restrict_cmd->parsed() || deflate_cmd->parsed()) {
        const auto g = load_group(opts, opts.group);
        const auto t = sct::build_character_table(g);
        const sct::Subgroup n = sct::subgroup_closure(g, parse_generators(n_arg));
        const auto c = load_theory(read_json_argument(theory_arg), t);
        if (restrict_cmd->parsed()) {
            const sct::SubgroupGroup ng = sct::materialize_subgroup(n);
            const auto tn = sct::build_character_table(ng.group);
            json out = sct::theory_to_json(sct::restrict_to_normal(c, ng, tn));
            out["subgroup_members"] = n.members;
            emit(out);
        } else {
            const sct::QuotientStructure q = sct::make_quotient(n);
            const auto tq = sct::build_character_table(q.quotient);
            const std::vector<int> lift = sct::lift_irreducibles(*t, *tq, q);
            json out = sct::theory_to_json(sct::deflate_to_quotient(c, q, tq, lift));
            out["cosets"] = q.cosets;
            emit(out);
        }
        return 0;
    }
    if (superinduce_cmd->parsed()) {
        const auto g = load_group(opts, opts.group);
        const auto t = sct::build_character_table(g);
        const sct::SupercharacterTheory c = theory_arg.empty()
                                                ? sct::theory_m(t)
                                                : load_theory(read_json_argument(theory_arg), t);
        const sct::Subgroup h = sct::subgroup_closure(g, parse_generators(h_arg));
        std::vector<sct::Cyclotomic> phi;
        for (const auto& v : read_json_argument(phi_arg)) {
            phi.push_back(sct::cyclotomic_from_flexible_json(v));
        }
        const sct::SuperclassFunction result = sct::superinduce(c, h, phi);
        json values = json::array();
        for (const auto& v : result.values) values.push_back(sct::cyclotomic_to_json(v));
        emit(json{{"group", sct::group_hash(*g)},
                  {"subgroup_members", h.members},
                  {"superclasses", c.class_part},
                  {"values", values}});
        return 0;
    }
    if (hasse_cmd->parsed()) {
        const auto g = load_group(opts, opts.group);
        const auto lattice = lattice_for(sct::build_character_table(g));
        if (opts.format == "dot") {
            std::cout << sct::lattice_to_dot(lattice);
        } else if (opts.format == "text") {
            for (const auto& [lo, hi] : lattice.hasse) std::cout << lo << " -> " << hi << "\n";
        } else {
            emit(sct::lattice_to_json(lattice));
        }
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError& e) {
        CLI::App app;
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const sct::ValidationError& e) {
        emit(sct::violation_to_json(e.violation()));
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: bad JSON input: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
