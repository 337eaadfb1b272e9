#include "sct/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

namespace sct {

json cyclotomic_to_json(const Cyclotomic& value) {
    json coords = json::array();
    for (const Rational& c : value.coords()) {
        coords.push_back({c.get_num().get_str(), c.get_den().get_str()});
    }
    return json{{"conductor", value.conductor()}, {"coords", coords}};
}

Cyclotomic cyclotomic_from_json(const json& j) {
    const int n = j.at("conductor").get<int>();
    std::vector<Rational> coords;
    for (const auto& entry : j.at("coords")) {
        coords.push_back(rational_from_string(entry.at(0).get<std::string>(),
                                              entry.at(1).get<std::string>()));
    }
    return Cyclotomic::from_coords(n, std::move(coords));
}

Cyclotomic cyclotomic_from_flexible_json(const json& j) {
    if (j.is_number_integer()) return Cyclotomic(Rational(j.get<long>()));
    if (j.is_string()) {
        const std::string text = j.get<std::string>();
        const auto slash = text.find('/');
        if (slash == std::string::npos) return Cyclotomic(rational_from_string(text, "1"));
        return Cyclotomic(rational_from_string(text.substr(0, slash), text.substr(slash + 1)));
    }
    return cyclotomic_from_json(j);
}

json partition_to_json(const Partition& p) {
    return json{{"blocks", canonicalize_partition(p)}};
}

Partition partition_from_json(const json& j) {
    const json& blocks = j.is_array() ? j : j.at("blocks");
    Partition p;
    for (const auto& block : blocks) {
        p.push_back(block.get<std::vector<int>>());
    }
    return canonicalize_partition(std::move(p));
}

json group_spec_to_json(const GroupSpec& spec) {
    if (const auto* fam = std::get_if<GroupSpec::Family>(&spec.value)) {
        if (fam->kind == "quaternion") return json{{"family", "quaternion"}};
        return json{{"family", fam->kind}, {"n", fam->n}};
    }
    if (const auto* prod = std::get_if<GroupSpec::Product>(&spec.value)) {
        json factors = json::array();
        for (const auto& f : prod->factors) factors.push_back(group_spec_to_json(f));
        return json{{"product", factors}};
    }
    if (const auto* gens = std::get_if<GroupSpec::Generators>(&spec.value)) {
        return json{{"generators", gens->perms}};
    }
    const auto& table = std::get<GroupSpec::Table>(spec.value);
    return json{{"table", table.mul}};
}

GroupSpec group_spec_from_json(const json& j) {
    if (j.contains("family")) {
        GroupSpec::Family fam;
        fam.kind = j.at("family").get<std::string>();
        fam.n = fam.kind == "quaternion" ? 8 : j.at("n").get<int>();
        return GroupSpec{fam};
    }
    if (j.contains("product")) {
        GroupSpec::Product prod;
        for (const auto& f : j.at("product")) prod.factors.push_back(group_spec_from_json(f));
        return GroupSpec{prod};
    }
    if (j.contains("generators")) {
        return GroupSpec{GroupSpec::Generators{j.at("generators").get<std::vector<std::vector<int>>>()}};
    }
    if (j.contains("table")) {
        return GroupSpec{GroupSpec::Table{j.at("table").get<std::vector<std::vector<int>>>()}};
    }
    throw std::invalid_argument("group spec JSON needs family/product/generators/table");
}

GroupSpec parse_group_argument(const std::string& text) {
    if (!text.empty() && text.front() == '{') {
        return group_spec_from_json(json::parse(text));
    }
    std::ifstream file(text);
    if (file.good()) {
        json j;
        file >> j;
        return group_spec_from_json(j);
    }
    return parse_group_shorthand(text);
}

std::string group_hash(const FiniteGroup& g) {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ULL;
    };
    mix(static_cast<std::uint64_t>(g.order()));
    for (int a = 0; a < g.order(); ++a) {
        for (int b = 0; b < g.order(); ++b) mix(static_cast<std::uint64_t>(g.mul(a, b)));
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

json table_to_json(const CharacterTable& table) {
    const FiniteGroup& g = *table.group();
    json class_sizes = json::array();
    json class_reps = json::array();
    for (int c = 0; c < g.num_classes(); ++c) {
        class_sizes.push_back(g.class_size(c));
        class_reps.push_back(g.class_rep(c));
    }
    json values = json::array();
    for (int i = 0; i < table.num_irreducibles(); ++i) {
        json row = json::array();
        for (int c = 0; c < g.num_classes(); ++c) row.push_back(cyclotomic_to_json(table.value(i, c)));
        values.push_back(std::move(row));
    }
    return json{{"group", group_hash(g)},
                {"order", g.order()},
                {"num_classes", g.num_classes()},
                {"class_sizes", class_sizes},
                {"class_representatives", class_reps},
                {"degrees", table.degrees()},
                {"dixon_prime", table.dixon_prime()},
                {"values", values}};
}

json theory_to_json(const SupercharacterTheory& c) {
    return json{{"group", group_hash(*c.group())},
                {"size", c.size()},
                {"classes", c.class_part},
                {"chars", c.char_part}};
}

json schur_to_json(const SchurPartition& s) {
    return json{{"group", group_hash(*s.group)},
                {"blocks", s.blocks},
                {"central", s.central}};
}

json violation_to_json(const Violation& v) {
    return json{{"valid", false},
                {"condition", v.condition},
                {"detail", v.detail},
                {"witness", v.witness}};
}

json lattice_to_json(const SupLattice& lattice) {
    json theories = json::array();
    for (const auto& c : lattice.theories) theories.push_back(theory_to_json(c));
    json order = json::array();
    for (const auto& row : lattice.leq) {
        json r = json::array();
        for (bool b : row) r.push_back(b ? 1 : 0);
        order.push_back(std::move(r));
    }
    json covers = json::array();
    for (const auto& [lo, hi] : lattice.hasse) covers.push_back({lo, hi});
    return json{{"group", group_hash(*lattice.table->group())},
                {"count", lattice.size()},
                {"theories", theories},
                {"leq", order},
                {"hasse", covers}};
}

std::string lattice_to_dot(const SupLattice& lattice) {
    std::ostringstream out;
    out << "digraph sup_lattice {\n";
    out << "  rankdir=BT;\n";
    for (int i = 0; i < lattice.size(); ++i) {
        const auto& c = lattice.theories[static_cast<std::size_t>(i)];
        out << "  t" << i << " [label=\"|C|=" << c.size() << "\\n";
        out << "{";
        for (std::size_t b = 0; b < c.class_part.size(); ++b) {
            if (b) out << "|";
            out << c.class_part[b].size();
        }
        out << "}\"];\n";
    }
    for (const auto& [lo, hi] : lattice.hasse) {
        out << "  t" << lo << " -> t" << hi << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace sct
