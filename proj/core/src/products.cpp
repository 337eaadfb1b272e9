#include "sct/products.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sct {

namespace {

// G-orbits on Irr(N) under the conjugation action.
std::vector<int> irr_orbits(const CharacterTable& table_n, const AutomorphismAction& action) {
    const FiniteGroup& n = *table_n.group();
    const int r = table_n.num_irreducibles();
    Partition orbits;
    {
        Partition singletons;
        for (int i = 0; i < r; ++i) singletons.push_back({i});
        orbits = singletons;
        for (const auto& map : action.maps) {
            std::vector<int> perm(static_cast<std::size_t>(r), -1);
            for (int i = 0; i < r; ++i) {
                std::vector<Cyclotomic> composed(static_cast<std::size_t>(r));
                for (int c = 0; c < r; ++c) {
                    const int image = map[static_cast<std::size_t>(n.class_rep(c))];
                    composed[static_cast<std::size_t>(c)] = table_n.value(i, n.class_of(image));
                }
                for (int j = 0; j < r; ++j) {
                    if (table_n.row(j) == composed) {
                        perm[static_cast<std::size_t>(i)] = j;
                        break;
                    }
                }
                if (perm[static_cast<std::size_t>(i)] < 0) {
                    throw std::logic_error("irr_orbits: action does not permute Irr(N)");
                }
            }
            Partition moved;
            for (int i = 0; i < r; ++i) moved.push_back({i, perm[static_cast<std::size_t>(i)]});
            orbits = partition_join(orbits, moved, r);
        }
    }
    return block_index_map(orbits, r);
}

std::vector<int> map_block(const std::vector<int>& block, const std::vector<int>& map) {
    std::vector<int> out;
    out.reserve(block.size());
    for (int x : block) out.push_back(map[static_cast<std::size_t>(x)]);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

StarContext make_star_context(const GroupPtr& g, const TablePtr& table_g, const Subgroup& n) {
    StarContext ctx;
    ctx.g = g;
    ctx.table_g = table_g;
    ctx.n = n;
    ctx.n_group = materialize_subgroup(n);
    ctx.table_n = build_character_table(ctx.n_group.group);
    ctx.quotient = make_quotient(n);
    ctx.table_q = build_character_table(ctx.quotient.quotient);
    ctx.lift = lift_irreducibles(*table_g, *ctx.table_q, ctx.quotient);
    ctx.mult = restriction_multiplicities(*table_g, *ctx.table_n, ctx.n_group);
    ctx.conj_action = conjugation_action(ctx.n_group);
    ctx.orbit_of = irr_orbits(*ctx.table_n, ctx.conj_action);
    return ctx;
}

std::vector<int> induced_irr_set(const StarContext& ctx, const std::vector<int>& x) {
    return induce_character_set(ctx.mult, ctx.orbit_of, x);
}

SupercharacterTheory star_product(const StarContext& ctx, const SupercharacterTheory& c,
                                  const SupercharacterTheory& d) {
    if (!same_group(*c.group(), *ctx.n_group.group)) {
        throw std::invalid_argument("star_product: C is not a theory of the context subgroup");
    }
    if (!same_group(*d.group(), *ctx.quotient.quotient)) {
        throw std::invalid_argument("star_product: D is not a theory of the context quotient");
    }
    if (!is_action_invariant(c, ctx.conj_action)) {
        throw ValidationError(Violation{"not_invariant",
                                        "theory of N is not invariant under conjugation by G", {}});
    }
    // Superclasses: blocks of C (as parent elements) plus pullbacks of the
    // nontrivial blocks of D.
    Partition classes;
    for (const auto& block : c.class_part) {
        classes.push_back(map_block(block, ctx.n_group.to_parent));
    }
    for (const auto& block : d.class_part) {
        if (block == std::vector<int>{0}) continue;  // the coset N itself
        std::vector<int> pulled;
        for (int coset : block) {
            const auto& members = ctx.quotient.cosets[static_cast<std::size_t>(coset)];
            pulled.insert(pulled.end(), members.begin(), members.end());
        }
        std::sort(pulled.begin(), pulled.end());
        classes.push_back(std::move(pulled));
    }
    // Supercharacters: lifts of D's blocks plus X^G for nontrivial X of C.
    Partition chars;
    for (const auto& block : d.char_part) {
        chars.push_back(map_block(block, ctx.lift));
    }
    for (const auto& block : c.char_part) {
        if (block == std::vector<int>{0}) continue;  // {1_N}^G is replaced by D's blocks
        chars.push_back(induced_irr_set(ctx, block));
    }
    SupercharacterTheory result = validate_sct(ctx.table_g, std::move(chars), std::move(classes));
    if (result.size() != c.size() + d.size() - 1) {
        throw std::logic_error("star_product: size identity |C*D| = |C|+|D|-1 failed");
    }
    return result;
}

SupercharacterTheory theory_m_NG_via_star(const StarContext& ctx) {
    const SupercharacterTheory conj = conj_theory(ctx.table_n, ctx.conj_action);
    return star_product(ctx, conj, theory_m(ctx.table_q));
}

WedgeContext make_wedge_context(const GroupPtr& g, const TablePtr& table_g, const Subgroup& n,
                                const Subgroup& m) {
    for (int x : n.members) {
        if (!m.contains(x)) {
            throw std::invalid_argument("wedge context: N is not contained in M");
        }
    }
    if (!is_normal(n) || !is_normal(m)) {
        throw std::invalid_argument("wedge context: N and M must be normal in G");
    }
    WedgeContext ctx;
    ctx.n_ctx = make_star_context(g, table_g, n);
    ctx.m = m;
    ctx.m_group = materialize_subgroup(m);
    ctx.table_m = build_character_table(ctx.m_group.group);
    ctx.mult_m = restriction_multiplicities(*table_g, *ctx.table_m, ctx.m_group);
    ctx.conj_action_m = conjugation_action(ctx.m_group);
    // N inside the materialized M.
    std::vector<int> local;
    local.reserve(n.members.size());
    for (int x : n.members) local.push_back(ctx.m_group.to_local(x));
    std::sort(local.begin(), local.end());
    ctx.n_in_m = Subgroup{ctx.m_group.group, std::move(local)};
    ctx.q_mn = make_quotient(ctx.n_in_m);
    ctx.table_mn = build_character_table(ctx.q_mn.quotient);
    ctx.lift_mn = lift_irreducibles(*ctx.table_m, *ctx.table_mn, ctx.q_mn);
    // Image subgroup MN/N = projection of M inside G/N.
    std::set<int> cosets;
    for (int x : m.members) cosets.insert(ctx.n_ctx.quotient.projection[static_cast<std::size_t>(x)]);
    Subgroup s{ctx.n_ctx.quotient.quotient, std::vector<int>(cosets.begin(), cosets.end())};
    ctx.s_group = materialize_subgroup(s);
    ctx.table_s = build_character_table(ctx.s_group.group);
    // Identify s_group with the canonical M/N: a coset of N in G lying
    // inside M is a coset of N in M.
    ctx.s_to_mn.resize(static_cast<std::size_t>(ctx.s_group.group->order()));
    for (int sl = 0; sl < ctx.s_group.group->order(); ++sl) {
        const int coset = ctx.s_group.to_parent[static_cast<std::size_t>(sl)];
        const int parent_elem = ctx.n_ctx.quotient.cosets[static_cast<std::size_t>(coset)][0];
        const int m_local = ctx.m_group.to_local(parent_elem);
        if (m_local < 0) {
            throw std::logic_error("wedge context: coset representative escapes M");
        }
        ctx.s_to_mn[static_cast<std::size_t>(sl)] =
            ctx.q_mn.projection[static_cast<std::size_t>(m_local)];
    }
    return ctx;
}

SupercharacterTheory wedge_product(const WedgeContext& ctx, const SupercharacterTheory& c,
                                   const SupercharacterTheory& d) {
    if (!same_group(*c.group(), *ctx.m_group.group)) {
        throw std::invalid_argument("wedge_product: C is not a theory of the context M");
    }
    if (!same_group(*d.group(), *ctx.n_ctx.quotient.quotient)) {
        throw std::invalid_argument("wedge_product: D is not a theory of the context G/N");
    }
    if (!is_action_invariant(c, ctx.conj_action_m)) {
        throw ValidationError(Violation{"not_invariant",
                                        "theory of M is not invariant under conjugation by G", {}});
    }
    if (!is_sct_normal(c, ctx.n_in_m.members)) {
        throw ValidationError(Violation{"n_not_c_normal", "N is not a union of C-superclasses", {}});
    }
    if (!is_sct_normal(d, ctx.s_group.parent_subgroup.members)) {
        throw ValidationError(Violation{"mn_not_d_normal", "M/N is not a union of D-superclasses", {}});
    }
    // Overlap condition: C^{M/N} = D_{M/N} through the canonical M/N.
    const SupercharacterTheory c_deflated =
        deflate_to_quotient(c, ctx.q_mn, ctx.table_mn, ctx.lift_mn);
    const SupercharacterTheory d_restricted = restrict_to_normal(d, ctx.s_group, ctx.table_s);
    Partition transported;
    for (const auto& block : d_restricted.class_part) {
        transported.push_back(map_block(block, ctx.s_to_mn));
    }
    transported = canonicalize_partition(std::move(transported));
    if (transported != c_deflated.class_part) {
        throw ValidationError(Violation{"overlap_mismatch",
                                        "C^{M/N} and D_{M/N} are different theories of M/N", {}});
    }
    // Superclasses: blocks of C plus preimages of D-blocks outside M/N.
    Partition classes;
    for (const auto& block : c.class_part) {
        classes.push_back(map_block(block, ctx.m_group.to_parent));
    }
    const auto& s_members = ctx.s_group.parent_subgroup.members;
    for (const auto& block : d.class_part) {
        const bool inside =
            std::all_of(block.begin(), block.end(), [&](int coset) {
                return std::binary_search(s_members.begin(), s_members.end(), coset);
            });
        if (inside) continue;
        std::vector<int> pulled;
        for (int coset : block) {
            const auto& members = ctx.n_ctx.quotient.cosets[static_cast<std::size_t>(coset)];
            pulled.insert(pulled.end(), members.begin(), members.end());
        }
        std::sort(pulled.begin(), pulled.end());
        classes.push_back(std::move(pulled));
    }
    // Supercharacters: lifts of D's blocks plus X^G for X outside Irr(M/N).
    std::vector<char> is_lifted(static_cast<std::size_t>(ctx.table_m->num_irreducibles()), 0);
    for (int i : ctx.lift_mn) is_lifted[static_cast<std::size_t>(i)] = 1;
    Partition chars;
    for (const auto& block : d.char_part) {
        chars.push_back(map_block(block, ctx.n_ctx.lift));
    }
    for (const auto& block : c.char_part) {
        const bool inside = std::all_of(block.begin(), block.end(), [&](int i) {
            return is_lifted[static_cast<std::size_t>(i)] != 0;
        });
        if (inside) continue;
        std::set<int> induced;
        for (int psi : block) {
            for (std::size_t chi = 0; chi < ctx.mult_m.size(); ++chi) {
                if (ctx.mult_m[chi][static_cast<std::size_t>(psi)] > 0) {
                    induced.insert(static_cast<int>(chi));
                }
            }
        }
        chars.push_back(std::vector<int>(induced.begin(), induced.end()));
    }
    SupercharacterTheory e = validate_sct(ctx.n_ctx.table_g, std::move(chars), std::move(classes));
    // Postconditions characterizing the wedge construction.
    if (e.size() != c.size() + d.size() - d_restricted.size()) {
        throw std::logic_error("wedge_product: size identity failed");
    }
    if (!(restrict_to_normal(e, ctx.m_group, ctx.table_m) == c)) {
        throw std::logic_error("wedge_product: E_M differs from C");
    }
    const SupercharacterTheory e_deflated =
        deflate_to_quotient(e, ctx.n_ctx.quotient, ctx.n_ctx.table_q, ctx.n_ctx.lift);
    if (!(e_deflated == d)) {
        throw std::logic_error("wedge_product: E^{G/N} differs from D");
    }
    return e;
}

WedgeFactorization wedge_recognize(const WedgeContext& ctx, const SupercharacterTheory& e) {
    if (!is_sct_normal(e, ctx.n_ctx.n.members)) {
        throw ValidationError(Violation{"n_not_e_normal", "N is not a union of E-superclasses", {}});
    }
    if (!is_sct_normal(e, ctx.m.members)) {
        throw ValidationError(Violation{"m_not_e_normal", "M is not a union of E-superclasses", {}});
    }
    // Coset condition: every superclass outside M is a union of N-cosets.
    const std::vector<int>& proj = ctx.n_ctx.quotient.projection;
    const int coset_size = ctx.n_ctx.n.order();
    for (const auto& block : e.class_part) {
        if (ctx.m.contains(block[0])) continue;
        std::set<int> cosets;
        for (int x : block) cosets.insert(proj[static_cast<std::size_t>(x)]);
        if (cosets.size() * static_cast<std::size_t>(coset_size) != block.size()) {
            return WedgeFactorization{};
        }
    }
    WedgeFactorization out;
    out.is_wedge = true;
    out.restricted = restrict_to_normal(e, ctx.m_group, ctx.table_m);
    out.deflated = deflate_to_quotient(e, ctx.n_ctx.quotient, ctx.n_ctx.table_q, ctx.n_ctx.lift);
    if (!(wedge_product(ctx, out.restricted, out.deflated) == e)) {
        throw std::logic_error("wedge_recognize: refactorization does not reproduce the theory");
    }
    return out;
}

SupercharacterTheory direct_product(const SupercharacterTheory& c, const SupercharacterTheory& d,
                                    const GroupPtr& product, const TablePtr& table_product) {
    const FiniteGroup& a = *c.group();
    const FiniteGroup& b = *d.group();
    const int nb = b.order();
    if (product->order() != a.order() * nb) {
        throw std::invalid_argument("direct_product: product group has wrong order");
    }
    // Irr(M x N) = Irr(M) x Irr(N) located by exact value matching.
    const int ra = c.table->num_irreducibles();
    const int rb = d.table->num_irreducibles();
    std::vector<std::vector<int>> pair_irr(static_cast<std::size_t>(ra),
                                           std::vector<int>(static_cast<std::size_t>(rb), -1));
    for (int i = 0; i < ra; ++i) {
        for (int j = 0; j < rb; ++j) {
            std::vector<Cyclotomic> values(static_cast<std::size_t>(product->num_classes()));
            for (int k = 0; k < product->num_classes(); ++k) {
                const int rep = product->class_rep(k);
                values[static_cast<std::size_t>(k)] =
                    c.table->value(i, a.class_of(rep / nb)) * d.table->value(j, b.class_of(rep % nb));
            }
            for (int t = 0; t < table_product->num_irreducibles(); ++t) {
                if (table_product->row(t) == values) {
                    pair_irr[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = t;
                    break;
                }
            }
            if (pair_irr[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] < 0) {
                throw std::logic_error("direct_product: product character not found");
            }
        }
    }
    Partition chars;
    for (const auto& x : c.char_part) {
        for (const auto& y : d.char_part) {
            std::vector<int> block;
            block.reserve(x.size() * y.size());
            for (int i : x) {
                for (int j : y) {
                    block.push_back(pair_irr[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
                }
            }
            chars.push_back(std::move(block));
        }
    }
    Partition classes;
    for (const auto& k : c.class_part) {
        for (const auto& l : d.class_part) {
            std::vector<int> block;
            block.reserve(k.size() * l.size());
            for (int x : k) {
                for (int y : l) block.push_back(x * nb + y);
            }
            classes.push_back(std::move(block));
        }
    }
    SupercharacterTheory result =
        validate_sct(table_product, std::move(chars), std::move(classes));
    if (result.size() != c.size() * d.size()) {
        throw std::logic_error("direct_product: size identity |CxD| = |C||D| failed");
    }
    return result;
}

SchurPartition sring_dot_product(const SchurPartition& a, const SchurPartition& b,
                                 const GroupPtr& product) {
    const int nb = b.group->order();
    Partition blocks;
    for (const auto& k : a.blocks) {
        for (const auto& l : b.blocks) {
            std::vector<int> block;
            block.reserve(k.size() * l.size());
            for (int x : k) {
                for (int y : l) block.push_back(x * nb + y);
            }
            blocks.push_back(std::move(block));
        }
    }
    return make_schur_partition(product, std::move(blocks));
}

}  // namespace sct
