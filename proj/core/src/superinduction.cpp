#include "sct/superinduction.hpp"

#include <stdexcept>

namespace sct {

SuperclassFunction superinduce(const SupercharacterTheory& c, const Subgroup& h,
                               const std::vector<Cyclotomic>& phi) {
    if (h.parent->order() != c.group()->order()) {
        throw std::invalid_argument("superinduce: subgroup of a different group");
    }
    if (phi.size() != h.members.size()) {
        throw std::invalid_argument("superinduce: phi must list one value per subgroup element");
    }
    const Rational index = make_rational(c.group()->order(), h.order());
    std::vector<Cyclotomic> values;
    values.reserve(c.class_part.size());
    for (const auto& block : c.class_part) {
        Cyclotomic acc;
        for (int y : block) {
            const int local = h.index_of(y);
            if (local >= 0) acc += phi[static_cast<std::size_t>(local)];
        }
        values.push_back(acc * Cyclotomic(index) / Rational(static_cast<long>(block.size())));
    }
    return SuperclassFunction{c, std::move(values)};
}

Cyclotomic superclass_inner_product(const SuperclassFunction& phi, const SuperclassFunction& theta) {
    if (!(phi.theory == theta.theory)) {
        throw std::invalid_argument("superclass_inner_product: different theories");
    }
    const FiniteGroup& g = *phi.theory.group();
    Cyclotomic acc;
    for (std::size_t k = 0; k < phi.values.size(); ++k) {
        const Rational size(static_cast<long>(phi.theory.class_part[k].size()));
        acc += Cyclotomic(size) * phi.values[k] * theta.values[k].conj();
    }
    return acc / Rational(g.order());
}

bool check_reciprocity(const SupercharacterTheory& c, const Subgroup& h,
                       const std::vector<Cyclotomic>& phi, const SuperclassFunction& theta) {
    const SuperclassFunction induced = superinduce(c, h, phi);
    const Cyclotomic lhs = superclass_inner_product(induced, theta);
    // [phi, theta_H] over H, element-wise.
    Cyclotomic rhs;
    for (std::size_t i = 0; i < h.members.size(); ++i) {
        rhs += phi[i] * theta.at_element(h.members[i]).conj();
    }
    rhs = rhs / Rational(h.order());
    return lhs == rhs;
}

SuperclassFunction superinduce_from_normal(const SupercharacterTheory& c, const Subgroup& n,
                                           const std::vector<Cyclotomic>& phi) {
    if (!is_sct_normal(c, n.members)) {
        throw ValidationError(Violation{"not_sct_normal",
                                        "subgroup is not a union of superclasses", {}});
    }
    for (const auto& block : c.class_part) {
        if (!n.contains(block[0])) continue;
        const Cyclotomic& want = phi[static_cast<std::size_t>(n.index_of(block[0]))];
        for (int y : block) {
            if (phi[static_cast<std::size_t>(n.index_of(y))] != want) {
                throw std::invalid_argument(
                    "superinduce_from_normal: phi is not constant on the superclasses inside N");
            }
        }
    }
    SuperclassFunction induced = superinduce(c, n, phi);
    const Rational index = make_rational(c.group()->order(), n.order());
    for (std::size_t k = 0; k < c.class_part.size(); ++k) {
        if (!n.contains(c.class_part[k][0])) continue;
        const Cyclotomic expected =
            phi[static_cast<std::size_t>(n.index_of(c.class_part[k][0]))] * Cyclotomic(index);
        if (induced.values[k] != expected) {
            throw std::logic_error("superinduce_from_normal: restriction identity failed");
        }
    }
    return induced;
}

SuperclassFunction as_superclass_function(const SupercharacterTheory& c, const ClassFunction& f) {
    std::vector<Cyclotomic> values;
    values.reserve(c.class_part.size());
    for (const auto& block : c.class_part) {
        const Cyclotomic& want = f.at_element(block[0]);
        for (int y : block) {
            if (f.at_element(y) != want) {
                throw std::invalid_argument("as_superclass_function: not constant on superclasses");
            }
        }
        values.push_back(want);
    }
    return SuperclassFunction{c, std::move(values)};
}

}  // namespace sct
