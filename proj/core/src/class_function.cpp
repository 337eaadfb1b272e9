#include "sct/class_function.hpp"

#include <stdexcept>

namespace sct {

GroupAlgebraElement algebra_zero(const GroupPtr& g) {
    return GroupAlgebraElement{g, std::vector<Cyclotomic>(static_cast<std::size_t>(g->order()))};
}

GroupAlgebraElement algebra_add(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    GroupAlgebraElement out = a;
    for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
    return out;
}

GroupAlgebraElement algebra_mul(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    const FiniteGroup& g = *a.group;
    GroupAlgebraElement out = algebra_zero(a.group);
    for (int x = 0; x < g.order(); ++x) {
        if (a.coeffs[static_cast<std::size_t>(x)].is_zero()) continue;
        for (int y = 0; y < g.order(); ++y) {
            if (b.coeffs[static_cast<std::size_t>(y)].is_zero()) continue;
            out.coeffs[static_cast<std::size_t>(g.mul(x, y))] +=
                a.coeffs[static_cast<std::size_t>(x)] * b.coeffs[static_cast<std::size_t>(y)];
        }
    }
    return out;
}

Cyclotomic inner_product(const ClassFunction& phi, const ClassFunction& theta) {
    if (phi.group->order() != theta.group->order() ||
        phi.values.size() != theta.values.size()) {
        throw std::invalid_argument("inner_product: class functions on different groups");
    }
    const FiniteGroup& g = *phi.group;
    Cyclotomic acc;
    for (int c = 0; c < g.num_classes(); ++c) {
        acc += Cyclotomic(Rational(g.class_size(c))) * phi.at_class(c) * theta.at_class(c).conj();
    }
    return acc / Rational(g.order());
}

ClassFunction restrict_class_function(const ClassFunction& phi, const SubgroupGroup& h) {
    const FiniteGroup& sub = *h.group;
    std::vector<Cyclotomic> values(static_cast<std::size_t>(sub.num_classes()));
    for (int c = 0; c < sub.num_classes(); ++c) {
        const int parent_elem = h.to_parent[static_cast<std::size_t>(sub.class_rep(c))];
        values[static_cast<std::size_t>(c)] = phi.at_element(parent_elem);
    }
    return ClassFunction{h.group, std::move(values)};
}

ClassFunction induce_class_function(const ClassFunction& phi, const SubgroupGroup& h,
                                    const GroupPtr& g) {
    const FiniteGroup& big = *g;
    std::vector<Cyclotomic> values(static_cast<std::size_t>(big.num_classes()));
    for (int c = 0; c < big.num_classes(); ++c) {
        const int x = big.class_rep(c);
        Cyclotomic acc;
        for (int y = 0; y < big.order(); ++y) {
            const int conj = big.conjugate(x, y);
            const int local = h.to_local(conj);
            if (local >= 0) acc += phi.at_element(local);
        }
        values[static_cast<std::size_t>(c)] = acc / Rational(h.group->order());
    }
    return ClassFunction{g, std::move(values)};
}

ClassFunction class_function_constant(const GroupPtr& g, const Cyclotomic& value) {
    return ClassFunction{g, std::vector<Cyclotomic>(static_cast<std::size_t>(g->num_classes()), value)};
}

}  // namespace sct
