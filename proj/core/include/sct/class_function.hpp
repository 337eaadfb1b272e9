#pragma once

#include <vector>

#include "sct/cyclotomic.hpp"
#include "sct/group.hpp"

namespace sct {

/// A function on a group constant on conjugacy classes; one exact value
/// per class, class order matching FiniteGroup::classes().
struct ClassFunction {
    GroupPtr group;
    std::vector<Cyclotomic> values;  // indexed by class

    const Cyclotomic& at_class(int c) const { return values[static_cast<std::size_t>(c)]; }
    const Cyclotomic& at_element(int g) const { return values[static_cast<std::size_t>(group->class_of(g))]; }

    bool operator==(const ClassFunction& rhs) const {
        return group->order() == rhs.group->order() && values == rhs.values;
    }
};

/// An element of the group algebra: one exact coefficient per group element.
struct GroupAlgebraElement {
    GroupPtr group;
    std::vector<Cyclotomic> coeffs;  // indexed by element

    bool operator==(const GroupAlgebraElement& rhs) const { return coeffs == rhs.coeffs; }
};

GroupAlgebraElement algebra_zero(const GroupPtr& g);
GroupAlgebraElement algebra_add(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

/// Convolution product in the group algebra.
GroupAlgebraElement algebra_mul(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

/// (1/|G|) sum_g phi(g) * conj(theta(g)). Throws on group mismatch.
Cyclotomic inner_product(const ClassFunction& phi, const ClassFunction& theta);

/// Restriction to a subgroup (value at an H-class = value at the containing
/// G-class).
ClassFunction restrict_class_function(const ClassFunction& phi, const SubgroupGroup& h);

/// Ordinary induction: phi^G(x) = (1/|H|) sum_{g in G} phi0(g x g^-1).
ClassFunction induce_class_function(const ClassFunction& phi, const SubgroupGroup& h,
                                    const GroupPtr& g);

ClassFunction class_function_constant(const GroupPtr& g, const Cyclotomic& value);

}  // namespace sct
