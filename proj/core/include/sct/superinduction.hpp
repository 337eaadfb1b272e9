#pragma once

#include <vector>

#include "sct/class_function.hpp"
#include "sct/sct.hpp"

namespace sct {

/// A function on a group constant on the superclasses of a fixed theory.
struct SuperclassFunction {
    SupercharacterTheory theory;
    std::vector<Cyclotomic> values;  // indexed by superclass

    const Cyclotomic& at_superclass(int k) const { return values[static_cast<std::size_t>(k)]; }
    const Cyclotomic& at_element(int g) const {
        return values[static_cast<std::size_t>(theory.superclass_of(g))];
    }
};

/// Superinduction of an arbitrary function phi on H (one value per member of
/// H, in member order): value on superclass [x] is
/// [G:H] * (1/|[x]|) * sum_{y in [x] and H} phi(y).
SuperclassFunction superinduce(const SupercharacterTheory& c, const Subgroup& h,
                               const std::vector<Cyclotomic>& phi);

/// Both sides of Frobenius reciprocity [phi^(G), theta] = [phi, theta_H],
/// computed independently and compared exactly.
bool check_reciprocity(const SupercharacterTheory& c, const Subgroup& h,
                       const std::vector<Cyclotomic>& phi, const SuperclassFunction& theta);

/// Superinduction from a C-normal subgroup of a function constant on the
/// superclasses inside N; asserts the restriction identity
/// (phi^(G))_N = [G:N] phi.
SuperclassFunction superinduce_from_normal(const SupercharacterTheory& c, const Subgroup& n,
                                           const std::vector<Cyclotomic>& phi);

/// Inner product of superclass functions:
/// (1/|G|) sum_g phi(g) conj(theta(g)).
Cyclotomic superclass_inner_product(const SuperclassFunction& phi, const SuperclassFunction& theta);

/// A superclass function viewed element-wise from a class function
/// (requires constancy on superclasses; throws otherwise).
SuperclassFunction as_superclass_function(const SupercharacterTheory& c, const ClassFunction& f);

}  // namespace sct
