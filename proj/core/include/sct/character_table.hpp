#pragma once

#include <memory>
#include <set>
#include <vector>

#include "sct/class_function.hpp"
#include "sct/cyclotomic.hpp"
#include "sct/group.hpp"

namespace sct {

class CharacterTable;
using TablePtr = std::shared_ptr<const CharacterTable>;

/// The exact table of irreducible characters of a finite group.
/// Rows: irreducibles, trivial character first, then ordered by
/// (degree, canonical value order). Columns: conjugacy classes in the
/// group's class order.
class CharacterTable {
public:
    const GroupPtr& group() const { return group_; }
    int num_irreducibles() const { return static_cast<int>(values_.size()); }
    int degree(int i) const { return degrees_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& degrees() const { return degrees_; }
    const Cyclotomic& value(int irr, int cls) const {
        return values_[static_cast<std::size_t>(irr)][static_cast<std::size_t>(cls)];
    }
    const std::vector<Cyclotomic>& row(int irr) const { return values_[static_cast<std::size_t>(irr)]; }

    ClassFunction character(int irr) const {
        return ClassFunction{group_, values_[static_cast<std::size_t>(irr)]};
    }

    /// The prime used by the modular computation (output metadata).
    long long dixon_prime() const { return prime_; }

    /// Class-algebra structure constants: hatC_i * hatC_j =
    /// sum_k constants()[i][j][k] * hatC_k.
    const std::vector<std::vector<std::vector<long long>>>& class_constants() const {
        return class_constants_;
    }

    friend TablePtr build_character_table(const GroupPtr& g);

private:
    GroupPtr group_;
    std::vector<std::vector<Cyclotomic>> values_;
    std::vector<int> degrees_;
    long long prime_ = 0;
    std::vector<std::vector<std::vector<long long>>> class_constants_;
};

/// Burnside-Dixon: exact table via eigenspace splitting of the class
/// matrices modulo a prime p = 1 (mod exp(G)), p > 2 sqrt(|G|), followed by
/// an inverse discrete Fourier lift of the power-map values.
TablePtr build_character_table(const GroupPtr& g);

/// sigma_X = sum_{i in X} degree(i) * chi_i as a class function.
ClassFunction sigma(const CharacterTable& table, const std::vector<int>& irr_indices);

/// e_chi: coefficient of g is degree/|G| * conj(chi(g)); a primitive central
/// idempotent of the group algebra.
GroupAlgebraElement central_idempotent(const CharacterTable& table, int irr);

/// f_X = sum_{i in X} e_i = (1/|G|) sum_g conj(sigma_X(g)) g.
GroupAlgebraElement f_idempotent(const CharacterTable& table, const std::vector<int>& irr_indices);

/// Multiplicity matrix m[i][j] = [ (chi_i)_H , psi_j ]_H of restrictions of
/// G-irreducibles against H-irreducibles. Entries are nonnegative integers.
std::vector<std::vector<long long>> restriction_multiplicities(const CharacterTable& table_g,
                                                               const CharacterTable& table_h,
                                                               const SubgroupGroup& h);

/// Irr(G | psi) = { chi : [chi_N, psi] > 0 } for a normal subgroup N.
std::vector<int> irreducibles_over(const std::vector<std::vector<long long>>& mult, int psi);

/// Z^G = union of Irr(G|psi) over psi in Z, for Z a union of G-orbits in
/// Irr(N). Throws if Z is not G-invariant (checked against `orbit_of`).
std::vector<int> induce_character_set(const std::vector<std::vector<long long>>& mult,
                                      const std::vector<int>& orbit_of,
                                      const std::vector<int>& z);

}  // namespace sct
