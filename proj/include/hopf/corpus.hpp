#pragma once

#include "hopf/extensions.hpp"

#include <optional>
#include <string>
#include <vector>

// Small groups, fields and representations used by the tests, the acceptance
// suite and `hopfimg gen`.
namespace hopf::corpus {

GroupTable cyclic(std::size_t n);
/// Permutations of {0,1,2} in lexicographic order; (p q)(x) = p(q(x)).
GroupTable symmetric3();
/// r^k s^e at index k + 4e.
GroupTable dihedral4();
/// +-1, +-i, +-j, +-k at index 2u + (sign < 0) with u = 0..3 for 1, i, j, k.
GroupTable quaternion8();

/// Q(omega), omega^2 + omega + 1 = 0, sigma(omega) = omega^2.
FieldPtr cyclotomic3();
/// Q(i), sigma(i) = -i.
FieldPtr gaussian();
/// Q(zeta), zeta^4 + zeta^3 + zeta^2 + zeta + 1 = 0, sigma(zeta) = zeta^4.
FieldPtr cyclotomic5();

/// Field holding the n-th roots of unity (n = 2..6) and a primitive one.
struct RootOfUnity {
  FieldPtr field;
  Scalar zeta;
};
RootOfUnity cyclic_field(std::size_t n);

/// Extends g -> M_g from generators to the whole group by breadth-first
/// search. Throws InputError if the images are inconsistent with the table.
Representation rep_from_generators(const HopfAlgebraPtr &h, const GroupTable &g,
                                   const std::vector<std::size_t> &generators, const std::vector<Matrix> &images);

/// Elements g with pi(g) = 1, by brute force over the table.
std::vector<std::size_t> group_kernel(const GroupTable &g, const Representation &pi);
/// span{g - g n : g in G, n in N}
Subspace group_oracle_ideal(const HopfAlgebra &h, const GroupTable &g, const std::vector<std::size_t> &normal);

/// span{e_g : g in elements} as a Hopf subalgebra of k[G].
SubalgebraEmbedding subgroup_subalgebra(const HopfAlgebraPtr &big, const std::vector<std::size_t> &elements);

/// g -> diag(1, -1), x -> E12 on Sweedler's algebra.
Representation sweedler_rep2(const HopfAlgebraPtr &sweedler_algebra);

struct GroupEntry {
  std::string name;
  GroupTable table;
  HopfAlgebraPtr algebra; // group algebra over the entry's field
  HopfAlgebraPtr dual;    // functions on the group over Q
};

/// Z2..Z6, S3, D4, Q8 with the fields their irreducible representations need.
std::vector<GroupEntry> groups();
std::optional<GroupTable> named_group(const std::string &name);

enum class RepKind { group_algebra, dual_group_algebra, other };

struct RepEntry {
  std::string name;
  Representation rep;
  RepKind kind = RepKind::other;
  std::optional<GroupTable> group; // set for group-algebra representations
};

/// Every 1-dimensional and irreducible 2-dimensional representation of the
/// corpus group algebras, a few reducible 2-dimensional ones, evaluation
/// characters of the dual group algebras, and Sweedler representations.
std::vector<RepEntry> representations();

} // namespace hopf::corpus
