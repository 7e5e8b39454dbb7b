#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qhs/commutative.hpp"
#include "qhs/qminors.hpp"
#include "qhs/qmatrix.hpp"

namespace qhs {

// Parabolic quotient data: pi kills every x_ij strictly below the staircase
// of the flag type (for a single block r: rows r+1..n, columns 1..r), d is
// the candidate/confirmed quantum section and t its q = 1 image.
struct ParabolicContext {
  AlgebraContext base;
  std::vector<int> flag;     // 1 <= m_1 < ... < m_s < n; Grassmannian = one entry
  std::vector<bool> killed;  // by generator position
  QElement d;
  CommPoly t;

  int r() const { return flag.front(); }
};

// Staircase mask: x_ij dies iff j <= m_t < i for some step m_t.
std::vector<bool> flag_killed_mask(const AlgebraContext& ctx, const std::vector<int>& flag);

// Raw candidate context: no validation beyond index bounds; t := q=1 image.
ParabolicContext parabolic_context(const AlgebraContext& ctx, const std::vector<int>& flag,
                                   QElement d);

// Grassmannian of r-planes: d = D_0, the minor on rows and columns 1..r.
// Validates eps(d) = 1 and pi(d) != 0.
ParabolicContext grassmannian_context(const AlgebraContext& ctx, int r);

// Flag of type (m_1,...,m_s): d is the product of the principal minors of
// sizes m_1..m_s. Throws InvalidFlagType unless 1 <= m_1 < ... < m_s < n.
ParabolicContext flag_section(const AlgebraContext& ctx, const std::vector<int>& type);

// Degree-1 semi-invariants spanning the homogeneous coordinate ring: all
// minors on column set 1..m_t for each step of the flag.
std::vector<QElement> flag_spanning_set(const ParabolicContext& pc);

// (id (x) pi) o Delta.
TensorElement delta_pi(const ParabolicContext& pc, const QElement& f);

enum class SectionClass { not_section, pre_quantum, quantum };

struct SectionReport {
  SectionClass classification = SectionClass::not_section;
  std::optional<QElement> witness;  // failing element, when not quantum
};

std::string section_class_str(SectionClass c);

// pre_quantum iff eps(d) = 1, Delta_pi(d) = d (x) pi(d) and q=1 image is t;
// quantum additionally requires pi([d, s]) = 0 for every s in spanning_set.
SectionReport classify_section(const ParabolicContext& pc,
                               const std::vector<QElement>& spanning_set);

// Smallest k <= max_n with Delta_pi(l) = l (x) pi(d^k), if any.
std::optional<int> semi_invariant_degree(const ParabolicContext& pc, const QElement& l, int max_n);

struct SemiInvariantComponent {
  int degree = 0;
  std::vector<QElement> basis;
};

// Solve Delta_pi(l) = l (x) pi(d^degree) over the x-degree-k homogeneous
// component. Throws ComponentTooLarge when the component dimension exceeds
// QHS_MAX_COMPONENT_DIM (default 200).
SemiInvariantComponent solve_semi_invariants(const ParabolicContext& pc, int degree, int k);

struct PluckerReport {
  std::vector<std::pair<IndexTuple, IndexTuple>> products;  // I <= J lexicographically
  int rank = 0;                                             // of the multiplication map
  std::vector<std::vector<LaurentPoly>> kernel;             // reduced echelon basis
};

// Kernel of the multiplication map on formal degree-2 products D^I D^J of
// the Grassmannian minors.
PluckerReport plucker_relations(const ParabolicContext& pc);

// Fraction numerator * D_0^{-d0_power}; the twist table holds the verified
// exponents a with D_0 x = q^a x D_0 for every generator x in the numerator.
struct OreFraction {
  QElement numerator;
  int d0_power = 0;
};

struct BigCellReport {
  bool ok = false;
  std::map<std::pair<int, int>, int> twists;  // (i,j) -> a with D_0 Delta_ij = q^a Delta_ij D_0
  int relations_checked = 0;
  std::string detail;
};

// Verify the q-power twists of every Delta_ij against D_0 and the Manin
// relations among the big-cell generators t_ij = (-q)^{r-j} Delta_ij D_0^{-1}.
// Throws NoQCommutation when a needed twist does not exist.
BigCellReport bigcell_manin_check(const ParabolicContext& pc);

}  // namespace qhs
