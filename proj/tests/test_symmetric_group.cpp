#include <doctest.h>

#include <set>

#include "fewbody/exact.hpp"
#include "fewbody/young.hpp"

using namespace fewbody;

namespace {

using Wf = PositionWavefunction<Surd>;

Wf generic(int n) {
  return n == 3 ? Wf::monomial(make_assignment({"a", "b", "c"})) : Wf::monomial(make_assignment({"a", "b", "c", "d"}));
}

Wf fully_symmetric(int n) {
  Wf out(n);
  for (const auto& p : all_permutations(n)) out += permute_arguments(generic(n), p);
  return out;
}

}  // namespace

TEST_CASE("permutation group basics") {
  for (int n : {2, 3, 4}) {
    const auto group = all_permutations(n);
    CHECK(group.size() == static_cast<std::size_t>(factorial(n)));
    CHECK(std::set<Permutation>(group.begin(), group.end()).size() == group.size());
    for (const auto& p : group) {
      CHECK(p * p.inverse() == Permutation::identity(n));
      for (const auto& q : group) CHECK((p * q).sign() == p.sign() * q.sign());
    }
  }
  CHECK(Permutation::transposition(4, 1, 3).sign() == -1);
  CHECK(Permutation::from_one_based({2, 3, 1}).sign() == 1);
  CHECK(Permutation::from_one_based({2, 3, 1})(0) == 1);
  CHECK_THROWS(Permutation({0, 0, 1}));
  CHECK_THROWS(Permutation::identity(3) * Permutation::identity(4));
  CHECK_THROWS(all_permutations(5));
}

TEST_CASE("argument permutation is a left action") {
  const Wf f = generic(4);
  for (const auto& p : all_permutations(4))
    for (const auto& q : all_permutations(4)) {
      CHECK(permute_arguments(permute_arguments(f, q), p) == permute_arguments(f, p * q));
    }
  const Permutation cyc = Permutation::from_one_based({2, 3, 1});
  const Wf moved = permute_arguments(generic(3), cyc);
  // The orbital at coordinate q lands on coordinate p(q).
  CHECK(moved == Wf::monomial(make_assignment({"c", "a", "b"})));
  CHECK(permute_arguments(moved, cyc.inverse()) == generic(3));
}

TEST_CASE("Young diagrams and tableaux") {
  const YoungDiagram d({2, 1});
  CHECK(d.size() == 3);
  CHECK(d.transpose() == d);
  CHECK(YoungDiagram({3, 1}).transpose() == YoungDiagram({2, 1, 1}));
  CHECK(YoungDiagram({2, 2}).column_lengths() == std::vector<int>{2, 2});
  CHECK_THROWS(YoungDiagram({1, 2}));
  CHECK_THROWS(YoungDiagram({}));
  CHECK(is_standard(d, {{1, 2}, {3}}));
  CHECK(is_standard(d, {{1, 3}, {2}}));
  CHECK(!is_standard(d, {{2, 1}, {3}}));
  CHECK(!is_standard(d, {{3, 1}, {2}}));
  CHECK(transpose(YoungTableau{{1, 2}, {3, 4}}) == YoungTableau{{1, 3}, {2, 4}});
  CHECK_THROWS(build_symmetrizer(d, {{2, 1}, {3}}, SymmetrizerOrder::rows_then_columns));
}

TEST_CASE("Young symmetrizers have the expected support and are quasi-idempotent") {
  struct Case {
    YoungDiagram diagram;
    YoungTableau tableau;
    std::size_t terms;
    int idempotency;  // N! / dimension
  };
  const std::vector<Case> cases{{YoungDiagram({2, 1}), {{1, 2}, {3}}, 4, 3},
                                {YoungDiagram({2, 2}), {{1, 2}, {3, 4}}, 16, 12}};
  for (const auto& c : cases)
    for (auto order : {SymmetrizerOrder::rows_then_columns, SymmetrizerOrder::columns_then_rows}) {
      const Symmetrizer y = build_symmetrizer(c.diagram, c.tableau, order);
      CHECK(y.terms.size() == c.terms);
      const int n = c.diagram.size();
      const Wf once = apply_symmetrizer(y, generic(n));
      const Wf twice = apply_symmetrizer(y * y, generic(n));
      CHECK(twice == Surd(c.idempotency) * once);
      CHECK(!once.is_zero());
      // Column antisymmetrization annihilates fully symmetric input.
      CHECK(apply_symmetrizer(y, fully_symmetric(n)).is_zero());
    }
}

TEST_CASE("symmetrizer order fixes the exchange symmetry of the first row or column") {
  const YoungDiagram d({2, 1});
  const Permutation swap12 = Permutation::transposition(3, 0, 1);
  const Wf sym = apply_symmetrizer(build_symmetrizer(d, {{1, 2}, {3}}, SymmetrizerOrder::columns_then_rows), generic(3));
  CHECK(permute_arguments(sym, swap12) == sym);
  const Wf anti = apply_symmetrizer(build_symmetrizer(d, {{1, 3}, {2}}, SymmetrizerOrder::rows_then_columns), generic(3));
  CHECK(permute_arguments(anti, swap12) == -anti);
}

TEST_CASE("symmetrizer product applies the right factor first") {
  const int n = 3;
  const Permutation p = Permutation::from_one_based({2, 3, 1});
  const Permutation q = Permutation::transposition(3, 0, 1);
  const Symmetrizer sp{n, {{p, 1}}}, sq{n, {{q, 1}}};
  CHECK(apply_symmetrizer(sp * sq, generic(n)) == permute_arguments(permute_arguments(generic(n), q), p));
}
