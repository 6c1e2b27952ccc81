#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "koszul/corpus.hpp"
#include "koszul/pbw.hpp"

using namespace koszul;

namespace {

struct Checked {
  QuadraticPresentation p;
  RewriteSystem rs;
  PbwReport rep;
};

Checked run(const std::string& name, int w, int r) {
  Checked c;
  c.p = builtin(name);
  c.rs = quadratic_split(c.p);
  REQUIRE(c.rs.ok);
  c.rep = check_pbw(c.p, c.rs, w, r);
  return c;
}

const CellReport* cell(const PbwReport& rep, int s, int r) {
  for (auto& c : rep.cells)
    if (c.s == s && c.r == r) return &c;
  return nullptr;
}

void expect_cell(const PbwReport& rep, int s, int r, long m, long cand, long rank, long dim,
                 bool ok) {
  CAPTURE(rep.name);
  CAPTURE(s);
  const CellReport* c = cell(rep, s, r);
  REQUIRE(c != nullptr);
  CHECK(c->monomials == m);
  CHECK(c->candidates == cand);
  CHECK(c->rank == rank);
  CHECK(c->dim == dim);
  CHECK(c->ok == ok);
}

}  // namespace

TEST_CASE("ideal components") {
  QuadraticPresentation p = builtin("com");
  RewriteSystem rs = quadratic_split(p);
  REQUIRE(rs.ok);
  IdealComponent ic = ideal_component_matrix(p, rs, 2, 3);
  CHECK(ic.monomials.size() == 3);
  CHECK(rank_of(ic.rows, p.module.field) == 2);

  IdealComponent ic3 = ideal_component_matrix(p, rs, 3, 4);
  CHECK(ic3.monomials.size() == 15);
  CHECK(rank_of(ic3.rows, p.module.field) == 14);
  for (const SparseRow& row : ic3.rows) {
    CHECK(!row.empty());
    for (auto& [col, c] : row) {
      CHECK(col >= 0);
      CHECK(col < (int)ic3.monomials.size());
      CHECK(!p.module.field.is_zero(c));
    }
  }
  QuadraticPresentation lie = builtin("lie");
  RewriteSystem rsl = quadratic_split(lie);
  CHECK(rank_of(ideal_component_matrix(lie, rsl, 3, 4).rows, lie.module.field) == 9);
}

TEST_CASE("commutative operad is PBW with one-dimensional components") {
  Checked c = run("com", 4, 5);
  CHECK(c.rep.pbw());
  CHECK(c.rep.split_ok);
  expect_cell(c.rep, 2, 3, 3, 1, 2, 1, true);
  expect_cell(c.rep, 3, 4, 15, 1, 14, 1, true);
  expect_cell(c.rep, 4, 5, 105, 1, 104, 1, true);
}

TEST_CASE("Lie operad is PBW with factorial components") {
  Checked c = run("lie", 4, 5);
  CHECK(c.rep.pbw());
  expect_cell(c.rep, 2, 3, 3, 2, 1, 2, true);
  expect_cell(c.rep, 3, 4, 15, 6, 9, 6, true);
  expect_cell(c.rep, 4, 5, 105, 24, 81, 24, true);
}

TEST_CASE("planar associative operad is PBW") {
  Checked c = run("assoc-ns", 4, 5);
  CHECK(c.rep.pbw());
  expect_cell(c.rep, 2, 3, 2, 1, 1, 1, true);
  expect_cell(c.rep, 3, 4, 5, 1, 4, 1, true);
  expect_cell(c.rep, 4, 5, 14, 1, 13, 1, true);
}

TEST_CASE("permutation and pre-Lie operads are PBW") {
  Checked pm = run("perm", 3, 4);
  CHECK(pm.rep.pbw());
  expect_cell(pm.rep, 2, 3, 12, 3, 9, 3, true);
  expect_cell(pm.rep, 3, 4, 120, 4, 116, 4, true);

  Checked pl = run("prelie", 3, 4);
  CHECK(pl.rep.pbw());
  expect_cell(pl.rep, 2, 3, 12, 9, 3, 9, true);
  expect_cell(pl.rep, 3, 4, 120, 64, 56, 64, true);
}

TEST_CASE("ternary operads") {
  Checked ta = run("tot-assoc-3", 3, 7);
  CHECK(ta.rep.pbw());
  expect_cell(ta.rep, 2, 5, 3, 1, 2, 1, true);
  expect_cell(ta.rep, 3, 7, 12, 1, 11, 1, true);

  Checked pa = run("part-assoc-3", 3, 7);
  CHECK(pa.rep.pbw());
  expect_cell(pa.rep, 2, 5, 3, 2, 1, 2, true);
  expect_cell(pa.rep, 3, 7, 12, 5, 7, 5, true);
}

TEST_CASE("Poisson candidates overshoot at weight three") {
  Checked c = run("poisson", 3, 4);
  CHECK(!c.rep.pbw());
  expect_cell(c.rep, 2, 3, 12, 6, 6, 6, true);
  expect_cell(c.rep, 3, 4, 120, 26, 96, 24, false);
}

TEST_CASE("dendriform candidates overshoot at weight three") {
  Checked c2 = run("m-dend-2", 3, 4);
  CHECK(!c2.rep.pbw());
  expect_cell(c2.rep, 2, 3, 8, 5, 3, 5, true);
  expect_cell(c2.rep, 3, 4, 40, 15, 26, 14, false);

  Checked c3 = run("m-dend-3", 3, 4);
  CHECK(!c3.rep.pbw());
  expect_cell(c3.rep, 2, 3, 18, 12, 6, 12, true);
  expect_cell(c3.rep, 3, 4, 135, 58, 80, 55, false);
}

TEST_CASE("candidates never undercount the quotient") {
  for (const char* n : {"com", "lie", "assoc-ns", "assoc", "perm", "prelie", "poisson",
                        "m-dend-2", "m-dend-3", "tot-assoc-3", "part-assoc-3"}) {
    QuadraticPresentation p = builtin(n);
    RewriteSystem rs = quadratic_split(p);
    CAPTURE(n);
    REQUIRE(rs.ok);
    int r = p.module.max_arity() == 2 ? 4 : 7;
    PbwReport rep = check_pbw(p, rs, 3, r);
    for (auto& c : rep.cells) {
      CHECK(c.candidates >= c.dim);
      CHECK(c.dim == c.monomials - c.rank);
      CHECK(c.ok == (c.candidates == c.dim));
    }
  }
}

TEST_CASE("cells respect the requested bounds") {
  Checked c = run("com", 4, 4);
  CHECK(c.rep.cells.size() == 2);
  CHECK(cell(c.rep, 4, 5) == nullptr);
  CHECK(c.rep.max_weight == 4);
  CHECK(c.rep.max_arity == 4);
}

TEST_CASE("dimension tables") {
  {
    Checked c = run("com", 4, 5);
    auto dt = dimension_table(c.p, c.rs, 4, 5);
    for (int w = 0; w <= 4; w++) CHECK(dt.at({w, w ? w + 1 : 1}) == 1);
  }
  {
    Checked c = run("lie", 4, 5);
    auto dt = dimension_table(c.p, c.rs, 4, 5);
    CHECK(dt.at({0, 1}) == 1);
    CHECK(dt.at({1, 2}) == 1);
    CHECK(dt.at({2, 3}) == 2);
    CHECK(dt.at({3, 4}) == 6);
    CHECK(dt.at({4, 5}) == 24);
  }
  {
    Checked c = run("assoc", 3, 4);
    auto dt = dimension_table(c.p, c.rs, 3, 4);
    CHECK(dt.at({1, 2}) == 2);
    CHECK(dt.at({2, 3}) == 6);
    CHECK(dt.at({3, 4}) == 24);
  }
  {
    Checked c = run("perm", 3, 4);
    auto dt = dimension_table(c.p, c.rs, 3, 4);
    CHECK(dt.at({2, 3}) == 3);
    CHECK(dt.at({3, 4}) == 4);
  }
  {
    Checked c = run("prelie", 3, 4);
    auto dt = dimension_table(c.p, c.rs, 3, 4);
    CHECK(dt.at({2, 3}) == 9);
    CHECK(dt.at({3, 4}) == 64);
  }
  {
    // these hold even though the candidate basis fails
    Checked c = run("poisson", 3, 4);
    auto dt = dimension_table(c.p, c.rs, 3, 4);
    CHECK(dt.at({2, 3}) == 6);
    CHECK(dt.at({3, 4}) == 24);
  }
  {
    Checked c = run("m-dend-2", 4, 5);
    auto dt = dimension_table(c.p, c.rs, 4, 5);
    CHECK(dt.at({1, 2}) == 2);
    CHECK(dt.at({2, 3}) == 5);
    CHECK(dt.at({3, 4}) == 14);
    CHECK(dt.at({4, 5}) == 42);
  }
  {
    Checked c = run("m-dend-3", 3, 4);
    auto dt = dimension_table(c.p, c.rs, 3, 4);
    CHECK(dt.at({1, 2}) == 3);
    CHECK(dt.at({2, 3}) == 12);
    CHECK(dt.at({3, 4}) == 55);
  }
}

TEST_CASE("symmetrization of the planar associative operad") {
  QuadraticPresentation ns = builtin("assoc-ns");
  QuadraticPresentation sym = symmetrize(ns);
  CHECK(sym.validate() == "");
  CHECK(sym.module.flavor == Flavor::symmetric);
  CHECK(sym.module.gen_count(2) == 2);
  CHECK(sym.module.find("m_12").first == 2);
  CHECK(sym.module.find("m_21").first == 2);
  REQUIRE(sym.order.sym.has_value());

  RewriteSystem rs = quadratic_split(sym);
  REQUIRE(rs.ok);
  PbwReport rep = check_pbw(sym, rs, 3, 4);
  CHECK(rep.pbw());

  // agrees cell by cell with the directly presented symmetric version
  Checked direct = run("assoc", 3, 4);
  REQUIRE(rep.cells.size() == direct.rep.cells.size());
  for (size_t i = 0; i < rep.cells.size(); i++) {
    CHECK(rep.cells[i].monomials == direct.rep.cells[i].monomials);
    CHECK(rep.cells[i].candidates == direct.rep.cells[i].candidates);
    CHECK(rep.cells[i].rank == direct.rep.cells[i].rank);
    CHECK(rep.cells[i].dim == direct.rep.cells[i].dim);
  }
}

TEST_CASE("prime fields give the same integral story") {
  for (const char* n : {"lie", "perm"}) {
    QuadraticPresentation p = builtin(n);
    p.module.field = Field::Fp(5);
    RewriteSystem rs = quadratic_split(p);
    CAPTURE(n);
    REQUIRE(rs.ok);
    PbwReport rep = check_pbw(p, rs, 3, 4);
    CHECK(rep.pbw());
    QuadraticPresentation q = builtin(n);
    RewriteSystem rsq = quadratic_split(q);
    PbwReport repq = check_pbw(q, rsq, 3, 4);
    REQUIRE(rep.cells.size() == repq.cells.size());
    for (size_t i = 0; i < rep.cells.size(); i++) CHECK(rep.cells[i].dim == repq.cells[i].dim);
  }
}
