#include <gtest/gtest.h>

#include "harness.hpp"
#include "plancomp/error.hpp"
#include "plancomp/text.hpp"

using namespace plancomp;
using harness::N;
using harness::P;

namespace {

PlannerOptions one_step(std::size_t atoms) {
  PlannerOptions o;
  o.max_steps = 1;
  o.max_atoms = atoms;
  return o;
}

// Truth-table satisfiability, independent of the library's oracle.
bool satisfiable(const Cnf3& phi) {
  AtomSet sigma;
  for (std::size_t i = 1; i <= phi.n; ++i) sigma.insert(cnf_atom(i));
  for (const auto& s : harness::all_assignments(sigma)) {
    bool all = true;
    for (const auto& c : phi.clauses) {
      bool some = false;
      for (const auto& l : c) some = some || harness::holds(l, s);
      all = all && some;
    }
    if (all) return true;
  }
  return false;
}

}  // namespace

TEST(Copy, Structure) {
  DomainStructure d = copy_domain(2);
  EXPECT_EQ(d.name, "copy2");
  EXPECT_EQ(d.atoms, (AtomSet{"p1", "p2", "@hashcopy.p1", "@hashcopy.p2"}));
  ASSERT_EQ(d.operators.size(), 1u);
  EXPECT_EQ(d.operators[0].post.size(), 4u);
  EXPECT_EQ(classify_domain(d).name(), "S_LC");
}

// One-step plan exists iff G ⊆ I^#, over all complete I and G over the copies.
TEST(Copy, Characterization) {
  for (std::size_t n = 1; n <= 3; ++n) {
    DomainStructure d = copy_domain(n);
    AtomSet base, hash;
    for (std::size_t i = 1; i <= n; ++i) {
      base.insert(cnf_atom(i));
      hash.insert(hashcopy_atom(cnf_atom(i)));
    }
    for (const auto& s : harness::all_assignments(base)) {
      LiteralSet init = spec_of_state(s, base);
      LiteralSet init_hash;
      for (const auto& l : init) init_hash.insert(Literal::of(hashcopy_atom(l.atom()), l.is_positive()));
      for (const auto& g : harness::all_specs(hash)) {
        Instance p{d, init, g};
        bool expected = is_subset(g, init_hash);
        EXPECT_EQ(plan_exists(p, one_step(8)).found(), expected);
      }
    }
  }
}

TEST(Unsat, Sizes) {
  EXPECT_EQ(all_clauses(3).size(), 8u);
  EXPECT_EQ(all_clauses(4).size(), 32u);
  DomainStructure d3 = unsat_gadget_domain(3);
  EXPECT_EQ(d3.atoms.size(), 3u + 8u + 1u);
  EXPECT_EQ(unsat_gadget_domain(4).atoms.size(), 4u + 32u + 1u);
  EXPECT_EQ(clause_atom({P("p1"), N("p2"), P("p3")}), "@clause.p1.-p2.p3");
  Cnf3 phi;
  phi.clauses.insert({P("p1"), P("p2"), P("p3")});
  EXPECT_EQ(classify_instance(unsat_gadget_instance(phi)).name(), "S_BI");
}

TEST(Unsat, Examples) {
  Cnf3 all;
  for (const auto& c : all_clauses(3)) all.clauses.insert(c);
  EXPECT_FALSE(satisfiable(all));
  EXPECT_TRUE(plan_exists(unsat_gadget_instance(all), one_step(16)).found());

  Cnf3 one;
  one.clauses.insert({P("p1"), P("p2"), P("p3")});
  EXPECT_TRUE(satisfiable(one));
  EXPECT_FALSE(plan_exists(unsat_gadget_instance(one), one_step(16)).found());
}

TEST(Unsat, AgreesWithTruthTable) {
  std::vector<LiteralSet> clauses = all_clauses(3);
  for (std::size_t mask = 0; mask < 256; mask += 7) {
    Cnf3 phi;
    for (std::size_t i = 0; i < 8; ++i)
      if (mask >> i & 1) phi.clauses.insert(clauses[i]);
    EXPECT_EQ(cnf_satisfiable(phi), satisfiable(phi));
    EXPECT_EQ(plan_exists(unsat_gadget_instance(phi), one_step(16)).found(), !satisfiable(phi)) << mask;
  }
}

TEST(Cnf, Parsing) {
  Cnf3 phi = parse_cnf("# comment\np1 -p2 p3\n\n-p1 p2 p4  # trailing\n");
  EXPECT_EQ(phi.n, 4u);
  EXPECT_EQ(phi.clauses.size(), 2u);
  EXPECT_TRUE(phi.clauses.count({P("p1"), N("p2"), P("p3")}));
  EXPECT_EQ(parse_cnf("p1 p2 p3\n").n, 3u);
  EXPECT_THROW(check_cnf(parse_cnf("p1 p1 p2\n")), Error);
  EXPECT_THROW(parse_cnf("p1 p2\n"), Error);
  EXPECT_THROW(parse_cnf("p1 q2 p3\n"), Error);
}

TEST(Generator, Deterministic) {
  for (const auto& t : all_tags()) {
    GenParams p;
    p.tag = t;
    p.seed = 9;
    EXPECT_EQ(random_instance(p), random_instance(p)) << t.name();
  }
}

TEST(Generator, ClassifiesWithinTheTag) {
  for (const auto& t : all_tags())
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      Instance p = harness::random_source(t, seed, 6, 4, seed % 3 == 0);
      validate_instance(p);
      EXPECT_TRUE(specializes(classify_instance(p), t)) << t.name() << " seed " << seed;
      if (seed % 3 == 0) EXPECT_TRUE(has_unique_effect_literals(normalize_singleton_effects(p.domain)));
    }
}

TEST(Generator, StripsShape) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Instance p = harness::random_source(harness::tag("S"), seed);
    EXPECT_TRUE(is_complete_over(p.init, p.domain.atoms));
    for (const auto& o : p.domain.operators) {
      for (const auto& f : o.pre) EXPECT_EQ(formula_class(f), FormulaClass::Atoms);
      for (const auto& e : o.post) EXPECT_TRUE(e.unconditional());
    }
  }
}

TEST(Generator, FrozenOutput) {
  GenParams p;
  p.tag = harness::tag("S_LIC");
  p.seed = 42;
  p.atom_count = 4;
  p.operator_count = 3;
  Instance i = random_instance(p);
  std::string text = print_domain(i.domain) + "\n" + print_instance(i);
  EXPECT_EQ(text, read_file(harness::source_path("tests/golden/gen-slic-seed42.sexp")));
}
