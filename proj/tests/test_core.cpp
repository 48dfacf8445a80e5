#include <gtest/gtest.h>

#include "harness.hpp"
#include "plancomp/error.hpp"
#include "plancomp/names.hpp"

using namespace plancomp;
using harness::F;
using harness::N;
using harness::P;

TEST(Literal, CanonicalOrder) {
  LiteralSet s{N("b"), P("b"), P("a"), Literal::bottom(), Literal::top()};
  std::vector<Literal> v(s.begin(), s.end());
  ASSERT_EQ(v.size(), 5u);
  EXPECT_TRUE(v[0].is_top());
  EXPECT_TRUE(v[1].is_bottom());
  EXPECT_EQ(v[2], P("a"));
  EXPECT_EQ(v[3], P("b"));
  EXPECT_EQ(v[4], N("b"));
}

TEST(Literal, NegationAndConstants) {
  EXPECT_EQ(P("a").negated(), N("a"));
  EXPECT_EQ(N("a").negated(), P("a"));
  EXPECT_TRUE(Literal::top().negated().is_bottom());
  EXPECT_TRUE(Literal::bottom().negated().is_top());
}

TEST(Literal, SetHelpers) {
  LiteralSet s{P("a"), N("b")};
  EXPECT_EQ(positives(s), LiteralSet{P("a")});
  EXPECT_EQ(negatives(s), LiteralSet{N("b")});
  EXPECT_EQ(atoms_of(s), (AtomSet{"a", "b"}));
  EXPECT_EQ(negate_all(s), (LiteralSet{N("a"), P("b")}));
  EXPECT_TRUE(is_consistent(s));
  EXPECT_FALSE(is_consistent({P("a"), N("a")}));
  EXPECT_FALSE(is_consistent({Literal::bottom()}));
  EXPECT_TRUE(is_complete_over(s, {"a", "b"}));
  EXPECT_FALSE(is_complete_over(s, {"a", "b", "c"}));
  EXPECT_EQ(restrict_to(s, {"a"}), LiteralSet{P("a")});
}

TEST(Literal, ClosedWorldCompletion) {
  EXPECT_EQ(cwa({"p", "q"}, {P("p")}), (LiteralSet{P("p"), N("q")}));
  EXPECT_EQ(cwa({"p"}, {N("p")}), LiteralSet{N("p")});
}

TEST(Formula, NegatingALeafGivesTheComplement) {
  Formula f = Formula::negation(F("p"));
  ASSERT_TRUE(f.is_leaf());
  EXPECT_EQ(f.literal(), N("p"));
  EXPECT_EQ(Formula::negation(Formula::top()), Formula::bottom());
  Formula g = Formula::negation(Formula::conjunction(F("p"), F("q")));
  EXPECT_EQ(g.kind(), Formula::Kind::Not);
}

TEST(Formula, Folds) {
  EXPECT_EQ(conjoin_all({}), Formula::top());
  EXPECT_EQ(disjoin_all({}), Formula::bottom());
  Formula f = conjoin_all({F("a"), F("b"), F("c")});
  EXPECT_EQ(f, Formula::conjunction(Formula::conjunction(F("a"), F("b")), F("c")));
  EXPECT_EQ(f.atoms(), (AtomSet{"a", "b", "c"}));
  EXPECT_EQ(f.size(), 5u);
}

TEST(Formula, Classes) {
  EXPECT_EQ(formula_class(F("p")), FormulaClass::Atoms);
  EXPECT_EQ(formula_class(Formula::top()), FormulaClass::Atoms);
  EXPECT_EQ(formula_class(Formula::leaf(N("p"))), FormulaClass::Literals);
  EXPECT_EQ(formula_class(Formula::conjunction(F("p"), F("q"))), FormulaClass::Boolean);
}

TEST(Formula, KleeneEvaluation) {
  Formula f = Formula::disjunction(F("p"), Formula::leaf(N("q")));
  auto unknown = [](const std::string&) { return Truth::Unknown; };
  EXPECT_EQ(f.evaluate3(unknown), Truth::Unknown);
  auto q_false = [](const std::string& a) { return a == "q" ? Truth::False : Truth::Unknown; };
  EXPECT_EQ(f.evaluate3(q_false), Truth::True);
}

TEST(Tags, NamesRoundTrip) {
  auto tags = all_tags();
  ASSERT_EQ(tags.size(), 12u);
  std::vector<std::string> names;
  for (const auto& t : tags) {
    names.push_back(t.name());
    EXPECT_EQ(parse_tag(t.name()), t);
  }
  EXPECT_EQ(names, (std::vector<std::string>{"S", "S_L", "S_B", "S_I", "S_LI", "S_BI", "S_C", "S_LC",
                                             "S_BC", "S_IC", "S_LIC", "S_BIC"}));
  EXPECT_EQ(parse_tag("S_CIB"), parse_tag("S_BIC"));
  EXPECT_FALSE(parse_tag("S_X").has_value());
  EXPECT_FALSE(parse_tag("S_LB").has_value());
}

TEST(Tags, Specialization) {
  auto t = harness::tag;
  EXPECT_TRUE(specializes(t("S"), t("S_BIC")));
  EXPECT_FALSE(specializes(t("S_B"), t("S_LC")));
  for (const auto& x : all_tags()) EXPECT_TRUE(specializes(x, x));
  // partial order: antisymmetric and transitive, join is the least upper bound
  for (const auto& x : all_tags())
    for (const auto& y : all_tags()) {
      if (specializes(x, y) && specializes(y, x)) EXPECT_EQ(x, y);
      FormalismTag j = join(x, y);
      EXPECT_TRUE(specializes(x, j));
      EXPECT_TRUE(specializes(y, j));
      for (const auto& z : all_tags()) {
        if (specializes(x, z) && specializes(y, z)) EXPECT_TRUE(specializes(j, z));
        if (specializes(x, y) && specializes(y, z)) EXPECT_TRUE(specializes(x, z));
      }
    }
}

TEST(Tags, Classification) {
  DomainStructure d{"d", {"p", "q"}, {}};
  d.operators.emplace_back("o", std::vector<Formula>{F("p")},
                           std::vector<ConditionalEffect>{ConditionalEffect({}, {P("q")})});
  Instance strips{d, {P("p"), N("q")}, {P("q")}};
  EXPECT_EQ(classify_instance(strips).name(), "S");

  DomainStructure e = d;
  e.operators[0].pre = {Formula::disjunction(F("p"), F("q"))};
  e.operators[0].post.emplace_back(std::vector<Formula>{F("p")}, LiteralSet{N("p")});
  Instance bc{e, {P("p"), N("q")}, {P("q")}};
  EXPECT_EQ(classify_instance(bc).name(), "S_BC");
  EXPECT_EQ(classify_instance(Instance{d, {P("p")}, {P("q")}}).name(), "S_I");
  EXPECT_EQ(classify_domain(harness::latexdoc()).name(), "S_LC");
}

TEST(Model, ConditionalEffectCanonicalization) {
  ConditionalEffect e({Formula::top(), F("b"), F("a"), F("a")}, {P("x")});
  EXPECT_EQ(e.conditions(), (std::vector<Formula>{F("a"), F("b")}));
  EXPECT_THROW(ConditionalEffect({}, {}), Error);
}

TEST(Model, Validation) {
  DomainStructure d{"d", {"p"}, {}};
  d.operators.emplace_back("o", std::vector<Formula>{F("q")},
                           std::vector<ConditionalEffect>{ConditionalEffect({}, {P("p")})});
  EXPECT_THROW(validate_domain(d), ValidationError);
  d.operators[0].pre = {F("p")};
  validate_domain(d);
  d.operators.push_back(d.operators[0]);
  EXPECT_THROW(validate_domain(d), ValidationError);
  d.operators.pop_back();
  EXPECT_THROW(validate_instance(Instance{d, {P("p"), N("p")}, {}}), ValidationError);
  EXPECT_THROW(resolve_plan(d, Plan{{"nope"}}), ValidationError);
  EXPECT_EQ(resolve_plan(d, Plan{{"o", "o"}}), (std::vector<std::size_t>{0, 0}));
}

TEST(Names, FreshAtoms) {
  EXPECT_EQ(fresh_atom(SchemeId::T6, "neg", {"p"}), "@neg.p");
  EXPECT_EQ(fresh_atom(SchemeId::L7, "x", {"0", "2", "1"}), "@x.0.2.1");
  EXPECT_EQ(fresh_atom(SchemeId::T23, "f", {"3"}), "@f.3");
  EXPECT_THROW(fresh_atom(SchemeId::T6, "x", {"1"}), PreconditionError);
  NameSupply s({"@g"});
  EXPECT_EQ(s.take("@g"), "@g~2");
  EXPECT_EQ(s.take("@g"), "@g~3");
  EXPECT_EQ(s.take("@h"), "@h");
  EXPECT_TRUE(is_user_atom_name("dvi_cite-ok"));
  EXPECT_FALSE(is_user_atom_name("@neg.p"));
  EXPECT_TRUE(is_generated_name("@neg.p"));
}

// ---------------------------------------------------------------------------
// Normalizations

namespace {

Operator op(std::string name, std::vector<Formula> pre, std::vector<ConditionalEffect> post) {
  return Operator(std::move(name), std::move(pre), std::move(post));
}

}  // namespace

TEST(Normalize, SingletonSplit) {
  DomainStructure d{"d", {"a", "b", "p"}, {}};
  d.operators.push_back(op("o", {}, {ConditionalEffect({F("p")}, {P("a"), N("b")})}));
  DomainStructure s = normalize_singleton_effects(d);
  ASSERT_EQ(s.operators[0].post.size(), 2u);
  EXPECT_EQ(s.operators[0].post[0], ConditionalEffect({F("p")}, {P("a")}));
  EXPECT_EQ(s.operators[0].post[1], ConditionalEffect({F("p")}, {N("b")}));
  EXPECT_TRUE(has_singleton_effects(s));
  EXPECT_EQ(normalize_singleton_effects(s), s);
}

TEST(Normalize, MergeEffectLiterals) {
  DomainStructure d{"d", {"l", "p", "q"}, {}};
  d.operators.push_back(op("o", {}, {ConditionalEffect({F("p"), F("q")}, {P("l")}),
                                     ConditionalEffect({Formula::leaf(N("p"))}, {P("l")})}));
  DomainStructure m = detail::merge_effect_literals(d);
  ASSERT_EQ(m.operators[0].post.size(), 1u);
  Formula phi = Formula::conjunction(F("p"), F("q"));
  Formula expected = Formula::disjunction(phi, Formula::leaf(N("p")));
  EXPECT_EQ(m.operators[0].post[0], ConditionalEffect({expected}, {P("l")}));
  EXPECT_TRUE(has_unique_effect_literals(m));

  DomainStructure distinct{"d", {"a", "b", "p"}, {}};
  distinct.operators.push_back(
      op("o", {}, {ConditionalEffect({F("p")}, {P("a")}), ConditionalEffect({}, {N("b")})}));
  EXPECT_EQ(normalize_unique_effect_literals(distinct), distinct);

  // merging needs a connective, which a literal domain cannot hold
  DomainStructure lit{"d", {"l", "p"}, {}};
  lit.operators.push_back(op("o", {}, {ConditionalEffect({F("p")}, {P("l")}),
                                       ConditionalEffect({Formula::leaf(N("p"))}, {P("l")})}));
  EXPECT_THROW(normalize_unique_effect_literals(lit), PreconditionError);
}

TEST(Normalize, MergeRelaxesIllegalProgression) {
  DomainStructure d{"d", {"l", "p"}, {}};
  d.operators.push_back(op("o", {Formula::disjunction(F("p"), Formula::leaf(N("p")))},
                           {ConditionalEffect({F("p")}, {P("l")}),
                            ConditionalEffect({Formula::leaf(N("p"))}, {P("l")})}));
  ApplyOutcome before = apply_operator(StateSpec::of({}), d.operators[0]);
  EXPECT_TRUE(before.result.is_illegal());
  EXPECT_EQ(before.reason, IllegalReason::ActiveNotEqualPotential);
  DomainStructure m = normalize_unique_effect_literals(d);
  ApplyOutcome after = apply_operator(StateSpec::of({}), m.operators[0]);
  ASSERT_TRUE(after.result.is_consistent());
  EXPECT_EQ(after.result.literals(), LiteralSet{P("l")});
}

TEST(Normalize, SinglePrecondition) {
  DomainStructure d{"d", {"p", "q"}, {}};
  d.operators.push_back(op("a", {F("p"), Formula::leaf(N("q"))}, {ConditionalEffect({}, {P("q")})}));
  d.operators.push_back(op("b", {}, {ConditionalEffect({}, {P("q")})}));
  d.operators.push_back(op("c", {F("q")}, {ConditionalEffect({}, {P("p")})}));
  DomainStructure f = detail::fold_preconditions(d);
  EXPECT_EQ(f.operators[0].pre, std::vector<Formula>{Formula::conjunction(F("p"), Formula::leaf(N("q")))});
  EXPECT_EQ(f.operators[1].pre, std::vector<Formula>{Formula::top()});
  EXPECT_EQ(f.operators[2].pre, std::vector<Formula>{F("q")});
  EXPECT_THROW(normalize_single_precondition(d), PreconditionError);
}

// Splitting effects and folding preconditions leave R unchanged on every
// consistent specification.
TEST(Normalize, SplitAndFoldPreserveProgression) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Instance p = harness::random_source(harness::tag("S_BIC"), seed, 4, 3);
    const DomainStructure& d = p.domain;
    DomainStructure split = normalize_singleton_effects(d);
    DomainStructure fold = detail::fold_preconditions(d);
    std::vector<std::string> atoms(d.atoms.begin(), d.atoms.end());
    std::size_t total = 1;
    for (std::size_t i = 0; i < atoms.size(); ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      LiteralSet s;
      std::size_t c = code;
      for (const auto& a : atoms) {
        if (c % 3 == 1) s.insert(P(a));
        if (c % 3 == 2) s.insert(N(a));
        c /= 3;
      }
      StateSpec spec = StateSpec::of(s);
      for (std::size_t i = 0; i < d.operators.size(); ++i) {
        StateSpec r = apply_operator(spec, d.operators[i]).result;
        EXPECT_EQ(apply_operator(spec, split.operators[i]).result, r) << "seed " << seed;
        EXPECT_EQ(apply_operator(spec, fold.operators[i]).result, r) << "seed " << seed;
      }
    }
  }
}

TEST(Normalize, Counts) {
  DomainStructure d = harness::latexdoc();
  EXPECT_EQ(max_effects(d), 5u);
  EXPECT_EQ(total_effects(d), 7u);
  EXPECT_EQ(max_effects(normalize_singleton_effects(d)), 8u);
}
