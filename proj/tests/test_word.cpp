#include <random>

#include "bb/builtin.hpp"
#include "bb/context.hpp"
#include "bb/expression.hpp"
#include "bb/word.hpp"
#include "doctest.h"

using namespace bb;

namespace {

Alphabet small_edge_alphabet() {
  Alphabet a;
  int u = a.add_vertex("u");
  int v = a.add_vertex("v");
  int w = a.add_vertex("w");
  int e = a.add_edge("u>v", u, v);
  int ebar = a.add_edge("v>u", v, u);
  a.link_reverse(e, ebar);
  int f = a.add_edge("v>w", v, w);
  int fbar = a.add_edge("w>v", w, v);
  a.link_reverse(f, fbar);
  return a;
}

Word random_word(const Alphabet& a, std::mt19937& rng, size_t len) {
  std::uniform_int_distribution<int> gen(0, a.size() - 1);
  std::uniform_int_distribution<int> sgn(0, 1);
  Word w(a.uid());
  for (size_t i = 0; i < len; ++i) w.push_back({gen(rng), sgn(rng) ? 1 : -1});
  return w;
}

}  // namespace

TEST_CASE("free reduction cancels formal inverses only") {
  Alphabet a = small_edge_alphabet();
  // e e^-1 f -> f
  Word w = a.parse_word("u>v u>v^-1 v>w");
  CHECK(free_reduce(w) == a.parse_word("v>w"));
  // e ebar does not cancel: the reverse edge is a distinct generator.
  Word pair = a.parse_word("u>v v>u");
  CHECK(free_reduce(pair) == pair);
}

TEST_CASE("w w^-1 reduces to the empty word") {
  Alphabet a = small_edge_alphabet();
  std::mt19937 rng(7);
  std::uniform_int_distribution<size_t> len(0, 64);
  for (int i = 0; i < 100; ++i) {
    Word w = random_word(a, rng, len(rng));
    CHECK(free_reduce(concat(w, w.inverse())).empty());
  }
}

TEST_CASE("free reduction is idempotent and never lengthens") {
  Alphabet a = small_edge_alphabet();
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    Word w = random_word(a, rng, static_cast<size_t>(i % 40));
    Word r = free_reduce(w);
    CHECK(r.size() <= w.size());
    CHECK(free_reduce(r) == r);
  }
}

TEST_CASE("free equality") {
  Alphabet a = small_edge_alphabet();
  CHECK(freely_equal(Word(a.uid()), Word(a.uid())));
  CHECK_FALSE(freely_equal(a.parse_word("u>v v>w"), a.parse_word("v>w u>v")));
  // x r x^-1 x r^-1 x^-1 is freely trivial.
  Word x = a.parse_word("v>w");
  Word r = a.parse_word("u>v v>u");
  Word w = concat(x, r, x.inverse());
  w.append(concat(x, r.inverse(), x.inverse()));
  CHECK(freely_equal(w, Word(a.uid())));
}

TEST_CASE("freely_equal is an equivalence relation on random triples") {
  Alphabet a = small_edge_alphabet();
  std::mt19937 rng(13);
  for (int i = 0; i < 50; ++i) {
    Word u = random_word(a, rng, 12);
    Word v = random_word(a, rng, 12);
    Word w = random_word(a, rng, 12);
    CHECK(freely_equal(u, u));
    if (freely_equal(u, v)) CHECK(freely_equal(v, u));
    if (freely_equal(u, v) && freely_equal(v, w)) CHECK(freely_equal(u, w));
    // Padding by a cancelling pair preserves the class.
    Word padded = u;
    padded.push_back({0, 1});
    padded.push_back({0, -1});
    CHECK(freely_equal(u, padded));
  }
}

TEST_CASE("words from different alphabets refuse to mix") {
  Alphabet a = small_edge_alphabet();
  Alphabet b = small_edge_alphabet();
  CHECK_THROWS_AS((void)freely_equal(a.parse_word("u>v"), b.parse_word("u>v")),
                  AlphabetMismatch);
}

TEST_CASE("exponent sums") {
  Alphabet a;
  int t = a.add_stable("@t");
  a.add_vertex("a");
  a.add_vertex("b");
  Word w = a.parse_word("@t a @t^-1 b");
  CHECK(exponent_sum(w, t) == 0);
  CHECK(exponent_sum(a.parse_word("@t @t a @t^-1"), t) == 1);
}

TEST_CASE("exponent sum is additive and negates under inversion") {
  Alphabet a = small_edge_alphabet();
  std::mt19937 rng(17);
  for (int i = 0; i < 50; ++i) {
    Word u = random_word(a, rng, 10);
    Word v = random_word(a, rng, 10);
    for (int g = 0; g < a.size(); ++g) {
      CHECK(exponent_sum(concat(u, v), g) == exponent_sum(u, g) + exponent_sum(v, g));
      CHECK(exponent_sum(u.inverse(), g) == -exponent_sum(u, g));
    }
  }
}

TEST_CASE("word text format round-trips") {
  Alphabet a = small_edge_alphabet();
  a.add_stable("@t");
  Word w = a.parse_word("u>v^-1 @t v>w @t^-1 u");
  CHECK(a.format_word(w) == "u>v^-1 @t v>w @t^-1 u");
  CHECK(a.parse_word(a.format_word(w)) == w);
  CHECK(a.parse_word("").empty());
  CHECK_THROWS_AS(a.parse_word("nope"), Error);
}

// --- expression layer ---

namespace {

struct ToyStore {
  Alphabet a = small_edge_alphabet();
  Presentation p;
  int r_pair;  // u>v v>u
  int r_tri;   // length-three stand-in
  ToyStore() {
    p = Presentation(&a, PresentationLabel::other);
    r_pair = p.add(a.parse_word("u>v v>u"));
    r_tri = p.add(a.parse_word("u>v v>w w>v"));
  }
};

}  // namespace

TEST_CASE("evaluate and verify expressions") {
  ToyStore s;
  NullExpression empty;
  empty.target = Word(s.a.uid());
  CHECK(evaluate_expression(s.p, empty).empty());
  CHECK(verify_expression(s.p, empty));

  NullExpression single;
  single.target = s.p.relator_word(s.r_tri);
  single.terms.push_back({Word(s.a.uid()), {s.r_tri, 1, 0}});
  CHECK(evaluate_expression(s.p, single) == free_reduce(s.p.relator_word(s.r_tri)));
  CHECK(verify_expression(s.p, single));

  NullExpression bad = single;
  bad.target = s.a.parse_word("u>v v>u");
  CHECK_FALSE(verify_expression(s.p, bad));
}

TEST_CASE("expression metrics") {
  ToyStore s;
  NullExpression e;
  e.target = Word(s.a.uid());
  ExpressionMetrics m0 = expression_metrics(e);
  CHECK(m0.area == 0);
  CHECK(m0.radius == 0);
  CHECK(m0.penetration == 0);

  ExprTerm t;
  t.conjugator = s.a.parse_word("u>v v>w u>v v>w u>v");
  t.relator = {s.r_pair, 1, 0};
  e.terms.push_back(t);
  ExpressionMetrics m1 = expression_metrics(e);
  CHECK(m1.area == 1);
  CHECK(m1.radius == 5);
  CHECK(m1.penetration == 0);
}

TEST_CASE("inversion and cyclic shifts preserve area") {
  ToyStore s;
  Word x = s.a.parse_word("v>w");
  NullExpression e;
  e.terms.push_back({x, {s.r_pair, 1, 0}});
  e.terms.push_back({Word(s.a.uid()), {s.r_tri, -1, 0}});
  e.target = free_reduce(evaluate_expression(s.p, e));
  REQUIRE(verify_expression(s.p, e));

  NullExpression inv = invert_expression(e);
  CHECK(inv.terms.size() == e.terms.size());
  CHECK(verify_expression(s.p, inv));
  CHECK(inv.target == e.target.inverse());

  for (size_t k = 0; k <= e.target.size(); ++k) {
    NullExpression shifted = cyclic_shift_expression(e, k);
    CHECK(shifted.terms.size() == e.terms.size());
    CHECK(verify_expression(s.p, shifted));
  }
}

TEST_CASE("splice sums stage areas exactly") {
  ToyStore s;
  Word pairw = s.p.relator_word(s.r_pair);
  Word triw = s.p.relator_word(s.r_tri);
  TransitionScheme scheme;
  scheme.stages = {concat(pairw, triw), triw, Word(s.a.uid())};
  NullExpression f0;  // fills w0 w1^-1 ~ pairw
  f0.target = concat(scheme.stages[0], scheme.stages[1].inverse());
  f0.terms.push_back({Word(s.a.uid()), {s.r_pair, 1, 0}});
  NullExpression f1;
  f1.target = triw;
  f1.terms.push_back({Word(s.a.uid()), {s.r_tri, 1, 0}});
  scheme.fillings = {f0, f1};

  NullExpression spliced = splice_transitions(s.p, scheme);
  CHECK(spliced.terms.size() == 2);
  CHECK(verify_expression(s.p, spliced));
  CHECK(spliced.target == scheme.stages[0]);

  TransitionScheme one;  // one-stage scheme returns the filling itself
  one.stages = {triw, Word(s.a.uid())};
  one.fillings = {f1};
  CHECK(splice_transitions(s.p, one).terms.size() == f1.terms.size());

  TransitionScheme bad;  // last stage must be empty
  bad.stages = {concat(pairw, triw), triw};
  bad.fillings = {f0};
  CHECK_THROWS_AS(splice_transitions(s.p, bad), VerificationError);
}

TEST_CASE("splice of random schemes assembled from single-relator fillings") {
  auto ctx = make_context(builtin_complex("TRI"));
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> rel(0, ctx->ph.relator_count() - 1);
  for (int round = 0; round < 20; ++round) {
    std::vector<NullExpression> fillers;
    for (int i = 0; i < 3; ++i) {
      NullExpression f;
      int id = rel(rng);
      f.terms.push_back({Word(ctx->alphabet.uid()), {id, 1, 0}});
      f.target = ctx->ph.relator_word(id);
      fillers.push_back(f);
    }
    // stages: w0 = r0 r1 r2, w1 = r1 r2, w2 = r2, w3 = empty
    TransitionScheme s;
    Word w3(ctx->alphabet.uid());
    Word w2 = fillers[2].target;
    Word w1 = concat(fillers[1].target, w2);
    Word w0 = concat(fillers[0].target, w1);
    s.stages = {w0, w1, w2, w3};
    for (size_t i = 0; i < 3; ++i) {
      NullExpression f = fillers[i];
      f.target = concat(s.stages[i], s.stages[i + 1].inverse());
      s.fillings.push_back(f);
    }
    NullExpression spliced = splice_transitions(ctx->ph, s);
    CHECK(spliced.terms.size() == 3);
    CHECK(verify_expression(ctx->ph, spliced));
  }
}
