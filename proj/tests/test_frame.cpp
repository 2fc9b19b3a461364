#include <gtest/gtest.h>

#include "support.hpp"

using namespace gcok;
using gcok::testing::I;
using gcok::testing::S;
using gcok::testing::Sampler;
using gcok::testing::X;

namespace {

InvariantForm sig(std::size_t n, std::initializer_list<std::size_t> one_based) {
  std::vector<std::size_t> idx;
  for (auto k : one_based) idx.push_back(k - 1);
  return InvariantForm::monomial(n, idx);
}

Vector x(std::size_t n, std::size_t i) { return X(n, i).vec; }

// [X1, X2] = X1, [X2, X3] = X2: the Jacobi sum on (1, 2, 3) is -X1.
FrameContext broken_frame() { return FrameContext("broken", 3, {{0, 1, 0, 1}, {1, 2, 1, 1}}); }

std::vector<FrameContext> valid_frames() {
  return {frames::abelian("T3", 3), frames::su2(), frames::su2_twisted(), frames::heisenberg(),
          FrameContext("spec_example", 3, {{0, 1, 2, 1}, {0, 2, 1, 1}}),
          ProductContext(frames::su2_twisted(), frames::heisenberg()).frame()};
}

}  // namespace

TEST(CheckFrame, ValidFrames) {
  for (const auto& f : valid_frames()) EXPECT_TRUE(check_frame(f).valid()) << f.name();
  EXPECT_TRUE(check_frame(frames::abelian("T4", 4).with_h(sig(4, {1, 2, 3}))).valid());
}

TEST(CheckFrame, JacobiViolationReported) {
  const FrameReport r = check_frame(broken_frame());
  ASSERT_FALSE(r.valid());
  EXPECT_NE(r.issues.front().find("Jacobi"), std::string::npos);
}

TEST(CheckFrame, NonClosedHReported) {
  // [X1, X4] = X1 gives d s1 = -s1^s4, so d(s1^s2^s3) != 0.
  const FrameContext f("solvable", 4, {{0, 3, 0, 1}}, sig(4, {1, 2, 3}));
  const FrameReport r = check_frame(f);
  ASSERT_FALSE(r.valid());
  EXPECT_NE(r.issues.front().find("dH"), std::string::npos);
}

TEST(CheckFrame, ConstructionErrors) {
  EXPECT_THROW(FrameContext("empty", 0), PreconditionFailure);
  EXPECT_THROW(FrameContext("bad", 2, {{0, 0, 1, 1}}), PreconditionFailure);
  EXPECT_THROW(FrameContext("bad", 3, {}, sig(3, {1, 2})), PreconditionFailure);
}

TEST(ExteriorDerivative, SquareVanishesIffJacobi) {
  for (const auto& f : valid_frames()) {
    const std::size_t n = f.dim();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      InvariantForm w(n, static_cast<std::size_t>(std::popcount(mask)));
      w.add_term(mask, 1);
      EXPECT_TRUE(exterior_derivative(f, exterior_derivative(f, w)).is_zero()) << f.name() << " " << w.str();
    }
  }
  const FrameContext bad = broken_frame();
  bool some_nonzero = false;
  for (std::size_t k = 0; k < 3; ++k)
    some_nonzero |= !exterior_derivative(bad, exterior_derivative(bad, InvariantForm::coframe(3, k))).is_zero();
  EXPECT_TRUE(some_nonzero);
}

TEST(ExteriorDerivative, Examples) {
  const FrameContext su2 = frames::su2();
  EXPECT_EQ(exterior_derivative(su2, sig(3, {3})), sig(3, {1, 2}));
  EXPECT_EQ(exterior_derivative(su2, sig(3, {1})), sig(3, {2, 3}));
  EXPECT_EQ(exterior_derivative(su2, sig(3, {2})), sig(3, {3, 1}));
  EXPECT_TRUE(exterior_derivative(su2, sig(3, {1, 2})).is_zero());
  EXPECT_TRUE(exterior_derivative(su2, sig(3, {2, 3})).is_zero());
  EXPECT_TRUE(exterior_derivative(frames::abelian("T3", 3), sig(3, {1})).is_zero());
  EXPECT_EQ(exterior_derivative(su2, InvariantForm::constant(3, 5)).degree(), 1u);
}

TEST(ExteriorDerivative, OneFormsAgainstBrackets) {
  Sampler s;
  for (const auto& f : valid_frames()) {
    const std::size_t n = f.dim();
    for (int k = 0; k < 10; ++k) {
      const Vector a = s.vector(n), u = s.vector(n), v = s.vector(n);
      const InvariantForm alpha = InvariantForm::one_form(a);
      EXPECT_EQ(exterior_derivative(f, alpha).evaluate({u, v}), -alpha.evaluate({lie_bracket(f, u, v)}));
    }
  }
}

TEST(ExteriorDerivative, CartanConsistency) {
  for (const auto& f : valid_frames()) {
    const std::size_t n = f.dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const InvariantForm lie = exterior_derivative(f, InvariantForm::coframe(n, j)).interior(x(n, i + 1));
        for (std::size_t k = 0; k < n; ++k) EXPECT_EQ(lie.evaluate({x(n, k + 1)}), -f.c(i, k, j));
      }
  }
}

TEST(ExteriorDerivative, ClosedTwoFormsOnSuTwo) {
  // Every invariant 2-form on su(2) is closed.
  EXPECT_EQ(closed_forms(frames::su2(), 2).size(), 3u);
  EXPECT_EQ(closed_forms(frames::su2(), 1).size(), 0u);
  EXPECT_EQ(closed_forms(frames::heisenberg(), 1).size(), 2u);
}

TEST(LieBracket, Examples) {
  const FrameContext su2 = frames::su2();
  EXPECT_EQ(lie_bracket(su2, x(3, 1), x(3, 2)), (-X(3, 3)).vec);
  EXPECT_EQ(lie_bracket(su2, x(3, 2), x(3, 3)), (-X(3, 1)).vec);
  EXPECT_EQ(lie_bracket(su2, x(3, 3), x(3, 1)), (-X(3, 2)).vec);
  EXPECT_TRUE(is_zero(lie_bracket(su2, x(3, 2), x(3, 2))));
  EXPECT_TRUE(is_zero(lie_bracket(su2, (X(3, 1) - I * X(3, 2)).vec, (X(3, 2) + I * X(3, 1)).vec)));
  EXPECT_THROW(lie_bracket(su2, Vector(2), Vector(2)), FrameMismatch);
}

TEST(Wedge, Examples) {
  EXPECT_TRUE(sig(3, {1}).wedge(sig(3, {1})).is_zero());
  EXPECT_EQ(sig(3, {1, 2}).evaluate({x(3, 1), x(3, 2)}), Scalar(1));
  EXPECT_EQ(sig(3, {1, 2}).evaluate({x(3, 2), x(3, 1)}), Scalar(-1));
  EXPECT_EQ(sig(3, {1, 2}).wedge(sig(3, {3})), sig(3, {1, 2, 3}));
  EXPECT_EQ(sig(3, {1}).wedge(sig(3, {2, 3})), sig(3, {1, 2, 3}));
  EXPECT_EQ(sig(3, {2, 1}), -Scalar(1) * sig(3, {1, 2}));
  EXPECT_THROW(sig(3, {1}).wedge(sig(4, {1})), FrameMismatch);
}

TEST(Wedge, GradedCommutative) {
  Sampler s;
  const std::size_t n = 4;
  for (int k = 0; k < 20; ++k) {
    const InvariantForm a = InvariantForm::one_form(s.vector(n));
    const InvariantForm b = a.wedge(InvariantForm::one_form(s.vector(n))) + sig(n, {2, 4});
    const InvariantForm c = InvariantForm::one_form(s.vector(n));
    EXPECT_EQ(a.wedge(b), b.wedge(a));
    EXPECT_EQ(a.wedge(c), -Scalar(1) * c.wedge(a));
    EXPECT_EQ(a.wedge(b).wedge(c), a.wedge(b.wedge(c)));
  }
}

TEST(Interior, Examples) {
  EXPECT_EQ(interior_product(x(3, 3), sig(3, {2, 3})), -Scalar(1) * sig(3, {2}));
  EXPECT_EQ(interior_product(x(3, 1), sig(3, {1, 2, 3})), sig(3, {2, 3}));
  EXPECT_TRUE(interior_product(x(3, 3), sig(3, {1})).is_zero());
  EXPECT_THROW(interior_product(x(3, 1), InvariantForm::constant(3, 1)), Error);
}

TEST(Interior, AnticommutesAndEvaluates) {
  Sampler s;
  const std::size_t n = 4;
  for (int k = 0; k < 20; ++k) {
    InvariantForm w = sig(n, {1, 2, 3}) + s.scalar() * sig(n, {1, 3, 4}) + s.scalar() * sig(n, {2, 3, 4});
    const Vector u = s.vector(n), v = s.vector(n), z = s.vector(n);
    EXPECT_EQ(w.interior(u).interior(v), -Scalar(1) * w.interior(v).interior(u));
    EXPECT_EQ(w.interior(u).evaluate({v, z}), w.evaluate({u, v, z}));
  }
}

TEST(Pairing, Examples) {
  EXPECT_EQ(pairing(X(3, 1), S(3, 1)), Scalar::fraction(1, 2));
  EXPECT_EQ(pairing(X(3, 3), X(3, 3)), Scalar(0));
  EXPECT_EQ(pairing(X(3, 3) + S(3, 3), X(3, 3) + S(3, 3)), Scalar(1));
  EXPECT_THROW(pairing(X(3, 1), X(2, 1)), FrameMismatch);
}

TEST(Courant, SuTwoExamples) {
  const FrameContext su2 = frames::su2();
  EXPECT_TRUE(courant_bracket(su2, X(3, 1) - I * X(3, 2), S(3, 1) - I * S(3, 2), false).is_zero());
  EXPECT_EQ(courant_bracket(su2, X(3, 1) - I * S(3, 2), X(3, 2) + I * S(3, 1), false), -X(3, 3));
  EXPECT_TRUE(courant_bracket(su2, X(3, 3), S(3, 3), false).is_zero());
  EXPECT_TRUE(courant_bracket(su2, X(3, 1) - I * X(3, 2), X(3, 1) - I * X(3, 2), false).is_zero());
}

TEST(Courant, SuTwoCoefficientsAsComputed) {
  // Same spans as the printed example; the coefficient here is -i.
  const FrameContext su2 = frames::su2();
  const GenSection z = X(3, 1) - I * X(3, 2);
  EXPECT_EQ(courant_bracket(su2, X(3, 3), z, false), -I * z);
  EXPECT_EQ(courant_bracket(su2, S(3, 3), z, false), -I * (S(3, 1) - I * S(3, 2)));
}

TEST(Courant, TwistedWitness) {
  const FrameContext f = frames::su2_twisted();
  EXPECT_EQ(courant_bracket(f, X(3, 1) - I * S(3, 2), X(3, 2) + I * S(3, 1), true), -X(3, 3) + S(3, 3));
  EXPECT_EQ(courant_bracket(f, X(3, 1), X(3, 2), true), -X(3, 3) + S(3, 3));
  EXPECT_THROW(courant_bracket(frames::su2(), X(3, 1), X(3, 2), true), PreconditionFailure);
}

TEST(Courant, AntisymmetryAndAnchor) {
  Sampler s;
  for (const auto& f : valid_frames()) {
    const std::size_t n = f.dim();
    for (int k = 0; k < 100; ++k) {
      const GenSection u = s.section(n), v = s.section(n);
      for (const bool use_h : {false, true}) {
        if (use_h && !f.has_h()) continue;
        const GenSection uv = courant_bracket(f, u, v, use_h);
        EXPECT_EQ(uv, -Scalar(1) * courant_bracket(f, v, u, use_h));
        EXPECT_EQ(uv.vec, lie_bracket(f, u.vec, v.vec));
      }
      EXPECT_TRUE(courant_bracket(f, u, u, f.has_h()).is_zero());
    }
  }
}

TEST(Courant, BilinearOverScalars) {
  Sampler s;
  const FrameContext f = frames::su2_twisted();
  for (int k = 0; k < 20; ++k) {
    const GenSection u = s.section(3), v = s.section(3), w = s.section(3);
    const Scalar a = s.scalar();
    EXPECT_EQ(courant_bracket(f, a * u + w, v, true), a * courant_bracket(f, u, v, true) + courant_bracket(f, w, v, true));
  }
}

TEST(GenSection, Text) {
  EXPECT_EQ((X(3, 1) - I * X(3, 2)).str(), "X1 - i X2");
  EXPECT_EQ((-X(3, 3)).str(), "-X3");
  EXPECT_EQ((-X(3, 3) + S(3, 3)).str(), "-X3 + s3");
  EXPECT_EQ(GenSection(3).str(), "0");
}

TEST(Product, Frames) {
  const ProductContext t(frames::abelian("S1", 1), frames::abelian("S1", 1));
  EXPECT_EQ(t.frame().dim(), 2u);
  EXPECT_TRUE(t.frame().is_abelian());

  const ProductContext p(frames::su2(), frames::abelian("S1", 1));
  ASSERT_EQ(p.frame().dim(), 4u);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k) {
        const Scalar expected = (i < 3 && j < 3 && k < 3) ? frames::su2().c(i, j, k) : Scalar(0);
        EXPECT_EQ(p.frame().c(i, j, k), expected);
      }
  EXPECT_FALSE(p.frame().has_h());

  const ProductContext h(frames::su2_twisted(), frames::su2_twisted());
  EXPECT_EQ(*h.frame().h(), sig(6, {1, 2, 3}) + sig(6, {4, 5, 6}));
}

TEST(Product, BlockIdentity) {
  Sampler s;
  const std::vector<FrameContext> factors{frames::abelian("S1", 1), frames::su2(), frames::su2_twisted(),
                                          frames::heisenberg()};
  for (const auto& a : factors)
    for (const auto& b : factors) {
      const ProductContext pc(a, b);
      const bool use_h = pc.frame().has_h();
      for (int k = 0; k < 100; ++k) {
        const GenSection u1 = s.section(a.dim()), v1 = s.section(a.dim());
        const GenSection u2 = s.section(b.dim()), v2 = s.section(b.dim());
        const GenSection lhs = courant_bracket(pc.frame(), pc.pair(u1, u2), pc.pair(v1, v2), use_h);
        const GenSection rhs = pc.pair(courant_bracket(a, u1, v1, a.has_h()), courant_bracket(b, u2, v2, b.has_h()));
        ASSERT_EQ(lhs, rhs) << a.name() << " x " << b.name();
        EXPECT_EQ(pc.project_first(lhs), courant_bracket(a, u1, v1, a.has_h()));
      }
    }
}
