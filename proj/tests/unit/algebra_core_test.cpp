#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

namespace lcoal
{
namespace
{

using testing::parse_vec;
using testing::parse_t2;

BasisPtr abc() { return Basis::from_names({"a", "b", "c"}); }

TEST(Scalar, ParsesIntegersAndFractions)
{
  EXPECT_EQ(parse_scalar("7"), Scalar(7));
  EXPECT_EQ(parse_scalar("-3"), Scalar(-3));
  EXPECT_EQ(parse_scalar("6/4"), Scalar(3, 2));
  EXPECT_EQ(parse_scalar("-2/6"), Scalar(-1, 3));
}

TEST(Scalar, RejectsMalformedText)
{
  for (const char *bad : {"", "1/0", "a", "1/", "/2", "1.5", "--1", "2/-3"})
    EXPECT_THROW(parse_scalar(bad), Error) << bad;
}

TEST(Scalar, StoredInLowestTerms)
{
  const Scalar x = parse_scalar("12/18");
  EXPECT_EQ(x.get_num(), 2);
  EXPECT_EQ(x.get_den(), 3);
  EXPECT_EQ(format_scalar(x), "2/3");
  EXPECT_EQ(format_scalar(parse_scalar("0/5")), "0");
  EXPECT_EQ(format_scalar(parse_scalar("-8/4")), "-2");
}

TEST(Scalar, FieldAxiomsOnRandomValues)
{
  Rng rng(default_seed);
  for (int i = 0; i < 500; ++i)
  {
    const Scalar x = random_nonzero_scalar(rng, 50, 20);
    const Scalar y = random_nonzero_scalar(rng, 50, 20);
    const Scalar z = random_nonzero_scalar(rng, 50, 20);
    EXPECT_EQ((x + y) + z, x + (y + z));
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ(Scalar(x * (1 / x)), Scalar(1));
    EXPECT_EQ(parse_scalar(format_scalar(x)), x);
  }
}

TEST(Tensor, CancellationLeavesCanonicalForm)
{
  const BasisPtr b = abc();
  const FreeVector a = FreeVector::unit(b->index_of("a"));
  const FreeVector bb = FreeVector::unit(b->index_of("b"));
  const FreeVector sum = (a + bb) + Scalar(-1) * bb;
  EXPECT_EQ(sum, a);
  EXPECT_EQ(sum.size(), 1u);
}

TEST(Tensor, ScalingByZeroGivesEmptyTensor)
{
  const BasisPtr b = abc();
  Tensor2 t = parse_t2(*b, "a (x) b");
  t *= Scalar(0);
  EXPECT_TRUE(t.empty());
}

TEST(Tensor, EqualityIgnoresTermOrder)
{
  const BasisPtr b = abc();
  EXPECT_EQ(parse_t2(*b, "a (x) a + b (x) c"), parse_t2(*b, "b (x) c + a (x) a"));
}

TEST(Tensor, FromTermsMergesAndDropsZeros)
{
  const auto t = Tensor2::from_terms({{Pair{1, 0}, 2}, {Pair{0, 1}, 1}, {Pair{1, 0}, -2}});
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t.coefficient(Pair{0, 1}), 1);
  EXPECT_EQ(t.coefficient(Pair{1, 0}), 0);
}

TEST(Tensor, ProductAndFlip)
{
  const BasisPtr b = abc();
  const Tensor2 t = tensor_product(parse_vec(*b, "a + 2*b"), parse_vec(*b, "c - a"));
  EXPECT_EQ(t, parse_t2(*b, "a (x) c - a (x) a + 2*b (x) c - 2*b (x) a"));
  EXPECT_EQ(flip(t), parse_t2(*b, "c (x) a - a (x) a + 2*c (x) b - 2*a (x) b"));
  EXPECT_EQ(flip(flip(t)), t);
}

TEST(Tensor, ArityOfMixedTensorIsRejected)
{
  TermBuffer<Word> buf;
  buf.add(Word{0, 1}, 1);
  buf.add(Word{0, 1, 2}, 1);
  EXPECT_THROW(arity(buf.finish()), Error);
}

TEST(Basis, RejectsEmptyAndDuplicates)
{
  EXPECT_THROW(Basis::from_names({}), Error);
  try
  {
    Basis::from_names({"a", "a"});
    FAIL();
  }
  catch (const Error &e)
  {
    EXPECT_EQ(e.kind(), ErrorKind::DuplicateLabel);
  }
}

TEST(Basis, CompanionOrderAndKinds)
{
  const BasisPtr c = Basis::companion_of(*abc());
  ASSERT_EQ(c->size(), 6u);
  EXPECT_EQ(c->name(3), "h_a");
  EXPECT_EQ(c->label(0).kind, LabelKind::Vertex);
  EXPECT_EQ(c->label(5).kind, LabelKind::Shadow);
  EXPECT_TRUE(same_basis(Basis::from_names({"a", "b", "c", "h_a", "h_b", "h_c"}), c));
}

TEST(LinearEndo, ApplyIdentity)
{
  const BasisPtr b = abc();
  const LinearEndo id = LinearEndo::identity(b);
  EXPECT_EQ(apply(id, parse_vec(*b, "a")), parse_vec(*b, "a"));
}

TEST(LinearEndo, ApplyRejectsForeignSupport)
{
  const BasisPtr b = abc();
  const LinearEndo id = LinearEndo::identity(b);
  FreeVector stray = FreeVector::unit(7);
  try
  {
    apply(id, stray);
    FAIL();
  }
  catch (const Error &e)
  {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownLabel);
  }
}

TEST(LinearEndo, ApplyOnE4CompanionPsiLeft)
{
  const auto c = build_companion(markov_from_graph(testing::e4()));
  const Basis &b = *c.full().basis();
  EXPECT_EQ(apply(c.psi_left(), parse_vec(b, "a")), parse_vec(b, "a + c + h_a"));
}

TEST(LinearEndo, ApplyIsLinear)
{
  Rng rng(default_seed);
  const BasisPtr b = numbered_basis(5);
  for (int trial = 0; trial < 100; ++trial)
  {
    const LinearEndo f = random_automorphism(rng, b);
    FreeVector u, v;
    for (Index i = 0; i < 5; ++i)
    {
      u += FreeVector::unit(i, random_nonzero_scalar(rng, 5, 3));
      v += FreeVector::unit(i, random_nonzero_scalar(rng, 5, 3));
    }
    const Scalar alpha = random_nonzero_scalar(rng, 5, 4);
    const Scalar beta = random_nonzero_scalar(rng, 5, 4);
    EXPECT_EQ(apply(f, alpha * u + beta * v), alpha * apply(f, u) + beta * apply(f, v));
  }
  const BasisPtr ab = abc();
  const LinearEndo f = from_dense(ab, {{1, 2, 0}, {0, 1, 3}, {4, 0, 1}});
  EXPECT_EQ(apply(f, parse_vec(*ab, "2*a - b")), Scalar(2) * f(0) - f(1));
}

TEST(LinearEndo, ComposeWithIdentity)
{
  const BasisPtr b = abc();
  const LinearEndo f = from_dense(b, {{1, 2, 0}, {0, 1, 3}, {4, 0, 1}});
  EXPECT_EQ(compose(LinearEndo::identity(b), f), f);
  EXPECT_EQ(compose(f, LinearEndo::identity(b)), f);
}

TEST(LinearEndo, ComposeMatchesDenseProduct)
{
  const BasisPtr b = abc();
  const LinearEndo f = from_dense(b, {{1, 2, 0}, {0, 1, 3}, {4, 0, 1}});
  const LinearEndo g = from_dense(b, {{0, 1, 0}, {1, 0, 0}, {0, 0, 2}});
  EXPECT_EQ(to_dense(compose(f, g)), testing::dense_multiply(to_dense(f), to_dense(g)));
}

TEST(LinearEndo, ComposeRejectsDifferentBases)
{
  try
  {
    compose(LinearEndo::identity(abc()), LinearEndo::identity(Basis::from_names({"x", "y", "z"})));
    FAIL();
  }
  catch (const Error &e)
  {
    EXPECT_EQ(e.kind(), ErrorKind::BasisMismatch);
  }
}

TEST(LinearEndo, InvertIdentity)
{
  const BasisPtr b = abc();
  EXPECT_TRUE(invert(LinearEndo::identity(b)).is_identity());
}

TEST(LinearEndo, InvertRankOneIsSingular)
{
  const BasisPtr b = abc();
  const Index a = b->index_of("a");
  const LinearEndo f(b, {FreeVector::unit(a), FreeVector::unit(a), FreeVector::unit(a)});
  try
  {
    invert(f);
    FAIL();
  }
  catch (const Error &e)
  {
    EXPECT_EQ(e.kind(), ErrorKind::Singular);
  }
}

TEST(LinearEndo, InvertNeedsRowExchange)
{
  const BasisPtr b = abc();
  const LinearEndo f = from_dense(b, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
  const LinearEndo g = invert(f);
  EXPECT_TRUE(compose(f, g).is_identity());
}

TEST(LinearEndo, InvertPsiLeftOfE4IsPhiLeft)
{
  const auto c = build_companion(markov_from_graph(testing::e4()));
  EXPECT_EQ(invert(c.psi_left()), c.phi_left());
  EXPECT_TRUE(compose(c.psi_left(), c.phi_left()).is_identity());
  EXPECT_EQ(c.psi_left().dim(), 8u);
}

TEST(LinearEndo, RandomInversesAreTwoSided)
{
  Rng rng(default_seed + 1);
  for (std::size_t dim = 1; dim <= 6; ++dim)
  {
    const BasisPtr b = numbered_basis(dim);
    for (int trial = 0; trial < 30; ++trial)
    {
      const LinearEndo f = random_automorphism(rng, b);
      const LinearEndo g = invert(f);
      EXPECT_TRUE(compose(f, g).is_identity());
      EXPECT_TRUE(compose(g, f).is_identity());
      EXPECT_EQ(testing::dense_multiply(to_dense(f), to_dense(g)), testing::dense_identity(dim));
    }
  }
}

TEST(LinearEndo, ColumnsMustCoverTheBasis)
{
  const BasisPtr b = abc();
  EXPECT_THROW(LinearEndo(b, {FreeVector{}, FreeVector{}}), Error);
  EXPECT_THROW(LinearEndo(b, {FreeVector{}, FreeVector{}, FreeVector::unit(9)}), Error);
}

TEST(TextFormat, VectorFormatting)
{
  const BasisPtr b = abc();
  EXPECT_EQ(format_vector(parse_vec(*b, "a - 2*b + 1/3*c"), *b), "a - 2*b + 1/3*c");
  EXPECT_EQ(format_vector(parse_vec(*b, "-a"), *b), "-a");
  EXPECT_EQ(format_vector(FreeVector{}, *b), "0");
  EXPECT_EQ(format_tensor2(parse_t2(*b, "-3/2*b (x) a"), *b), "-3/2*b (x) a");
}

TEST(TextFormat, ParsingMergesLikeTerms)
{
  const BasisPtr b = abc();
  EXPECT_EQ(parse_vec(*b, "a + b - a"), parse_vec(*b, "b"));
  EXPECT_EQ(parse_vec(*b, "a - a"), FreeVector{});
  EXPECT_EQ(parse_vec(*b, "0"), FreeVector{});
}

TEST(TextFormat, UnknownLabelInSum)
{
  try
  {
    parse_vec(*abc(), "a + q");
    FAIL();
  }
  catch (const Error &e)
  {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownLabel);
  }
}

TEST(TextFormat, MalformedSums)
{
  for (const char *bad : {"a +", "+ a", "2*", "a (x)", "a b", "1/0*a"})
    EXPECT_THROW(parse_formal_sum(bad), Error) << bad;
}

TEST(MatrixFormat, RoundTripIsBitExact)
{
  Rng rng(default_seed + 2);
  for (std::size_t dim = 1; dim <= 6; ++dim)
  {
    const BasisPtr b = numbered_basis(dim, "e");
    for (int trial = 0; trial < 10; ++trial)
    {
      const LinearEndo f = random_automorphism(rng, b);
      const std::string text = format_matrix(invert(f));
      const LinearEndo back = parse_matrix(text);
      EXPECT_EQ(back, invert(f));
      EXPECT_EQ(format_matrix(back), text);
    }
  }
}

TEST(MatrixFormat, Layout)
{
  const BasisPtr b = Basis::from_names({"a", "b"});
  const LinearEndo f = from_dense(b, {{1, 0}, {Scalar(-1, 2), 0}});
  EXPECT_EQ(format_matrix(f), "basis: a b\ncol a = a - 1/2*b\ncol b = 0\n");
}

TEST(MatrixFormat, MissingColumnIsZeroDuplicateIsError)
{
  const LinearEndo f = parse_matrix("basis: a b\ncol a = b\n");
  EXPECT_TRUE(f.column(1).empty());
  EXPECT_THROW(parse_matrix("basis: a b\ncol a = b\ncol a = a\n"), Error);
  EXPECT_THROW(parse_matrix("col a = b\n"), Error);
  EXPECT_THROW(parse_matrix("basis: a b\ncol c = a\n"), Error);
}

TEST(MatrixFormat, ErrorsCarryLineNumbers)
{
  try
  {
    parse_matrix("basis: a b\n# comment\ncol a = a +\n");
    FAIL();
  }
  catch (const Error &e)
  {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

}  // namespace
}  // namespace lcoal
