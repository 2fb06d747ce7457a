#include "support/ad_identity.hpp"
#include "support/kv_checks.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace kvlie;
using oracle::poly;
using oracle::px;
using oracle::py;

namespace {

const Alphabet& xy()
{
    static const Alphabet a = Alphabet::xy();
    return a;
}

GradedSeries series(const Polynomial& p, std::size_t n) { return GradedSeries::from_polynomial(p, n); }

Polynomial nested(const std::string& s) { return example::nested(s); }

} // namespace

// ---- BCH ----------------------------------------------------------------

TEST(Bch, LowDegrees)
{
    const auto phi = bch_eulerian(3);
    EXPECT_EQ(phi[1], px() + py());
    EXPECT_EQ(phi[2], bracket(px(), py()) * make_rational(1, 2));
    EXPECT_EQ(phi[3], (nested("xxy") + nested("yyx")) * make_rational(1, 12));
}

TEST(Bch, EulerianMatchesLogOfProduct)
{
    EXPECT_EQ(bch_eulerian(8, 1).series, bch_oracle(8).series);
}

TEST(Bch, ThreadCountDoesNotMatter)
{
    EXPECT_EQ(bch_eulerian(7, 1).series, bch_eulerian(7, 4).series);
}

TEST(Bch, SwapGivesReversedProduct)
{
    const auto swapped = swap_arguments(bch_eulerian(6));
    EXPECT_EQ(swapped.order, ArgumentOrder::reversed);
    EXPECT_EQ(swapped.series, multilinear_bch_oracle(2, 6, ArgumentOrder::reversed).series);
    EXPECT_EQ(swapped.series, multilinear_bch(2, 6, ArgumentOrder::reversed).series);
}

TEST(Bch, Antisymmetry)
{
    // Phi(x,y) = -Phi(-y,-x) from degree 2 on
    const auto phi = bch_oracle(8).series;
    const auto sub = substitute(phi, Substitution::swap_negate());
    for (std::size_t n = 2; n <= 8; ++n) {
        EXPECT_EQ(phi[n], -sub[n]) << "degree " << n;
    }
}

TEST(Bch, RejectsBadArguments)
{
    EXPECT_THROW(multilinear_bch(1, 3), std::invalid_argument);
    EXPECT_THROW(multilinear_bch(2, 0), std::invalid_argument);
}

// ---- split of Phi -------------------------------------------------------

TEST(PhiSplit, LowDegrees)
{
    const auto s = phi_split(bch_eulerian(3));
    EXPECT_EQ(s.plus[1], px());
    EXPECT_EQ(s.minus[1], py());
    EXPECT_EQ(s.plus[2], bracket(px(), py()) * make_rational(1, 4));
    EXPECT_EQ(s.minus[2], bracket(px(), py()) * make_rational(1, 4));
}

TEST(PhiSplit, HalvesAddUp)
{
    const auto phi = bch_oracle(8);
    const auto s = phi_split(phi);
    for (std::size_t n = 2; n <= 8; ++n) {
        EXPECT_EQ(s.plus[n] + s.minus[n], phi[n]) << "degree " << n;
    }
}

TEST(PhiSplit, HalvesExchangedBySwapNegate)
{
    const auto s = phi_split(bch_oracle(7));
    EXPECT_EQ(s.plus, -substitute(s.minus, Substitution::swap_negate()));
}

TEST(PhiSplit, MinusHalfIsInImageOfE)
{
    // Phi-(y,x) from degree 2 has a preimage under E(-x); found by a linear solve.
    auto target = phi_minus_yx(7);
    target.set(1, Polynomial(xy()));
    const auto F = e_preimage(target, X, -1);
    ASSERT_TRUE(F.has_value());
    GradedSeries lifted(xy(), 7);
    lifted.add(F->to_polynomial());
    EXPECT_EQ(apply_E(X, -1, lifted), target);
}

TEST(PhiSplit, RejectsNonLie)
{
    GradedSeries s(xy(), 2);
    s.set(2, poly("xy"));
    EXPECT_THROW(phi_split(s), not_lie_element);
}

// ---- operators ----------------------------------------------------------

TEST(Operators, ELowDegree)
{
    const auto e = apply_E(X, 1, series(py(), 3));
    EXPECT_TRUE(e[1].is_zero());
    EXPECT_EQ(e[2], poly("xy - yx"));
    EXPECT_EQ(e[3], nested("xxy") * make_rational(1, 2));
}

TEST(Operators, BerInvertsEOnLie)
{
    // Ber(z) E(z) = E(z) Ber(z) = ad(z), up to the truncation
    std::mt19937 rng(7);
    for (int sign : {1, -1}) {
        for (Letter z : {X, Y}) {
            for (std::size_t d = 1; d <= 5; ++d) {
                const auto s = series(oracle::random_lie(rng, xy(), d), 8);
                const auto adz = apply_ad(z, sign, s);
                EXPECT_EQ(apply_ber(z, sign, apply_E(z, sign, s)), adz);
                EXPECT_EQ(apply_E(z, sign, apply_ber(z, sign, s)), adz);
            }
        }
    }
}

TEST(Operators, BerFixesItsLetter)
{
    EXPECT_EQ(apply_ber(X, 1, series(px(), 6)), series(px(), 6));
    EXPECT_EQ(apply_ber(X, -1, series(px(), 6)), series(px(), 6));
}

TEST(Operators, BerLowDegree)
{
    const auto b = apply_ber(X, 1, series(py(), 3));
    EXPECT_EQ(b[1], py());
    EXPECT_EQ(b[2], poly("xy - yx") * make_rational(-1, 2));
    EXPECT_EQ(b[3], nested("xxy") * make_rational(1, 12));
}

TEST(Operators, KernelOfEOnLie)
{
    EXPECT_EQ(checks::e_nullity_on_lie(1), 1u);
    for (std::size_t d = 2; d <= 6; ++d) {
        EXPECT_EQ(checks::e_nullity_on_lie(d), 0u) << "degree " << d;
    }
}

TEST(Operators, KernelOfAdOnWords)
{
    for (std::size_t d = 1; d <= 6; ++d) {
        EXPECT_EQ(checks::ad_nullity_on_words(d), 1u) << "degree " << d;
    }
}

// ---- a and F0 -----------------------------------------------------------

TEST(ASeries, DegreeOne)
{
    EXPECT_EQ(a_series(1)[1], py() * make_rational(1, 4));
}

TEST(ASeries, IsLie)
{
    const auto a = a_series(7);
    for (std::size_t d = 1; d <= 7; ++d) {
        EXPECT_TRUE(is_lie_element(a[d])) << "degree " << d;
    }
}

TEST(ASeries, FromSwappedBch)
{
    // a(-x,-y) = sum_n (n-1)/n gamma((Phi_n(y,x))_x)
    const std::size_t n = 7;
    const auto lhs = substitute(a_series(n), Substitution::negate_all(2));
    const auto phi = phi_yx(n + 1);
    for (std::size_t m = 1; m <= n; ++m) {
        const auto rhs = dynkin(letter_part(phi[m + 1], X)) * make_rational(static_cast<long>(m), static_cast<long>(m + 1));
        EXPECT_EQ(lhs[m], rhs) << "degree " << m;
    }
}

TEST(F0, LowDegrees)
{
    const auto f = f0(3);
    EXPECT_EQ(f[1], poly("1/4*y"));
    EXPECT_EQ(f[2], poly("1/24*xy - 1/24*yx"));
    EXPECT_EQ(f[3], poly("-1/48*xxy + 1/24*xyx + 1/48*xyy - 1/48*yxx - 1/24*yxy + 1/48*yyx"));
}

TEST(F0, DegreeFour)
{
    EXPECT_EQ(f0(4)[4], poly("-1/180*xxxy + 1/60*xxyx + 1/480*xxyy - 1/60*xyxx - 1/240*xyxy + 1/360*xyyy + 1/180*yxxx"
                             " + 1/240*yxyx - 1/120*yxyy - 1/480*yyxx + 1/120*yyxy - 1/360*yyyx"));
}

TEST(F0, GIsSwapNegate)
{
    const auto f = f0(6);
    EXPECT_EQ(g0(6), substitute(f, Substitution::swap_negate()));
    EXPECT_EQ(g0(2)[1], poly("-1/4*x"));
}

TEST(F0, SolvesSplitEquation)
{
    EXPECT_TRUE(verify_split(f0(8), 8).is_zero());
}

TEST(F0, SplitAllowsAddingX)
{
    auto f = f0(7);
    f.add(px() * Rational(3));
    EXPECT_TRUE(verify_split(f, 7).is_zero());
}

TEST(F0, ZeroFailsSplit)
{
    EXPECT_FALSE(verify_split(GradedSeries(xy(), 5), 5).is_zero());
}

TEST(F0, SolvesKv1)
{
    EXPECT_TRUE(verify_kv1(f0_pair(8)).is_zero());
}

TEST(F0, ZeroPairFailsKv1)
{
    const auto d = verify_kv1(KvSolutionPair{GradedSeries(xy(), 4), GradedSeries(xy(), 4)});
    ASSERT_FALSE(d.is_zero());
    const auto t = first_defect(d);
    ASSERT_TRUE(t.has_value());
    EXPECT_EQ(t->degree, 2u);
}

TEST(F0, MatchesLinearSolve)
{
    const auto lin = solve_split_linear_series(6);
    const auto f = f0(6);
    ASSERT_EQ(lin.size(), 6u);
    for (std::size_t d = 1; d <= 6; ++d) {
        EXPECT_EQ(lin[d - 1], f[d]) << "degree " << d;
    }
    EXPECT_EQ(solve_split_linear(1), poly("1/4*y"));
    EXPECT_EQ(solve_split_linear(2), poly("1/24*xy - 1/24*yx"));
}

// ---- symmetrization -----------------------------------------------------

TEST(Symmetrize, SymmetricSolutionUnchanged)
{
    const auto pair = f0_pair(6);
    const auto s = symmetrize(pair, 0);
    EXPECT_EQ(s.F, pair.F);
    EXPECT_EQ(s.G, pair.G);
}

TEST(Symmetrize, AsymmetricSolution)
{
    auto pair = general_solution(poly("xy + yx - xx"), 0, 0, 6);
    pair.F.add(px() * Rational(5));
    ASSERT_TRUE(verify_kv1(pair).is_zero());
    for (const Rational& lambda : {Rational(0), make_rational(2, 3)}) {
        const auto s = symmetrize(pair, lambda);
        EXPECT_TRUE(verify_kv1(s).is_zero());
        EXPECT_EQ(s.G, swap_negate(s.F)) << "lambda " << lambda;
        const Rational gx = -pair.G[1].coeff(Word{Y});
        EXPECT_EQ(s.F[1].coeff(Word{X}), (pair.F[1].coeff(Word{X}) + gx) / 2 + lambda);
    }
}

TEST(Symmetrize, RejectsNonSolutions)
{
    EXPECT_THROW(symmetrize(KvSolutionPair{GradedSeries(xy(), 3), GradedSeries(xy(), 3)}, 0), precondition_error);
}

// ---- homogeneous equation -----------------------------------------------

TEST(Homogeneous, SymmetricSquare)
{
    const auto p = poly("1/2*xy + 1/2*yx");
    ASSERT_TRUE(dynkin(p).is_zero());
    const auto pair = homogeneous_solution(p, 0, 0, 8);
    EXPECT_FALSE(pair.F.is_zero());
    EXPECT_TRUE(verify_homogeneous(pair).is_zero());
}

TEST(Homogeneous, ZeroAndLetters)
{
    const auto pair = homogeneous_solution(Polynomial(xy()), 2, -3, 5);
    EXPECT_EQ(pair.F.to_polynomial(), px() * Rational(2));
    EXPECT_EQ(pair.G.to_polynomial(), py() * Rational(-3));
    EXPECT_TRUE(verify_homogeneous(pair).is_zero());
}

TEST(Homogeneous, KernelGenerators)
{
    for (std::size_t m = 2; m <= 5; ++m) {
        for (const auto& w : all_words(2, m)) {
            const auto pair = homogeneous_solution(kernel_generator(w, xy()), 0, 0, 7);
            EXPECT_TRUE(verify_homogeneous(pair).is_zero()) << to_string(w, xy());
        }
    }
}

TEST(Homogeneous, RejectsPOutsideKernel)
{
    EXPECT_THROW(homogeneous_solution(poly("xy"), 0, 0, 4), precondition_error);
}

TEST(Homogeneous, GeneratedEqualsGeneric)
{
    for (std::size_t n = 2; n <= 4; ++n) {
        const auto dims = checks::homogeneous_dimensions(n);
        EXPECT_EQ(dims.generated, dims.generic) << "n = " << n;
    }
}

// ---- the degree-5 ad identity --------------------------------------------

TEST(AdIdentity, Holds)
{
    EXPECT_FALSE(example::P().is_zero());
    EXPECT_TRUE(is_lie_element(example::P()));
    EXPECT_TRUE((ad(X, example::P()) + ad(Y, example::P_swapped())).is_zero());
}

TEST(AdIdentity, GivesKernelElement)
{
    EXPECT_TRUE(dynkin(example::p()).is_zero());
}

TEST(AdIdentity, PrintedPreimageIsOffByOneLetter)
{
    const auto q = example::q_printed();
    EXPECT_EQ(q.degree(), 7);
    EXPECT_NE(q - dynkin(q), example::p());
    const auto r = example::q_repaired();
    EXPECT_TRUE(r.is_homogeneous());
    EXPECT_EQ(r - dynkin(r), example::p());
    const auto d = example::q_derived();
    EXPECT_EQ(d - dynkin(d), example::p());
}

TEST(AdIdentity, HomogeneousSolutionAndPsi)
{
    const auto p = example::p();
    const auto pair = homogeneous_solution(p, 0, 0, 9);
    EXPECT_TRUE(verify_homogeneous(pair).is_zero());
    // gamma(p_x) = P, so F = Ber(-x) P
    EXPECT_EQ(dynkin(letter_part(p, X)), example::P());
    EXPECT_EQ(pair.F, apply_ber(X, -1, series(example::P(), 9)));
    EXPECT_EQ(psi(example::q_repaired(), X), example::P());
}

// ---- all solutions -------------------------------------------------------

TEST(GeneralSolution, ZeroGivesF0)
{
    const auto pair = general_solution(Polynomial(xy()), 0, 0, 6);
    EXPECT_EQ(pair.F, f0(6));
    EXPECT_EQ(pair.G, g0(6));
}

TEST(GeneralSolution, RandomPolynomials)
{
    std::mt19937 rng(11);
    for (int t = 0; t < 6; ++t) {
        const auto p = oracle::random_polynomial(rng, xy(), 0, 5, 4);
        const auto pair = general_solution(p, make_rational(t, 3), make_rational(-t, 5), 7);
        EXPECT_TRUE(verify_kv1(pair).is_zero()) << format_text(p);
    }
}

TEST(GeneralSolution, DifferenceSolvesHomogeneous)
{
    const auto p = poly("xxy - 2*yxy + 1/3*yyyx");
    const auto pair = general_solution(p, 0, 0, 7);
    const KvSolutionPair diff{pair.F - f0(7), pair.G - g0(7)};
    EXPECT_TRUE(verify_homogeneous(diff).is_zero());
}

TEST(GeneralSolution, PatrasReutenauerRoute)
{
    // gamma(a) a is in Ker gamma; feeding it to the homogeneous solution works
    std::mt19937 rng(5);
    for (std::size_t d = 1; d <= 4; ++d) {
        const auto a = oracle::random_polynomial(rng, xy(), d, d, 3);
        const auto k = patras_reutenauer_generator(a);
        EXPECT_TRUE(dynkin(k).is_zero());
        const auto pair = homogeneous_solution(k, 0, 0, 8);
        EXPECT_TRUE(verify_homogeneous(pair).is_zero());
        const auto full = general_solution(k, 0, 0, 8);
        EXPECT_TRUE(verify_kv1(full).is_zero());
    }
}

TEST(GeneralSolution, CorrectionWithoutConstantTermFails)
{
    // F0 + sum_{m>=1} B_m/m! (-1)^m ad(x)^m Psi_x(p): drops the m = 0 term
    const auto p = poly("xy");
    const std::size_t n = 6;
    const auto px_ = series(psi(p, X), n);
    const auto py_ = series(psi(p, Y), n);
    const KvSolutionPair variant{f0(n) + apply_ber(X, -1, px_) - px_, g0(n) + apply_ber(Y, 1, py_) - py_};
    EXPECT_FALSE(verify_kv1(variant).is_zero());
    EXPECT_TRUE(verify_kv1(general_solution(p, 0, 0, n)).is_zero());
}

TEST(AntisymmetricKernel, Examples)
{
    // gamma(x)x - gamma(-y)(-y) = xx - yy
    EXPECT_EQ(antisymmetric_kernel_element(px()), poly("xx - yy"));
    std::mt19937 rng(3);
    for (std::size_t d = 1; d <= 4; ++d) {
        const auto p = oracle::random_polynomial(rng, xy(), d, d, 3);
        const auto a = antisymmetric_kernel_element(p);
        EXPECT_TRUE(dynkin(a).is_zero());
        EXPECT_EQ(substitute(a, Substitution::swap_negate()), -a);
    }
}

// ---- multilinear ---------------------------------------------------------

TEST(Multilinear, TwoLettersIsBch)
{
    EXPECT_EQ(multilinear_bch(2, 6).series, bch_eulerian(6).series);
}

TEST(Multilinear, ThreeLettersLowDegrees)
{
    const Alphabet a = Alphabet::indexed(3);
    const auto phi = multilinear_bch(3, 3);
    EXPECT_EQ(phi[1], poly("x1 + x2 + x3", a));
    EXPECT_EQ(phi[2], poly("1/2*x1x2 - 1/2*x2x1 + 1/2*x1x3 - 1/2*x3x1 + 1/2*x2x3 - 1/2*x3x2", a));
}

TEST(Multilinear, MatchesOracle)
{
    EXPECT_EQ(multilinear_bch(3, 5).series, multilinear_bch_oracle(3, 5).series);
    EXPECT_EQ(multilinear_bch(3, 5, ArgumentOrder::reversed).series,
              multilinear_bch_oracle(3, 5, ArgumentOrder::reversed).series);
    EXPECT_EQ(multilinear_bch(4, 4).series, multilinear_bch_oracle(4, 4).series);
}

TEST(Multilinear, TwoLettersReducesToKv1)
{
    const auto t = multilinear_f0_tuple(2, 6);
    EXPECT_EQ(t[0], f0(6));
    EXPECT_EQ(t[1], -g0(6));
    EXPECT_TRUE(verify_multilinear(2, t, 6).is_zero());
}

TEST(Multilinear, ThreeLettersSolved)
{
    EXPECT_TRUE(verify_multilinear(3, multilinear_f0_tuple(3, 5), 5).is_zero());
}

TEST(Multilinear, FourLettersSolved)
{
    EXPECT_TRUE(verify_multilinear(4, multilinear_f0_tuple(4, 4), 4).is_zero());
}

TEST(Multilinear, ZeroTupleFails)
{
    const std::vector<GradedSeries> zero(3, GradedSeries(Alphabet::indexed(3), 4));
    EXPECT_FALSE(verify_multilinear(3, zero, 4).is_zero());
}

TEST(Multilinear, IndexOutOfRange)
{
    EXPECT_THROW(multilinear_a(0, 3, 3), std::out_of_range);
    EXPECT_THROW(multilinear_a(4, 3, 3), std::out_of_range);
}

TEST(Multilinear, UniformMinusSignVariant)
{
    // F_i = -Ber(-x_i) a_i for every i solves the equation with all operators
    // 1 - e^{-ad x_i}, not the alternating one
    const std::size_t k = 3, n = 5;
    std::vector<GradedSeries> t;
    for (std::size_t i = 1; i <= k; ++i) {
        t.push_back(-apply_ber(letter(i - 1), -1, multilinear_a(i, k, n)));
    }
    EXPECT_FALSE(verify_multilinear(k, t, n).is_zero());
    EXPECT_TRUE(verify_multilinear(k, t, n, {-1, -1, -1}).is_zero());
}

TEST(Multilinear, LinearSolveAgrees)
{
    const auto sol = multilinear_linear_solve(3, 5, multilinear_signs(3));
    ASSERT_TRUE(sol.has_value());
    EXPECT_TRUE(verify_multilinear(3, *sol, 5).is_zero());
}
