#include <algorithm>
#include <functional>

#include <gtest/gtest.h>

#include <qhilb/fountains.hpp>
#include <qhilb/hilbert.hpp>

using qhilb::Coefficient;
using namespace qhilb::hilbert;

namespace
{

std::vector<Coefficient> seq(std::initializer_list<long> values)
{
    std::vector<Coefficient> out;
    for (long v : values) {
        out.emplace_back(v);
    }
    return out;
}

// Every diagram inside a width x height box, by walking its boundary.
void for_each_diagram_in_box(int width, int height, const std::function<void(const YoungDiagram &)> &visit)
{
    std::vector<int> parts;
    std::function<void(int)> rec = [&](int cap) {
        visit(YoungDiagram(parts));
        if (static_cast<int>(parts.size()) == height) {
            return;
        }
        for (int len = 1; len <= cap; ++len) {
            parts.push_back(len);
            rec(len);
            parts.pop_back();
        }
    };
    rec(width);
}

} // namespace

TEST(YoungDiagram, RejectsBadParts)
{
    EXPECT_THROW(YoungDiagram({1, 2}), std::invalid_argument);
    EXPECT_THROW(YoungDiagram({2, 0}), std::invalid_argument);
    EXPECT_NO_THROW(YoungDiagram({3, 3, 1}));
}

TEST(ZeroWeight, Examples)
{
    EXPECT_EQ(zero_weight(YoungDiagram({6, 5, 1}), 3), 3);
    EXPECT_EQ(zero_weight(YoungDiagram(), 4), 0);
    EXPECT_EQ(zero_weight(YoungDiagram({2, 1}), 2), 1);
    EXPECT_EQ(zero_weight(YoungDiagram({4, 2, 1}), 1), 7);
}

TEST(GeneratorBlocks, Examples)
{
    EXPECT_EQ(generator_blocks(YoungDiagram({6, 5, 1})), (std::vector<Block>{{0, 3}, {1, 2}, {5, 1}, {6, 0}}));
    EXPECT_EQ(generator_blocks(YoungDiagram()), (std::vector<Block>{{0, 0}}));
    EXPECT_EQ(generator_blocks(YoungDiagram({2, 2})), (std::vector<Block>{{0, 2}, {2, 0}}));
}

TEST(ZeroGenerated, Examples)
{
    EXPECT_TRUE(is_zero_generated(YoungDiagram({6, 5, 1}), 3));
    EXPECT_FALSE(is_zero_generated(YoungDiagram({1}), 2));
    for_each_diagram_in_box(4, 4, [](const YoungDiagram &d) { EXPECT_TRUE(is_zero_generated(d, 1)); });
}

TEST(EnumerateP0, Examples)
{
    EXPECT_EQ(enumerate_P0(2, 1), (std::vector<YoungDiagram>{YoungDiagram({2, 1})}));
    auto two = enumerate_P0(2, 2);
    std::vector<YoungDiagram> expect{YoungDiagram({4, 1}), YoungDiagram({2, 2}), YoungDiagram({2, 1, 1, 1})};
    std::sort(expect.begin(), expect.end());
    EXPECT_EQ(two, expect);
    for (int p = 1; p <= 5; ++p) {
        EXPECT_EQ(enumerate_P0(p, 0), (std::vector<YoungDiagram>{YoungDiagram()}));
    }
}

// Brute force over a box two larger than the search bound, filtered by the
// definitions alone.
TEST(EnumerateP0, MatchesBoxBruteForce)
{
    const std::vector<std::pair<int, int>> cases{{1, 4}, {2, 3}, {3, 2}, {4, 2}};
    for (const auto &[p, m_max] : cases) {
        const int box = p * m_max + 2;
        std::vector<std::vector<YoungDiagram>> brute(static_cast<std::size_t>(m_max + 1));
        for_each_diagram_in_box(box, box, [&](const YoungDiagram &d) {
            const int w = zero_weight(d, p);
            if (w <= m_max && is_zero_generated(d, p)) {
                brute[static_cast<std::size_t>(w)].push_back(d);
            }
        });
        for (int m = 0; m <= m_max; ++m) {
            auto &b = brute[static_cast<std::size_t>(m)];
            std::sort(b.begin(), b.end());
            EXPECT_EQ(enumerate_P0(p, m), b) << "p=" << p << " m=" << m;
        }
    }
}

TEST(TriangleTerms, Examples)
{
    const auto t3 = triangle_terms(3, 2);
    ASSERT_EQ(t3.size(), 4U);
    EXPECT_EQ(t3[1], (TriangleTerm{0, 1, 1}));
    EXPECT_EQ(t3[2], (TriangleTerm{1, 5, 4}));
    EXPECT_EQ(t3[3], (TriangleTerm{2, 12, 7}));
    EXPECT_EQ(TriangleTerm::at(1, -1), (TriangleTerm{-1, 0, 0}));
    // q-exponent = number of 0-blocks in the triangle i + j <= lp
    for (int p = 1; p <= 4; ++p) {
        for (int l = 0; l <= 5; ++l) {
            long blocks = 0;
            for (int i = 0; i <= l * p; ++i) {
                for (int j = 0; i + j <= l * p; ++j) {
                    blocks += is_zero_block(i, j, p) ? 1 : 0;
                }
            }
            EXPECT_EQ(TriangleTerm::at(p, l).q_exp, blocks);
            EXPECT_EQ(triangle_weight(p, l), qhilb::fountains::max_coins(l * p + 1, p));
        }
    }
}

TEST(DiagramToFountain, ExampleDiagram)
{
    const auto aug = diagram_to_fountain(YoungDiagram({6, 5, 1}), 3);
    EXPECT_EQ(aug.l, 2);
    EXPECT_EQ(aug.fountain.coin_count(), 9);
    EXPECT_EQ(aug.fountain.bottom_width(), 7);
    ASSERT_EQ(aug.fountain.rows.size(), 2U);
    EXPECT_EQ(aug.fountain.rows[1], (std::set<int>{2, 3}));
    EXPECT_TRUE(qhilb::fountains::is_valid_fountain(aug.fountain));
    EXPECT_FALSE(qhilb::fountains::is_primitive(aug.fountain));
}

TEST(DiagramToFountain, EmptyDiagram)
{
    for (int p = 2; p <= 5; ++p) {
        const auto aug = diagram_to_fountain(YoungDiagram(), p);
        EXPECT_EQ(aug.l, 0);
        EXPECT_EQ(aug.fountain.rows, (std::vector<std::set<int>>{{0}}));
    }
    const auto aug1 = diagram_to_fountain(YoungDiagram(), 1);
    EXPECT_EQ(aug1.l, -1);
    EXPECT_TRUE(aug1.fountain.rows.empty());
    EXPECT_THROW(diagram_to_fountain(YoungDiagram({1}), 2), std::invalid_argument);
}

TEST(DiagramToFountain, SmallDiagramUsesDeepestZeroBlock)
{
    // (2,1) for p = 2: deepest 0-block is (0,0), so l = 1 and the bottom row
    // is the full antidiagonal i + j = 2.
    const auto aug = diagram_to_fountain(YoungDiagram({2, 1}), 2);
    EXPECT_EQ(aug.l, 1);
    EXPECT_EQ(aug.fountain.rows, (std::vector<std::set<int>>{{0, 1, 2}}));
}

TEST(DiagramToFountain, OutputProperties)
{
    for (int p = 1; p <= 4; ++p) {
        for (int m = 0; m <= 5; ++m) {
            for (const auto &lambda : enumerate_P0(p, m)) {
                const auto aug = diagram_to_fountain(lambda, p);
                const auto &c = aug.fountain;
                EXPECT_TRUE(qhilb::fountains::is_valid_fountain(c)) << lambda.to_string();
                EXPECT_FALSE(qhilb::fountains::is_primitive(c)) << lambda.to_string();
                EXPECT_EQ(c.coin_count() + zero_weight(lambda, p), triangle_weight(p, aug.l));
                EXPECT_EQ(c.bottom_width(), std::max(0, aug.l * p + 1));
            }
        }
    }
}

TEST(ZetaTheorem, Examples)
{
    EXPECT_EQ(zeta_theorem(1, 10).coefficients, seq({1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42}));
    EXPECT_EQ(zeta_theorem(2, 3).coefficients, seq({1, 1, 3, 5}));
    EXPECT_EQ(zeta_theorem(3, 1).coefficients, seq({1, 1}));
}

TEST(ZetaTheorem, RejectsSmallTables)
{
    const auto t = qhilb::fountains::build_table(2, 20, 5);
    EXPECT_THROW(zeta_theorem(t, 3), std::invalid_argument);
    EXPECT_NO_THROW(zeta_theorem(qhilb::fountains::build_table(2, required_n_max(2, 3), required_k_max(2, 3)), 3));
}

TEST(ZetaOracle, Examples)
{
    EXPECT_EQ(zeta_oracle(2, 2).coefficients, seq({1, 1, 3}));
    for (int p = 1; p <= 6; ++p) {
        EXPECT_EQ(zeta_oracle(p, 0).coefficients, seq({1}));
    }
    EXPECT_EQ(zeta_oracle(1, 8).coefficients, zeta_closed_p1(8).coefficients);
}

TEST(ZetaClosed, P1Examples)
{
    EXPECT_EQ(zeta_closed_p1(5).coefficients, seq({1, 1, 2, 3, 5, 7}));
    EXPECT_EQ(zeta_closed_p1(0).coefficients, seq({1}));
    EXPECT_EQ(zeta_closed_p1(16), zeta_theorem(1, 16));
}

TEST(ZetaClosed, P2Examples)
{
    EXPECT_EQ(cube_root_theta(16), seq({1, -1, 0, 0, -1, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, -1}));
    EXPECT_EQ(zeta_closed_p2(3).coefficients, seq({1, 1, 3, 5}));
    EXPECT_EQ(zeta_closed_p2(0).coefficients, seq({1}));
    EXPECT_EQ(zeta_closed_p2(3), zeta_oracle(2, 3));
}

TEST(ZetaSeriesInvariants, NonnegativeWithUnitLeadingTerms)
{
    for (int p = 1; p <= 6; ++p) {
        const auto z = zeta_theorem(p, 6);
        EXPECT_EQ(z.p, p);
        EXPECT_EQ(z.coefficients[0], 1);
        EXPECT_EQ(z.coefficients[1], 1);
        for (const auto &c : z.coefficients) {
            EXPECT_GE(c, 0);
        }
    }
}

TEST(ZetaTheorem, NegativeTriangleIsNeededOnlyForP1)
{
    for (int p = 1; p <= 4; ++p) {
        const int order = 6;
        const auto table = qhilb::fountains::build_table(p, required_n_max(p, order), required_k_max(p, order));
        auto terms = triangle_terms(p, order);
        terms.erase(terms.begin()); // drop l = -1
        const auto without = zeta_from_triangles(table, terms, order);
        const auto with = zeta_theorem(table, order);
        if (p == 1) {
            EXPECT_EQ(without.coefficients[0], 0);
            EXPECT_EQ(std::vector<Coefficient>(without.coefficients.begin() + 1, without.coefficients.end()),
                      std::vector<Coefficient>(with.coefficients.begin() + 1, with.coefficients.end()));
        } else {
            EXPECT_EQ(without, with);
        }
    }
}

TEST(Refinement, BijectionAndCutoff)
{
    for (int p = 1; p <= 4; ++p) {
        const int m_max = p <= 3 ? 6 : 5;
        const auto table =
            qhilb::fountains::build_table(p, required_n_max(p, m_max, 5), required_k_max(p, m_max, 5));
        const auto outcome = check_bijection_refinement(table, m_max, 5);
        EXPECT_TRUE(outcome) << outcome.detail;
    }
}

TEST(Refinement, DetectsCorruptedTable)
{
    auto table = qhilb::fountains::build_table(2, required_n_max(2, 3, 5), required_k_max(2, 3, 5));
    // h at the (3,3) slot pairs with m = 1, l = 1
    table.set(qhilb::fountains::TableKind::h, 3, 3, 2);
    const auto outcome = check_bijection_refinement(table, 3, 5);
    EXPECT_FALSE(outcome);
    EXPECT_NE(outcome.detail.find("m=1"), std::string::npos) << outcome.detail;
}
