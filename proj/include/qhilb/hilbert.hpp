#ifndef QHILB_HILBERT_HPP
#define QHILB_HILBERT_HPP

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <qhilb/check.hpp>
#include <qhilb/coefficient.hpp>
#include <qhilb/fountains.hpp>

namespace qhilb::hilbert
{

// Block (i, j) of the plane: i along x, j along y. Corresponds to x^i y^j.
struct Block {
    int i;
    int j;

    friend auto operator<=>(const Block &, const Block &) = default;
};

// Young diagram with row lengths parts[0] >= parts[1] >= ... >= 1; block
// (i, j) belongs to it iff i < parts[j].
class YoungDiagram
{
public:
    YoungDiagram() = default;
    // Throws std::invalid_argument unless parts is weakly decreasing and positive.
    explicit YoungDiagram(std::vector<int> parts);

    const std::vector<int> &parts() const noexcept { return parts_; }
    bool empty() const noexcept { return parts_.empty(); }
    int size() const noexcept;
    bool contains(int i, int j) const noexcept;
    std::string to_string() const;

    friend auto operator<=>(const YoungDiagram &, const YoungDiagram &) = default;

private:
    std::vector<int> parts_;
};

inline bool is_zero_block(int i, int j, int p) { return (i + j) % p == 0; }

// Number of blocks (i,j) in the diagram with i + j divisible by p.
int zero_weight(const YoungDiagram &lambda, int p);

// Corners of the complement: blocks outside the diagram whose left and lower
// neighbours are inside the diagram or off the axes. Sorted.
std::vector<Block> generator_blocks(const YoungDiagram &lambda);

bool is_zero_generated(const YoungDiagram &lambda, int p);

// All 0-generated diagrams of 0-weight exactly m, sorted.
std::vector<YoungDiagram> enumerate_P0(int p, int m);

// The term q^{w(l)} z^{lp+1} of the triangle series, w(l) = p l(l+1)/2 + l + 1.
struct TriangleTerm {
    int l;
    long q_exp;
    long z_exp;

    static TriangleTerm at(int p, int l);
    friend bool operator==(const TriangleTerm &, const TriangleTerm &) = default;
};

// Number of 0-blocks in the triangle whose hypotenuse holds lp+1 blocks.
long triangle_weight(int p, int l);

// Terms for l = -1, ..., m_max.
std::vector<TriangleTerm> triangle_terms(int p, int m_max);

struct Augmentation {
    fountains::Fountain fountain;
    int l;
};

// Complement of a 0-generated diagram inside its triangle, with the triangle
// index l. Positions within a row are the y-coordinates of the 0-blocks on
// the antidiagonal i + j = (l - r) p. Throws std::invalid_argument when the
// diagram is not 0-generated.
Augmentation diagram_to_fountain(const YoungDiagram &lambda, int p);

// Coefficients Z_0 .. Z_order of the Euler characteristic series.
struct ZetaSeries {
    int p = 1;
    std::vector<Coefficient> coefficients;

    int order() const { return static_cast<int>(coefficients.size()) - 1; }
    friend bool operator==(const ZetaSeries &, const ZetaSeries &) = default;
};

// Table bounds sufficient for zeta_theorem up to order m_max, with triangles
// scanned up to index m_max + extra_l.
int required_n_max(int p, int m_max, int extra_l = 0);
int required_k_max(int p, int m_max, int extra_l = 0);

// Z_m = sum over the given triangle terms of h(w - m, z_exp): the z^0
// coefficient of T(q,z) H(1/q, 1/z) at q^m. Negative z_exp or n < z_exp read as 0.
ZetaSeries zeta_from_triangles(const fountains::FountainTable &table, std::span<const TriangleTerm> terms,
                               int m_max);

// Throws std::invalid_argument when the table does not cover order m_max.
ZetaSeries zeta_theorem(const fountains::FountainTable &table, int m_max);
ZetaSeries zeta_theorem(int p, int m_max);

// Z_m = |P_0(m)| by diagram enumeration.
ZetaSeries zeta_oracle(int p, int m_max);

// prod_{m >= 1} 1/(1 - q^m).
ZetaSeries zeta_closed_p1(int m_max);

// (prod 1/(1 - q^m))^2 * sum_{m in Z} xi^m q^{m^2}, xi a primitive cube root of 1.
ZetaSeries zeta_closed_p2(int m_max);

// Integer theta factor sum_m (xi^m) q^{m^2}: 1 at m = 0, then 2 or -1 at q^{m^2}
// for m >= 1 depending on whether 3 divides m.
std::vector<Coefficient> cube_root_theta(int m_max);

// For m <= m_max and l in [-1, m + extra_l], the number of diagrams in P_0(m)
// with triangle index l equals h(w(l) - m, lp + 1), and no diagram has l > m.
CheckOutcome check_bijection_refinement(const fountains::FountainTable &table, int m_max, int extra_l = 5);

} // namespace qhilb::hilbert

#endif
