#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cedual/duality.hpp"
#include "cedual/errors.hpp"
#include "cedual/linalg.hpp"
#include "cedual/signs.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace cedual;

namespace {

// ⟨a, b⟩ on basis cochains from subsets alone: e_φ pairs with e_{φ*} with
// sign (-1)^{Σ φ}, the complement of φ* being φ.
Matrix oracle_pairing(unsigned d, unsigned k, std::size_t m)
{
    const auto left = oracle::subsets(d, k);
    const auto right = oracle::subsets(d, d - k);
    Matrix g(left.size() * m, right.size() * m);
    for (std::size_t i = 0; i < left.size(); ++i)
        for (std::size_t j = 0; j < right.size(); ++j) {
            std::vector<unsigned> all = left[i];
            all.insert(all.end(), right[j].begin(), right[j].end());
            std::sort(all.begin(), all.end());
            if (std::adjacent_find(all.begin(), all.end()) != all.end()) continue;
            unsigned sum = 0;
            for (unsigned v : left[i]) sum += v;
            for (std::size_t v = 0; v < m; ++v) g(i * m + v, j * m + v) = sum % 2 == 0 ? 1 : -1;
        }
    return g;
}

// ε_k by exhaustive evaluation over basis pairs with oracle differentials.
std::vector<int> oracle_signs(const Representation& r, const Representation& dual)
{
    const auto d = static_cast<unsigned>(r.algebra().dim());
    std::vector<int> out;
    for (unsigned k = 0; k < d; ++k) {
        const Matrix lhs = oracle::ce_differential(dual, k).transpose() * oracle_pairing(d, k + 1, r.dim());
        const Matrix rhs = oracle_pairing(d, k, r.dim()) * oracle::ce_differential(r, d - k - 1);
        int s = 0;
        if (lhs == rhs) s = 1;
        else if (lhs == -rhs) s = -1;
        out.push_back(s);
    }
    return out;
}

} // namespace

TEST_CASE("pairing matrix small cases")
{
    CHECK(pairing_matrix(Representation::trivial(LieAlgebra::abelian(1), 1), 0).gram == Matrix{{1}});
    CHECK(pairing_matrix(Representation::trivial(LieAlgebra::abelian(2), 1), 1).gram == Matrix{{0, -1}, {1, 0}});
    const PairingMatrix empty = pairing_matrix(Representation::trivial(LieAlgebra::abelian(3), 0), 1);
    CHECK(empty.gram.rows() == 0);
    CHECK(empty.gram.cols() == 0);
    CHECK_THROWS_AS(pairing_matrix(Representation::trivial(LieAlgebra::abelian(2), 1), 3), std::invalid_argument);
    for (unsigned d = 0; d <= 5; ++d)
        for (unsigned k = 0; k <= d; ++k) {
            CHECK(pairing_matrix(Representation::trivial(LieAlgebra::abelian(d), 2), k).gram == oracle_pairing(d, k, 2));
        }
}

TEST_CASE("derived sign tables match exhaustive evaluation")
{
    for (const auto& m : corpus::modules()) {
        INFO(m.name);
        const DualityMode mode = is_unimodular(m.rep.algebra()) ? DualityMode::untwisted : DualityMode::twisted;
        CHECK(derive_sign_table(m.rep, mode).signs == oracle_signs(m.rep, dual_module(m.rep, mode)));
    }
}

TEST_CASE("sign table fixtures")
{
    // Frozen from the exhaustive evaluation above.
    const std::vector<int> d3{1, 1, 1};
    const std::vector<int> d2{1, 1};
    CHECK(derive_sign_table(Representation::trivial(corpus::heisenberg(), 1)).signs == d3);
    CHECK(derive_sign_table(Representation::adjoint(corpus::sl2())).signs == d3);
    CHECK(derive_sign_table(Representation::trivial(corpus::affine(), 1), DualityMode::twisted).signs == d2);
    CHECK(derive_sign_table(Representation::trivial(LieAlgebra::abelian(3), 1)).signs == std::vector<int>{1, 1, 1});
}

TEST_CASE("duality reports")
{
    const DualityReport ab = verify_complex_duality(Representation::trivial(LieAlgebra::abelian(2), 1), false);
    CHECK(ab.ok());
    REQUIRE(ab.degrees.size() == 3);
    CHECK(ab.degrees[1].dim_dual == 2);
    CHECK_FALSE(ab.degrees[2].chain_sign);

    const DualityReport s = verify_complex_duality(Representation::trivial(corpus::sl2(), 1), false);
    CHECK(s.ok());
    CHECK(s.degrees[0].dim_dual == 1);
    CHECK(s.degrees[0].gram_rank == 1);

    CHECK_THROWS_AS(verify_complex_duality(Representation::trivial(corpus::affine(), 1), false), HypothesisError);
    const DualityReport tw = verify_complex_duality(Representation::trivial(corpus::affine(), 1), true);
    CHECK(tw.ok());
    std::vector<std::size_t> dual_dims, primal_dims;
    for (const auto& deg : tw.degrees) {
        dual_dims.push_back(deg.dim_dual);
        primal_dims.push_back(deg.dim_primal);
    }
    CHECK(dual_dims == std::vector<std::size_t>{0, 1, 1});
    CHECK(primal_dims == std::vector<std::size_t>{0, 1, 1});

    for (const auto& m : corpus::modules()) {
        INFO(m.name);
        CHECK(verify_complex_duality(m.rep, true).ok());
        if (is_unimodular(m.rep.algebra())) CHECK(verify_complex_duality(m.rep, false).ok());
    }
}

TEST_CASE("cohomology Gram does not depend on the cocycle representatives")
{
    std::mt19937_64 rng(9);
    for (const auto& m : corpus::modules()) {
        if (!is_unimodular(m.rep.algebra())) continue;
        INFO(m.name);
        const auto d = static_cast<unsigned>(m.rep.algebra().dim());
        const CochainComplex primal = build_ce(m.rep);
        const CochainComplex dual = build_ce(contragredient(m.rep));
        const CohomologyReport hp = cohomology(primal);
        const CohomologyReport hd = cohomology(dual);
        for (unsigned k = 0; k <= d; ++k) {
            const Matrix gram = pairing_matrix(m.rep, k).gram;
            const Matrix a = hd.representatives[k];
            const Matrix b = hp.representatives[d - k];
            const Matrix in_a = dual.incoming(k);
            const Matrix in_b = primal.incoming(d - k);
            const Matrix a2 = a + in_a * corpus::random_matrix(rng, in_a.cols(), a.cols());
            const Matrix b2 = b + in_b * corpus::random_matrix(rng, in_b.cols(), b.cols());
            CHECK(a2.transpose() * gram * b2 == a.transpose() * gram * b);
            CHECK(cohomology_gram(m.rep, DualityMode::untwisted, k) == a.transpose() * gram * b);
        }
    }
}

TEST_CASE("cochain group action")
{
    const Representation r = Representation::trivial(LieAlgebra::abelian(2), 1);
    CHECK(cochain_group_action(r, {Matrix::identity(2), Matrix::identity(1)}, 1) == Matrix::identity(2));
    CHECK(cochain_group_action(r, {Matrix{{2, 0}, {0, Scalar(1, 2)}}, Matrix::identity(1)}, 1) ==
          Matrix{{Scalar(1, 2), 0}, {0, 2}});
    const Representation s = Representation::adjoint(corpus::sl2());
    const Matrix ad_t{{1, 0, 0}, {0, 4, 0}, {0, 0, Scalar(1, 4)}};
    CHECK(cochain_group_action(s, {ad_t, ad_t}, 0) == ad_t);
    CHECK_THROWS_AS(cochain_group_action(Representation::trivial(corpus::affine(), 1),
                                         {Matrix{{0, 1}, {1, 0}}, Matrix::identity(1)}, 1),
                    ValidationError);
}

TEST_CASE("cochain group action commutes with the differential")
{
    for (const auto& p : corpus::automorphism_pairs()) {
        INFO(p.name);
        const CochainComplex c = build_ce(p.rep);
        for (unsigned k = 0; k + 1 < c.length(); ++k) {
            CHECK(c.differential(k) * cochain_group_action(p.rep, p.pair, k) ==
                  cochain_group_action(p.rep, p.pair, k + 1) * c.differential(k));
        }
    }
}

TEST_CASE("equivariance of the pairing")
{
    for (const auto& p : corpus::automorphism_pairs()) {
        INFO(p.name);
        const EquivarianceReport e = verify_equivariance(p.rep, p.pair);
        CHECK(e.det == p.det);
        CHECK(e.holds == (p.det == 1));
        REQUIRE(e.factor);
        CHECK(*e.factor == 1 / p.det);
    }
    const EquivarianceReport id =
        verify_equivariance(Representation::trivial(corpus::heisenberg(), 1), {Matrix::identity(3), Matrix::identity(1)});
    CHECK(id.holds);
}

TEST_CASE("invariants and coinvariants")
{
    const auto groups = corpus::finite_groups();
    auto find = [&](const std::string& name) {
        return std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.name == name; })->group;
    };
    CHECK(invariants(find("trivial")).cols() == 2);
    CHECK(invariants(find("z2-swap")) == Matrix{{1}, {1}});
    CHECK(invariants(find("z2-sign")).cols() == 0);
    CHECK(coinvariants(find("trivial")).dim == 2);
    CHECK(coinvariants(find("z2-swap")).dim == 1);
    CHECK(coinvariants(find("z3-regular")).dim == 1);
    CHECK(coinvariants(find("z2-sign")).dim == 0);
    for (const auto& g : groups) {
        INFO(g.name);
        CHECK(check_invariants_to_coinvariants(g.group));
        const Coinvariants co = coinvariants(g.group);
        // The projection kills every (T - 1)v.
        for (const auto& t : g.group.elements) CHECK((co.projection * (t - Matrix::identity(g.group.dim))).is_zero());
    }
    CHECK_THROWS_AS(check_invariants_to_coinvariants({1, {Matrix{{2}}}}), ValidationError);
}

TEST_CASE("wedge pairing agrees up to (-1)^{k(k+1)/2}")
{
    for (unsigned d = 0; d <= 5; ++d)
        for (unsigned k = 0; k <= d; ++k) {
            const WedgePairingCheck c = wedge_pairing_check(Representation::trivial(LieAlgebra::abelian(d), 1), k);
            CHECK(c.agrees);
            CHECK(c.sign == ((k * (k + 1) / 2) % 2 == 0 ? 1 : -1));
        }
    // Complementary degrees are transposes up to (-1)^{k(d-k)}.
    const Representation r = Representation::trivial(LieAlgebra::abelian(3), 1);
    CHECK(pairing_matrix(r, 1).gram.transpose() == pairing_matrix(r, 2).gram);
    CHECK_THROWS_AS(wedge_pairing_check(Representation::adjoint(corpus::sl2()), 1), std::invalid_argument);
}
