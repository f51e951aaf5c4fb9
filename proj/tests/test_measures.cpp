#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "qcorr/channels.hpp"
#include "qcorr/measures.hpp"

using namespace qcorr;
using qcorr::testing::oracle_concurrence;
using qcorr::testing::oracle_grid_discord;
using qcorr::testing::random_density;
using qcorr::testing::random_pure;
using qcorr::testing::random_unitary;

namespace {

DensityMatrix pair(const ComplexMatrix& m) { return DensityMatrix(2, m); }

DensityMatrix werner(double eta, BellKind kind = BellKind::PsiMinus) {
    return make_werner(eta, bell_state(kind));
}

}  // namespace

TEST_CASE("concurrence and EoF on the pure families") {
    for (double c : {0.1, 0.25, 0.5, 0.75, 0.9, 1.0}) {
        for (auto kind : {FamilyKind::Phi, FamilyKind::Psi}) {
            const auto rho = to_density(make_pure(StateFamily(kind, c)));
            CHECK(concurrence(rho) == doctest::Approx(c).epsilon(1e-10));
        }
    }
    // C = 0.5: h((1 + sqrt(0.75)) / 2)
    CHECK(eof_from_concurrence(0.5) == doctest::Approx(0.35457890266527003).epsilon(1e-12));
    CHECK(eof_from_concurrence(0.0) == 0.0);
    CHECK(eof_from_concurrence(1.0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("concurrence matches the non-Hermitian oracle on random mixed states") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const auto m = random_density(rng, 2, 1 + trial % 4);
        CHECK(concurrence(pair(m)) == doctest::Approx(oracle_concurrence(m)).epsilon(1e-7));
    }
}

TEST_CASE("pure states: EoF equals discord on either side") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const auto rho = to_density(random_pure(rng, 2));
        const double e = eof(rho);
        CHECK(std::abs(discord(rho, Party::A) - e) <= 1e-5);
        CHECK(std::abs(discord(rho, Party::B) - e) <= 1e-5);
        CHECK(negativity(rho) * negativity(rho) ==
              doctest::Approx(geometric_discord(rho, Party::B)).epsilon(1e-9));
    }
}

TEST_CASE("Werner state values") {
    const auto rho = werner(0.5);
    CHECK(concurrence(rho) == doctest::Approx(0.25).epsilon(1e-10));
    CHECK(discord(rho, Party::A) ==
          doctest::Approx(qcorr::testing::oracle_werner_discord(0.5)).epsilon(1e-7));
    CHECK(discord(rho, Party::A) == doctest::Approx(0.26248318376373436).epsilon(1e-7));
    // z-basis conditional entropy is h(1/4)
    CHECK(conditional_entropy(rho, {0.0, 0.0}, Party::A) ==
          doctest::Approx(0.8112781244591328).epsilon(1e-12));
    CHECK(eof(werner(0.33)) <= 1e-12);
    for (double eta : {0.1, 0.5, 0.95}) CHECK(discord(werner(eta), Party::B) > 1e-4);
}

TEST_CASE("Werner values do not depend on which Bell state is used") {
    for (double eta : {0.2, 0.6, 0.9}) {
        const auto reference = correlation_report(werner(eta, BellKind::PsiMinus), "AB");
        for (auto kind : {BellKind::PhiPlus, BellKind::PhiMinus, BellKind::PsiPlus}) {
            const auto r = correlation_report(werner(eta, kind), "AB");
            CHECK(r.concurrence == doctest::Approx(reference.concurrence).epsilon(1e-10));
            CHECK(r.discord_measured_a == doctest::Approx(reference.discord_measured_a).epsilon(1e-7));
            CHECK(r.negativity == doctest::Approx(reference.negativity).epsilon(1e-10));
        }
    }
}

TEST_CASE("singlet Werner state is invariant under U (x) U") {
    std::mt19937_64 rng(21);
    const auto rho = werner(0.7);
    for (int trial = 0; trial < 5; ++trial) {
        const auto u = random_unitary(rng, 2);
        const auto uu = kron(u, u);
        const auto rotated = uu * rho.matrix() * uu.adjoint();
        CHECK(rotated.max_abs_diff(rho.matrix()) <= 1e-12);
    }
}

TEST_CASE("local unitaries leave every measure unchanged") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 8; ++trial) {
        const auto m = random_density(rng, 2, 2);
        const auto u = kron(random_unitary(rng, 2), random_unitary(rng, 2));
        const auto a = correlation_report(pair(m), "AB");
        const auto b = correlation_report(pair(u * m * u.adjoint()), "AB");
        CHECK(b.concurrence == doctest::Approx(a.concurrence).epsilon(1e-7));
        CHECK(b.mutual_information == doctest::Approx(a.mutual_information).epsilon(1e-9));
        CHECK(std::abs(b.discord_measured_a - a.discord_measured_a) <= 1e-7);
        CHECK(std::abs(b.discord_measured_b - a.discord_measured_b) <= 1e-7);
        CHECK(b.negativity == doctest::Approx(a.negativity).epsilon(1e-9));
        CHECK(b.geometric_discord == doctest::Approx(a.geometric_discord).epsilon(1e-9));
    }
}

TEST_CASE("discord agrees with the dense-grid brute force") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 6; ++trial) {
        const auto m = random_density(rng, 2, 1 + trial % 4);
        for (auto side : {Party::A, Party::B}) {
            const double ours = discord_search(pair(m), side).raw;
            const double brute = oracle_grid_discord(m, side);
            // The grid can only overestimate the infimum. Off-axis optima sit
            // between grid points, so the gap here is the oracle's resolution.
            CHECK(ours <= brute + 1e-9);
            CHECK(brute - ours <= 1e-3);
        }
    }
}

TEST_CASE("explicit-projector and kernel conditional entropies agree") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
    for (int trial = 0; trial < 30; ++trial) {
        const auto m = random_density(rng, 2, 3);
        const double theta = angle(rng);
        const double phi = 2 * angle(rng);
        for (auto side : {Party::A, Party::B}) {
            const double kernel = conditional_entropy(pair(m), {theta, phi}, side);
            CHECK(kernel == doctest::Approx(qcorr::testing::oracle_conditional_entropy(
                                                m, theta, phi, side))
                                .epsilon(1e-10));
        }
    }
}

TEST_CASE("product and classical states carry no discord") {
    const auto product = kron(ComplexMatrix{{0.7, 0.0}, {0.0, 0.3}}, ComplexMatrix{{0.5, 0.2}, {0.2, 0.5}});
    CHECK(discord(pair(product), Party::A) <= 1e-9);
    CHECK(mutual_information(pair(product)) == doctest::Approx(0.0).epsilon(1e-12));
    // 0.5 |00><00| + 0.5 |11><11|
    const auto classical = pair(ComplexMatrix::diagonal(std::vector<double>{0.5, 0.0, 0.0, 0.5}));
    CHECK(discord(classical, Party::A) <= 1e-9);
    CHECK(mutual_information(classical) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(geometric_discord(classical, Party::A) <= 1e-12);
}

TEST_CASE("discord stays non-negative and bounded by mutual information") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        const auto rho = pair(random_density(rng, 2, 2 + trial % 3));
        const auto r = discord_search(rho, trial % 2 ? Party::A : Party::B);
        CHECK(r.value >= 0.0);
        CHECK(r.value <= mutual_information(rho) + 1e-9);
        CHECK(r.classical_correlation >= -1e-9);
        CHECK(symmetrized_discord(rho) >= r.value - 1e-12);
    }
}

TEST_CASE("negativity of Bell and separable states") {
    CHECK(negativity(to_density(bell_state(BellKind::PhiPlus))) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(negativity(werner(0.3)) == 0.0);
    CHECK(negativity(werner(0.5)) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("correlation report rejects non-pairs") {
    const auto rho3 = DensityMatrix(3, ComplexMatrix::identity(8) * Complex(0.125));
    CHECK_THROWS_AS(concurrence(rho3), NumericError);
    CHECK_THROWS_AS(discord(rho3, Party::A), NumericError);
}
