#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "qcorr/channels.hpp"

using namespace qcorr;
using qcorr::testing::random_density;
using qcorr::testing::random_pure;

namespace {

// rho -> sum_i K_i rho K_i^dagger on one qubit of a register, written out
// with kron so it shares no code with apply_two_qubit.
ComplexMatrix kraus_on(const ComplexMatrix& rho, int n, int qubit, const QubitChannel& ch) {
    ComplexMatrix out(rho.dim());
    for (const auto& k : ch.kraus) {
        ComplexMatrix lifted = ComplexMatrix::identity(1);
        for (int q = 0; q < n; ++q) lifted = kron(lifted, q == qubit ? k : ComplexMatrix::identity(2));
        out += lifted * rho * lifted.adjoint();
    }
    return out;
}

QubitChannel random_channel(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double s = unit(rng);
    return unit(rng) < 0.5 ? phase_damping(s) : amplitude_damping(s);
}

}  // namespace

TEST_CASE("Kraus operators") {
    const auto pd = phase_damping(0.36);
    CHECK(pd.kraus[0](1, 1).real() == doctest::Approx(0.8));
    CHECK(pd.kraus[1](1, 1).real() == doctest::Approx(0.6));
    CHECK(pd.kraus[1](0, 0) == Complex(0.0));
    const auto ad = amplitude_damping(0.36);
    CHECK(ad.kraus[0](1, 1).real() == doctest::Approx(0.8));
    CHECK(ad.kraus[1](0, 1).real() == doctest::Approx(0.6));
    CHECK(ad.kraus[1](1, 0) == Complex(0.0));
    CHECK_THROWS_AS(phase_damping(-0.1), NumericError);
    CHECK_THROWS_AS(amplitude_damping(1.01), NumericError);
}

TEST_CASE("channels are trace preserving") {
    for (double s : {0.0, 0.13, 0.5, 0.77, 1.0}) {
        CHECK(phase_damping(s).completeness_defect() <= 1e-14);
        CHECK(amplitude_damping(s).completeness_defect() <= 1e-14);
        CHECK(dilate(phase_damping(s)).isometry_defect() <= 1e-14);
        CHECK(dilate(amplitude_damping(s)).isometry_defect() <= 1e-14);
    }
    CHECK(QubitChannel::identity().completeness_defect() == 0.0);
}

TEST_CASE("two-qubit application matches the lifted Kraus sum") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        const auto m = random_density(rng, 2, 1 + trial % 4);
        const auto ca = random_channel(rng);
        const auto cb = random_channel(rng);
        const auto out = apply_two_qubit(DensityMatrix(2, m), ca, cb);
        const auto expected = kraus_on(kraus_on(m, 2, 0, ca), 2, 1, cb);
        CHECK(out.matrix().max_abs_diff(expected) <= 1e-14);
    }
}

TEST_CASE("full dephasing kills coherences, full damping empties |1>") {
    const auto bell = to_density(bell_state(BellKind::PhiPlus));
    const auto dephased = apply_two_qubit(bell, phase_damping(1.0), QubitChannel::identity());
    CHECK(std::abs(dephased.matrix()(0, 3)) == 0.0);
    CHECK(dephased.matrix()(0, 0).real() == doctest::Approx(0.5));
    const auto decayed = apply_two_qubit(bell, amplitude_damping(1.0), amplitude_damping(1.0));
    CHECK(decayed.matrix()(0, 0).real() == doctest::Approx(1.0));
}

TEST_CASE("purifications reproduce the channel") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        const auto psi = random_pure(rng, 2);
        const auto ca = random_channel(rng);
        const auto cb = random_channel(rng);
        const auto rho = to_density(psi).matrix();

        const auto single_a = to_density(purify_single(psi, ca, Party::A));
        CHECK(single_a.reduce({0, 1}).matrix().max_abs_diff(kraus_on(rho, 2, 0, ca)) <= 1e-11);
        const auto single_b = to_density(purify_single(psi, cb, Party::B));
        CHECK(single_b.reduce({0, 1}).matrix().max_abs_diff(kraus_on(rho, 2, 1, cb)) <= 1e-11);

        const auto twice = to_density(purify_double(psi, ca, cb));
        CHECK(twice.n_qubits() == 4);
        CHECK(twice.reduce({0, 1}).matrix().max_abs_diff(kraus_on(kraus_on(rho, 2, 0, ca), 2, 1, cb)) <=
              1e-11);
    }
}

TEST_CASE("purification labels") {
    const auto psi = make_pure(StateFamily(FamilyKind::Phi, 0.5));
    CHECK(to_density(purify_single(psi, phase_damping(0.3), Party::A), {"A", "B", "E"}).index_of("E") == 2);
    CHECK(purify_double(psi, phase_damping(0.3), phase_damping(0.2)).n_qubits() == 4);
}

TEST_CASE("phase-damped Phi state in (A, B, E) order") {
    const double c = 0.5;
    const double lambda = 0.3;
    const double a = alpha_from_concurrence(c);
    const double b = std::sqrt(1 - a * a);
    const auto psi = purify_single(make_pure(StateFamily(FamilyKind::Phi, c)), phase_damping(lambda), Party::A);
    // index = 4a + 2b + e
    CHECK(psi[0].real() == doctest::Approx(a));
    CHECK(psi[6].real() == doctest::Approx(b * std::sqrt(1 - lambda)));
    CHECK(psi[7].real() == doctest::Approx(b * std::sqrt(lambda)));
    for (int i : {1, 2, 3, 4, 5}) CHECK(std::abs(psi[i]) == 0.0);

    // Reordered as (A, E, B) the same amplitudes sit on |101> and |111>.
    auto aeb = [&](int ia, int ie, int ib) { return psi[4 * ia + 2 * ib + ie]; };
    CHECK(aeb(1, 0, 1).real() == doctest::Approx(b * std::sqrt(1 - lambda)));
    CHECK(aeb(1, 1, 1).real() == doctest::Approx(b * std::sqrt(lambda)));
}

TEST_CASE("amplitude-damped Phi and Psi states in (A, B, E) order") {
    const double c = 0.75;
    const double gamma = 0.4;
    const double a = alpha_from_concurrence(c);
    const double b = std::sqrt(1 - a * a);
    const auto phi = purify_single(make_pure(StateFamily(FamilyKind::Phi, c)), amplitude_damping(gamma), Party::A);
    CHECK(phi[0].real() == doctest::Approx(a));
    CHECK(phi[3].real() == doctest::Approx(b * std::sqrt(gamma)));      // |011>
    CHECK(phi[6].real() == doctest::Approx(b * std::sqrt(1 - gamma)));  // |110>
    const auto psi = purify_single(make_pure(StateFamily(FamilyKind::Psi, c)), amplitude_damping(gamma), Party::A);
    CHECK(psi[2].real() == doctest::Approx(a));                         // |010>
    CHECK(psi[1].real() == doctest::Approx(b * std::sqrt(gamma)));      // |001>
    CHECK(psi[4].real() == doctest::Approx(b * std::sqrt(1 - gamma)));  // |100>
}

TEST_CASE("dilation input checks") {
    const auto psi3 = PureState(3, std::vector<Complex>(8, Complex(1.0 / std::sqrt(8.0))));
    CHECK_THROWS_AS(apply_dilation(psi3, 3, dilate(phase_damping(0.5))), NumericError);
    CHECK_NOTHROW(apply_dilation(psi3, 2, dilate(phase_damping(0.5))));
    CHECK_THROWS_AS(purify_single(psi3, phase_damping(0.5), Party::A), NumericError);
}
