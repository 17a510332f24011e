#include <doctest.h>

#include <cmath>

#include <Eigen/Eigenvalues>

#include "symplecta/error.hpp"
#include "symplecta/oracle.hpp"
#include "symplecta/random.hpp"

using namespace symplecta;

namespace {

OscillatorNetwork pair_net(double w1, double w2, double g) {
    Vector w(2);
    w << w1, w2;
    Vector c(1);
    c << g;
    return OscillatorNetwork(w, c);
}

}  // namespace

TEST_CASE("OracleReport formatting") {
    const auto ok = oracle::OracleReport::make("check", 1e-12, 1e-10, "n=2");
    CHECK(ok.passed);
    CHECK(ok.line().rfind("PASS check", 0) == 0);
    CHECK(ok.line().find("(n=2)") != std::string::npos);
    const auto bad = oracle::OracleReport::make("check", 1e-3, 1e-10);
    CHECK_FALSE(bad.passed);
    CHECK(bad.line().rfind("FAIL check", 0) == 0);
    CHECK_FALSE(oracle::OracleReport::make("nan", NAN, 1.0).passed);
}

TEST_CASE("dynamics matrix layout") {
    const Matrix a = oracle::dynamics_matrix(pair_net(1.0, 2.0, 0.3));
    CHECK(a(0, 2) == 1.0);
    CHECK(a(1, 3) == 2.0);
    CHECK(a(2, 0) == -1.0);
    CHECK(a(2, 1) == -0.3);
    CHECK(a(3, 0) == -0.3);
    CHECK(a(0, 1) == 0.0);
}

TEST_CASE("expm_taylor of a rotation generator") {
    Matrix a(2, 2);
    a << 0.0, 3.0, -3.0, 0.0;
    const Matrix e = oracle::expm_taylor(a);
    CHECK(e(0, 0) == doctest::Approx(std::cos(3.0)).epsilon(1e-14));
    CHECK(e(0, 1) == doctest::Approx(std::sin(3.0)).epsilon(1e-14));
    CHECK(inf_norm(oracle::expm_taylor(Matrix::Zero(3, 3)) - Matrix::Identity(3, 3)) == 0.0);
}

TEST_CASE("rk4 converges at fourth order") {
    const auto net = pair_net(1.2, 0.8, -0.3);
    Vector q(2);
    q << 1.0, 0.0;
    const PhaseState x0(q, Vector::Zero(2));
    const auto exact = oracle::expm_evolve(net, x0, 5.0);
    const double e1 = (oracle::rk4_hamilton(net, x0, 5.0, 1e-2).stacked() - exact.stacked()).norm();
    const double e2 = (oracle::rk4_hamilton(net, x0, 5.0, 5e-3).stacked() - exact.stacked()).norm();
    const double ratio = e1 / e2;
    CHECK(ratio > 12.0);
    CHECK(ratio < 20.0);
}

TEST_CASE("rk4 argument checks") {
    const auto net = pair_net(1.0, 1.0, 0.0);
    const PhaseState x0(Vector::Ones(2), Vector::Zero(2));
    CHECK_THROWS_AS(oracle::rk4_hamilton(net, x0, 1.0, 0.1), Error);
    CHECK_THROWS_AS(oracle::rk4_hamilton(net, x0, 1.0, 0.0), Error);
    CHECK_THROWS_AS(oracle::rk4_hamilton(net, x0, -1.0, 1e-3), Error);
    try {
        oracle::rk4_hamilton(net, x0, 1e7, 1e-2);
        FAIL("expected StepBudget");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::StepBudget);
    }
    const auto same = oracle::rk4_hamilton(net, x0, 0.0, 1e-3);
    CHECK(same.q == x0.q);
}

TEST_CASE("charpoly_eigs matches a 2x2 example and rejects n > 4") {
    Matrix a(2, 2);
    a << 2.0, 1.0, 1.0, 2.0;
    const auto e = oracle::charpoly_eigs(SymMatrix(a));
    CHECK(e[0] == doctest::Approx(3.0).epsilon(1e-13));
    CHECK(e[1] == doctest::Approx(1.0).epsilon(1e-13));
    try {
        oracle::charpoly_eigs(SymMatrix(Matrix::Identity(5, 5)));
        FAIL("expected DimensionTooLarge");
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::DimensionTooLarge);
    }
}

TEST_CASE("property: charpoly_eigs agrees with a library eigensolver") {
    sampling::Rng rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 4);
        const Matrix a = sampling::random_symmetric(rng, n, 3.0);
        const auto mine = oracle::charpoly_eigs(SymMatrix(a));
        Eigen::SelfAdjointEigenSolver<Matrix> ref(a);
        for (std::size_t k = 0; k < n; ++k) {
            const double r = ref.eigenvalues()(static_cast<Eigen::Index>(n - 1 - k));
            REQUIRE(std::abs(mine[k] - r) < 1e-12 * std::max(1.0, inf_norm(a)));
        }
    }
}

TEST_CASE("charpoly_eigs handles repeated eigenvalues") {
    const auto e = oracle::charpoly_eigs(SymMatrix(2.0 * Matrix::Identity(3, 3)));
    for (double v : e) CHECK(v == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("dynamics_spectrum of a decoupled pair") {
    const auto s = oracle::dynamics_spectrum(pair_net(1.0, 3.0, 0.0));
    REQUIRE(s.size() == 2);
    CHECK(s[0] == doctest::Approx(3.0));
    CHECK(s[1] == doctest::Approx(1.0));
}

TEST_CASE("dynamics_spectrum flags an unstable network") {
    try {
        oracle::dynamics_spectrum(pair_net(1.0, 1.0, 2.0));
        FAIL("expected ComplexLeakage");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ComplexLeakage);
    }
}

TEST_CASE("matexp_series rejects a dimension mismatch") {
    CHECK_THROWS_AS(oracle::matexp_series(SymMatrix(Matrix::Identity(2, 2)), 1.0, ComplexVector::Zero(3)),
                    Error);
}
