#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>

#include "gft/audit.hpp"
#include "gft/functions.hpp"

using namespace gft;
using transform::Profile;

namespace {

quad::QuadSpec spec() { return {}; }

quad::GridFunction sample_gaussian(int n, double rate, double scale,
                                   double jitter_frac = 0.0) {
    std::vector<double> xs;
    std::vector<std::complex<double>> vals;
    std::uint64_t state = 0x9e3779b97f4a7c15ull; // fixed seed: deterministic
    for (int i = 0; i < 48; ++i) {
        const double x = 0.25 * std::pow(100.0, i / 47.0);
        double jitter = 1.0;
        if (jitter_frac > 0.0) {
            state = state * 6364136223846793005ull + 1442695040888963407ull;
            const double u = double(state >> 11) / 9007199254740992.0; // [0,1)
            jitter = 1.0 + jitter_frac * (2.0 * u - 1.0);
        }
        xs.push_back(x);
        vals.push_back(scale * jitter *
                       std::exp(-n * rate * std::pow(x, 2.0 / n)));
    }
    return {std::move(xs), std::move(vals), quad::Provenance::Sampled};
}

} // namespace

TEST_CASE("envelope fit recovers exact Gaussian samples") {
    for (int n : {1, 2, 3}) {
        auto env = audit::fit_envelope(sample_gaussian(n, 0.5, 1.0), n, 1e-250);
        CHECK(env.rate == doctest::Approx(0.5).epsilon(1e-10));
        CHECK(env.constant == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(env.residual <= 1e-9);
    }
    auto env2 = audit::fit_envelope(sample_gaussian(2, 1.0, 2.0), 2, 1e-250);
    CHECK(env2.rate == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(env2.constant == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("envelope fit is covariant under scaling") {
    auto base = sample_gaussian(2, 0.7, 1.0);
    auto scaled = base;
    for (auto& v : scaled.values) v *= 37.5;
    auto e1 = audit::fit_envelope(base, 2, 1e-250);
    auto e2 = audit::fit_envelope(scaled, 2, 1e-250);
    CHECK(std::abs(e1.rate - e2.rate) <= 1e-13 * e1.rate);
    CHECK(e2.constant / e1.constant == doctest::Approx(37.5).epsilon(1e-12));
}

TEST_CASE("envelope fit tolerates bounded multiplicative jitter") {
    auto env = audit::fit_envelope(sample_gaussian(2, 0.5, 1.0, 0.05), 2, 1e-250);
    CHECK(std::abs(env.rate - 0.5) <= 0.02 * 0.5);
    CHECK(env.residual <= std::log(1.06));
}

TEST_CASE("envelope fit failure modes") {
    // all mass below the floor
    auto g = sample_gaussian(2, 0.5, 1e-20);
    CHECK_THROWS_AS(audit::fit_envelope(g, 2, 1.0), FitError);
    // too few usable samples
    quad::GridFunction small({1.0, 2.0, 3.0},
                             {{1.0, 0.0}, {0.5, 0.0}, {0.2, 0.0}},
                             quad::Provenance::Sampled);
    CHECK_THROWS_AS(audit::fit_envelope(small, 2, 1e-250), DegenerateInput);
    // no sample with |x| >= 1
    std::vector<double> xs;
    std::vector<std::complex<double>> vals;
    for (int i = 0; i < 12; ++i) {
        xs.push_back(0.05 + 0.05 * i);
        vals.push_back(std::exp(-xs.back()));
    }
    quad::GridFunction near0(std::move(xs), std::move(vals),
                             quad::Provenance::Sampled);
    CHECK_THROWS_AS(audit::fit_envelope(near0, 2, 1e-250), DegenerateInput);
}

TEST_CASE("Hardy classification thresholds") {
    audit::DecayEnvelope a{1.0, 1.0, 0.0, 2}, b{1.0, 1.0, 0.0, 2};
    CHECK(audit::hardy_classify(a, b, 0.02) == audit::Verdict::Zero);
    a.rate = b.rate = 0.5;
    CHECK(audit::hardy_classify(a, b, 0.02) == audit::Verdict::GaussianOnly);
    a.rate = b.rate = 0.1;
    CHECK(audit::hardy_classify(a, b, 0.02) == audit::Verdict::Underdetermined);
    b.n = 3;
    CHECK_THROWS_AS(audit::hardy_classify(a, b, 0.02), ParamError);
}

TEST_CASE("Miyachi functional: the three calibration cases") {
    auto p = make_params(0.6, 2);
    const double b = 0.4, C = 1.3;
    auto model = [&](double scale, double rate) {
        return Profile(
            [=, n = p.n](double x) -> std::complex<double> {
                return scale * std::exp(-n * rate *
                                        std::pow(std::abs(x), 2.0 / n));
            },
            rate);
    };
    auto exact = audit::miyachi_functional(p, model(C, b), b, C, spec());
    CHECK_FALSE(exact.infinite);
    CHECK(std::abs(exact.value) <= 1e-9);

    auto faster = audit::miyachi_functional(p, model(C, 2.0 * b), b, C, spec());
    CHECK_FALSE(faster.infinite);
    CHECK(std::abs(faster.value) <= 1e-9);

    auto fat = audit::miyachi_functional(p, model(2.0 * C, b), b, C, spec());
    CHECK(fat.infinite);

    CHECK_THROWS_AS(audit::miyachi_functional(p, model(C, b), -0.1, C, spec()),
                    DomainError);
}

TEST_CASE("Cowling-Price norms: closed form, divergence, and gates") {
    auto gaussian_profile = [](const DeformParams& p, double rate) {
        return Profile(
            [=, n = p.n](double x) -> std::complex<double> {
                return std::exp(-n * rate * std::pow(std::abs(x), 2.0 / n));
            },
            rate);
    };
    struct Case {
        double k;
        int n;
        double a;
        double want; // (2pa)^{-(alpha+1)/p} at p = 2
    };
    for (const auto& c : {Case{0.5, 2, 0.4, 0.790569415042094811057},
                          Case{0.3, 1, 0.6, 0.7045559766521665030208}}) {
        auto p = make_params(c.k, c.n);
        auto f = gaussian_profile(p, 2.0 * c.a); // e^{-2na|x|^{2/n}}
        auto [np, nq] = audit::cowling_price_norms(
            p, f, f, c.a, c.a, 2.0, 2.0, spec());
        CHECK_FALSE(np.infinite);
        CHECK(np.value == doctest::Approx(c.want).epsilon(1e-6));
        (void)nq;
    }

    auto p = make_params(0.5, 2);
    auto f_exact = gaussian_profile(p, 0.4);
    auto [np, nq] =
        audit::cowling_price_norms(p, f_exact, f_exact, 0.4, 0.4, 2.0,
                                   std::numeric_limits<double>::infinity(),
                                   spec());
    CHECK(np.infinite); // integrand is identically 1 against infinite mass
    CHECK_FALSE(nq.infinite);

    CHECK_THROWS_AS(audit::cowling_price_norms(
                        p, f_exact, f_exact, 0.4, 0.4,
                        std::numeric_limits<double>::infinity(),
                        std::numeric_limits<double>::infinity(), spec()),
                    ParamError);
}

TEST_CASE("counterexample family validation") {
    auto p = make_params(0.75, 2);
    auto f = audit::counterexample_family(p, 0.1, 0.1, 0.5);
    for (double x : {0.3, 1.7})
        CHECK(std::abs(f.fn(x) -
                       std::exp(-0.5 * p.n * std::pow(std::abs(x), 2.0 / p.n))) <=
              1e-15);
    CHECK_THROWS_AS(audit::counterexample_family(p, 0.1, 0.1, 0.1), ParamError);
    CHECK_THROWS_AS(audit::counterexample_family(p, 0.2, 1.0, 0.3), ParamError);
    CHECK_THROWS_AS(audit::counterexample_family(p, 0.5, 0.6, 0.55), ParamError);
}

TEST_CASE("audit of the deformed Gaussian is sharp") {
    for (const auto& [k, n] : {std::pair{0.3, 1}, std::pair{0.75, 2}}) {
        auto p = make_params(k, n);
        auto f = functions::deformed_gaussian(p, 0.5);
        audit::AuditOptions opts;
        opts.with_functionals = true;
        auto rep = audit::audit(p, f.profile, spec(), opts);
        CHECK(rep.verdict == audit::Verdict::GaussianOnly);
        CHECK_MESSAGE(rep.margin <= 0.02 * 0.25, "k=", k, " n=", n,
                      " product=", rep.product);
        REQUIRE(rep.miyachi.has_value());
        CHECK_FALSE(rep.miyachi->infinite);
        REQUIRE(rep.cowling_price.has_value());
        CHECK_FALSE(rep.cowling_price->first.infinite);
        CHECK_FALSE(rep.cowling_price->second.infinite);
    }
}

TEST_CASE("counterexample members classify Underdetermined vs their (a, b)") {
    auto p = make_params(0.6, 2);
    const double a = 0.1, b = 0.1, delta = 0.5;
    auto f = audit::counterexample_family(p, a, b, delta);
    auto rep = audit::audit(p, f, spec());
    // the generating pair has product 0.01 << 1/4
    audit::DecayEnvelope gen_a{a, 1.0, 0.0, p.n}, gen_b{b, 1.0, 0.0, p.n};
    CHECK(audit::hardy_classify(gen_a, gen_b, 0.02) ==
          audit::Verdict::Underdetermined);
    // while the member itself audits sharp, never beyond the threshold
    CHECK(rep.envelope_f.rate == doctest::Approx(delta).epsilon(0.01));
    CHECK(rep.product <= 0.25 + 0.02);
}

TEST_CASE("no basket member audits past the Hardy threshold") {
    auto p = make_params(0.75, 2);
    for (const auto& f : functions::test_basket(p)) {
        audit::AuditOptions opts;
        opts.with_functionals = true;
        auto rep = audit::audit(p, f.profile, spec(), opts);
        CHECK_MESSAGE(rep.product <= 0.25 + 0.02, f.name,
                      " product=", rep.product);
        // contrapositive of the Miyachi statement: finite functional forces
        // the product under the threshold
        if (rep.miyachi && !rep.miyachi->infinite)
            CHECK(rep.product <= 0.25 + 0.02);
    }
}
