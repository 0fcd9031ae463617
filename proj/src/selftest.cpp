#include <algorithm>
#include <functional>
#include <random>

#include "canform/affine.hpp"
#include "canform/cli.hpp"
#include "canform/pairs.hpp"

namespace canform::cli {

namespace {

const Field Q = Field::rationals();

std::vector<Polynomial> display_qs() {
    return {Polynomial::from_ints(Q, {-5, -4, 1}), Polynomial::from_ints(Q, {-3, 1}),
            Polynomial::from_ints(Q, {-2, -1, 1})};
}

bool companion_display() {
    auto qs = display_qs();
    return generalized_companion(qs) == Matrix::from_ints(Q, {
                                            {0, 5, 0, 0, 0},
                                            {1, 4, 0, 0, 0},
                                            {0, 1, 3, 0, 0},
                                            {0, 0, 1, 0, 2},
                                            {0, 0, 0, 1, 1},
                                        });
}

bool affine_display() {
    // clang-format off
    Matrix expected = Matrix::from_ints(Q, {
        {0,5,0,0,0, 0,0,0, 0,0, 0,0},
        {1,4,0,0,0, 0,0,0, 0,0, 0,0},
        {0,1,3,0,0, 0,0,0, 0,0, 0,0},
        {0,0,1,0,2, 0,0,0, 0,0, 0,0},
        {0,0,0,1,1, 0,0,0, 0,0, 0,0},
        {0,0,0,0,0, 3,0,0, 0,0, 0,0},
        {0,0,0,0,0, 1,0,2, 0,0, 0,0},
        {0,0,0,0,0, 0,1,1, 0,0, 0,0},
        {0,0,0,0,0, 0,0,0, 0,2, 0,0},
        {0,0,0,0,0, 0,0,0, 1,1, 0,0},
        {0,0,0,0,0, 0,0,0, 0,0, 0,2},
        {0,0,0,0,0, 0,0,0, 0,0, 1,1},
    });
    // clang-format on
    return affine_point(Partition({5, 3, 2, 2}), display_qs()) == expected;
}

bool bijection_round_trip() {
    const Field f = Field::prime(5);
    std::mt19937_64 rng(2024);
    for (std::size_t n = 1; n <= 6; ++n)
        for (const Partition& p : partitions_of(n)) {
            std::vector<Polynomial> qs;
            for (std::size_t d : jump_data(p).qs) {
                std::vector<Scalar> c;
                for (std::size_t i = 0; i < d; ++i) c.emplace_back(f, static_cast<long long>(rng() % 5));
                c.push_back(Scalar::one(f));
                qs.emplace_back(f, std::move(c));
            }
            AffineRepresentative rep(p, qs);
            RationalNormalForm form = to_rnf(rep);
            if (!(to_affine(form) == rep) || !(invariant_factors(affine_point(rep)) == form)) return false;
        }
    return true;
}

bool fiber_at_613() {
    const Field f = Field::prime(7);
    InvariantTriple y{Scalar(f, 6), Scalar(f, 1), Scalar(f, 3)};
    auto fiber = q_points(y);
    if (fiber.size() != 4) return false;
    for (const QForm& q : fiber)
        if (!(invariants(q.realize()) == y)) return false;
    return true;
}

bool fiber_census_gf7() {
    const Field f = Field::prime(7);
    for (long long x1 = 0; x1 < 7; ++x1)
        for (long long x2 = 0; x2 < 7; ++x2)
            for (long long x3 = 0; x3 < 7; ++x3) {
                InvariantTriple y{Scalar(f, x1), Scalar(f, x2), Scalar(f, x3)};
                if (g_value(y).is_zero() || !sqrt_if_exists(-y.x1) || !sqrt_if_exists(-y.x3)) continue;
                auto fiber = q_points(y);
                if (fiber.size() != 4) return false;
                for (std::size_t i = 0; i < 4; ++i) {
                    if (!(invariants(fiber[i].realize()) == y)) return false;
                    for (std::size_t j = i + 1; j < 4; ++j)
                        if (fiber[i] == fiber[j]) return false;
                    // Each point reduces back into the same fiber.
                    QForm back = reduce_to_q(fiber[i].realize()).q;
                    if (std::find(fiber.begin(), fiber.end(), back) == fiber.end()) return false;
                }
            }
    return true;
}

bool identity_rnf() {
    Polynomial xm1 = Polynomial::from_ints(Q, {-1, 1});
    RnfTransform rt = rnf_transform(Matrix::identity(Q, 2));
    return rt.form == RationalNormalForm({xm1, xm1}) && partition_of(rt.form) == Partition({1, 1}) &&
           inverse(rt.transform) * Matrix::identity(Q, 2) * rt.transform == rt.normal;
}

} // namespace

Report selftest() {
    const std::vector<std::pair<std::string, std::function<bool()>>> checks = {
        {"companion_display_q212", companion_display},
        {"affine_display_5322", affine_display},
        {"bijection_round_trip", bijection_round_trip},
        {"fiber_gf7_613", fiber_at_613},
        {"fiber_census_gf7", fiber_census_gf7},
        {"rnf_identity", identity_rnf},
    };
    Report report;
    nlohmann::json results = nlohmann::json::array();
    for (const auto& [name, check] : checks) {
        std::string status = "ok";
        try {
            if (!check()) status = "mismatch";
        } catch (const Error& e) {
            status = std::string("error: ") + e.what();
        }
        if (status != "ok") report.status = Status::mismatch;
        results.push_back({{"name", name}, {"status", status}});
    }
    report.payload["checks"] = results;
    return report;
}

} // namespace canform::cli
