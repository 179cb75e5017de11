#include "cantornet/encoder.hpp"
#include "cantornet/fixtures.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace cantornet;

namespace {

std::vector<Bits> bare(const std::vector<PrefixCode>& codes) {
    std::vector<Bits> out;
    for (const auto& c : codes) out.push_back(c.bits);
    return out;
}

PhaseI single_cluster_single_bond() {
    return PhaseI{{ClusterGraph{"c1", {"a1", "a2"}, {{"a1", "a2"}}}}};
}

}  // namespace

TEST_CASE("assign_codes matches the 1^(i-1)0 / 1^(s-1) pattern") {
    CHECK(bare(assign_codes(3, Family::Lambda)) ==
          std::vector<Bits>{{0}, {1, 0}, {1, 1}});
    CHECK(bare(assign_codes(1, Family::Lambda)) == std::vector<Bits>{{}});
    CHECK(bare(assign_codes(5, Family::Sigma)) ==
          std::vector<Bits>{{0}, {1, 0}, {1, 1, 0}, {1, 1, 1, 0}, {1, 1, 1, 1}});
    for (int s = 1; s <= 16; ++s)
        CHECK(kraft_check(bare(assign_codes(s, Family::Lambda))).complete());
    CHECK_THROWS_AS(assign_codes(0, Family::Lambda), std::invalid_argument);
}

TEST_CASE("phase I encoding of the fixture") {
    const auto enc = Encoding::of(phase_a());
    CHECK(bare(enc.cluster_codes()) == std::vector<Bits>{{0}, {1}});
    CHECK(bare(enc.edge_codes(0)) == std::vector<Bits>{{0}, {1, 0}, {1, 1}});
    CHECK(bare(enc.edge_codes(1)) == std::vector<Bits>{{}});
    CHECK(kraft_check(enc.concatenated_codes()).complete());
}

TEST_CASE("degenerate single-cluster single-bond encoding") {
    const auto enc = Encoding::of(single_cluster_single_bond());
    CHECK(bare(enc.cluster_codes()) == std::vector<Bits>{{}});
    CHECK(bare(enc.edge_codes(0)) == std::vector<Bits>{{}});
    // All constraints live in the nu tail.
    const auto f = fiber(enc, NodePoint{"a1"});
    REQUIRE(f.parts.size() == 1);
    CHECK(f.parts[0].fixed.empty());
    CHECK(f.parts[0].tail->stream == all_zeros_stream());
}

TEST_CASE("phase II encoding of the fixture") {
    const auto enc = Encoding::of(phase_b());
    CHECK(bare(enc.edge_codes()) ==
          std::vector<Bits>{{0}, {1, 0}, {1, 1, 0}, {1, 1, 1, 0}, {1, 1, 1, 1}});
    CHECK(kraft_check(enc.concatenated_codes()).complete());
}

TEST_CASE("node fiber of a2 in the clustered fixture") {
    const auto enc = Encoding::of(phase_a());
    const auto f = fiber(enc, NodePoint{"a2"});
    REQUIRE(f.parts.size() == 2);

    // a2 is the v end of e1=(a1,a2): J1.K1 with an all-ones tail.
    const auto& p0 = f.parts[0];
    CHECK(p0.fixed.at(CoordinateId{Family::Lambda, {}, 1}) == 0);
    CHECK(p0.fixed.at(CoordinateId{Family::Mu, {1}, 1}) == 0);
    CHECK(p0.tail->family == TailFamily{Family::Nu, {1, 1}});
    CHECK(p0.tail->stream == all_ones_stream());

    // a2 is the u end of e2=(a2,a3): J1.K2 with an all-zeros tail.
    const auto& p1 = f.parts[1];
    CHECK(p1.fixed.at(CoordinateId{Family::Lambda, {}, 1}) == 0);
    CHECK(p1.fixed.at(CoordinateId{Family::Mu, {1}, 1}) == 1);
    CHECK(p1.fixed.at(CoordinateId{Family::Mu, {1}, 2}) == 0);
    CHECK(p1.tail->family == TailFamily{Family::Nu, {1, 2}});
    CHECK(p1.tail->stream == all_zeros_stream());

    CHECK(parts_disjoint(p0, p1).disjoint());
}

TEST_CASE("edge point fibers carry the parameter expansion") {
    const auto enc = Encoding::of(phase_a());
    const auto f13 = fiber(enc, EdgePoint{"c1", 1, Rational(1, 3)});
    REQUIRE(f13.parts.size() == 1);
    CHECK(f13.parts[0].tail->stream == BitStream{{}, {0, 1}});

    const auto fhalf = fiber(enc, EdgePoint{"c1", 1, Rational(1, 2)});
    REQUIRE(fhalf.parts.size() == 2);
    CHECK(parts_disjoint(fhalf.parts[0], fhalf.parts[1]).disjoint());
}

TEST_CASE("phase II node fiber has no lambda constraints") {
    const auto enc = Encoding::of(phase_b());
    const auto f = fiber(enc, NodePoint{"a2"});
    REQUIRE(f.parts.size() == 2);
    for (const auto& part : f.parts)
        for (const auto& [coord, bit] : part.fixed) CHECK(coord.family == Family::Sigma);
    // Incident edges of a2 are e1 and e2 with L codes [0] and [1,0].
    CHECK(f.parts[0].fixed.at(CoordinateId{Family::Sigma, {}, 1}) == 0);
    CHECK(f.parts[1].fixed.at(CoordinateId{Family::Sigma, {}, 1}) == 1);
}

TEST_CASE("fiber point errors") {
    const auto enc = Encoding::of(phase_a());
    CHECK_THROWS_AS(fiber(enc, NodePoint{"zz"}), PointError);
    CHECK_THROWS_AS(fiber(enc, EdgePoint{"c9", 1, Rational(1, 3)}), PointError);
    CHECK_THROWS_AS(fiber(enc, EdgePoint{"c1", 7, Rational(1, 3)}), PointError);
    try {
        fiber(enc, EdgePoint{"c1", 1, Rational(1)});
        FAIL("expected EndpointParameter");
    } catch (const PointError& e) {
        CHECK(e.kind() == PointError::Kind::EndpointParameter);
    }
}

TEST_CASE("node fiber part count equals degree on random phases") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        std::uniform_int_distribution<int> n_dist(2, 8);
        const int n = n_dist(rng);
        PhaseII p;
        for (int i = 0; i < n; ++i) p.atoms.push_back("r" + std::to_string(i));
        for (int i = 1; i < n; ++i)
            p.bonds.push_back({p.atoms[static_cast<std::size_t>(i - 1)],
                               p.atoms[static_cast<std::size_t>(i)]});
        std::uniform_int_distribution<int> extra_dist(0, 4);
        std::uniform_int_distribution<int> v_dist(0, n - 1);
        for (int e = extra_dist(rng); e > 0; --e) {
            const int u = v_dist(rng), v = v_dist(rng);
            if (u != v) p.bonds.push_back({p.atoms[u], p.atoms[v]});
        }
        const auto deg = degrees(p.atoms, p.bonds);
        const auto enc = Encoding::of(p);
        for (const auto& a : p.atoms)
            CHECK(fiber(enc, NodePoint{a}).parts.size() ==
                  static_cast<std::size_t>(deg.at(a)));
    }
}

TEST_CASE("every phase I fiber shares one lambda prefix") {
    const auto enc = Encoding::of(phase_a());
    for (const auto& atom : all_atoms(std::get<PhaseI>(enc.phase()))) {
        const auto ff = factor(fiber(enc, NodePoint{atom}), enc);
        REQUIRE(ff.cluster_code.has_value());
    }
}

TEST_CASE("factor extracts J and the per-part edge factors") {
    const auto enc_i = Encoding::of(phase_a());
    const auto ff = factor(fiber(enc_i, NodePoint{"a2"}), enc_i);
    REQUIRE(ff.cluster_code.has_value());
    CHECK(ff.cluster_code->bits == Bits{0});
    REQUIRE(ff.parts.size() == 2);
    CHECK(ff.parts[0].first.bits == Bits{0});
    CHECK(ff.parts[0].second == all_ones_stream());
    CHECK(ff.parts[1].first.bits == Bits{1, 0});
    CHECK(ff.parts[1].second == all_zeros_stream());

    const auto enc_ii = Encoding::of(phase_b());
    const auto ff2 = factor(fiber(enc_ii, NodePoint{"a2"}), enc_ii);
    CHECK_FALSE(ff2.cluster_code.has_value());
    REQUIRE(ff2.parts.size() == 2);
    CHECK(ff2.parts[0].first.bits == Bits{0});
    CHECK(ff2.parts[1].first.bits == Bits{1, 0});

    const auto enc_deg = Encoding::of(single_cluster_single_bond());
    const auto ff3 = factor(fiber(enc_deg, NodePoint{"a2"}), enc_deg);
    REQUIRE(ff3.cluster_code.has_value());
    CHECK(ff3.cluster_code->bits.empty());
}

TEST_CASE("factor then rebuild reproduces the fiber") {
    const auto enc = Encoding::of(phase_a());
    const std::vector<PointRef> points = {
        NodePoint{"a1"}, NodePoint{"a2"}, NodePoint{"a4"},
        EdgePoint{"c1", 2, Rational(1, 3)}, EdgePoint{"c2", 1, Rational(1, 2)}};
    for (const auto& p : points) {
        const auto f = fiber(enc, p);
        CHECK(rebuild(factor(f, enc), enc) == f);
    }
    const auto enc2 = Encoding::of(phase_b());
    const auto f = fiber(enc2, EdgePoint{"", 3, Rational(2, 7)});
    CHECK(rebuild(factor(f, enc2), enc2) == f);
}

TEST_CASE("factor rejects mixed-cluster part sets") {
    const auto enc = Encoding::of(phase_a());
    Fiber mixed;
    mixed.parts.push_back(fiber(enc, NodePoint{"a1"}).parts[0]);
    mixed.parts.push_back(fiber(enc, NodePoint{"a4"}).parts[0]);
    CHECK_THROWS_AS(factor(mixed, enc), FactorError);
}

TEST_CASE("diff isolates the J factor") {
    const auto enc_i = Encoding::of(phase_a());
    const auto enc_ii = Encoding::of(phase_b());

    const auto d2 = diff(enc_i, enc_ii, "a2");
    CHECK(d2.j_code.bits == Bits{0});
    CHECK(d2.degree_i == 2);
    CHECK(d2.degree_ii == 2);

    const auto d4 = diff(enc_i, enc_ii, "a4");
    CHECK(d4.j_code.bits == Bits{1});
    CHECK(d4.degree_i == 1);
    CHECK(d4.degree_ii == 2);

    CHECK_THROWS_AS(diff(enc_i, enc_i, "a2"), std::invalid_argument);
    CHECK_THROWS_AS(diff(enc_ii, enc_i, "a2"), std::invalid_argument);

    // Atom universes must coincide.
    const auto enc_other = Encoding::of(PhaseII{{"z1", "z2"}, {{"z1", "z2"}}});
    CHECK_THROWS_AS(diff(enc_i, enc_other, "a2"), std::invalid_argument);
}

TEST_CASE("decomposition sample on the fixture") {
    const auto enc = Encoding::of(phase_a());
    const std::vector<PointRef> points = {
        NodePoint{"a1"}, NodePoint{"a2"},
        EdgePoint{"c1", 1, Rational(1, 3)}, EdgePoint{"c1", 1, Rational(1, 2)}};
    const auto v = decomposition_sample(enc, points);
    CHECK(v.all_disjoint);
    CHECK(v.witnesses.size() == 6);  // one per pair

    const std::vector<PointRef> same_t = {EdgePoint{"c1", 1, Rational(1, 3)},
                                          EdgePoint{"c1", 2, Rational(1, 3)}};
    CHECK(decomposition_sample(enc, same_t).all_disjoint);

    const std::vector<PointRef> dup = {NodePoint{"a1"}, NodePoint{"a1"}};
    CHECK_THROWS_AS(decomposition_sample(enc, dup), std::invalid_argument);
}

TEST_CASE("cover check") {
    const auto enc = Encoding::of(phase_a());
    CHECK(cover_check(enc, 4).pass);
    CHECK_THROWS_AS(cover_check(enc, 2), std::invalid_argument);  // DepthTooSmall

    // Removing a block code leaves a gap.
    auto codes = enc.concatenated_codes();
    codes.pop_back();
    const auto v = cover_check(codes, 4);
    CHECK_FALSE(v.pass);
    CHECK_FALSE(v.witness.empty());

    const auto single = Encoding::of(PhaseII{{"a", "b"}, {{"a", "b"}}});
    CHECK(cover_check(single, 0).pass);
}

TEST_CASE("cover check passes at max code length + 2 for both fixtures") {
    for (const auto& enc : {Encoding::of(phase_a()), Encoding::of(phase_b())}) {
        std::size_t max_len = 0;
        for (const auto& c : enc.concatenated_codes()) max_len = std::max(max_len, c.size());
        CHECK(cover_check(enc, static_cast<int>(max_len) + 2).pass);
    }
}
