#include <doctest.h>

#include "packets/arch_packet.hpp"
#include "packets/errors.hpp"

using namespace packets;
using namespace packets::archpkt;

namespace {

SignChar sc(std::initializer_list<int> vals) {
    std::vector<Sign> signs;
    for (int v : vals) signs.push_back(Sign::from_int(v));
    return SignChar(std::move(signs), 'e');
}

} // namespace

TEST_CASE("compact simple root walls") {
    CHECK(compact_simple_roots(sc({+1, -1, +1})) == std::vector<bool>{true, true});
    CHECK(compact_simple_roots(sc({+1, +1})) == std::vector<bool>{false});
    // the tame p=2, n=3 pattern (-1,-1,+1)
    CHECK(compact_simple_roots(sc({-1, -1, +1})) == std::vector<bool>{false, true});
    CHECK(compact_simple_roots(sc({+1})).empty());
    CHECK(compact_simple_roots(sc({})).empty());
}

TEST_CASE("general compact roots") {
    CHECK(compact_general_root(sc({+1, -1}), 0, 1));
    CHECK(!compact_general_root(sc({+1, +1}), 0, 1));
    CHECK_THROWS_AS(compact_general_root(sc({+1, -1}), 1, 1), ParameterError);
    CHECK_THROWS_AS(compact_general_root(sc({+1, -1}), 1, 0), ParameterError);
    CHECK_THROWS_AS(compact_general_root(sc({+1, -1}), 0, 2), ParameterError);

    // consistency with the simple-wall rule at j = i+1, over all sign
    // vectors of length up to 8
    for (int n = 2; n <= 8; ++n) {
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            std::vector<Sign> signs;
            for (int i = 0; i < n; ++i)
                signs.push_back((mask >> i) & 1 ? Sign::minus() : Sign::plus());
            SignChar chi(signs, 'e');
            std::vector<bool> walls = compact_simple_roots(chi);
            for (int i = 0; i + 1 < n; ++i)
                CHECK(compact_general_root(chi, i, i + 1) == walls[i]);
        }
    }
}

TEST_CASE("signature inference") {
    // chi(e_i) = (-1)^i gives the compact form
    for (int n = 1; n <= 6; ++n) {
        std::vector<Sign> signs;
        for (int i = 1; i <= n; ++i) signs.push_back(Sign::of_parity(i));
        UnorderedSignature sig = infer_signature(SignChar(signs, 'e'));
        CHECK(sig.a == n);
        CHECK(sig.b == 0);
    }
    UnorderedSignature split = infer_signature(sc({+1, +1}));
    CHECK(split.a == 1);
    CHECK(split.b == 1);
    UnorderedSignature rank1 = infer_signature(sc({+1}));
    CHECK(rank1.a == 1);
    CHECK(rank1.b == 0);
    CHECK(infer_signature(sc({-1})) == rank1);
}

TEST_CASE("same block exactly when the root is compact") {
    for (int n = 2; n <= 8; ++n) {
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            std::vector<Sign> signs, t;
            for (int i = 0; i < n; ++i)
                signs.push_back((mask >> i) & 1 ? Sign::minus() : Sign::plus());
            SignChar chi(signs, 'e');
            for (int i = 0; i < n; ++i) t.push_back(chi.at(i) * Sign::of_parity(i + 1));
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    CHECK(compact_general_root(chi, i, j) == (t[i] == t[j]));

            // global flip leaves the unordered signature alone
            std::vector<Sign> flipped;
            for (Sign s : signs) flipped.push_back(s * Sign::minus());
            CHECK(infer_signature(chi) == infer_signature(SignChar(flipped, 'e')));
        }
    }
}

TEST_CASE("packet datum assembly") {
    ParamPair p = ParamPair::archimedean(
        {HalfInt::from_twice(-3), HalfInt::from_twice(1)},
        {HalfInt::whole(-1), HalfInt::whole(1)});
    ArchPacketDatum d = make_arch_packet(p);
    REQUIRE(d.sorted_a.size() == 2);
    CHECK(d.sorted_a[0] == HalfInt::from_twice(1)); // descending
    CHECK(d.sorted_b[0] == HalfInt::whole(1));
    CHECK(d.chi_e.signs == std::vector<Sign>{Sign::minus(), Sign::plus()});
    CHECK(d.compact_simple_e == std::vector<bool>{true});
    CHECK(d.signature_e.a + d.signature_e.b == 2);
    CHECK(d.signature_f.a + d.signature_f.b == 2);
}
