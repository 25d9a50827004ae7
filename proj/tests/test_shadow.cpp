#include "doctest.h"
#include "oracle.hpp"
#include "sdcodes/codes.hpp"
#include "sdcodes/enumerators.hpp"
#include "sdcodes/shadow.hpp"

using namespace sdc;

namespace {

Code spec_code(const std::string& a, const std::string& b) {
    return four_circulant({BitWord::from_string(a), BitWord::from_string(b)});
}

Code c112() { return four_circulant(parse_spec_file(oracle::slurp(oracle::data_path("c112.txt"))).at(0)); }

BitWord d112_support() { return parse_support(oracle::slurp(oracle::data_path("d112_support.txt")), 112); }

// The shadow is {u : u.c = wt(c)/2 mod 2 for every c in C}; checking the generator suffices.
bool in_shadow(const Code& c, const BitWord& u) {
    for (const auto& g : c.generator().row_list())
        if (static_cast<std::size_t>(inner_product(u, g)) != (g.weight() / 2) % 2) return false;
    return true;
}

}  // namespace

TEST_CASE("even subcode") {
    const Code rep(BitMatrix::from_strings(std::vector<std::string>{"11"}));
    CHECK(even_subcode(rep).k() == 0);

    const Code ii = spec_code("10", "00");
    const Code c0 = even_subcode(ii);
    CHECK(c0.k() == 3);
    for (auto w : oracle::span(oracle::rows_of(c0.generator()))) CHECK(std::popcount(w) % 4 == 0);

    CHECK(even_subcode(c112()).k() == 55);
    CHECK_THROWS_AS(even_subcode(spec_code("01", "11")), DomainError);
    CHECK_THROWS_AS(even_subcode(Code(BitMatrix::from_strings(std::vector<std::string>{"10"}))), DomainError);
}

TEST_CASE("shadow of the repetition code") {
    const Code rep(BitMatrix::from_strings(std::vector<std::string>{"11"}));
    const auto dec = shadow_decompose(rep);
    CHECK(dec.t1.to_string() == "01");
    CHECK(dec.t3.to_string() == "10");
    const auto s = shadow_distribution_bruteforce(rep);
    CHECK(s.counts == std::vector<Integer>{0, 2, 0});
}

TEST_CASE("decomposition structure on random singly even codes") {
    std::size_t tested = 0;
    for (const auto& [a, b] : oracle::random_self_dual_specs(60, 8, 73)) {
        const Code c = spec_code(a, b);
        if (parity_class(c) != ParityClass::singly_even) continue;
        ++tested;
        const auto dec = shadow_decompose(c);
        CHECK(dec.c0.k() + 1 == c.k());
        CHECK(c.contains(dec.t2));
        CHECK_FALSE(dec.c0.contains(dec.t2));
        CHECK(in_shadow(c, dec.t1));
        CHECK(in_shadow(c, dec.t3));
        CHECK_FALSE(c.contains(dec.t1));
        CHECK(dec.t1 < dec.t3);
        CHECK(dec.c0.contains(dec.t1 ^ dec.t3 ^ dec.t2));

        const auto fit = fit_coefficients(weight_distribution_bruteforce(c), GleasonType::I);
        CHECK(to_distribution(shadow_enumerator(fit), c.n()) == shadow_distribution_bruteforce(c));
    }
    CHECK(tested > 5);
}

TEST_CASE("I4|I4 shadow and neighbors") {
    const Code ii = spec_code("10", "00");
    const auto fit = fit_coefficients(weight_distribution_bruteforce(ii), GleasonType::I);
    CHECK(to_distribution(shadow_enumerator(fit), 8) == shadow_distribution_bruteforce(ii));

    const auto [n1, n2] = doubly_even_neighbors(ii);
    const auto e8 = weight_distribution_bruteforce(spec_code("01", "11"));
    for (const Code* n : {&n1, &n2}) {
        CHECK(parity_class(*n) == ParityClass::doubly_even);
        CHECK(weight_distribution_bruteforce(*n) == e8);
        CHECK(is_neighbor(ii, *n));
    }
    CHECK(is_neighbor(n1, n2));
    CHECK_FALSE(n1.same_code(n2));
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(shadow_decompose(spec_code("01", "11")), DomainError);
    CHECK_THROWS_AS(shadow_decompose(Code(BitMatrix::from_strings(std::vector<std::string>{"10"}))), DomainError);
    CHECK_THROWS_AS(doubly_even_neighbors(spec_code("100", "000")), DomainError);
    const Code c = c112();
    CHECK_THROWS_AS(neighbor_via_vector(c, BitWord::from_string(std::string(111, '0') + "1")), DomainError);
    CHECK_THROWS_AS(neighbor_via_vector(c, BitWord(10)), DomainError);
}

TEST_CASE("neighbor via a vector") {
    const Code c = c112();
    const BitWord x = d112_support();
    CHECK(x.weight() == 20);
    const Code d = neighbor_via_vector(c, x);
    CHECK(parity_class(d) == ParityClass::doubly_even);
    CHECK(intersection_dimension(c, d) == 55);
    CHECK(is_neighbor(c, d));
    CHECK(d.contains(x));
    CHECK(in_shadow(c, x));

    CHECK(neighbor_via_vector(c, c.generator().row(3)).same_code(c));
    CHECK_FALSE(is_neighbor(c, c));
}

TEST_CASE("one doubly even neighbor of C_112 is D_112") {
    const Code c = c112();
    const Code d = neighbor_via_vector(c, d112_support());
    const auto [n1, n2] = doubly_even_neighbors(c);
    CHECK((n1.same_code(d) != n2.same_code(d)));
    for (const Code* n : {&n1, &n2}) {
        CHECK(parity_class(*n) == ParityClass::doubly_even);
        CHECK(intersection_dimension(c, *n) == 55);
    }
    CHECK(n1.standard_form().row_list() < n2.standard_form().row_list());

    // The other neighbor has a weight-16 word.
    const Code& sibling = n1.same_code(d) ? n2 : n1;
    LowWeightOptions o;
    o.iterations = 4000;
    o.seed = 5;
    const auto w = find_low_weight(sibling, 16, o);
    REQUIRE(w);
    CHECK(w->weight() == 16);
    CHECK(sibling.contains(*w));
}
