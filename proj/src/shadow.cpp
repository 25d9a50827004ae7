#include "sdcodes/shadow.hpp"

#include <optional>

namespace sdc {

namespace {

// Index of the first generator row of weight 2 mod 4, if any.
std::optional<std::size_t> first_singly_even_row(const Code& c) {
    const auto& g = c.generator();
    for (std::size_t i = 0; i < g.rows(); ++i)
        if (g.row(i).weight() % 4 == 2) return i;
    return std::nullopt;
}

void require_singly_even_self_dual(const Code& c) {
    switch (parity_class(c)) {
        case ParityClass::not_self_dual: throw DomainError("input code is not self-dual");
        case ParityClass::doubly_even: throw DomainError("input code is doubly even: no shadow split (C0 = C)");
        case ParityClass::singly_even: break;
    }
}

}  // namespace

Code even_subcode(const Code& c) {
    if (!is_self_orthogonal(c)) throw DomainError("even subcode needs a self-orthogonal code");
    const auto& g = c.generator();
    for (const auto& r : g.row_list())
        if (r.weight() % 2) throw DomainError("even subcode needs an even code");
    const auto pick = first_singly_even_row(c);
    if (!pick) throw DomainError("input code is doubly even: no shadow split (C0 = C)");

    // Weight mod 4 is additive on a self-orthogonal even code, so pairing every
    // weight-2-mod-4 row with the first one lands in the kernel.
    BitMatrix out(0, c.n());
    for (std::size_t i = 0; i < g.rows(); ++i) {
        if (i == *pick) continue;
        if (g.row(i).weight() % 4 == 2)
            out.append_row(g.row(i) ^ g.row(*pick));
        else
            out.append_row(g.row(i));
    }
    return Code(std::move(out));
}

ShadowDecomposition shadow_decompose(const Code& c) {
    require_singly_even_self_dual(c);
    Code c0 = even_subcode(c);
    const BitWord t2 = c0.reduce(c.generator().row(*first_singly_even_row(c)));

    // C0^perp has dimension k + 1 and contains C; any basis vector of it outside C
    // represents the shadow.
    const auto c0_dual = dual(c0.generator());
    std::optional<BitWord> s;
    for (const auto& v : c0_dual.row_list())
        if (!c.contains(v)) {
            s = v;
            break;
        }
    if (!s) throw DomainError("no shadow vector found: the input is not self-dual");
    BitWord t1 = c0.reduce(*s);
    BitWord t3 = c0.reduce(*s ^ t2);
    if (t3 < t1) std::swap(t1, t3);
    return {std::move(c0), std::move(t1), t2, std::move(t3)};
}

WeightDistribution shadow_distribution_bruteforce(const Code& c, std::size_t cap) {
    const auto dec = shadow_decompose(c);
    return coset_distribution_bruteforce(c, dec.t1, cap);
}

std::pair<Code, Code> doubly_even_neighbors(const Code& c) {
    if (c.n() % 8) throw DomainError("doubly even neighbors need length divisible by 8, got " + std::to_string(c.n()));
    const auto dec = shadow_decompose(c);
    auto extend = [&](const BitWord& t) {
        BitMatrix g = dec.c0.generator();
        g.append_row(t);
        return Code(std::move(g));
    };
    Code first = extend(dec.t1);
    Code second = extend(dec.t3);
    if (second.standard_form().row_list() < first.standard_form().row_list()) std::swap(first, second);
    return {std::move(first), std::move(second)};
}

Code neighbor_via_vector(const Code& c, const BitWord& x) {
    if (x.length() != c.n()) throw DomainError("vector length differs from code length");
    if (inner_product(x, x)) throw DomainError("x has odd weight, so x.x = 1 and the neighbor cannot be self-dual");
    if (c.contains(x)) return c;

    const auto& g = c.generator();
    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < g.rows(); ++i)
        if (inner_product(g.row(i), x)) {
            pick = i;
            break;
        }
    BitMatrix out(0, c.n());
    for (std::size_t i = 0; i < g.rows(); ++i) {
        if (pick && i == *pick) continue;
        if (pick && inner_product(g.row(i), x))
            out.append_row(g.row(i) ^ g.row(*pick));
        else
            out.append_row(g.row(i));
    }
    out.append_row(x);
    return Code(std::move(out));
}

std::size_t intersection_dimension(const Code& a, const Code& b) {
    if (a.n() != b.n()) throw DomainError("codes have different lengths");
    return rank(intersect(a.generator(), b.generator()));
}

bool is_neighbor(const Code& a, const Code& b) {
    if (a.n() != b.n()) throw DomainError("codes have different lengths");
    return intersection_dimension(a, b) + 1 == a.n() / 2;
}

}  // namespace sdc
