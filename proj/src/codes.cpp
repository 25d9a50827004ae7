#include "sdcodes/codes.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <utility>

namespace sdc {

Code::Code(BitMatrix generator) {
    auto red = rref(generator);
    if (red.rank != generator.rows()) generator = row_basis(generator);
    std::vector<BitWord> basis(red.matrix.row_list().begin(),
                               red.matrix.row_list().begin() + static_cast<std::ptrdiff_t>(red.rank));
    standard_ = BitMatrix(std::move(basis), generator.cols());
    pivots_ = std::move(red.pivots);
    generator_ = std::move(generator);
}

bool Code::contains(const BitWord& v) const {
    if (v.length() != n()) throw DomainError("word length differs from code length");
    return sdc::reduce(standard_, pivots_, v).is_zero();
}

BitWord Code::reduce(const BitWord& v) const {
    if (v.length() != n()) throw DomainError("word length differs from code length");
    return sdc::reduce(standard_, pivots_, v);
}

std::string_view to_string(ParityClass p) {
    switch (p) {
        case ParityClass::doubly_even: return "doubly even";
        case ParityClass::singly_even: return "singly even";
        case ParityClass::not_self_dual: return "not self-dual";
    }
    return "?";
}

BitMatrix circulant(const BitWord& first_row) {
    const std::size_t m = first_row.length();
    if (m == 0) throw DomainError("circulant of an empty row");
    BitMatrix out(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (first_row.get((j + m - i) % m)) out.set(i, j);
    return out;
}

Code four_circulant(const FourCirculantSpec& spec) {
    if (spec.ra.length() != spec.rb.length()) throw DomainError("rA and rB must have equal length");
    const auto a = circulant(spec.ra);
    const auto b = circulant(spec.rb);
    const auto block = BitMatrix::vconcat(BitMatrix::hconcat(a, b), BitMatrix::hconcat(b.transpose(), a.transpose()));
    return Code(BitMatrix::hconcat(BitMatrix::identity(2 * spec.m()), block));
}

bool circulant_condition_holds(const FourCirculantSpec& spec) {
    const auto a = circulant(spec.ra);
    const auto b = circulant(spec.rb);
    return a * a.transpose() + b * b.transpose() == BitMatrix::identity(spec.m());
}

bool is_self_orthogonal(const Code& c) {
    const auto& g = c.generator();
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = i; j < g.rows(); ++j)
            if (inner_product(g.row(i), g.row(j))) return false;
    return true;
}

bool is_self_dual(const Code& c) { return 2 * c.k() == c.n() && is_self_orthogonal(c); }

ParityClass parity_class(const Code& c) {
    if (!is_self_dual(c)) return ParityClass::not_self_dual;
    for (const auto& r : c.generator().row_list())
        if (r.weight() % 4 != 0) return ParityClass::singly_even;
    return ParityClass::doubly_even;
}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

bool is_blank_or_comment(const std::vector<std::string_view>& fields) {
    return fields.empty() || fields.front().front() == '#';
}

}  // namespace

std::vector<FourCirculantSpec> parse_spec_file(std::string_view text) {
    std::vector<FourCirculantSpec> specs;
    std::size_t lineno = 0;
    for (auto line : split_lines(text)) {
        ++lineno;
        const auto fields = split_ws(line);
        if (is_blank_or_comment(fields)) continue;
        const std::string where = "spec line " + std::to_string(lineno) + ": ";
        if (fields.size() != 2) throw DomainError(where + "expected two bit strings");
        if (fields[0].size() != fields[1].size()) throw DomainError(where + "rA and rB have different lengths");
        if (!specs.empty() && specs.front().m() != fields[0].size())
            throw DomainError(where + "circulant order differs from earlier lines");
        try {
            specs.push_back({BitWord::from_string(fields[0]), BitWord::from_string(fields[1])});
        } catch (const DomainError& e) {
            throw DomainError(where + e.what());
        }
    }
    return specs;
}

std::string serialize_spec_file(const std::vector<FourCirculantSpec>& specs) {
    std::string out;
    for (const auto& s : specs) out += s.ra.to_string() + " " + s.rb.to_string() + "\n";
    return out;
}

BitMatrix parse_matrix_file(std::string_view text) {
    std::vector<std::string> rows;
    std::size_t lineno = 0;
    for (auto line : split_lines(text)) {
        ++lineno;
        const auto fields = split_ws(line);
        if (is_blank_or_comment(fields)) continue;
        std::string row;
        for (auto f : fields) row += f;
        if (!rows.empty() && row.size() != rows.front().size())
            throw DomainError("matrix line " + std::to_string(lineno) + ": row length differs from earlier rows");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw DomainError("matrix file has no rows");
    return BitMatrix::from_strings(rows);
}

std::string serialize_matrix(const BitMatrix& m) {
    std::string out;
    for (const auto& r : m.to_strings()) out += r + "\n";
    return out;
}

BitWord parse_support(std::string_view text, std::size_t length) {
    std::vector<std::size_t> idx;
    std::size_t i = 0;
    while (i < text.size()) {
        const char ch = text[i];
        if (ch == ',' || std::isspace(static_cast<unsigned char>(ch)) || ch == '{' || ch == '}') {
            ++i;
            continue;
        }
        if (ch == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
        if (ec != std::errc{}) throw DomainError("support list: cannot parse '" + std::string(text.substr(i, 8)) + "'");
        idx.push_back(value);
        i = static_cast<std::size_t>(ptr - text.data());
    }
    return BitWord::from_support(length, idx);
}

}  // namespace sdc
