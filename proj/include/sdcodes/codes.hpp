// Binary linear codes, self-duality tests, and the four-circulant family.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sdcodes/gf2.hpp"

namespace sdc {

/// A binary linear code held by a full-rank generator matrix.
///
/// The generator is kept as constructed (dependent rows are dropped by
/// replacing the matrix with its row basis). The reduced row-echelon form is
/// computed once at construction and shared by every membership test.
class Code {
public:
    Code() = default;
    explicit Code(BitMatrix generator);

    std::size_t n() const { return generator_.cols(); }
    std::size_t k() const { return generator_.rows(); }

    const BitMatrix& generator() const { return generator_; }
    /// k x n reduced row-echelon basis of the code.
    const BitMatrix& standard_form() const { return standard_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const BitWord& v) const;
    /// Canonical representative of v + C: zero on every pivot column.
    BitWord reduce(const BitWord& v) const;

    /// Same set of codewords.
    bool same_code(const Code& other) const { return standard_ == other.standard_; }

private:
    BitMatrix generator_;
    BitMatrix standard_;
    std::vector<std::size_t> pivots_;
};

struct FourCirculantSpec {
    BitWord ra;
    BitWord rb;

    std::size_t m() const { return ra.length(); }
    bool operator==(const FourCirculantSpec&) const = default;
};

enum class ParityClass { doubly_even, singly_even, not_self_dual };

std::string_view to_string(ParityClass p);

/// m x m circulant whose row i+1 is row i shifted one place to the right.
BitMatrix circulant(const BitWord& first_row);

/// Generator [ I_2m | A B ; B^T A^T ] with A, B circulant.
Code four_circulant(const FourCirculantSpec& spec);

/// A A^T + B B^T == I over GF(2).
bool circulant_condition_holds(const FourCirculantSpec& spec);

bool is_self_dual(const Code& c);

/// True when the generator rows are pairwise orthogonal (every row included).
bool is_self_orthogonal(const Code& c);

ParityClass parity_class(const Code& c);

/// One spec per nonempty line: "rA rB". Lines starting with '#' are comments.
std::vector<FourCirculantSpec> parse_spec_file(std::string_view text);
std::string serialize_spec_file(const std::vector<FourCirculantSpec>& specs);

/// Generator matrix file: one row per line as a 0/1 string, '#' comments.
BitMatrix parse_matrix_file(std::string_view text);
std::string serialize_matrix(const BitMatrix& m);

/// Comma- or whitespace-separated 1-indexed coordinates.
BitWord parse_support(std::string_view text, std::size_t length);

}  // namespace sdc
