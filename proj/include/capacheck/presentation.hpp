#pragma once

#include <iosfwd>
#include <optional>
#include <set>
#include <string>

#include "capacheck/oracle.hpp"
#include "capacheck/subspace.hpp"

namespace capacheck {

struct ParseError : std::runtime_error {
    std::size_t line, col;
    ParseError(std::size_t line, std::size_t col, const std::string &msg)
        : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) +
                             ": " + msg),
          line(line), col(col) {}
};

/// A presentation of a class-2 exponent-p group: n generators of order p,
/// relators that are products of commutators [j,i]^e (so the relation
/// subgroup automatically sits inside the commutator subgroup).
struct Presentation {
    std::size_t n;
    uint32_t p;
    std::vector<std::vector<std::tuple<std::size_t, std::size_t, int64_t>>> relators;
    /// Set when the input was a raw-V basis instead of relators.
    std::optional<Subspace> raw_subspace;
};

/// Parse the text format:
///   n=<int> p=<prime>
///   [j,i][j,i]^e ...      (one relator per nonempty line; # starts a comment)
/// or the raw basis format:
///   raw-V n=<int> p=<prime>
///   c0,c1,...,c_{dimV-1}  (one basis vector per line)
Presentation parse_presentation(const std::string &text);
Presentation parse_presentation_file(const std::string &path);

/// Evaluate the relators in the nilpotent product and span their
/// degree-2 exponent vectors: the subspace X of V determined by the group.
Subspace to_subspace(const Presentation &pres);

/// Render back to the text format (round-trips through parse).
std::string to_text(const Presentation &pres);

/// The extra-special group of order p^5 on 4 generators:
/// [3,1][3,2]^-1, [3,1][4,1]^-1, [4,2], [4,3], [2,1].
Presentation build_extraspecial(uint32_t p);

/// Embed Xa on generators 1..a and Xb on generators a+1..a+b of V(a+b).
Subspace coproduct(const Subspace &Xa, std::size_t a, const Subspace &Xb, std::size_t b);

/// Embed X from n to n+1 generators and add all n vectors v_(n+1)i.
Subspace extend_with_central(const Subspace &X, std::size_t n);

/// Span of {v_ji : (j,i) in S} inside V(n).
Subspace coordinate_subspace(std::size_t n, uint32_t p,
                             const std::set<std::pair<std::size_t, std::size_t>> &S);

} // namespace capacheck
