#include "capacheck/presentation.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace capacheck {

namespace {

struct LineScanner {
    const std::string &s;
    std::size_t lineno;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size() || s[pos] == '#';
    }
    [[noreturn]] void fail(const std::string &msg) { throw ParseError(lineno, pos + 1, msg); }

    void expect(char c) {
        if (pos >= s.size() || s[pos] != c)
            fail(std::string("expected '") + c + "'");
        ++pos;
    }
    int64_t integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            fail("expected integer");
        return std::stoll(s.substr(start, pos - start));
    }
    /// key=value with an integer value
    int64_t keyval(const std::string &key) {
        skip_ws();
        if (s.compare(pos, key.size(), key) != 0) fail("expected '" + key + "='");
        pos += key.size();
        skip_ws();
        expect('=');
        return integer();
    }
};

std::vector<std::string> split_lines(const std::string &text) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

} // namespace

Presentation parse_presentation(const std::string &text) {
    std::vector<std::string> lines = split_lines(text);
    if (lines.empty()) throw ParseError(1, 1, "empty input");

    Presentation pres;
    LineScanner head{lines[0], 1};
    head.skip_ws();
    bool raw = lines[0].compare(head.pos, 5, "raw-V") == 0;
    if (raw) head.pos += 5;
    int64_t n = head.keyval("n");
    int64_t p = head.keyval("p");
    if (n < 1) head.fail("generator count must be >= 1");
    if (p < 0 || p > (1 << 16)) head.fail("prime out of range");
    try {
        check_modulus(static_cast<uint32_t>(p));
    } catch (const FieldError &e) {
        throw ParseError(1, 1, e.what());
    }
    pres.n = static_cast<std::size_t>(n);
    pres.p = static_cast<uint32_t>(p);

    if (raw) {
        std::vector<std::vector<uint32_t>> rows;
        for (std::size_t ln = 1; ln < lines.size(); ++ln) {
            LineScanner sc{lines[ln], ln + 1};
            if (sc.done()) continue;
            std::vector<uint32_t> row;
            for (;;) {
                row.push_back(fp_reduce(sc.integer(), pres.p));
                sc.skip_ws();
                if (sc.pos < sc.s.size() && sc.s[sc.pos] == ',') {
                    ++sc.pos;
                    continue;
                }
                break;
            }
            if (!sc.done()) sc.fail("trailing characters after vector");
            if (row.size() != dim_v(pres.n))
                sc.fail("expected " + std::to_string(dim_v(pres.n)) + " coordinates, got " +
                        std::to_string(row.size()));
            rows.push_back(std::move(row));
        }
        FpMatrix gens(rows.size(), dim_v(pres.n), pres.p);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < rows[i].size(); ++j) gens.at(i, j) = rows[i][j];
        pres.raw_subspace = Subspace(gens);
        return pres;
    }

    for (std::size_t ln = 1; ln < lines.size(); ++ln) {
        LineScanner sc{lines[ln], ln + 1};
        if (sc.done()) continue;
        std::vector<std::tuple<std::size_t, std::size_t, int64_t>> rel;
        while (!sc.done()) {
            sc.skip_ws();
            sc.expect('[');
            int64_t j = sc.integer();
            sc.skip_ws();
            sc.expect(',');
            int64_t i = sc.integer();
            sc.skip_ws();
            sc.expect(']');
            int64_t e = 1;
            if (sc.pos < sc.s.size() && sc.s[sc.pos] == '^') {
                ++sc.pos;
                e = sc.integer();
            }
            if (i < 1 || j <= i || j > n) sc.fail("commutator [j,i] requires 1 <= i < j <= n");
            rel.emplace_back(static_cast<std::size_t>(j), static_cast<std::size_t>(i), e);
        }
        pres.relators.push_back(std::move(rel));
    }
    return pres;
}

Presentation parse_presentation_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_presentation(ss.str());
}

Subspace to_subspace(const Presentation &pres) {
    if (pres.raw_subspace) return *pres.raw_subspace;
    FpMatrix gens(pres.relators.size(), dim_v(pres.n), pres.p);
    for (std::size_t r = 0; r < pres.relators.size(); ++r) {
        NormalForm nf(pres.n, pres.p);
        for (auto [j, i, e] : pres.relators[r])
            nf = multiply(nf, power(NormalForm::basic_pair(pres.n, pres.p, j, i), e));
        for (uint32_t x : nf.a())
            if (x != 0)
                throw std::runtime_error("relator leaves the commutator subgroup");
        for (std::size_t c = 0; c < dim_v(pres.n); ++c) gens.at(r, c) = nf.b()[c];
    }
    return Subspace(gens);
}

std::string to_text(const Presentation &pres) {
    std::ostringstream out;
    if (pres.raw_subspace) {
        out << "raw-V n=" << pres.n << " p=" << pres.p << "\n";
        const Subspace &s = *pres.raw_subspace;
        for (std::size_t i = 0; i < s.dim(); ++i) {
            for (std::size_t j = 0; j < s.ambient_dim(); ++j) {
                if (j) out << ",";
                out << s.basis().at(i, j);
            }
            out << "\n";
        }
        return out.str();
    }
    out << "n=" << pres.n << " p=" << pres.p << "\n";
    for (const auto &rel : pres.relators) {
        for (auto [j, i, e] : rel) {
            out << "[" << j << "," << i << "]";
            if (e != 1) out << "^" << e;
        }
        out << "\n";
    }
    return out.str();
}

Presentation build_extraspecial(uint32_t p) {
    Presentation pres;
    check_modulus(p);
    pres.n = 4;
    pres.p = p;
    pres.relators = {
        {{3, 1, 1}, {3, 2, -1}}, // [x3,x1][x3,x2]^-1
        {{3, 1, 1}, {4, 1, -1}}, // [x3,x1][x4,x1]^-1
        {{4, 2, 1}},
        {{4, 3, 1}},
        {{2, 1, 1}},
    };
    return pres;
}

Subspace coproduct(const Subspace &Xa, std::size_t a, const Subspace &Xb, std::size_t b) {
    if (Xa.modulus() != Xb.modulus()) throw FieldError("modulus mismatch in coproduct");
    if (Xa.ambient_dim() != dim_v(a) || Xb.ambient_dim() != dim_v(b))
        throw DimMismatchError("ambient dims do not match generator counts");
    const uint32_t p = Xa.modulus();
    const std::size_t n = a + b;
    std::vector<PairIndex> big = pair_order(n);
    auto col_of = [&](std::size_t j, std::size_t i) {
        for (std::size_t c = 0; c < big.size(); ++c)
            if (big[c].j == j && big[c].i == i) return c;
        throw ParamError("bad pair");
    };
    FpMatrix gens(Xa.dim() + Xb.dim(), dim_v(n), p);
    std::vector<PairIndex> pa = pair_order(a), pb = pair_order(b);
    for (std::size_t r = 0; r < Xa.dim(); ++r)
        for (std::size_t c = 0; c < pa.size(); ++c)
            gens.at(r, col_of(pa[c].j, pa[c].i)) = Xa.basis().at(r, c);
    for (std::size_t r = 0; r < Xb.dim(); ++r)
        for (std::size_t c = 0; c < pb.size(); ++c)
            gens.at(Xa.dim() + r, col_of(pb[c].j + a, pb[c].i + a)) = Xb.basis().at(r, c);
    return Subspace(gens);
}

Subspace extend_with_central(const Subspace &X, std::size_t n) {
    if (X.ambient_dim() != dim_v(n)) throw DimMismatchError("ambient dim does not match n");
    const uint32_t p = X.modulus();
    std::vector<PairIndex> big = pair_order(n + 1);
    auto col_of = [&](std::size_t j, std::size_t i) {
        for (std::size_t c = 0; c < big.size(); ++c)
            if (big[c].j == j && big[c].i == i) return c;
        throw ParamError("bad pair");
    };
    std::vector<PairIndex> small = pair_order(n);
    FpMatrix gens(X.dim() + n, dim_v(n + 1), p);
    for (std::size_t r = 0; r < X.dim(); ++r)
        for (std::size_t c = 0; c < small.size(); ++c)
            gens.at(r, col_of(small[c].j, small[c].i)) = X.basis().at(r, c);
    for (std::size_t i = 1; i <= n; ++i) gens.at(X.dim() + i - 1, col_of(n + 1, i)) = 1;
    return Subspace(gens);
}

Subspace coordinate_subspace(std::size_t n, uint32_t p,
                             const std::set<std::pair<std::size_t, std::size_t>> &S) {
    std::vector<PairIndex> pairs = pair_order(n);
    FpMatrix gens(S.size(), dim_v(n), p);
    std::size_t row = 0;
    for (auto [j, i] : S) {
        bool found = false;
        for (std::size_t c = 0; c < pairs.size(); ++c)
            if (pairs[c].j == j && pairs[c].i == i) {
                gens.at(row, c) = 1;
                found = true;
                break;
            }
        if (!found) throw ParamError("invalid pair (" + std::to_string(j) + "," + std::to_string(i) + ")");
        ++row;
    }
    return Subspace(gens);
}

} // namespace capacheck
