#ifndef MOMZERO_IO_HPP
#define MOMZERO_IO_HPP

#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "inverse_pattern.hpp"
#include "moment_matrix.hpp"
#include "moment_sequence.hpp"
#include "multiindex.hpp"
#include "ortho_basis.hpp"
#include "rational.hpp"
#include "statistics.hpp"

namespace momzero {

// All text formats are line-based "key value..." records with deterministic
// ordering, so identical inputs produce byte-identical files. Rationals are
// always "numerator/denominator"; multi-indices are always "[2,0,1]".

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

inline void expect(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error("parse error: " + what);
}

/// Monomial display name: "1", "X2", "X1^2X3".
inline std::string monomial_name(const MultiIndex& a) {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        s += "X" + std::to_string(i + 1);
        if (a[i] > 1) s += "^" + std::to_string(a[i]);
    }
    return s.empty() ? "1" : s;
}

}  // namespace detail

// --- moment sequences ------------------------------------------------------

inline std::string write_moment_sequence(const MomentSequence& y) {
    std::ostringstream os;
    os << "momentsequence\n";
    os << "n " << y.variable_count() << "\n";
    os << "order " << y.order() << "\n";
    os << "normalized " << (y.normalized() ? 1 : 0) << "\n";
    const GLexBasis all = GLexBasis::enumerate(y.variable_count(), y.order());
    for (const MultiIndex& a : all.indices())
        os << "y " << a.str() << " " << rational_str(y.value(a)) << "\n";
    return os.str();
}

inline MomentSequence read_moment_sequence(std::istream& in) {
    std::string line;
    auto next_fields = [&](const char* what) {
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            return detail::split_ws(line);
        }
        throw std::runtime_error(std::string("parse error: missing ") + what);
    };
    auto head = next_fields("header");
    detail::expect(head.size() == 1 && head[0] == "momentsequence", "bad magic line");
    auto nf = next_fields("n");
    detail::expect(nf.size() == 2 && nf[0] == "n", "bad n line");
    const std::size_t n = std::stoul(nf[1]);
    auto of = next_fields("order");
    detail::expect(of.size() == 2 && of[0] == "order", "bad order line");
    const unsigned order = static_cast<unsigned>(std::stoul(of[1]));
    auto zf = next_fields("normalized");
    detail::expect(zf.size() == 2 && zf[0] == "normalized", "bad normalized line");
    MomentSequence y(n, order, zf[1] == "1");
    const std::size_t count = GLexBasis::enumerate(n, order).size();
    for (std::size_t k = 0; k < count; ++k) {
        auto f = next_fields("moment entry");
        detail::expect(f.size() == 3 && f[0] == "y", "bad moment line");
        y.set(MultiIndex::parse(f[1]), parse_rational(f[2]));
    }
    y.validate();
    return y;
}

inline MomentSequence read_moment_sequence(const std::string& text) {
    std::istringstream is(text);
    return read_moment_sequence(is);
}

// --- atomic measures --------------------------------------------------------

inline std::string write_atomic_measure(const AtomicMeasure& m) {
    std::ostringstream os;
    os << "atomicmeasure\n";
    os << "n " << m.variable_count() << "\n";
    os << "atoms " << m.atom_count() << "\n";
    for (std::size_t l = 0; l < m.atom_count(); ++l) {
        os << "atom [";
        for (std::size_t i = 0; i < m.variable_count(); ++i) {
            if (i) os << ",";
            os << rational_str(m.point(l)[i]);
        }
        os << "] " << rational_str(m.weight(l)) << "\n";
    }
    return os.str();
}

inline AtomicMeasure read_atomic_measure(std::istream& in) {
    std::string line;
    auto next_fields = [&](const char* what) {
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            return detail::split_ws(line);
        }
        throw std::runtime_error(std::string("parse error: missing ") + what);
    };
    auto head = next_fields("header");
    detail::expect(head.size() == 1 && head[0] == "atomicmeasure", "bad magic line");
    auto nf = next_fields("n");
    detail::expect(nf.size() == 2 && nf[0] == "n", "bad n line");
    const std::size_t n = std::stoul(nf[1]);
    auto af = next_fields("atoms");
    detail::expect(af.size() == 2 && af[0] == "atoms", "bad atoms line");
    const std::size_t count = std::stoul(af[1]);
    std::vector<std::vector<Rational>> pts;
    std::vector<Rational> w;
    for (std::size_t l = 0; l < count; ++l) {
        auto f = next_fields("atom");
        detail::expect(f.size() == 3 && f[0] == "atom", "bad atom line");
        const std::string& vec = f[1];
        detail::expect(vec.size() >= 2 && vec.front() == '[' && vec.back() == ']',
                       "bad atom point");
        std::vector<Rational> p;
        std::string body = vec.substr(1, vec.size() - 2);
        std::size_t pos = 0;
        while (pos <= body.size() && !body.empty()) {
            std::size_t comma = body.find(',', pos);
            std::string part =
                body.substr(pos, comma == std::string::npos ? body.size() - pos : comma - pos);
            p.push_back(parse_rational(part));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        detail::expect(p.size() == n, "atom dimension mismatch");
        pts.push_back(std::move(p));
        w.push_back(parse_rational(f[2]));
    }
    return AtomicMeasure(std::move(pts), std::move(w));
}

inline AtomicMeasure read_atomic_measure(const std::string& text) {
    std::istringstream is(text);
    return read_atomic_measure(is);
}

// --- matrices ----------------------------------------------------------------

/// CSV with a header row/column of multi-indices. Index cells are quoted
/// because the bracket form contains commas.
inline std::string matrix_csv(const GLexBasis& basis, const Mat& m) {
    std::ostringstream os;
    os << "\"index\"";
    for (std::size_t j = 0; j < basis.size(); ++j) os << ",\"" << basis.at(j).str() << "\"";
    os << "\n";
    for (std::size_t i = 0; i < basis.size(); ++i) {
        os << "\"" << basis.at(i).str() << "\"";
        for (std::size_t j = 0; j < basis.size(); ++j) os << "," << rational_str(m[i][j]);
        os << "\n";
    }
    return os.str();
}

/// Structured matrix form mirroring the moment-sequence format.
inline std::string write_matrix_structured(const std::string& kind, const GLexBasis& basis,
                                           const Mat& m) {
    std::ostringstream os;
    os << kind << "\n";
    os << "n " << basis.variable_count() << "\n";
    os << "d " << basis.max_degree() << "\n";
    os << "size " << basis.size() << "\n";
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j)
            os << "entry " << basis.at(i).str() << " " << basis.at(j).str() << " "
               << rational_str(m[i][j]) << "\n";
    return os.str();
}

// --- bases -------------------------------------------------------------------

/// Per-row export: index, squared norm, then the nonzero (support index,
/// coefficient) pairs in glex order.
inline std::string write_basis(const OrthoBasis& B) {
    std::ostringstream os;
    os << "orthobasis\n";
    os << "n " << B.basis().variable_count() << "\n";
    os << "d " << B.order() << "\n";
    os << "rows " << B.size() << "\n";
    for (std::size_t k = 0; k < B.size(); ++k) {
        os << "row " << B.basis().at(k).str() << " h " << rational_str(B.norm(k)) << " terms";
        for (std::size_t j = 0; j <= k; ++j)
            if (B.coeff(k, j) != 0)
                os << " " << B.basis().at(j).str() << " " << rational_str(B.coeff(k, j));
        os << "\n";
    }
    return os.str();
}

inline OrthoBasis read_basis(std::istream& in) {
    std::string line;
    auto next_fields = [&](const char* what) {
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            return detail::split_ws(line);
        }
        throw std::runtime_error(std::string("parse error: missing ") + what);
    };
    auto head = next_fields("header");
    detail::expect(head.size() == 1 && head[0] == "orthobasis", "bad magic line");
    auto nf = next_fields("n");
    detail::expect(nf.size() == 2 && nf[0] == "n", "bad n line");
    const std::size_t n = std::stoul(nf[1]);
    auto df = next_fields("d");
    detail::expect(df.size() == 2 && df[0] == "d", "bad d line");
    const unsigned d = static_cast<unsigned>(std::stoul(df[1]));
    auto rf = next_fields("rows");
    detail::expect(rf.size() == 2 && rf[0] == "rows", "bad rows line");
    const std::size_t rows = std::stoul(rf[1]);

    const GLexBasis basis = GLexBasis::enumerate(n, d);
    detail::expect(rows == basis.size(), "row count mismatch");
    std::vector<std::vector<Rational>> coeffs;
    std::vector<Rational> norms;
    for (std::size_t k = 0; k < rows; ++k) {
        auto f = next_fields("basis row");
        detail::expect(f.size() >= 5 && f[0] == "row" && f[2] == "h" && f[4] == "terms",
                       "bad basis row");
        detail::expect(MultiIndex::parse(f[1]) == basis.at(k), "basis row out of order");
        norms.push_back(parse_rational(f[3]));
        std::vector<Rational> row(k + 1, Rational(0));
        detail::expect((f.size() - 5) % 2 == 0, "dangling term");
        for (std::size_t t = 5; t + 1 < f.size(); t += 2) {
            const MultiIndex g = MultiIndex::parse(f[t]);
            row.at(basis.position(g)) = parse_rational(f[t + 1]);
        }
        coeffs.push_back(std::move(row));
    }
    return OrthoBasis(basis, std::move(coeffs), std::move(norms));
}

inline OrthoBasis read_basis(const std::string& text) {
    std::istringstream is(text);
    return read_basis(is);
}

// --- zero-pattern grids -------------------------------------------------------

/// Text grid of '*' (nonzero) and '0' (exact zero) with monomial labels, rows
/// and columns in glex order.
inline std::string render_pattern_grid(const ZeroPattern& p) {
    const std::size_t s = p.size();
    std::vector<std::string> labels(s);
    std::size_t width = 0;
    for (std::size_t i = 0; i < s; ++i) {
        labels[i] = detail::monomial_name(p.basis().at(i));
        width = std::max(width, labels[i].size());
    }
    auto pad = [&](const std::string& t, std::size_t w) {
        std::string out = t;
        out.resize(w, ' ');
        return out;
    };
    auto rstrip = [](std::string t) {
        while (!t.empty() && t.back() == ' ') t.pop_back();
        return t;
    };
    std::ostringstream os;
    os << pad("", width);
    for (std::size_t j = 0; j < s; ++j) os << " " << labels[j];
    os << "\n";
    for (std::size_t i = 0; i < s; ++i) {
        std::string row = pad(labels[i], width);
        for (std::size_t j = 0; j < s; ++j)
            row += " " + pad(p.zero_at(i, j) ? "0" : "*", labels[j].size());
        os << rstrip(std::move(row)) << "\n";
    }
    return os.str();
}

/// Same layout for a predicted (forced-zero) pattern.
inline std::string render_predicted_grid(const GLexBasis& basis, unsigned d, const Grouping& g) {
    const std::size_t s = basis.size();
    std::vector<std::string> labels(s);
    std::size_t width = 0;
    for (std::size_t i = 0; i < s; ++i) {
        labels[i] = detail::monomial_name(basis.at(i));
        width = std::max(width, labels[i].size());
    }
    auto pad = [&](const std::string& t, std::size_t w) {
        std::string out = t;
        out.resize(w, ' ');
        return out;
    };
    auto rstrip = [](std::string t) {
        while (!t.empty() && t.back() == ' ') t.pop_back();
        return t;
    };
    std::ostringstream os;
    os << pad("", width);
    for (std::size_t j = 0; j < s; ++j) os << " " << labels[j];
    os << "\n";
    for (std::size_t i = 0; i < s; ++i) {
        std::string row = pad(labels[i], width);
        for (std::size_t j = 0; j < s; ++j)
            row += " " + pad(grouped_congenital_predicate(basis.at(i), basis.at(j), d, g) ? "0" : "*",
                             labels[j].size());
        os << rstrip(std::move(row)) << "\n";
    }
    return os.str();
}

// --- reports -----------------------------------------------------------------

inline std::string render_suite_report(const SuiteReport& rep) {
    std::ostringstream os;
    os << "report\n";
    os << "suite " << rep.suite << "\n";
    os << "instances " << rep.instances.size() << "\n";
    for (const auto& io : rep.instances) {
        os << "instance " << io.label << " status " << (io.pass ? "pass" : "fail")
           << " mismatches " << io.mismatches.size() << "\n";
        for (const auto& mm : io.mismatches)
            os << "  mismatch " << mm.a.str() << " " << mm.b.str() << " predicted "
               << (mm.predicted_zero ? "zero" : "nonzero") << " value " << rational_str(mm.value)
               << "\n";
        if (!io.note.empty()) os << "  note " << io.note << "\n";
    }
    for (const auto& a : rep.anomalies) os << "anomaly " << a << "\n";
    os << "overall " << (rep.pass() ? "pass" : "fail") << "\n";
    return os.str();
}

inline std::string render_equivalence_report(const EquivalenceReport& rep) {
    std::ostringstream os;
    os << "report\n";
    os << "suite " << rep.suite << "\n";
    os << "inverse_side " << (rep.side_pattern ? "holds" : "fails") << "\n";
    os << "basis_side " << (rep.side_triangular ? "holds" : "fails") << "\n";
    os << "equivalent " << (rep.equivalent ? "yes" : "no") << "\n";
    for (const auto& w : rep.pattern_witnesses)
        os << "inverse_witness " << w.a.str() << " " << w.b.str() << " value "
           << rational_str(w.value) << "\n";
    for (const auto& [r, c] : rep.triangle_witnesses)
        os << "basis_witness row " << r.str() << " support " << c.str() << "\n";
    return os.str();
}

}  // namespace momzero

#endif
