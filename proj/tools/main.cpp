// Command-line surface over the momzero headers: measure generation, exact
// moment-matrix computations, inverse zero patterns, covariance reports, and
// the verification suites. All output is deterministic text; identical
// arguments (including seeds) produce byte-identical output.
//
// Exit codes: 0 success / verified equivalence, 1 verified mismatch,
// 2 usage or input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>
#include <momzero/momzero.hpp>

namespace {

using namespace momzero;
using nlohmann::json;

// ------------------------------------------------------------------ plumbing

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void emit(const std::string& output_path, const std::string& text) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path);
    if (!out) throw std::runtime_error("cannot write " + output_path);
    out << text;
}

unsigned parse_unsigned(const std::string& s) {
    if (s.empty()) throw std::runtime_error("empty number");
    unsigned long v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw std::runtime_error("bad number '" + s + "'");
        v = v * 10 + static_cast<unsigned long>(c - '0');
        if (v > 1000000) throw std::runtime_error("number too large '" + s + "'");
    }
    return static_cast<unsigned>(v);
}

std::vector<unsigned> parse_unsigned_list(const std::string& text) {
    std::vector<unsigned> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) out.push_back(parse_unsigned(item));
    if (out.empty()) throw std::runtime_error("empty list '" + text + "'");
    return out;
}

std::vector<std::string> split_on(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, sep)) out.push_back(item);
    return out;
}

std::string unsigned_list_str(const std::vector<unsigned>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

// --------------------------------------------------------- measure resolution

struct MeasureOptions {
    std::string input;     // moment-sequence file; exclusive with family
    std::string family;    // laguerre | disk | atoms | grouped
    std::string sigma;     // laguerre parameters "1,2"
    int t = -1;            // disk exponent (>= 0 when set)
    std::string atoms;     // atomic-measure file
    std::string grouping;  // blocks "1|2,3" (grouped family)
    std::string blocks;    // per-block specs "laguerre:2|disk:1"
};

void add_measure_options(CLI::App* cmd, MeasureOptions& mo) {
    cmd->add_option("--input", mo.input, "moment-sequence file to load");
    cmd->add_option("--family", mo.family,
                    "measure family: laguerre | disk | atoms | grouped");
    cmd->add_option("--sigma", mo.sigma,
                    "laguerre exponent parameters, one per variable, e.g. 1,2");
    cmd->add_option("--t", mo.t, "disk density exponent (natural number)");
    cmd->add_option("--atoms", mo.atoms, "atomic-measure file");
    cmd->add_option("--grouping", mo.grouping,
                    "variable blocks for grouped products, e.g. \"1|2,3\"");
    cmd->add_option("--blocks", mo.blocks,
                    "per-block family specs for grouped products, e.g. "
                    "\"laguerre:2|disk:1\"");
}

std::size_t block_spec_vars(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::runtime_error("block spec needs name:params, got '" + spec + "'");
    const std::string name = spec.substr(0, colon);
    if (name == "laguerre") return parse_unsigned_list(spec.substr(colon + 1)).size();
    if (name == "disk") return 2;
    throw std::runtime_error("unknown block family '" + name + "'");
}

MomentSequence block_sequence(const std::string& spec, unsigned d) {
    const auto colon = spec.find(':');
    const std::string name = spec.substr(0, colon);
    const std::string params = spec.substr(colon + 1);
    if (name == "laguerre") return laguerre_product_moments(parse_unsigned_list(params), d);
    return disk_moments(parse_unsigned(params), d);
}

MomentSequence family_sequence(const MeasureOptions& mo, unsigned d) {
    if (mo.family == "laguerre") {
        if (mo.sigma.empty()) throw std::runtime_error("laguerre needs --sigma");
        return laguerre_product_moments(parse_unsigned_list(mo.sigma), d);
    }
    if (mo.family == "disk") {
        if (mo.t < 0) throw std::runtime_error("disk needs --t");
        return disk_moments(static_cast<unsigned>(mo.t), d);
    }
    if (mo.family == "atoms") {
        if (mo.atoms.empty()) throw std::runtime_error("atoms needs --atoms FILE");
        return atomic_moments(read_atomic_measure(slurp(mo.atoms)), d);
    }
    if (mo.family == "grouped") {
        if (mo.grouping.empty() || mo.blocks.empty())
            throw std::runtime_error("grouped needs --grouping and --blocks");
        const std::vector<std::string> specs = split_on(mo.blocks, '|');
        std::size_t n = 0;
        for (const auto& s : specs) n += block_spec_vars(s);
        const Grouping g = Grouping::parse(n, mo.grouping);
        if (g.block_count() != specs.size())
            throw std::runtime_error("grouping has " + std::to_string(g.block_count()) +
                                     " blocks, --blocks has " + std::to_string(specs.size()));
        std::vector<MomentSequence> blocks;
        for (std::size_t j = 0; j < specs.size(); ++j) {
            if (block_spec_vars(specs[j]) != g.block(j).size())
                throw std::runtime_error("block '" + specs[j] +
                                         "' does not match the size of grouping block " +
                                         std::to_string(j + 1));
            blocks.push_back(block_sequence(specs[j], d));
        }
        return grouped_product_moments(g, blocks, 2 * d);
    }
    throw std::runtime_error("unknown family '" + mo.family +
                             "' (expected laguerre | disk | atoms | grouped)");
}

struct Resolved {
    MomentSequence y;
    unsigned d;
};

Resolved resolve_measure(const MeasureOptions& mo, int d_opt) {
    if (!mo.input.empty() && !mo.family.empty())
        throw std::runtime_error("pass either --input or --family, not both");
    if (!mo.input.empty()) {
        MomentSequence y = read_moment_sequence(slurp(mo.input));
        const unsigned dmax = y.order() / 2;
        const unsigned d = d_opt < 0 ? dmax : static_cast<unsigned>(d_opt);
        if (d > dmax)
            throw std::runtime_error("--d " + std::to_string(d) + " needs moments to degree " +
                                     std::to_string(2 * d) + ", file stops at " +
                                     std::to_string(y.order()));
        return {std::move(y), d};
    }
    if (mo.family.empty()) throw std::runtime_error("pass --input FILE or --family NAME");
    if (d_opt < 0) throw std::runtime_error("--d is required with --family");
    const unsigned d = static_cast<unsigned>(d_opt);
    return {family_sequence(mo, d), d};
}

// ------------------------------------------------------------- leaf commands

struct PlainArgs {
    MeasureOptions mo;
    int d = -1;
    std::string format = "structured";
    std::string output;
};

int cmd_generate(const PlainArgs& a) {
    const Resolved r = resolve_measure(a.mo, a.d);
    emit(a.output, write_moment_sequence(r.y));
    return 0;
}

int cmd_matrix(const PlainArgs& a) {
    const Resolved r = resolve_measure(a.mo, a.d);
    const MomentMatrix M = MomentMatrix::build(r.y, r.d);
    if (a.format == "csv")
        emit(a.output, matrix_csv(M.basis(), M.entries()));
    else
        emit(a.output, write_matrix_structured("momentmatrix", M.basis(), M.entries()));
    return 0;
}

int cmd_basis(const PlainArgs& a) {
    const Resolved r = resolve_measure(a.mo, a.d);
    const OrthoBasis B = gram_schmidt(MomentMatrix::build(r.y, r.d));
    emit(a.output, write_basis(B));
    return 0;
}

int cmd_inverse(const PlainArgs& a) {
    const Resolved r = resolve_measure(a.mo, a.d);
    const OrthoBasis B = gram_schmidt(MomentMatrix::build(r.y, r.d));
    const InverseMatrix Z = InverseMatrix::from_basis(B);
    if (a.format == "grid")
        emit(a.output, render_pattern_grid(ZeroPattern(Z)));
    else if (a.format == "csv")
        emit(a.output, matrix_csv(Z.basis(), Z.entries()));
    else
        emit(a.output, write_matrix_structured("inverse", Z.basis(), Z.entries()));
    return 0;
}

struct PredictArgs {
    std::size_t n = 0;
    int d = -1;
    std::string grouping;
    std::string format = "grid";
    std::string output;
};

int cmd_predict(const PredictArgs& a) {
    if (a.n == 0) throw std::runtime_error("predict needs --n");
    if (a.d < 0) throw std::runtime_error("predict needs --d");
    const unsigned d = static_cast<unsigned>(a.d);
    const Grouping g =
        a.grouping.empty() ? Grouping::singletons(a.n) : Grouping::parse(a.n, a.grouping);
    const GLexBasis basis = GLexBasis::enumerate(a.n, d);
    if (a.format == "grid") {
        emit(a.output, render_predicted_grid(basis, d, g));
        return 0;
    }
    std::ostringstream os;
    os << "report\n";
    os << "suite forced-zero-predicate\n";
    os << "n " << a.n << " d " << d << " grouping " << g.str() << "\n";
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            if (grouped_congenital_predicate(basis.at(i), basis.at(j), d, g))
                os << "forced " << basis.at(i).str() << " " << basis.at(j).str() << "\n";
    emit(a.output, os.str());
    return 0;
}

// ---------------------------------------------------------------- statistics

struct StatsArgs {
    MeasureOptions mo;
    int d = -1;
    bool center = false;
    std::size_t i = 0, j = 0;  // 1-based pair for `stats pair`
    std::string output;
};

MomentSequence stats_sequence(const StatsArgs& a) {
    const Resolved r = resolve_measure(a.mo, a.d < 0 ? 1 : a.d);
    if (r.y.order() < 2)
        throw std::runtime_error("covariance reports need moments to degree 2");
    return a.center ? center_moments(r.y) : r.y;
}

int cmd_stats_partial(const StatsArgs& a) {
    const MomentSequence y = stats_sequence(a);
    const CovarianceView V = covariance_block(MomentMatrix::build(y, 1));
    const PartialCorrelationView pcv = partial_correlation_report(V);
    std::ostringstream os;
    os << "report\n";
    os << "suite partial-correlation\n";
    os << "variables " << V.variable_count() << "\n";
    bool consistent = true;
    for (const auto& e : pcv.entries) {
        const Rational pc = partial_covariance(V, e.i, e.j);
        const bool agree = (pc == 0) == e.zero;
        consistent = consistent && agree;
        os << "pair " << (e.i + 1) << " " << (e.j + 1) << " partial_covariance "
           << rational_str(pc) << " precision " << rational_str(e.precision_entry)
           << " vanishes " << (e.zero ? "yes" : "no") << " squared_partial_correlation "
           << rational_str(e.squared_scaled) << " sign " << e.sign << "\n";
    }
    os << "overall " << (consistent ? "pass" : "fail") << "\n";
    emit(a.output, os.str());
    return consistent ? 0 : 1;
}

int cmd_stats_pair(const StatsArgs& a) {
    if (a.i == 0 || a.j == 0) throw std::runtime_error("stats pair needs --i and --j (1-based)");
    const MomentSequence y = stats_sequence(a);
    const PairAgreementReport rep = pair_agreement_check(y, a.i - 1, a.j - 1);
    std::ostringstream os;
    os << "report\n";
    os << "suite pair-precision-vs-triangularity\n";
    os << "pair " << (rep.i + 1) << " " << (rep.j + 1) << "\n";
    os << "precision_entry " << rational_str(rep.precision_entry) << "\n";
    os << "precision_zero " << (rep.precision_zero ? "yes" : "no") << "\n";
    os << "conditionally_triangular " << (rep.conditionally_triangular ? "yes" : "no") << "\n";
    for (const auto& [row, col] : rep.triangle_witnesses)
        os << "basis_witness row " << row.str() << " support " << col.str() << "\n";
    os << "agree " << (rep.agree ? "yes" : "no") << "\n";
    emit(a.output, os.str());
    return rep.agree ? 0 : 1;
}

// --------------------------------------------------------- verification suites

struct RunResult {
    bool ok = false;
    std::string text;
};

struct ProductParams {
    std::size_t n = 2;
    int d = 2;
    unsigned samples = 10;
    std::uint64_t seed = 7;
    unsigned sigma_max = 5;
    unsigned jobs = 1;
};

RunResult run_product(const ProductParams& p) {
    if (p.d < 0) throw std::runtime_error("verify product needs --d >= 0");
    Rng rng(p.seed);
    std::vector<std::vector<unsigned>> sigmas(p.samples, std::vector<unsigned>(p.n));
    for (auto& sigma : sigmas)
        for (auto& s : sigma) s = static_cast<unsigned>(rng.int_in(0, p.sigma_max));
    const SuiteReport rep =
        verify_product_theorem(p.n, static_cast<unsigned>(p.d), sigmas, p.jobs);
    std::ostringstream os;
    os << "config suite product n " << p.n << " d " << p.d << " samples " << p.samples
       << " seed " << p.seed << " sigma-max " << p.sigma_max << "\n";
    os << render_suite_report(rep);
    return {rep.pass(), os.str()};
}

struct GroupedParams {
    int d = 3;
    std::string sigma = "2";
    int t = 1;
    std::string grouping = "1|2,3";
    std::string input;
};

RunResult run_grouped(const GroupedParams& p) {
    if (p.d < 0) throw std::runtime_error("verify grouped needs --d >= 0");
    const unsigned d = static_cast<unsigned>(p.d);
    std::string label;
    MeasureOptions mo;
    if (!p.input.empty()) {
        mo.input = p.input;
        label = "input " + p.input;
    } else {
        mo.family = "grouped";
        mo.grouping = p.grouping;
        mo.blocks = "laguerre:" + p.sigma + "|disk:" + std::to_string(p.t);
        label = mo.blocks;
    }
    const Resolved r = resolve_measure(mo, static_cast<int>(d));
    const Grouping g = Grouping::parse(r.y.variable_count(), p.grouping);
    const OrthoBasis B = gram_schmidt(MomentMatrix::build(r.y, r.d));
    const InverseMatrix Z = InverseMatrix::from_basis(B);
    const std::vector<PatternMismatch> forced = check_forced_zeros_grouped(Z, g);

    const GLexBasis& basis = Z.basis();
    std::size_t checked = 0;
    std::vector<std::pair<MultiIndex, MultiIndex>> disagreements;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            ++checked;
            if (grouped_congenital_predicate(basis.at(i), basis.at(j), r.d, g) !=
                grouped_congenital_bruteforce(basis.at(i), basis.at(j), r.d, g))
                disagreements.emplace_back(basis.at(i), basis.at(j));
        }

    const bool ok = forced.empty() && disagreements.empty();
    std::ostringstream os;
    os << "config suite grouped d " << d << " grouping " << g.str() << "\n";
    os << "report\n";
    os << "suite grouped-forced-zeros\n";
    os << "instance " << label << " status " << (forced.empty() ? "pass" : "fail")
       << " mismatches " << forced.size() << "\n";
    for (const auto& mm : forced)
        os << "  mismatch " << mm.a.str() << " " << mm.b.str() << " predicted zero value "
           << rational_str(mm.value) << "\n";
    os << "predicate closed-form-vs-enumeration status "
       << (disagreements.empty() ? "pass" : "fail") << " checked " << checked
       << " disagreements " << disagreements.size() << "\n";
    for (const auto& [x, y] : disagreements)
        os << "  disagree " << x.str() << " " << y.str() << "\n";
    os << "overall " << (ok ? "pass" : "fail") << "\n";
    return {ok, os.str()};
}

struct TriangularParams {
    std::string ts = "0,1,2";
    int d = 3;
    std::string input;
};

RunResult run_triangular(const TriangularParams& p) {
    if (p.d < 0) throw std::runtime_error("verify triangular needs --d >= 0");
    const unsigned d = static_cast<unsigned>(p.d);
    std::vector<std::pair<std::string, MomentSequence>> instances;
    if (!p.input.empty()) {
        instances.emplace_back("input " + p.input, read_moment_sequence(slurp(p.input)));
    } else {
        for (unsigned t : parse_unsigned_list(p.ts))
            instances.emplace_back("t=" + std::to_string(t), disk_moments(t, d));
    }
    bool ok = true;
    std::ostringstream os;
    os << "config suite triangular d " << d << "\n";
    for (const auto& [label, y] : instances) {
        os << "instance " << label << "\n";
        const GramSchmidtOutcome gs = try_gram_schmidt(MomentMatrix::build(y, d));
        if (!gs.positive_definite) {
            os << "status fail note moment matrix not positive definite at index "
               << gs.failure_index << "\n";
            ok = false;
            continue;
        }
        os << "positive_definite yes\n";
        const EquivalenceReport rep = verify_full_triangularity_equiv(*gs.basis);
        os << render_equivalence_report(rep);
        if (y.variable_count() == 2)
            os << "product_form "
               << (is_product_rank_test(y, d).is_product ? "yes" : "no") << "\n";
        ok = ok && rep.equivalent;
    }
    os << "overall " << (ok ? "pass" : "fail") << "\n";
    return {ok, os.str()};
}

struct ConditionalParams {
    int d = 1;
    std::uint64_t seed = 7;
    std::string sigma = "2";
    int t = 1;
    std::string grouping = "1|2,3";
    std::string input;
};

RunResult run_conditional(const ConditionalParams& p) {
    if (p.d < 0) throw std::runtime_error("verify conditional needs --d >= 0");
    const unsigned d = static_cast<unsigned>(p.d);
    std::vector<std::pair<std::string, MomentSequence>> instances;
    if (!p.input.empty()) {
        instances.emplace_back("input " + p.input, read_moment_sequence(slurp(p.input)));
    } else {
        MeasureOptions mo;
        mo.family = "grouped";
        mo.grouping = p.grouping;
        mo.blocks = "laguerre:" + p.sigma + "|disk:" + std::to_string(p.t);
        instances.emplace_back("grouped-product " + mo.blocks,
                               resolve_measure(mo, static_cast<int>(d)).y);
        // Generic endpoint: random atoms, retried deterministically until the
        // moment matrix passes the positive-definite gate.
        Rng rng(p.seed);
        const std::size_t need = GLexBasis::enumerate(3, d).size() + 2;
        for (unsigned attempt = 0; attempt < 100; ++attempt) {
            Rng stream = rng.fork(attempt);
            const AtomicMeasure m = random_atomic_measure(stream, 3, need, -6, 6, 4);
            const MomentSequence y = atomic_moments(m, d);
            if (try_gram_schmidt(MomentMatrix::build(y, d)).positive_definite) {
                instances.emplace_back("generic-atomic seed=" + std::to_string(p.seed) +
                                           " attempt=" + std::to_string(attempt),
                                       y);
                break;
            }
        }
        if (instances.size() < 2)
            throw std::runtime_error("no positive-definite random instance found");
    }
    bool ok = true;
    std::ostringstream os;
    os << "config suite conditional d " << d << " grouping " << p.grouping << "\n";
    for (const auto& [label, y] : instances) {
        os << "instance " << label << "\n";
        const Grouping split = Grouping::parse(y.variable_count(), p.grouping);
        const OrthoBasis B = gram_schmidt(MomentMatrix::build(y, d));
        const EquivalenceReport rep = verify_conditional_equiv(B, split);
        os << render_equivalence_report(rep);
        ok = ok && rep.equivalent;
    }
    os << "overall " << (ok ? "pass" : "fail") << "\n";
    return {ok, os.str()};
}

struct PairsParams {
    unsigned samples = 20;
    std::uint64_t seed = 7;
    std::size_t vars = 3;
};

RunResult run_pairs(const PairsParams& p) {
    if (p.vars < 3) throw std::runtime_error("verify pairs needs --vars >= 3");
    std::vector<std::pair<std::string, MomentSequence>> instances;
    instances.emplace_back("reference",
                           atomic_moments(zero_partial_covariance_instance(), 1));
    Rng rng(p.seed);
    for (unsigned k = 0; k < p.samples; ++k) {
        bool placed = false;
        for (unsigned attempt = 0; attempt < 100 && !placed; ++attempt) {
            Rng stream = rng.fork(k * 100 + attempt);
            const AtomicMeasure m =
                random_atomic_measure(stream, p.vars, p.vars + 2, -4, 4, 3);
            const MomentSequence y = center_moments(atomic_moments(m, 1));
            if (try_gram_schmidt(MomentMatrix::build(y, 1)).positive_definite) {
                instances.emplace_back("sample=" + std::to_string(k), y);
                placed = true;
            }
        }
        if (!placed)
            throw std::runtime_error("no positive-definite sample at index " +
                                     std::to_string(k));
    }

    bool ok = true;
    std::ostringstream os;
    os << "config suite pairs samples " << p.samples << " seed " << p.seed << " vars "
       << p.vars << "\n";
    for (const auto& [label, y] : instances) {
        const CovarianceView V = covariance_block(MomentMatrix::build(y, 1));
        bool inst_ok = true;
        std::ostringstream lines;
        for (std::size_t i = 0; i < V.variable_count(); ++i)
            for (std::size_t j = i + 1; j < V.variable_count(); ++j) {
                const Rational pc = partial_covariance(V, i, j);
                const PairAgreementReport rep = pair_agreement_check(y, i, j);
                const bool pair_ok = rep.agree && ((pc == 0) == rep.precision_zero);
                inst_ok = inst_ok && pair_ok;
                lines << "  pair " << (i + 1) << " " << (j + 1) << " partial_covariance "
                      << rational_str(pc) << " precision "
                      << rational_str(rep.precision_entry) << " vanishes "
                      << (rep.precision_zero ? "yes" : "no") << " triangular "
                      << (rep.conditionally_triangular ? "yes" : "no") << " agree "
                      << (pair_ok ? "yes" : "no") << "\n";
            }
        os << "instance " << label << " status " << (inst_ok ? "pass" : "fail") << "\n"
           << lines.str();
        ok = ok && inst_ok;
    }
    os << "overall " << (ok ? "pass" : "fail") << "\n";
    return {ok, os.str()};
}

struct CiParams {
    unsigned trials = 20;
    std::uint64_t seed = 7;
    int d = 1;
    std::size_t atom_count = 5;
};

RunResult run_ci(const CiParams& p) {
    if (p.d < 0) throw std::runtime_error("verify ci needs --d >= 0");
    const unsigned d = static_cast<unsigned>(p.d);
    std::ostringstream os;
    os << "config suite ci trials " << p.trials << " seed " << p.seed << " d " << d
       << " atom-count " << p.atom_count << "\n";
    Rng rng(p.seed);
    for (unsigned trial = 0; trial < p.trials; ++trial) {
        Rng stream = rng.fork(trial);
        std::vector<std::vector<Rational>> pts(p.atom_count, std::vector<Rational>(3));
        for (auto& pt : pts) {
            pt[0] = Rational(stream.int_in(-3, 3));
            pt[1] = Rational(stream.int_in(-2, 2));
            pt[2] = Rational(stream.int_in(-2, 2));
        }
        std::vector<long long> raw(p.atom_count);
        long long total = 0;
        for (auto& w : raw) {
            w = stream.int_in(1, 5);
            total += w;
        }
        std::vector<Rational> weights(p.atom_count);
        for (std::size_t l = 0; l < p.atom_count; ++l)
            weights[l] = Rational(Integer(raw[l]), Integer(total));
        std::vector<Rational> eps(p.atom_count);
        for (std::size_t l = 0; l < p.atom_count; ++l)
            eps[l] = Rational(Integer(l), Integer(16));
        try {
            const CiExperimentReport rep =
                ci_experiment(AtomicMeasure(std::move(pts), std::move(weights)), d, eps);
            os << "trial " << trial << " positive_definite yes conditional_independence "
               << (rep.conditional_independence ? "yes" : "no") << " vanishing_condition "
               << (rep.vanishing_condition ? "yes" : "no") << " violations "
               << rep.violations.size() << "\n";
            if (!rep.vanishing_condition && !rep.violations.empty()) {
                for (const auto& w : rep.violations)
                    os << "  witness " << w.row.str() << " " << w.col.str() << " value "
                       << rational_str(w.value) << "\n";
                os << "counterexample_found trial " << trial << "\n";
                os << "overall pass\n";
                return {true, os.str()};
            }
        } catch (const std::domain_error&) {
            os << "trial " << trial << " positive_definite no\n";
        } catch (const std::invalid_argument& e) {
            os << "trial " << trial << " skipped note " << e.what() << "\n";
        }
    }
    os << "counterexample_found none\n";
    os << "overall fail\n";
    return {false, os.str()};
}

// Data-driven mode: a json file listing suite invocations, so a whole
// verification session is reproducible from one artifact.
RunResult run_config(const std::string& path) {
    const json cfg = json::parse(slurp(path));
    if (!cfg.contains("suites") || !cfg["suites"].is_array())
        throw std::runtime_error("config needs a top-level \"suites\" array");
    bool ok = true;
    std::ostringstream os;
    for (const auto& item : cfg["suites"]) {
        const std::string suite = item.value("suite", "");
        RunResult r;
        if (suite == "product") {
            ProductParams p;
            p.n = item.value("n", p.n);
            p.d = item.value("d", p.d);
            p.samples = item.value("samples", p.samples);
            p.seed = item.value("seed", p.seed);
            p.sigma_max = item.value("sigma-max", p.sigma_max);
            p.jobs = item.value("jobs", p.jobs);
            r = run_product(p);
        } else if (suite == "grouped") {
            GroupedParams p;
            p.d = item.value("d", p.d);
            p.sigma = item.value("sigma", p.sigma);
            p.t = item.value("t", p.t);
            p.grouping = item.value("grouping", p.grouping);
            p.input = item.value("input", p.input);
            r = run_grouped(p);
        } else if (suite == "triangular") {
            TriangularParams p;
            p.ts = item.value("t", p.ts);
            p.d = item.value("d", p.d);
            p.input = item.value("input", p.input);
            r = run_triangular(p);
        } else if (suite == "conditional") {
            ConditionalParams p;
            p.d = item.value("d", p.d);
            p.seed = item.value("seed", p.seed);
            p.sigma = item.value("sigma", p.sigma);
            p.t = item.value("t", p.t);
            p.grouping = item.value("grouping", p.grouping);
            p.input = item.value("input", p.input);
            r = run_conditional(p);
        } else if (suite == "pairs") {
            PairsParams p;
            p.samples = item.value("samples", p.samples);
            p.seed = item.value("seed", p.seed);
            p.vars = item.value("vars", p.vars);
            r = run_pairs(p);
        } else if (suite == "ci") {
            CiParams p;
            p.trials = item.value("trials", p.trials);
            p.seed = item.value("seed", p.seed);
            p.d = item.value("d", p.d);
            p.atom_count = item.value("atom-count", p.atom_count);
            r = run_ci(p);
        } else {
            throw std::runtime_error("unknown suite '" + suite + "' in " + path);
        }
        ok = ok && r.ok;
        os << r.text << "\n";
    }
    os << "config_overall " << (ok ? "pass" : "fail") << "\n";
    return {ok, os.str()};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact moment matrices, orthogonal bases, and inverse zero patterns"};
    app.require_subcommand(1);
    int exit_code = 0;

    PlainArgs gen;
    auto* cg = app.add_subcommand("generate", "write the moment sequence of a measure family");
    add_measure_options(cg, gen.mo);
    cg->add_option("--d", gen.d, "half-order: moments are tabulated to degree 2d");
    cg->add_option("--output", gen.output, "output file (default stdout)");
    cg->callback([&] { exit_code = cmd_generate(gen); });

    PlainArgs mat;
    auto* cm = app.add_subcommand("matrix", "moment matrix M_d of a sequence");
    add_measure_options(cm, mat.mo);
    cm->add_option("--d", mat.d, "truncation order");
    cm->add_option("--format", mat.format, "structured | csv")
        ->check(CLI::IsMember({"structured", "csv"}));
    cm->add_option("--output", mat.output, "output file (default stdout)");
    cm->callback([&] { exit_code = cmd_matrix(mat); });

    PlainArgs bas;
    auto* cb = app.add_subcommand("basis",
                                  "monic orthogonal basis rows and norms (requires a "
                                  "positive-definite moment matrix)");
    add_measure_options(cb, bas.mo);
    cb->add_option("--d", bas.d, "truncation order");
    cb->add_option("--output", bas.output, "output file (default stdout)");
    cb->callback([&] { exit_code = cmd_basis(bas); });

    PlainArgs inv;
    auto* ci = app.add_subcommand("inverse", "exact inverse of M_d");
    add_measure_options(ci, inv.mo);
    ci->add_option("--d", inv.d, "truncation order");
    ci->add_option("--format", inv.format, "structured | csv | grid")
        ->check(CLI::IsMember({"structured", "csv", "grid"}));
    ci->add_option("--output", inv.output, "output file (default stdout)");
    ci->callback([&] { exit_code = cmd_inverse(inv); });

    PredictArgs pre;
    auto* cp = app.add_subcommand("predict",
                                  "forced-zero pattern from the divisibility predicate alone");
    cp->add_option("--n", pre.n, "number of variables");
    cp->add_option("--d", pre.d, "truncation order");
    cp->add_option("--grouping", pre.grouping,
                   "variable blocks, e.g. \"1|2,3\" (default: singletons)");
    cp->add_option("--format", pre.format, "grid | structured")
        ->check(CLI::IsMember({"grid", "structured"}));
    cp->add_option("--output", pre.output, "output file (default stdout)");
    cp->callback([&] { exit_code = cmd_predict(pre); });

    auto* cs = app.add_subcommand("stats", "covariance and partial-correlation reports");
    cs->require_subcommand(1);
    StatsArgs spa;
    auto* csp = cs->add_subcommand("partial",
                                   "partial covariances and precision entries for every pair");
    add_measure_options(csp, spa.mo);
    csp->add_option("--d", spa.d, "half-order of the source sequence (default 1)");
    csp->add_flag("--center", spa.center, "recenter the variables first");
    csp->add_option("--output", spa.output, "output file (default stdout)");
    csp->callback([&] { exit_code = cmd_stats_partial(spa); });

    StatsArgs spr;
    auto* cspr = cs->add_subcommand(
        "pair", "precision-entry vs conditional-triangularity bridge for one pair");
    add_measure_options(cspr, spr.mo);
    cspr->add_option("--d", spr.d, "half-order of the source sequence (default 1)");
    cspr->add_flag("--center", spr.center, "recenter the variables first");
    cspr->add_option("--i", spr.i, "first variable (1-based)")->required();
    cspr->add_option("--j", spr.j, "second variable (1-based)")->required();
    cspr->add_option("--output", spr.output, "output file (default stdout)");
    cspr->callback([&] { exit_code = cmd_stats_pair(spr); });

    auto* cv = app.add_subcommand("verify", "verification suites");
    cv->require_subcommand(0, 1);
    std::string config_path;
    std::string verify_output;
    cv->add_option("--config", config_path, "json file listing suite invocations");
    cv->add_option("--output", verify_output, "output file (default stdout)");

    ProductParams vp;
    auto* cvp = cv->add_subcommand(
        "product", "inverse zero pattern equals the lcm-degree predicate on product measures");
    cvp->add_option("--n", vp.n, "number of variables");
    cvp->add_option("--d", vp.d, "truncation order");
    cvp->add_option("--samples", vp.samples, "number of random parameter draws");
    cvp->add_option("--seed", vp.seed, "random seed");
    cvp->add_option("--sigma-max", vp.sigma_max, "parameters drawn from 0..sigma-max");
    cvp->add_option("--jobs", vp.jobs, "parallel instances (deterministic merge)");
    cvp->callback([&] {
        const RunResult r = run_product(vp);
        emit(verify_output, r.text);
        exit_code = r.ok ? 0 : 1;
    });

    GroupedParams vg;
    auto* cvg = cv->add_subcommand(
        "grouped", "forced zeros of the blockwise predicate on a grouped product measure");
    cvg->add_option("--d", vg.d, "truncation order");
    cvg->add_option("--sigma", vg.sigma, "laguerre block parameters");
    cvg->add_option("--t", vg.t, "disk block parameter");
    cvg->add_option("--grouping", vg.grouping, "variable blocks");
    cvg->add_option("--input", vg.input, "moment-sequence file instead of the built-in family");
    cvg->callback([&] {
        const RunResult r = run_grouped(vg);
        emit(verify_output, r.text);
        exit_code = r.ok ? 0 : 1;
    });

    TriangularParams vt;
    auto* cvt = cv->add_subcommand(
        "triangular", "full triangularity equals the nested-inverse zero pattern");
    cvt->add_option("--t", vt.ts, "disk parameters to test, comma separated");
    cvt->add_option("--d", vt.d, "truncation order");
    cvt->add_option("--input", vt.input, "moment-sequence file instead of the disk family");
    cvt->callback([&] {
        const RunResult r = run_triangular(vt);
        emit(verify_output, r.text);
        exit_code = r.ok ? 0 : 1;
    });

    ConditionalParams vc;
    auto* cvc = cv->add_subcommand(
        "conditional", "conditional triangularity equals the vanishing condition");
    cvc->add_option("--d", vc.d, "truncation order");
    cvc->add_option("--seed", vc.seed, "random seed for the generic instance");
    cvc->add_option("--sigma", vc.sigma, "laguerre block parameters");
    cvc->add_option("--t", vc.t, "disk block parameter");
    cvc->add_option("--grouping", vc.grouping, "two contiguous blocks, e.g. \"1|2,3\"");
    cvc->add_option("--input", vc.input, "moment-sequence file instead of the built-ins");
    cvc->callback([&] {
        const RunResult r = run_conditional(vc);
        emit(verify_output, r.text);
        exit_code = r.ok ? 0 : 1;
    });

    PairsParams vpr;
    auto* cvpr = cv->add_subcommand(
        "pairs", "partial covariance vanishes exactly with the precision entry");
    cvpr->add_option("--samples", vpr.samples, "number of random instances");
    cvpr->add_option("--seed", vpr.seed, "random seed");
    cvpr->add_option("--vars", vpr.vars, "number of variables (>= 3)");
    cvpr->callback([&] {
        const RunResult r = run_pairs(vpr);
        emit(verify_output, r.text);
        exit_code = r.ok ? 0 : 1;
    });

    CiParams vci;
    auto* cvci = cv->add_subcommand(
        "ci", "conditional independence without the vanishing condition (counterexample search)");
    cvci->add_option("--trials", vci.trials, "number of seeded trials");
    cvci->add_option("--seed", vci.seed, "random seed");
    cvci->add_option("--d", vci.d, "truncation order");
    cvci->add_option("--atom-count", vci.atom_count, "atoms per trial measure");
    cvci->callback([&] {
        const RunResult r = run_ci(vci);
        emit(verify_output, r.text);
        exit_code = r.ok ? 0 : 1;
    });

    cv->callback([&] {
        if (!cv->get_subcommands().empty()) return;
        if (config_path.empty())
            throw std::runtime_error("verify needs a suite subcommand or --config FILE");
        const RunResult r = run_config(config_path);
        emit(verify_output, r.text);
        exit_code = r.ok ? 0 : 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
