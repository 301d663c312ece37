#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "bent3/errors.hpp"
#include "bent3/families.hpp"
#include "bent3/int_math.hpp"
#include "bent3/mm_derivative.hpp"
#include "bent3/multivariate.hpp"
#include "bent3/parallel.hpp"
#include "bent3/spectrum.hpp"
#include "bent3_cli.hpp"

namespace bent3::cli {

namespace {

struct FamilyArgs {
    std::string family;
    int k = 1;
    std::string a1;
    std::string sign = "+";
    std::string which;
    std::string modulus;
};

struct Options {
    unsigned threads = 1;
    bool force_large = false;
    FamilyArgs fam;
    std::string table;
    std::string out;
    std::string cert;
    bool naive = false;
    std::string v_source;
    std::string basis_file;
    std::string w_file;
    bool validate = false;
    int sweep_n = 4;
    std::uint64_t seed = 1;
    std::size_t samples = 0;
};

int parse_sign(const std::string& s) {
    if (s == "+" || s == "+1" || s == "1") return 1;
    if (s == "-" || s == "-1") return -1;
    throw std::invalid_argument("sign must be + or -");
}

int max_degree(const Options& o) { return o.force_large ? kHardMaxDegree : 0; }

FieldRef make_field(const Options& o, int n) {
    std::optional<std::vector<int>> modulus;
    if (!o.fam.modulus.empty()) modulus = parse_modulus(o.fam.modulus);
    return FieldCtx::create(n, modulus, max_degree(o));
}

FamilySpec family_spec(const Options& o, const FieldCtx& ctx) {
    const auto fam = parse_family(o.fam.family);
    if (!fam) throw std::invalid_argument("unknown family '" + o.fam.family + "'");
    FamilySpec spec;
    spec.family = *fam;
    spec.k = o.fam.k;
    spec.sign = parse_sign(o.fam.sign);
    if (!o.fam.a1.empty()) spec.a1 = ctx.parse_element(o.fam.a1);
    if (!o.fam.which.empty()) {
        spec.which = parse_exceptional(o.fam.which);
        if (!spec.which) throw std::invalid_argument("unknown case '" + o.fam.which + "'");
    }
    return spec;
}

TernaryFn build_function(const Options& o, std::ostream& err) {
    const auto fam = parse_family(o.fam.family);
    if (!fam) throw std::invalid_argument("unknown family '" + o.fam.family + "'");
    if (o.fam.k < 1) throw std::invalid_argument("k must be positive");
    const FieldRef ctx = make_field(o, family_field_degree(*fam, o.fam.k));
    const FamilySpec spec = family_spec(o, *ctx);
    for (const auto& w : family_warnings(spec)) err << "warning: " << w << "\n";
    return make_family(ctx, spec);
}

TernaryFn load_function(const Options& o, std::ostream& err) {
    if (!o.table.empty()) return read_table_file(o.table);
    if (o.fam.family.empty()) throw std::invalid_argument("give --table or --family");
    return build_function(o, err);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::invalid_argument("cannot write '" + path + "'");
    os << content;
}

// Writes to the file, or to out when path is empty.
void emit(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty())
        out << content;
    else
        write_file(path, content);
}

Subspace read_basis_file(const FieldCtx& ctx, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open basis file '" + path + "'");
    std::vector<FieldElem> gens;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) gens.push_back(ctx.parse_element(tok));
    }
    Subspace v = span_of(ctx, gens);
    if (v.dim() != static_cast<int>(gens.size()))
        throw std::invalid_argument("basis file '" + path + "' lists dependent elements");
    return v;
}

int cmd_construct(const Options& o, std::ostream& out, std::ostream& err) {
    const TernaryFn f = build_function(o, err);
    const Certificate cert = check_bent(f);
    const std::string table_path = o.out.empty() ? o.fam.family + "-k" + std::to_string(o.fam.k) + ".tbf" : o.out;
    const std::string cert_path = o.cert.empty() ? table_path + ".cert" : o.cert;
    std::ostringstream table;
    write_table(table, f);
    write_file(table_path, table.str());
    write_file(cert_path, format_certificate(cert, f));
    out << "table " << table_path << "\ncertificate " << cert_path << "\n";
    out << "bent=" << (cert.is_bent ? "true" : "false") << " regularity=" << regularity_name(cert.regularity)
        << " degree=" << cert.degree << "\n";
    return cert.is_bent ? kVerified : kPropertyFails;
}

int cmd_spectrum(const Options& o, std::ostream& out, std::ostream& err) {
    const TernaryFn f = load_function(o, err);
    const WalshSpectrum s = o.naive ? spectrum_naive(f, o.force_large) : spectrum_fast(f);
    std::ostringstream os;
    for (std::uint32_t b = 0; b < s.size(); ++b) os << b << " " << s[b].u << " " << s[b].v << " " << eis_norm(s[b]) << "\n";
    emit(o.out, os.str(), out);
    return kVerified;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    const TernaryFn f = load_function(o, err);
    const Certificate cert = check_bent(f);
    emit(o.out, format_certificate(cert, f), out);
    if (!o.cert.empty()) {
        std::ifstream in(o.cert);
        if (!in) throw std::invalid_argument("cannot open certificate '" + o.cert + "'");
        const auto kv = parse_certificate(in);
        const auto it = kv.find("table_sha256");
        if (it == kv.end() || it->second != table_sha256(f)) {
            err << "table hash does not match certificate\n";
            return kPropertyFails;
        }
    }
    return cert.is_bent ? kVerified : kPropertyFails;
}

int cmd_mm_check(const Options& o, std::ostream& out, std::ostream&) {
    if (o.table.empty()) throw std::invalid_argument("mm-check needs --table");
    const TernaryFn f = read_table_file(o.table);
    const FieldCtx& ctx = f.field();
    const int n = ctx.degree();
    Transcript t;
    bool passed = false;

    if (o.v_source == "lemma1") {
        if (n % 4) throw std::invalid_argument("lemma1 needs n divisible by 4");
        const FieldElem a1 = o.fam.a1.empty() ? ctx.generator() : ctx.parse_element(o.fam.a1);
        auto lemma = build_V_binomial(ctx, n / 4, a1, parse_sign(o.fam.sign));
        t.append(lemma.transcript);
        auto res = check_thm2(f, lemma.v);
        t.append(res.transcript);
        passed = lemma.verified && res.passed;
    } else if (o.v_source == "lemma2") {
        if (n % 2) throw std::invalid_argument("lemma2 needs even n");
        const int k = n / 2;
        auto lemma = build_V_trinomial(ctx, k, parse_sign(o.fam.sign));
        t.append(lemma.transcript);
        MMResult res;
        if (k % 2) {
            Subspace w;
            w.basis = ctx.subfield_basis(k);
            t.note("criterion prop3 with W = GF(3^" + std::to_string(k) + ")");
            res = check_prop3(f, lemma.v, w);
        } else {
            t.note("criterion thm2");
            res = check_thm2(f, lemma.v);
        }
        t.append(res.transcript);
        passed = lemma.verified && res.passed;
    } else if (o.v_source == "basis-file") {
        if (o.basis_file.empty()) throw std::invalid_argument("basis-file needs --basis");
        const Subspace v = read_basis_file(ctx, o.basis_file);
        if (!o.w_file.empty()) {
            const Subspace w = read_basis_file(ctx, o.w_file);
            if (2 * v.dim() != n || w.dim() != v.dim()) throw std::invalid_argument("dim V and dim W must be n/2");
            t.note("criterion prop3");
            auto res = check_prop3(f, v, w);
            t.append(res.transcript);
            passed = res.passed;
        } else if (2 * v.dim() == n && trace_gram(ctx, v, v).rank() == v.dim()) {
            t.note("criterion thm2");
            auto res = check_thm2(f, v);
            t.append(res.transcript);
            passed = res.passed;
        } else {
            t.note("criterion prop1 (second derivatives on V, bentness checked separately)");
            const bool bent = t.check("bent", check_bent(f).is_bent);
            passed = prop1_given_V(f, v, &t) && bent;
        }
    } else {
        throw std::invalid_argument("--V must be lemma1, lemma2 or basis-file");
    }
    t.note(std::string("result ") + (passed ? "PASS" : "FAIL"));
    emit(o.out, t.str(), out);
    return passed ? kVerified : kPropertyFails;
}

int cmd_expand(const Options& o, std::ostream& out, std::ostream& err) {
    const auto fam = parse_family(o.fam.family);
    if (!fam) throw std::invalid_argument("unknown family '" + o.fam.family + "'");
    std::optional<ExceptionalCase> which;
    if (!o.fam.which.empty()) {
        which = parse_exceptional(o.fam.which);
        if (!which) throw std::invalid_argument("unknown case '" + o.fam.which + "'");
    }
    const MultivariatePoly p = expand_family_formal(*fam, o.fam.k, which);
    std::ostringstream os;
    os << p.to_string() << "\n";
    int code = kVerified;
    if (o.validate) {
        Options table_opts = o;
        const TernaryFn f = build_function(table_opts, err);
        const FieldElem a = embedded_quartic_root(f.field(), family_quartic(*fam));
        const TernaryFn g = realize(p, f.field_ref(), a);
        const bool same = std::equal(f.table().begin(), f.table().end(), g.table().begin());
        os << "CHECK pointwise-validation " << (same ? "PASS" : "FAIL") << "\n";
        if (!same) code = kPropertyFails;
    }
    emit(o.out, os.str(), out);
    return code;
}

int cmd_sweep(const Options& o, std::ostream& out, std::ostream&) {
    if (o.sweep_n != 4 && o.sweep_n != 8) throw std::invalid_argument("sweep supports n = 4 or 8");
    const FieldRef ctx = make_field(o, o.sweep_n);
    const int k = o.sweep_n / 4;

    std::vector<std::uint32_t> logs;
    for (std::uint32_t l = 1; l < ctx->order(); l += 2) logs.push_back(l);
    if (o.samples > 0 && o.samples < logs.size()) {
        std::mt19937_64 rng(o.seed);
        std::shuffle(logs.begin(), logs.end(), rng);
        logs.resize(o.samples);
        std::sort(logs.begin(), logs.end());
    }

    std::ostringstream os;
    std::size_t rows = 0, bent = 0, regular = 0, degree4 = 0;
    for (std::uint32_t l : logs) {
        for (int sign : {1, -1}) {
            const TernaryFn f = make_binomial_general(ctx, k, ctx->exp(l), sign);
            const WalshSpectrum s = spectrum_fast(f);
            const Certificate cert = check_bent(f, s);
            std::string raw;
            for (const auto& c : s.coeffs) raw += std::to_string(c.u) + "," + std::to_string(c.v) + ";";
            os << "a1=g^" << l << " sign=" << (sign > 0 ? '+' : '-') << " bent=" << (cert.is_bent ? "true" : "false")
               << " regularity=" << regularity_name(cert.regularity) << " degree=" << cert.degree
               << " spectrum_sha256=" << sha256_hex(raw) << "\n";
            ++rows;
            bent += cert.is_bent;
            regular += cert.regularity == Regularity::Regular;
            degree4 += cert.degree == 4;
        }
    }
    os << "summary n=" << o.sweep_n << " rows=" << rows << " bent=" << bent << " regular=" << regular
       << " degree4=" << degree4 << "\n";
    emit(o.out, os.str(), out);
    return bent == rows ? kVerified : kPropertyFails;
}

void add_family_options(CLI::App* sub, Options& o, bool need_family) {
    auto* fam = sub->add_option("--family", o.fam.family,
                                "binomial-general, binomial-k3mod4, trinomial, exceptional-T7, exceptional-T8, baseline");
    if (need_family) fam->required();
    sub->add_option("--k", o.fam.k, "Subfield parameter k");
    sub->add_option("--a1", o.fam.a1, "Nonsquare coefficient, g^<e> or t:<trits>");
    sub->add_option("--sign", o.fam.sign, "+ or -");
    sub->add_option("--which", o.fam.which, "T7-case1, T7-case3 or T8");
    sub->add_option("--modulus", o.fam.modulus, "Field modulus c0,c1,...,cn (constant term first)");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Ternary bent function constructions and verification", "bent3"};
    app.require_subcommand(1);
    app.add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
    app.add_flag("--force-large", o.force_large, "Allow n above the configured limit");

    auto* construct = app.add_subcommand("construct", "Build a family member, write its table and certificate");
    add_family_options(construct, o, true);
    construct->add_option("--out", o.out, "Table file");
    construct->add_option("--cert", o.cert, "Certificate file (default: <out>.cert)");

    auto* spectrum = app.add_subcommand("spectrum", "Export the Walsh spectrum as 'b u v norm' lines");
    add_family_options(spectrum, o, false);
    spectrum->add_option("--table", o.table, "Table file");
    spectrum->add_option("--out", o.out, "Output file (default: stdout)");
    spectrum->add_flag("--naive", o.naive, "Point-by-point evaluation");

    auto* verify = app.add_subcommand("verify", "Recompute the certificate of a table");
    add_family_options(verify, o, false);
    verify->add_option("--table", o.table, "Table file");
    verify->add_option("--cert", o.cert, "Certificate whose table hash must match");
    verify->add_option("--out", o.out, "Output file (default: stdout)");

    auto* mm = app.add_subcommand("mm-check", "Maiorana-McFarland criteria on a table");
    mm->add_option("--table", o.table, "Table file")->required();
    mm->add_option("--V", o.v_source, "lemma1, lemma2 or basis-file")->required();
    mm->add_option("--basis", o.basis_file, "File listing a basis of V");
    mm->add_option("--W", o.w_file, "File listing a basis of W (selects the permutation criterion)");
    mm->add_option("--a1", o.fam.a1, "Nonsquare a1 for lemma1");
    mm->add_option("--sign", o.fam.sign, "+ or -");
    mm->add_option("--out", o.out, "Transcript file (default: stdout)");

    auto* expand = app.add_subcommand("expand", "Four-variable form over GF(3^k)");
    add_family_options(expand, o, true);
    expand->add_flag("--validate", o.validate, "Compare pointwise with the univariate table");
    expand->add_option("--out", o.out, "Output file (default: stdout)");

    auto* sweep = app.add_subcommand("sweep", "All nonsquare a1 and both signs of the general binomial");
    sweep->add_option("--n", o.sweep_n, "4 or 8");
    sweep->add_option("--seed", o.seed, "Seed for --samples");
    sweep->add_option("--samples", o.samples, "Number of a1 values to draw (0 = all)");
    sweep->add_option("--modulus", o.fam.modulus, "Field modulus");
    sweep->add_option("--out", o.out, "Output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kVerified : kUsage;
    }
    set_default_threads(o.threads);

    try {
        if (*construct) return cmd_construct(o, out, err);
        if (*spectrum) return cmd_spectrum(o, out, err);
        if (*verify) return cmd_verify(o, out, err);
        if (*mm) return cmd_mm_check(o, out, err);
        if (*expand) return cmd_expand(o, out, err);
        if (*sweep) return cmd_sweep(o, out, err);
    } catch (const ConsistencyError& e) {
        err << "error: " << e.what() << "\n";
        return kPropertyFails;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kPropertyFails;
    }
    return kUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"bent3"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace bent3::cli
