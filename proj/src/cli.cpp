#include "subword/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <optional>

#include "subword/complexity.hpp"
#include "subword/lacunary.hpp"
#include "subword/sequence_spec.hpp"
#include "subword/verify.hpp"

namespace subword {

namespace {

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::uint32_t word_field_order(const BuiltSequence& built) {
    if (built.field) return built.field->order();
    return smallest_prime_at_least(static_cast<std::uint32_t>(built.word.alphabet_size()));
}

struct Options {
    std::string seq;
    std::string expr;
    std::string out_file;
    std::string engine = "fast";
    std::string field;
    std::string mode = "formula";
    std::vector<std::string> checks;
    std::uint64_t n = 0;
    std::uint64_t max_m = 0;
    std::uint64_t m = 0;
    std::uint32_t base = 2;
    std::uint64_t d = 2;
    std::uint64_t e = 3;
    std::uint64_t bound = 0;
    std::optional<std::uint64_t> verify_n;
    std::optional<std::uint64_t> verify_m;
    std::optional<std::uint32_t> verify_q;
};

int cmd_gen(const Options& o, std::ostream& out) {
    const auto built = build_sequence(parse_sequence_spec(o.seq));
    const auto prefix = built.word.prefix(o.n);
    std::ofstream file;
    if (!o.out_file.empty()) {
        file.open(o.out_file);
        if (!file) throw Error("cannot open '" + o.out_file + "' for writing");
    }
    std::ostream& dest = o.out_file.empty() ? out : file;
    dest << "q=" << word_field_order(built) << " n0=0\n";
    for (std::size_t i = 0; i < prefix.size(); ++i) dest << (i ? " " : "") << prefix[i];
    dest << '\n';
    return exit_ok;
}

int cmd_complexity(const Options& o, std::ostream& out) {
    const auto spec = parse_sequence_spec(o.seq);
    const auto built = build_sequence(spec);
    const auto engine = parse_engine(o.engine);
    const auto profile = compute_profile(built.word.view(o.n), o.max_m, engine);
    const auto source = quoted(print_sequence_spec(spec));
    out << "source,engine,N,m,p_m\n";
    for (std::size_t m = 1; m <= o.max_m; ++m)
        out << source << ',' << engine_name(engine) << ',' << o.n << ',' << m << ',' << profile.p(m) << '\n';
    return exit_ok;
}

int cmd_series(const Options& o, std::ostream& out) {
    const auto expr = parse_series_expr(o.expr);
    std::optional<FieldSpec> override_field;
    if (!o.field.empty()) override_field = FieldSpec::parse(o.field);
    const auto field = infer_series_field(expr, override_field);
    const auto series = evaluate_series(expr, field);
    const auto from = -static_cast<std::int64_t>(series.depth());
    const auto to = static_cast<std::int64_t>(o.n) - 1;
    out << "n,a_n\n";
    if (to < from) return exit_ok;
    const auto coeffs = ls_coefficients(series, from, to);
    for (std::int64_t i = from; i <= to; ++i) out << i << ',' << coeffs[static_cast<std::size_t>(i - from)] << '\n';
    return exit_ok;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    SuiteParams params{o.verify_n, o.verify_m, o.verify_q};
    const auto results = run_suite(o.checks, params);
    write_results_csv(out, results);
    write_results_summary(err, results);
    for (const auto& r : results)
        if (r.status == CheckStatus::fail) return exit_check_failed;
    return exit_ok;
}

int cmd_entropy(const Options& o, std::ostream& out) {
    const auto spec = parse_sequence_spec(o.seq);
    const auto built = build_sequence(spec);
    const auto profile = profile_fast(built.word.view(o.n), o.m);
    out << "source,N,m,base,p_m,entropy\n"
        << quoted(print_sequence_spec(spec)) << ',' << o.n << ',' << o.m << ',' << o.base << ',' << profile.p(o.m)
        << ',' << std::setprecision(12) << entropy_estimate(profile, o.m, o.base) << '\n';
    return exit_ok;
}

int cmd_collisions(const Options& o, std::ostream& out) {
    const auto report = collision_scan(DEPairSpec::make(o.d, o.e), o.bound);
    out << "n,count,reps\n";
    for (const auto& c : report.collisions) {
        out << c.n << ',' << c.representations.size() << ',';
        for (std::size_t i = 0; i < c.representations.size(); ++i)
            out << (i ? " " : "") << c.representations[i].first << ':' << c.representations[i].second;
        out << '\n';
    }
    return exit_ok;
}

int cmd_r2(const Options& o, std::ostream& out) {
    const auto mode = parse_r2_mode(o.mode);
    out << "n,mode,r2\n" << o.n << ',' << r2_mode_name(mode) << ',' << r2(o.n, mode) << '\n';
    return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Subword complexity of Laurent series coefficient sequences over finite fields", "subword"};
    app.require_subcommand(1);
    Options o;

    auto* gen = app.add_subcommand("gen", "Print a prefix of a sequence");
    gen->add_option("--seq", o.seq, "Sequence spec")->required();
    gen->add_option("--n", o.n, "Prefix length")->required();
    gen->add_option("--out", o.out_file, "Output file");

    auto* complexity = app.add_subcommand("complexity", "Complexity profile p(m) as CSV");
    complexity->add_option("--seq", o.seq, "Sequence spec")->required();
    complexity->add_option("--n", o.n, "Prefix length")->required();
    complexity->add_option("--max-m", o.max_m, "Largest factor length")->required()->check(CLI::PositiveNumber);
    complexity->add_option("--engine", o.engine, "fast or naive")->check(CLI::IsMember({"fast", "naive"}));

    auto* series = app.add_subcommand("series", "Coefficients of a series expression as CSV");
    series->add_option("expr", o.expr, "Series expression")->required();
    series->add_option("--n", o.n, "Number of coefficients from index 0")->required();
    series->add_option("--field", o.field, "Field override such as F3 or Fq(9;t^2+1)");

    auto* verify = app.add_subcommand("verify", "Run verification checks");
    verify->add_option("checks", o.checks, "Check names (default: all)");
    verify->add_option("--q", o.verify_q, "q parameter");
    verify->add_option("--n", o.verify_n, "Prefix length or horizon");
    verify->add_option("--max-m", o.verify_m, "Largest factor length");

    auto* entropy = app.add_subcommand("entropy", "Entropy estimate log_base p(m) / m");
    entropy->add_option("--seq", o.seq, "Sequence spec")->required();
    entropy->add_option("--n", o.n, "Prefix length")->required();
    entropy->add_option("--m", o.m, "Factor length")->required()->check(CLI::PositiveNumber);
    entropy->add_option("--base", o.base, "Logarithm base")->required();

    auto* collisions = app.add_subcommand("collisions", "Integers with two representations d^k + e^l");
    collisions->add_option("--d", o.d, "First base")->required();
    collisions->add_option("--e", o.e, "Second base")->required();
    collisions->add_option("--N", o.bound, "Upper bound")->required();

    auto* r2cmd = app.add_subcommand("r2", "Number of representations as a sum of two squares");
    r2cmd->add_option("--n", o.n, "Argument")->required();
    r2cmd->add_option("--mode", o.mode, "formula or bruteforce")->check(CLI::IsMember({"formula", "bruteforce"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (gen->parsed()) return cmd_gen(o, out);
        if (complexity->parsed()) return cmd_complexity(o, out);
        if (series->parsed()) return cmd_series(o, out);
        if (verify->parsed()) return cmd_verify(o, out, err);
        if (entropy->parsed()) return cmd_entropy(o, out);
        if (collisions->parsed()) return cmd_collisions(o, out);
        if (r2cmd->parsed()) return cmd_r2(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace subword
