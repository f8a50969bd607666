#include "cli.hpp"
#include "report.hpp"

#include "cproof/corpus.hpp"
#include "cproof/generate.hpp"

#ifdef CPROOF_SYSTEM_CLI11
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif

#include <chrono>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

namespace cproof::cli
{

namespace
{

using clock = std::chrono::steady_clock;

double elapsed_ms( clock::time_point since )
{
    return std::chrono::duration< double, std::milli >( clock::now() - since ).count();
}

std::string read_file( const std::string& path )
{
    std::ifstream in( path, std::ios::binary );
    if ( !in )
        throw std::runtime_error( "cannot open " + path );
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file( const std::string& path, const std::string& text )
{
    std::ofstream out( path, std::ios::binary );
    if ( !out )
        throw std::runtime_error( "cannot write " + path );
    out << text;
}

void report_parse_error( std::ostream& err, const std::string& file, const ParseError& e )
{
    err << file;
    if ( e.line() > 0 )
        err << ":" << e.line() << ":" << e.column();
    else if ( !e.path().empty() )
        err << " at " << e.path();
    err << ": " << e.what() << "\n";
    if ( !e.expected().empty() )
    {
        err << "  expected one of:";
        for ( const auto& alternative : e.expected() )
            err << " " << alternative;
        err << "\n";
    }
}

void report_semantic_error( std::ostream& err, const std::string& file, const SemanticError& e )
{
    err << file << ": not a well-formed pre-proof\n";
    for ( const auto& error : e.errors() )
        err << "  " << to_string( error ) << "\n";
}

struct CheckArgs
{
    std::string file;
    std::string method = "poly";
    bool json = false;
    std::optional< std::size_t > cap;
    std::string certificate;
    std::optional< std::size_t > state_bound;
};

int run_check( const CheckArgs& args, std::ostream& out, std::ostream& err )
{
    const auto document = load_document( args.file );

    RunReport report;
    report.document = document.name();
    report.method = args.method == "buchi" ? Method::buchi : args.method == "both" ? Method::both : Method::poly;
    report.stats = compute_stats( document.preproof );

    if ( report.method != Method::buchi )
    {
        CheckConfig config;
        config.refine_options.cap = args.cap;
        const auto start = clock::now();
        report.poly = check_poly( document, config );
        report.poly_ms = elapsed_ms( start );
        if ( !args.certificate.empty() )
        {
            if ( report.poly->certificate )
                write_file( args.certificate, serialize_certificate( *report.poly->certificate ) );
            else
                err << "no certificate: verdict is Unknown\n";
        }
    }
    if ( report.method != Method::poly )
    {
        InclusionLimits limits;
        limits.state_bound = args.state_bound.value_or( default_state_bound() );
        const auto start = clock::now();
        report.oracle = check_gtc( document, limits );
        report.oracle_ms = elapsed_ms( start );
    }

    out << ( args.json ? render_json( report ) : render_text( report ) );
    return exit_code( report );
}

int run_explain( const std::string& file, std::optional< std::size_t > cap, std::ostream& out )
{
    const auto document = load_document( file );
    CheckConfig config;
    config.refine_options.cap = cap;
    out << render_explain( document, check_poly( document, config ) );
    return 0;
}

int run_dot( const std::string& file, const std::string& output, std::ostream& out )
{
    const auto text = render_dot( load_document( file ) );
    if ( output.empty() )
        out << text;
    else
        write_file( output, text );
    return 0;
}

int run_verify( const std::string& file, const std::string& certificate_file, std::ostream& out,
                std::ostream& err )
{
    const auto document = load_document( file );
    const auto certificate = parse_certificate( read_file( certificate_file ) );
    const auto result = verify_certificate( document, certificate );
    if ( result )
    {
        out << "certificate accepted\n";
        return 0;
    }
    err << "certificate rejected: " << result.failure << "\n";
    return 1;
}

struct BenchArgs
{
    std::string family = "chained-cycles";
    std::vector< std::size_t > sizes{ 10, 20, 50, 100, 200 };
    std::size_t timeout_ms = 10000;
    std::optional< std::size_t > state_bound;
};

int run_bench( const BenchArgs& args, std::ostream& out )
{
    out << "size,poly_ms,oracle_ms\n";
    for ( const auto n : args.sizes )
    {
        const auto document = chained_cycles( n );

        auto start = clock::now();
        const auto verdict = check_poly( document );
        const auto poly_ms = elapsed_ms( start );
        (void) verdict;

        InclusionLimits limits;
        limits.state_bound = args.state_bound.value_or( default_state_bound() );
        limits.deadline = clock::now() + std::chrono::milliseconds( args.timeout_ms );
        start = clock::now();
        const auto gtc = check_gtc( document, limits );
        const auto oracle_ms = elapsed_ms( start );

        std::string oracle_column;
        if ( gtc.status != GtcResult::Status::bound_exceeded )
        {
            std::ostringstream cell;
            cell.setf( std::ios::fixed );
            cell.precision( 3 );
            cell << oracle_ms;
            oracle_column = cell.str();
        }
        else
            oracle_column = gtc.detail == "oracle deadline passed" ? "timeout" : "bound_exceeded";

        std::ostringstream row;
        row.setf( std::ios::fixed );
        row.precision( 3 );
        row << n << "," << poly_ms << "," << oracle_column << "\n";
        out << row.str();
    }
    return 0;
}

struct FuzzArgs
{
    std::size_t count = 1000;
    std::size_t max_nodes = 8;
    std::uint64_t seed = 42;
    bool break_ordering = false;
};

int run_fuzz( const FuzzArgs& args, std::ostream& out )
{
    std::mt19937_64 rng( args.seed );
    RandomOptions options;
    options.max_nodes = args.max_nodes;
    CheckConfig config;
    config.flip_progress = args.break_ordering;

    std::size_t poly_valid = 0, oracle_invalid = 0, skipped = 0, violations = 0;
    for ( std::size_t i = 0; i < args.count; ++i )
    {
        const auto document = random_preproof( rng, options );
        const auto verdict = check_poly( document, config );
        const auto gtc = check_gtc( document );
        poly_valid += verdict.valid() ? 1 : 0;
        oracle_invalid += gtc.status == GtcResult::Status::invalid ? 1 : 0;
        skipped += gtc.status == GtcResult::Status::bound_exceeded ? 1 : 0;
        if ( verdict.valid() && gtc.status == GtcResult::Status::invalid )
        {
            ++violations;
            out << "violation on document " << i << " (lasso " << to_string( *gtc.lasso ) << ")\n"
                << serialize_document( document );
        }
    }
    out << "documents " << args.count << ", poly valid " << poly_valid << ", oracle invalid " << oracle_invalid
        << ", oracle bound exceeded " << skipped << ", violations " << violations << "\n";
    return violations == 0 ? 0 : 1;
}

int run_corpus_list( std::ostream& out )
{
    for ( const auto& document : builtin_corpus() )
        out << document.name() << "\n";
    return 0;
}

int run_corpus_export( const std::string& directory, std::ostream& out )
{
    std::filesystem::create_directories( directory );
    for ( const auto& document : builtin_corpus() )
    {
        const auto path = std::filesystem::path( directory ) / ( document.name() + ".cproof" );
        write_file( path.string(), serialize_document( document ) );
        out << path.string() << "\n";
    }
    return 0;
}

} // namespace

int run_cli( int argc, const char* const* argv, std::ostream& out, std::ostream& err )
{
    CLI::App app{ "Cyclic pre-proof soundness checker", "cproof" };
    app.require_subcommand( 1 );

    CheckArgs check;
    auto* check_cmd = app.add_subcommand( "check", "decide soundness of a .cproof document" );
    check_cmd->add_option( "file", check.file, "input document" )->required();
    check_cmd->add_option( "--method", check.method, "poly, buchi or both" )
            ->check( CLI::IsMember( { "poly", "buchi", "both" } ) );
    check_cmd->add_flag( "--json", check.json, "print a JSON run report" );
    check_cmd->add_option( "--cap", check.cap, "per-index multiplicity cap for measure refinement" );
    check_cmd->add_option( "--certificate", check.certificate, "write the certificate of a Valid verdict" );
    check_cmd->add_option( "--state-bound", check.state_bound, "oracle state bound" );

    std::string explain_file;
    std::optional< std::size_t > explain_cap;
    auto* explain_cmd = app.add_subcommand( "explain", "print trace summaries and comparisons per rb-path" );
    explain_cmd->add_option( "file", explain_file, "input document" )->required();
    explain_cmd->add_option( "--cap", explain_cap, "per-index multiplicity cap for measure refinement" );

    std::string dot_file, dot_output;
    auto* dot_cmd = app.add_subcommand( "dot", "render the normalized digraph in Graphviz format" );
    dot_cmd->add_option( "file", dot_file, "input document" )->required();
    dot_cmd->add_option( "-o,--output", dot_output, "output file (default stdout)" );

    std::string verify_file, verify_certificate_file;
    auto* verify_cmd = app.add_subcommand( "verify", "replay a certificate against a document" );
    verify_cmd->add_option( "file", verify_file, "input document" )->required();
    verify_cmd->add_option( "certificate", verify_certificate_file, "certificate file" )->required();

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand( "bench", "time both checkers on a generated family" );
    bench_cmd->add_option( "--family", bench.family, "generated family" )
            ->check( CLI::IsMember( { "chained-cycles" } ) );
    bench_cmd->add_option( "--sizes", bench.sizes, "comma separated sizes" )->delimiter( ',' );
    bench_cmd->add_option( "--timeout-ms", bench.timeout_ms, "oracle time limit per size" );
    bench_cmd->add_option( "--state-bound", bench.state_bound, "oracle state bound" );

    FuzzArgs fuzz;
    auto* fuzz_cmd = app.add_subcommand( "fuzz", "compare both checkers on random pre-proofs" );
    fuzz_cmd->add_option( "--count", fuzz.count, "number of documents" );
    fuzz_cmd->add_option( "--max-nodes", fuzz.max_nodes, "largest document" );
    fuzz_cmd->add_option( "--seed", fuzz.seed, "generator seed" );
    fuzz_cmd->add_flag( "--break-ordering", fuzz.break_ordering )->group( "" );

    auto* corpus_cmd = app.add_subcommand( "corpus", "built-in example documents" );
    corpus_cmd->require_subcommand( 1 );
    auto* corpus_list = corpus_cmd->add_subcommand( "list", "print the entry names" );
    std::string export_directory;
    auto* corpus_export = corpus_cmd->add_subcommand( "export", "write every entry as NAME.cproof" );
    corpus_export->add_option( "directory", export_directory, "target directory" )->required();

    try
    {
        app.parse( argc, argv );
    }
    catch ( const CLI::ParseError& e )
    {
        return app.exit( e, out, err ) == 0 ? 0 : 2;
    }

    std::string file;
    for ( const auto* name : { &check.file, &explain_file, &dot_file, &verify_file } )
        if ( !name->empty() )
            file = *name;

    try
    {
        if ( *check_cmd )
            return run_check( check, out, err );
        if ( *explain_cmd )
            return run_explain( explain_file, explain_cap, out );
        if ( *dot_cmd )
            return run_dot( dot_file, dot_output, out );
        if ( *verify_cmd )
            return run_verify( verify_file, verify_certificate_file, out, err );
        if ( *bench_cmd )
            return run_bench( bench, out );
        if ( *fuzz_cmd )
            return run_fuzz( fuzz, out );
        if ( *corpus_list )
            return run_corpus_list( out );
        if ( *corpus_export )
            return run_corpus_export( export_directory, out );
    }
    catch ( const ParseError& e )
    {
        report_parse_error( err, file, e );
        return 2;
    }
    catch ( const SemanticError& e )
    {
        report_semantic_error( err, file, e );
        return 2;
    }
    catch ( const std::exception& e )
    {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace cproof::cli
