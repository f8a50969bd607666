#include "report.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace cproof::cli
{

using json = nlohmann::json;

std::string method_name( Method method )
{
    switch ( method )
    {
    case Method::poly:
        return "poly";
    case Method::buchi:
        return "buchi";
    case Method::both:
        return "both";
    }
    return "poly";
}

namespace
{

std::string poly_word( const Verdict& verdict ) { return verdict.valid() ? "Valid" : "Unknown"; }

std::string oracle_word( const GtcResult& result )
{
    switch ( result.status )
    {
    case GtcResult::Status::valid:
        return "Valid";
    case GtcResult::Status::invalid:
        return "Invalid";
    case GtcResult::Status::bound_exceeded:
        return "BoundExceeded";
    }
    return "BoundExceeded";
}

std::string milliseconds( double ms )
{
    char buffer[ 32 ];
    std::snprintf( buffer, sizeof buffer, "%.3f", ms );
    return buffer;
}

std::string measure_text( const Measure& measure )
{
    std::string out = "{";
    for ( std::size_t i = 0; i < measure.size(); ++i )
        out += ( i ? ", " : "" ) + std::to_string( measure[ i ] );
    return out + "}";
}

std::string measure_atoms( const Sequent& sequent, const Measure& measure )
{
    std::string out = "{";
    for ( std::size_t i = 0; i < measure.size(); ++i )
    {
        const auto* iaa = sequent.find( measure[ i ] );
        out += ( i ? ", " : "" ) + ( iaa ? to_string( *iaa ) : std::to_string( measure[ i ] ) );
    }
    return out + "}";
}

} // namespace

int exit_code( const RunReport& report )
{
    if ( report.oracle && report.oracle->status == GtcResult::Status::bound_exceeded )
        return 3;
    const bool poly_ok = !report.poly || report.poly->valid();
    const bool oracle_ok = !report.oracle || report.oracle->status == GtcResult::Status::valid;
    return poly_ok && oracle_ok ? 0 : 1;
}

std::string render_text( const RunReport& report )
{
    std::ostringstream out;
    out << report.document << ": " << report.stats.nodes << " nodes, depth " << report.stats.depth << ", "
        << report.stats.backlinks << " back-links\n";
    if ( report.poly )
    {
        const auto& v = *report.poly;
        std::size_t valid = 0;
        for ( const auto& c : v.analysis.comparisons )
            valid += c.valid ? 1 : 0;
        out << "poly:   " << poly_word( v ) << " (" << valid << "/" << v.analysis.paths.size()
            << " rb-paths valid, " << milliseconds( report.poly_ms ) << " ms)\n";
        if ( v.reason )
            out << "        " << *v.reason << "\n";
    }
    if ( report.oracle )
    {
        const auto& o = *report.oracle;
        out << "oracle: " << oracle_word( o ) << " (" << o.states << " states, " << milliseconds( report.oracle_ms )
            << " ms)\n";
        if ( o.lasso )
            out << "        lasso " << to_string( *o.lasso ) << "\n";
        if ( o.status == GtcResult::Status::bound_exceeded )
            out << "        " << o.detail << "\n";
    }
    return out.str();
}

std::string render_json( const RunReport& report )
{
    json out;
    out[ "document" ] = report.document;
    out[ "method" ] = method_name( report.method );
    out[ "stats" ] = { { "nodes", report.stats.nodes },
                       { "backlinks", report.stats.backlinks },
                       { "depth", report.stats.depth } };
    if ( report.poly )
    {
        const auto& v = *report.poly;
        json poly;
        poly[ "verdict" ] = poly_word( v );
        poly[ "ms" ] = report.poly_ms;
        poly[ "rb_paths" ] = v.analysis.paths.size();
        json measures = json::object();
        for ( const auto& [ root, items ] : v.analysis.measures.per_root )
            measures[ std::to_string( root ) ] = items;
        poly[ "measures" ] = measures;
        if ( v.reason )
            poly[ "reason" ] = *v.reason;
        if ( v.certificate )
            poly[ "certificate" ] = json::parse( serialize_certificate( *v.certificate ) );
        out[ "poly" ] = poly;
    }
    if ( report.oracle )
    {
        const auto& o = *report.oracle;
        json oracle;
        oracle[ "verdict" ] = oracle_word( o );
        oracle[ "ms" ] = report.oracle_ms;
        oracle[ "states" ] = o.states;
        oracle[ "detail" ] = o.detail;
        if ( o.lasso )
            oracle[ "lasso" ] = { { "stem", o.lasso->stem }, { "loop", o.lasso->loop } };
        out[ "oracle" ] = oracle;
    }
    return out.dump( 2 ) + "\n";
}

std::string render_explain( const ProofDocument& document, const Verdict& verdict )
{
    const auto& a = verdict.analysis;
    std::ostringstream out;
    out << document.name() << "\n";
    if ( a.partition.cyclic_count() == 0 )
    {
        out << "no cyclic SCCs\n";
        out << "verdict: " << poly_word( verdict ) << "\n";
        return out.str();
    }
    out << a.partition.cyclic_count() << " cyclic SCC" << ( a.partition.cyclic_count() == 1 ? "" : "s" ) << ", "
        << a.paths.size() << " rb-path" << ( a.paths.size() == 1 ? "" : "s" ) << "\n\n";

    std::vector< std::size_t > order( a.paths.size() );
    for ( std::size_t i = 0; i < order.size(); ++i )
        order[ i ] = i;
    std::stable_sort( order.begin(), order.end(), [ & ]( std::size_t x, std::size_t y ) {
        if ( a.paths[ x ].root != a.paths[ y ].root )
            return a.paths[ x ].root < a.paths[ y ].root;
        return a.paths[ x ].bud > a.paths[ y ].bud;
    } );

    for ( const auto i : order )
    {
        const auto& path = a.paths[ i ];
        out << path.root << " to " << path.bud << "\n";
        for ( const auto& link : a.summaries[ i ] )
        {
            if ( link.progressing )
                out << "  " << link.bud_index << " -> " << link.root_index << " [true ]\n";
            if ( link.stalling )
                out << "  " << link.bud_index << " -> " << link.root_index << " [false]\n";
        }
        out << "===> " << ( a.comparisons[ i ].valid ? "true" : "false" ) << "\n";
    }

    out << "\nmeasures\n";
    for ( const auto& [ root, items ] : a.measures.per_root )
        out << "  " << root << ": " << measure_text( items ) << " "
            << measure_atoms( a.digraph.vertex( root ).sequent, items ) << "\n";
    if ( !a.refinements.empty() )
        out << "  (" << a.refinements.size() << " item" << ( a.refinements.size() == 1 ? "" : "s" )
            << " added by refinement)\n";
    out << "verdict: " << poly_word( verdict ) << "\n";
    return out.str();
}

namespace
{

std::string escape( const std::string& text )
{
    std::string out;
    for ( const char c : text )
    {
        if ( c == '"' || c == '\\' )
            out += '\\';
        out += c;
    }
    return out;
}

} // namespace

std::string render_dot( const ProofDocument& document )
{
    const auto nd = normalize( document.preproof );
    std::ostringstream out;
    out << "digraph \"" << escape( document.name() ) << "\" {\n";
    out << "  node [shape=box, fontname=\"monospace\"];\n";
    for ( const auto& [ id, vertex ] : nd.vertices )
    {
        out << "  n" << id << " [label=\"" << id;
        if ( vertex.origin != id )
            out << " (copy of " << vertex.origin << ")";
        out << ": " << escape( to_string( vertex.sequent ) ) << "\"";
        if ( nd.is_root( id ) )
            out << ", peripheries=2";
        out << "];\n";
    }
    for ( const auto& [ id, vertex ] : nd.vertices )
        for ( std::size_t i = 0; i < vertex.children.size(); ++i )
        {
            const auto& pairs = vertex.steps[ i ];
            const bool progress =
                    std::any_of( pairs.begin(), pairs.end(), []( const TracePair& p ) { return p.progressing; } );
            out << "  n" << id << " -> n" << vertex.children[ i ] << ( progress ? " [style=bold]" : "" ) << ";\n";
        }
    for ( const auto& [ bud, root ] : nd.induction )
        out << "  n" << bud << " -> n" << root << " [style=dashed];\n";
    out << "}\n";
    return out.str();
}

} // namespace cproof::cli
