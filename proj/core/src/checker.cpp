#include "cproof/checker.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>

namespace cproof
{

namespace
{

using json = nlohmann::json;

TraceSummary flipped( TraceSummary summary )
{
    for ( auto& link : summary )
        std::swap( link.progressing, link.stalling );
    return summary;
}

CertifiedPath certify( const NormalizedDigraph& digraph, const PathComparison& comparison )
{
    CertifiedPath out{ comparison.path, comparison.root_side, comparison.bud_side, {}, {} };
    const auto witness = [ & ]( const MatchEntry& entry ) {
        auto trace = witness_trace( digraph, comparison.path, entry.root_index, entry.bud_index, entry.progressing );
        return CertifiedMatch{ entry, trace.value_or( Trace{} ) };
    };
    for ( const auto& entry : comparison.cancelled )
        out.cancelled.push_back( witness( entry ) );
    for ( const auto& entry : comparison.covered )
        out.covered.push_back( witness( entry ) );
    return out;
}

std::string path_name( const RBPath& path )
{
    return std::to_string( path.root ) + " to " + std::to_string( path.bud );
}

} // namespace

Verdict check_poly( const ProofDocument& document, const CheckConfig& config )
{
    auto errors = validate_system( document.system );
    const auto more = validate_preproof( document.preproof, document.system );
    errors.insert( errors.end(), more.begin(), more.end() );
    if ( !errors.empty() )
        throw SemanticError( std::move( errors ) );

    Verdict verdict;
    auto& a = verdict.analysis;
    a.digraph = normalize( document.preproof );
    a.partition = sccs( root_digraph( a.digraph ) );
    a.paths = rb_paths( a.digraph, a.partition );
    for ( const auto& path : a.paths )
    {
        auto summary = trace_summary( a.digraph, path );
        a.summaries.push_back( config.flip_progress ? flipped( std::move( summary ) ) : std::move( summary ) );
    }

    a.gen_ord = gen_ord( a.digraph, a.paths, a.summaries );
    a.measures = a.gen_ord;
    a.comparisons = compare_paths( a.paths, a.summaries, a.measures );

    const auto all_valid = [ & ] {
        return std::all_of( a.comparisons.begin(), a.comparisons.end(), []( const auto& c ) { return c.valid; } );
    };
    if ( !all_valid() && config.refine )
    {
        auto refined = refine( a.digraph, a.paths, a.summaries, a.measures, config.refine_options );
        a.measures = std::move( refined.assignment );
        a.refinements = std::move( refined.steps );
        a.comparisons = compare_paths( a.paths, a.summaries, a.measures );
    }

    if ( !all_valid() )
    {
        const auto failed = std::find_if( a.comparisons.begin(), a.comparisons.end(),
                                          []( const auto& c ) { return !c.valid; } );
        verdict.status = Verdict::Status::unknown;
        verdict.reason = "rb-path " + path_name( failed->path ) + " fails the trace-based ordering test";
        if ( config.refine )
            *verdict.reason += " after refinement";
        return verdict;
    }

    Certificate cert;
    cert.document = document.name();
    cert.roots = a.digraph.roots;
    cert.induction = a.digraph.induction;
    for ( const auto& [ id, vertex ] : a.digraph.vertices )
        cert.origins[ id ] = vertex.origin;
    for ( std::size_t i = 0; i < a.partition.components.size(); ++i )
        if ( a.partition.cyclic[ i ] )
            cert.cyclic_components.push_back( a.partition.components[ i ] );
    std::sort( cert.cyclic_components.begin(), cert.cyclic_components.end() );
    cert.measures = a.measures;
    cert.refinements = a.refinements;
    for ( const auto& comparison : a.comparisons )
        cert.paths.push_back( certify( a.digraph, comparison ) );

    verdict.status = Verdict::Status::valid;
    verdict.certificate = std::move( cert );
    return verdict;
}

namespace
{

CertificateCheck fail( std::string message ) { return CertificateCheck{ false, std::move( message ) }; }

std::string entry_name( const MatchEntry& entry )
{
    return std::to_string( entry.root_index ) + " -> " + std::to_string( entry.bud_index );
}

} // namespace

CertificateCheck verify_certificate( const ProofDocument& document, const Certificate& certificate )
{
    if ( !validate_system( document.system ).empty()
         || !validate_preproof( document.preproof, document.system ).empty() )
        return fail( "document is not a well-formed pre-proof" );

    const auto digraph = normalize( document.preproof );
    if ( certificate.roots != digraph.roots )
        return fail( "root set differs from the normalized digraph" );
    if ( certificate.induction != digraph.induction )
        return fail( "induction function differs from the normalized digraph" );
    for ( const auto& [ id, vertex ] : digraph.vertices )
    {
        const auto it = certificate.origins.find( id );
        if ( it == certificate.origins.end() || it->second != vertex.origin )
            return fail( "origin of vertex " + std::to_string( id ) + " differs" );
    }
    if ( certificate.origins.size() != digraph.vertices.size() )
        return fail( "origin map lists unknown vertices" );

    const auto partition = sccs( root_digraph( digraph ) );
    std::vector< std::vector< NodeId > > cyclic;
    for ( std::size_t i = 0; i < partition.components.size(); ++i )
        if ( partition.cyclic[ i ] )
            cyclic.push_back( partition.components[ i ] );
    std::sort( cyclic.begin(), cyclic.end() );
    if ( cyclic != certificate.cyclic_components )
        return fail( "cyclic components differ" );

    const auto paths = rb_paths( digraph, partition );
    if ( paths.size() != certificate.paths.size() )
        return fail( "expected " + std::to_string( paths.size() ) + " rb-paths, certificate has "
                     + std::to_string( certificate.paths.size() ) );

    for ( const auto root : digraph.roots )
    {
        const auto it = certificate.measures.per_root.find( root );
        if ( it == certificate.measures.per_root.end() )
            return fail( "no measure for root " + std::to_string( root ) );
        if ( !std::is_sorted( it->second.begin(), it->second.end() ) )
            return fail( "measure of root " + std::to_string( root ) + " is not sorted" );
        for ( const auto index : it->second )
            if ( !digraph.vertex( root ).sequent.find( index ) )
                return fail( "measure of root " + std::to_string( root ) + " names absent index "
                             + std::to_string( index ) );
    }
    if ( certificate.measures.per_root.size() != digraph.roots.size() )
        return fail( "measures given for non-roots" );

    for ( const auto& step : certificate.refinements )
        if ( !digraph.is_root( step.root ) || !digraph.vertex( step.root ).sequent.find( step.index )
             || step.path >= paths.size() )
            return fail( "malformed refinement record" );

    for ( std::size_t i = 0; i < paths.size(); ++i )
    {
        const auto& claim = certificate.paths[ i ];
        const auto where = "rb-path " + path_name( paths[ i ] ) + ": ";
        if ( claim.path != paths[ i ] )
            return fail( where + "path differs from the recomputed one" );
        if ( claim.root_side != certificate.measures.at( paths[ i ].root ) )
            return fail( where + "root side is not M(root)" );
        if ( claim.bud_side != certificate.measures.at( paths[ i ].companion ) )
            return fail( where + "bud side is not M(companion)" );

        auto residue_root = claim.root_side;
        auto residue_bud = claim.bud_side;
        const auto take = []( Measure& m, IaaIndex index ) {
            const auto it = std::find( m.begin(), m.end(), index );
            if ( it == m.end() )
                return false;
            m.erase( it );
            return true;
        };
        const auto witnessed = [ & ]( const CertifiedMatch& match, bool progressing ) {
            return match.entry.progressing == progressing && match.witness.indices.size() == paths[ i ].nodes.size()
                   && replay_trace( digraph, paths[ i ], match.witness )
                   && match.witness.progressing() == progressing
                   && match.witness.root_index() == match.entry.root_index
                   && match.witness.bud_index() == match.entry.bud_index;
        };

        for ( const auto& match : claim.cancelled )
        {
            if ( !witnessed( match, false ) )
                return fail( where + "cancellation " + entry_name( match.entry ) + " lacks a non-progressing trace" );
            if ( !take( residue_root, match.entry.root_index ) || !take( residue_bud, match.entry.bud_index ) )
                return fail( where + "cancellation " + entry_name( match.entry ) + " reuses an item" );
        }
        if ( residue_root.empty() )
            return fail( where + "nothing left on the root side" );

        for ( const auto& match : claim.covered )
        {
            if ( !witnessed( match, true ) )
                return fail( where + "coverage " + entry_name( match.entry ) + " lacks a progressing trace" );
            if ( std::find( residue_root.begin(), residue_root.end(), match.entry.root_index ) == residue_root.end() )
                return fail( where + "coverage " + entry_name( match.entry ) + " uses a cancelled root item" );
            if ( !take( residue_bud, match.entry.bud_index ) )
                return fail( where + "coverage " + entry_name( match.entry ) + " covers no remaining bud item" );
        }
        if ( !residue_bud.empty() )
            return fail( where + "bud item " + std::to_string( residue_bud.front() ) + " is neither cancelled nor covered" );
    }
    return CertificateCheck{ true, {} };
}

namespace
{

json entry_json( const CertifiedMatch& match )
{
    json progress = json::array();
    for ( const bool p : match.witness.progress )
        progress.push_back( p );
    return json{ { "bud", match.entry.bud_index },
                 { "root", match.entry.root_index },
                 { "progressing", match.entry.progressing },
                 { "witness", { { "indices", match.witness.indices }, { "progress", progress } } } };
}

CertifiedMatch entry_from( const json& value )
{
    CertifiedMatch match;
    match.entry.bud_index = value.at( "bud" ).get< IaaIndex >();
    match.entry.root_index = value.at( "root" ).get< IaaIndex >();
    match.entry.progressing = value.at( "progressing" ).get< bool >();
    match.witness.indices = value.at( "witness" ).at( "indices" ).get< std::vector< IaaIndex > >();
    for ( const auto& p : value.at( "witness" ).at( "progress" ) )
        match.witness.progress.push_back( p.get< bool >() );
    return match;
}

json id_map( const std::map< NodeId, NodeId >& map )
{
    json out = json::object();
    for ( const auto& [ k, v ] : map )
        out[ std::to_string( k ) ] = v;
    return out;
}

std::map< NodeId, NodeId > id_map_from( const json& value )
{
    std::map< NodeId, NodeId > out;
    for ( const auto& [ k, v ] : value.items() )
        out[ static_cast< NodeId >( std::stoul( k ) ) ] = v.get< NodeId >();
    return out;
}

} // namespace

std::string serialize_certificate( const Certificate& certificate )
{
    json measures = json::object();
    for ( const auto& [ root, items ] : certificate.measures.per_root )
        measures[ std::to_string( root ) ] = items;

    json refinements = json::array();
    for ( const auto& step : certificate.refinements )
        refinements.push_back( { { "root", step.root },
                                 { "index", step.index },
                                 { "path", step.path },
                                 { "propagated", step.propagated } } );

    json paths = json::array();
    for ( const auto& claim : certificate.paths )
    {
        json cancelled = json::array(), covered = json::array();
        for ( const auto& m : claim.cancelled )
            cancelled.push_back( entry_json( m ) );
        for ( const auto& m : claim.covered )
            covered.push_back( entry_json( m ) );
        paths.push_back( { { "root", claim.path.root },
                           { "bud", claim.path.bud },
                           { "companion", claim.path.companion },
                           { "nodes", claim.path.nodes },
                           { "root_side", claim.root_side },
                           { "bud_side", claim.bud_side },
                           { "cancelled", cancelled },
                           { "covered", covered } } );
    }

    json out = { { "document", certificate.document },
                 { "roots", certificate.roots },
                 { "induction", id_map( certificate.induction ) },
                 { "origins", id_map( certificate.origins ) },
                 { "cyclic_components", certificate.cyclic_components },
                 { "measures", measures },
                 { "refinements", refinements },
                 { "paths", paths } };
    return out.dump( 2 ) + "\n";
}

Certificate parse_certificate( std::string_view text )
{
    try
    {
        const auto value = json::parse( text.begin(), text.end() );
        Certificate cert;
        cert.document = value.at( "document" ).get< std::string >();
        cert.roots = value.at( "roots" ).get< std::vector< NodeId > >();
        cert.induction = id_map_from( value.at( "induction" ) );
        cert.origins = id_map_from( value.at( "origins" ) );
        cert.cyclic_components = value.at( "cyclic_components" ).get< std::vector< std::vector< NodeId > > >();
        for ( const auto& [ k, v ] : value.at( "measures" ).items() )
            cert.measures.per_root[ static_cast< NodeId >( std::stoul( k ) ) ] = v.get< Measure >();
        for ( const auto& step : value.at( "refinements" ) )
            cert.refinements.push_back( { step.at( "root" ).get< NodeId >(), step.at( "index" ).get< IaaIndex >(),
                                          step.at( "path" ).get< std::size_t >(), step.at( "propagated" ).get< bool >() } );
        for ( const auto& claim : value.at( "paths" ) )
        {
            CertifiedPath path;
            path.path.root = claim.at( "root" ).get< NodeId >();
            path.path.bud = claim.at( "bud" ).get< NodeId >();
            path.path.companion = claim.at( "companion" ).get< NodeId >();
            path.path.nodes = claim.at( "nodes" ).get< std::vector< NodeId > >();
            path.root_side = claim.at( "root_side" ).get< Measure >();
            path.bud_side = claim.at( "bud_side" ).get< Measure >();
            for ( const auto& m : claim.at( "cancelled" ) )
                path.cancelled.push_back( entry_from( m ) );
            for ( const auto& m : claim.at( "covered" ) )
                path.covered.push_back( entry_from( m ) );
            cert.paths.push_back( std::move( path ) );
        }
        return cert;
    }
    catch ( const json::exception& error )
    {
        throw ParseError( std::string( "malformed certificate: " ) + error.what(), 0, 0, "", { "certificate" } );
    }
    catch ( const std::logic_error& error )
    {
        throw ParseError( std::string( "malformed certificate: " ) + error.what(), 0, 0, "", { "certificate" } );
    }
}

} // namespace cproof
