#include "cproof/format.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace cproof
{

using json = nlohmann::json;

std::string ProofDocument::name() const
{
    const auto it = metadata.find( "name" );
    return it == metadata.end() ? std::string{ "unnamed" } : it->second;
}

ParseError::ParseError( std::string message, std::size_t line, std::size_t column, std::string path,
                        std::vector< std::string > expected )
        : std::runtime_error{ [ & ] {
              std::string where = line > 0 ? std::to_string( line ) + ":" + std::to_string( column )
                                           : ( path.empty() ? std::string{ "/" } : path );
              std::string out = where + ": " + message;
              if ( !expected.empty() )
              {
                  out += " (expected ";
                  for ( std::size_t i = 0; i < expected.size(); ++i )
                      out += ( i > 0 ? ", " : "" ) + expected[ i ];
                  out += ")";
              }
              return out;
          }() },
          _line{ line }, _column{ column }, _path{ std::move( path ) }, _expected{ std::move( expected ) }
{
}

SemanticError::SemanticError( std::vector< WellFormednessError > errors )
        : std::runtime_error{ [ & ] {
              std::string out = "invalid pre-proof:";
              for ( const auto& error : errors )
                  out += "\n  " + to_string( error );
              return out;
          }() },
          _errors{ std::move( errors ) }
{
}

namespace
{

// Schema reader; every accessor knows its JSON path for error messages.
class reader
{
public:
    [[noreturn]] static void fail( const std::string& path, const std::string& message,
                                   std::vector< std::string > expected = {} )
    {
        throw ParseError( message, 0, 0, path, std::move( expected ) );
    }

    static const json& field( const json& object, const std::string& path, const std::string& key )
    {
        if ( !object.is_object() )
            fail( path, "expected an object", { "{" } );
        const auto it = object.find( key );
        if ( it == object.end() )
            fail( path, "missing key '" + key + "'", { "\"" + key + "\"" } );
        return *it;
    }

    static const json* optional_field( const json& object, const std::string& key )
    {
        const auto it = object.find( key );
        return it == object.end() ? nullptr : &*it;
    }

    static void only_keys( const json& object, const std::string& path, std::initializer_list< const char* > keys )
    {
        if ( !object.is_object() )
            fail( path, "expected an object", { "{" } );
        std::set< std::string > allowed( keys.begin(), keys.end() );
        for ( const auto& [ key, value ] : object.items() )
            if ( !allowed.contains( key ) )
                fail( path, "unexpected key '" + key + "'", { allowed.begin(), allowed.end() } );
    }

    static long long integer( const json& value, const std::string& path )
    {
        if ( !value.is_number_integer() )
            fail( path, "expected an integer", { "integer" } );
        return value.get< long long >();
    }

    static std::size_t natural( const json& value, const std::string& path )
    {
        const auto n = integer( value, path );
        if ( n < 0 )
            fail( path, "expected a non-negative integer", { "natural number" } );
        return static_cast< std::size_t >( n );
    }

    static NodeId node_id( const json& value, const std::string& path )
    {
        const auto n = natural( value, path );
        if ( n > std::numeric_limits< NodeId >::max() )
            fail( path, "node id out of range" );
        return static_cast< NodeId >( n );
    }

    static IaaIndex index( const json& value, const std::string& path )
    {
        const auto n = integer( value, path );
        if ( n < std::numeric_limits< IaaIndex >::min() || n > std::numeric_limits< IaaIndex >::max() )
            fail( path, "index out of range" );
        return static_cast< IaaIndex >( n );
    }

    static const std::string& string( const json& value, const std::string& path )
    {
        if ( !value.is_string() )
            fail( path, "expected a string", { "string" } );
        return value.get_ref< const std::string& >();
    }

    static const json& array( const json& value, const std::string& path )
    {
        if ( !value.is_array() )
            fail( path, "expected an array", { "[" } );
        return value;
    }

    static Term term( const json& value, const std::string& path )
    {
        if ( value.is_string() )
            return var( value.get< std::string >() );
        if ( !value.is_array() || value.empty() || !value.front().is_string() )
            fail( path, "expected a term", { "variable name", "[symbol, args...]" } );
        std::vector< Term > args;
        for ( std::size_t i = 1; i < value.size(); ++i )
            args.push_back( term( value[ i ], path + "/" + std::to_string( i ) ) );
        return app( value.front().get< std::string >(), std::move( args ) );
    }

    static std::vector< Term > terms( const json& value, const std::string& path )
    {
        std::vector< Term > out;
        for ( std::size_t i = 0; i < array( value, path ).size(); ++i )
            out.push_back( term( value[ i ], path + "/" + std::to_string( i ) ) );
        return out;
    }

    static Atom atom( const json& value, const std::string& path )
    {
        only_keys( value, path, { "pred", "args" } );
        return Atom{ string( field( value, path, "pred" ), path + "/pred" ),
                     terms( field( value, path, "args" ), path + "/args" ) };
    }

    static std::vector< Atom > atoms( const json& value, const std::string& path )
    {
        std::vector< Atom > out;
        for ( std::size_t i = 0; i < array( value, path ).size(); ++i )
            out.push_back( atom( value[ i ], path + "/" + std::to_string( i ) ) );
        return out;
    }

    static Iaa iaa( const json& value, const std::string& path )
    {
        only_keys( value, path, { "pred", "args", "idx" } );
        return Iaa{ Atom{ string( field( value, path, "pred" ), path + "/pred" ),
                          terms( field( value, path, "args" ), path + "/args" ) },
                    index( field( value, path, "idx" ), path + "/idx" ) };
    }

    static Substitution substitution( const json& value, const std::string& path )
    {
        if ( !value.is_object() )
            fail( path, "expected a substitution object", { "{" } );
        Substitution out;
        for ( const auto& [ key, term_value ] : value.items() )
            out.emplace( key, term( term_value, path + "/" + key ) );
        return out;
    }

    static std::vector< std::pair< IaaIndex, IaaIndex > > index_pairs( const json& value, const std::string& path )
    {
        std::vector< std::pair< IaaIndex, IaaIndex > > out;
        for ( std::size_t i = 0; i < array( value, path ).size(); ++i )
        {
            const auto item_path = path + "/" + std::to_string( i );
            if ( !value[ i ].is_array() || value[ i ].size() != 2 )
                fail( item_path, "expected an index pair", { "[from, to]" } );
            out.emplace_back( index( value[ i ][ 0 ], item_path + "/0" ), index( value[ i ][ 1 ], item_path + "/1" ) );
        }
        return out;
    }

    static std::vector< NodeId > premises( const json& rule, const std::string& path )
    {
        std::vector< NodeId > out;
        const auto& list = array( field( rule, path, "premises" ), path + "/premises" );
        for ( std::size_t i = 0; i < list.size(); ++i )
            out.push_back( node_id( list[ i ], path + "/premises/" + std::to_string( i ) ) );
        return out;
    }

    static RuleApplication rule( const json& value, const std::string& path )
    {
        const auto& kind = string( field( value, path, "kind" ), path + "/kind" );
        RuleApplication out;

        if ( kind == "lunf" )
        {
            only_keys( value, path, { "kind", "premises", "target", "cases" } );
            rules::LeftUnfold unfold;
            unfold.target = index( field( value, path, "target" ), path + "/target" );
            const auto& cases = array( field( value, path, "cases" ), path + "/cases" );
            for ( std::size_t i = 0; i < cases.size(); ++i )
            {
                const auto case_path = path + "/cases/" + std::to_string( i );
                const auto& c = cases[ i ];
                only_keys( c, case_path, { "production", "theta", "sigma", "indices", "retain" } );
                rules::UnfoldCase unfold_case;
                unfold_case.production = natural( field( c, case_path, "production" ), case_path + "/production" );
                unfold_case.theta = substitution( field( c, case_path, "theta" ), case_path + "/theta" );
                unfold_case.sigma = substitution( field( c, case_path, "sigma" ), case_path + "/sigma" );
                const auto& indices = array( field( c, case_path, "indices" ), case_path + "/indices" );
                for ( std::size_t k = 0; k < indices.size(); ++k )
                    unfold_case.premise_indices.push_back(
                            index( indices[ k ], case_path + "/indices/" + std::to_string( k ) ) );
                if ( const auto* retain = optional_field( c, "retain" ) )
                    unfold_case.retain = index( *retain, case_path + "/retain" );
                unfold.cases.push_back( std::move( unfold_case ) );
            }
            out.rule = std::move( unfold );
        }
        else if ( kind == "runf" )
        {
            only_keys( value, path, { "kind", "premises", "position", "production", "sigma" } );
            out.rule = rules::RightUnfold{ natural( field( value, path, "position" ), path + "/position" ),
                                           natural( field( value, path, "production" ), path + "/production" ),
                                           substitution( field( value, path, "sigma" ), path + "/sigma" ) };
        }
        else if ( kind == "axiom" )
        {
            only_keys( value, path, { "kind", "premises", "position", "production" } );
            out.rule = rules::Axiom{ natural( field( value, path, "position" ), path + "/position" ),
                                     natural( field( value, path, "production" ), path + "/production" ) };
        }
        else if ( kind == "id" )
        {
            only_keys( value, path, { "kind", "premises" } );
            out.rule = rules::Identity{};
        }
        else if ( kind == "exfalso" )
        {
            only_keys( value, path, { "kind", "premises", "index" } );
            out.rule = rules::ExFalso{ index( field( value, path, "index" ), path + "/index" ) };
        }
        else if ( kind == "weaken" )
        {
            only_keys( value, path, { "kind", "premises", "retained" } );
            out.rule = rules::Weaken{ index_pairs( field( value, path, "retained" ), path + "/retained" ) };
        }
        else if ( kind == "subst" )
        {
            only_keys( value, path, { "kind", "premises", "theta", "indices" } );
            out.rule = rules::Subst{ substitution( field( value, path, "theta" ), path + "/theta" ),
                                     index_pairs( field( value, path, "indices" ), path + "/indices" ) };
        }
        else if ( kind == "backlink" )
        {
            only_keys( value, path, { "kind", "premises", "companion" } );
            out.rule = rules::Backlink{ node_id( field( value, path, "companion" ), path + "/companion" ) };
        }
        else if ( kind == "generic" )
        {
            only_keys( value, path, { "kind", "premises", "name", "pairs" } );
            rules::Generic generic;
            generic.name = string( field( value, path, "name" ), path + "/name" );
            if ( const auto* pairs = optional_field( value, "pairs" ) )
            {
                std::vector< std::vector< TracePair > > lists;
                for ( std::size_t i = 0; i < array( *pairs, path + "/pairs" ).size(); ++i )
                {
                    const auto list_path = path + "/pairs/" + std::to_string( i );
                    std::vector< TracePair > list;
                    const auto& items = array( ( *pairs )[ i ], list_path );
                    for ( std::size_t k = 0; k < items.size(); ++k )
                    {
                        const auto item_path = list_path + "/" + std::to_string( k );
                        const auto& item = items[ k ];
                        if ( !item.is_array() || item.size() != 3 || !item[ 2 ].is_boolean() )
                            fail( item_path, "expected a trace pair", { "[from, to, progressing]" } );
                        list.push_back( { index( item[ 0 ], item_path + "/0" ), index( item[ 1 ], item_path + "/1" ),
                                          item[ 2 ].get< bool >() } );
                    }
                    lists.push_back( std::move( list ) );
                }
                generic.pairs = std::move( lists );
            }
            out.rule = std::move( generic );
        }
        else
        {
            fail( path + "/kind", "unknown rule kind '" + kind + "'",
                  { "lunf", "runf", "axiom", "id", "exfalso", "weaken", "subst", "backlink", "generic" } );
        }

        out.premises = premises( value, path );
        return out;
    }

    static InductiveSystem system( const json& value, const std::string& path )
    {
        only_keys( value, path, { "predicates", "constructors", "productions" } );
        InductiveSystem out;

        const auto& predicates = array( field( value, path, "predicates" ), path + "/predicates" );
        for ( std::size_t i = 0; i < predicates.size(); ++i )
        {
            const auto item_path = path + "/predicates/" + std::to_string( i );
            only_keys( predicates[ i ], item_path, { "name", "arity" } );
            out.predicates.push_back( { string( field( predicates[ i ], item_path, "name" ), item_path + "/name" ),
                                        natural( field( predicates[ i ], item_path, "arity" ), item_path + "/arity" ) } );
        }

        if ( const auto* constructors = optional_field( value, "constructors" ) )
        {
            for ( std::size_t i = 0; i < array( *constructors, path + "/constructors" ).size(); ++i )
            {
                const auto item_path = path + "/constructors/" + std::to_string( i );
                const auto& item = ( *constructors )[ i ];
                only_keys( item, item_path, { "name", "arity" } );
                out.constructors.push_back( { string( field( item, item_path, "name" ), item_path + "/name" ),
                                              natural( field( item, item_path, "arity" ), item_path + "/arity" ) } );
            }
        }
        else
        {
            out.constructors = builtin_constructors();
        }

        const auto& productions = array( field( value, path, "productions" ), path + "/productions" );
        for ( std::size_t i = 0; i < productions.size(); ++i )
        {
            const auto item_path = path + "/productions/" + std::to_string( i );
            only_keys( productions[ i ], item_path, { "premises", "conclusion" } );
            out.productions.push_back(
                    { atoms( field( productions[ i ], item_path, "premises" ), item_path + "/premises" ),
                      atom( field( productions[ i ], item_path, "conclusion" ), item_path + "/conclusion" ) } );
        }
        return out;
    }

    static ProofDocument document( const json& value )
    {
        only_keys( value, "", { "system", "nodes", "root", "buds", "metadata" } );
        ProofDocument doc;
        doc.system = system( field( value, "", "system" ), "/system" );

        const auto& nodes = array( field( value, "", "nodes" ), "/nodes" );
        for ( std::size_t i = 0; i < nodes.size(); ++i )
        {
            const auto path = "/nodes/" + std::to_string( i );
            const auto& item = nodes[ i ];
            only_keys( item, path, { "id", "sequent", "rule" } );
            const auto id = node_id( field( item, path, "id" ), path + "/id" );

            const auto& sequent_value = field( item, path, "sequent" );
            only_keys( sequent_value, path + "/sequent", { "lhs", "rhs" } );
            ProofNode node;
            const auto& lhs = array( field( sequent_value, path + "/sequent", "lhs" ), path + "/sequent/lhs" );
            for ( std::size_t k = 0; k < lhs.size(); ++k )
                node.sequent.antecedent.push_back( iaa( lhs[ k ], path + "/sequent/lhs/" + std::to_string( k ) ) );
            node.sequent.consequent = atoms( field( sequent_value, path + "/sequent", "rhs" ), path + "/sequent/rhs" );
            node.rule = rule( field( item, path, "rule" ), path + "/rule" );

            if ( !doc.preproof.nodes.emplace( id, std::move( node ) ).second )
                fail( path + "/id", "duplicate node id " + std::to_string( id ) );
        }

        doc.preproof.root = node_id( field( value, "", "root" ), "/root" );
        if ( !doc.preproof.nodes.contains( doc.preproof.root ) )
            fail( "/root", "root " + std::to_string( doc.preproof.root ) + " names no node", { "an existing node id" } );

        const auto& buds = field( value, "", "buds" );
        if ( !buds.is_object() )
            fail( "/buds", "expected an object", { "{" } );
        for ( const auto& [ key, companion ] : buds.items() )
        {
            NodeId bud = 0;
            std::size_t consumed = 0;
            try
            {
                bud = static_cast< NodeId >( std::stoul( key, &consumed ) );
            }
            catch ( const std::exception& )
            {
                consumed = 0;
            }
            if ( consumed == 0 || consumed != key.size() || std::to_string( bud ) != key )
                fail( "/buds/" + key, "bud key must be a node id", { "decimal node id" } );
            doc.preproof.induction.emplace( bud, node_id( companion, "/buds/" + key ) );
        }

        if ( const auto* metadata = optional_field( value, "metadata" ) )
        {
            if ( !metadata->is_object() )
                fail( "/metadata", "expected an object", { "{" } );
            for ( const auto& [ key, item ] : metadata->items() )
                doc.metadata.emplace( key, string( item, "/metadata/" + key ) );
        }
        return doc;
    }
};

json to_json( const Term& term )
{
    if ( term.is_variable() )
        return term.symbol;
    json out = json::array( { term.symbol } );
    for ( const auto& arg : term.args )
        out.push_back( to_json( arg ) );
    return out;
}

json to_json( const std::vector< Term >& terms )
{
    json out = json::array();
    for ( const auto& term : terms )
        out.push_back( to_json( term ) );
    return out;
}

json to_json( const Atom& atom )
{
    return json{ { "pred", atom.predicate }, { "args", to_json( atom.args ) } };
}

json to_json( const Substitution& subst )
{
    json out = json::object();
    for ( const auto& [ name, term ] : subst )
        out[ name ] = to_json( term );
    return out;
}

json to_json( const std::vector< std::pair< IaaIndex, IaaIndex > >& pairs )
{
    json out = json::array();
    for ( const auto& [ a, b ] : pairs )
        out.push_back( json::array( { a, b } ) );
    return out;
}

json to_json( const RuleApplication& application )
{
    json out = std::visit(
            []( const auto& rule ) -> json {
                using T = std::decay_t< decltype( rule ) >;
                if constexpr ( std::is_same_v< T, rules::LeftUnfold > )
                {
                    json cases = json::array();
                    for ( const auto& c : rule.cases )
                    {
                        json item{ { "production", c.production },
                                   { "theta", to_json( c.theta ) },
                                   { "sigma", to_json( c.sigma ) },
                                   { "indices", c.premise_indices } };
                        if ( c.retain )
                            item[ "retain" ] = *c.retain;
                        cases.push_back( std::move( item ) );
                    }
                    return { { "kind", "lunf" }, { "target", rule.target }, { "cases", std::move( cases ) } };
                }
                else if constexpr ( std::is_same_v< T, rules::RightUnfold > )
                    return { { "kind", "runf" },
                             { "position", rule.position },
                             { "production", rule.production },
                             { "sigma", to_json( rule.sigma ) } };
                else if constexpr ( std::is_same_v< T, rules::Axiom > )
                    return { { "kind", "axiom" }, { "position", rule.position }, { "production", rule.production } };
                else if constexpr ( std::is_same_v< T, rules::Identity > )
                    return { { "kind", "id" } };
                else if constexpr ( std::is_same_v< T, rules::ExFalso > )
                    return { { "kind", "exfalso" }, { "index", rule.index } };
                else if constexpr ( std::is_same_v< T, rules::Weaken > )
                    return { { "kind", "weaken" }, { "retained", to_json( rule.retained ) } };
                else if constexpr ( std::is_same_v< T, rules::Subst > )
                    return { { "kind", "subst" }, { "theta", to_json( rule.theta ) }, { "indices", to_json( rule.indices ) } };
                else if constexpr ( std::is_same_v< T, rules::Backlink > )
                    return { { "kind", "backlink" }, { "companion", rule.companion } };
                else
                {
                    json out{ { "kind", "generic" }, { "name", rule.name } };
                    if ( rule.pairs )
                    {
                        json lists = json::array();
                        for ( const auto& list : *rule.pairs )
                        {
                            json items = json::array();
                            for ( const auto& pair : list )
                                items.push_back(
                                        json::array( { pair.conclusion_index, pair.premise_index, pair.progressing } ) );
                            lists.push_back( std::move( items ) );
                        }
                        out[ "pairs" ] = std::move( lists );
                    }
                    return out;
                }
            },
            application.rule );
    out[ "premises" ] = application.premises;
    return out;
}

std::pair< std::size_t, std::size_t > line_column( std::string_view text, std::size_t offset )
{
    std::size_t line = 1, column = 1;
    for ( std::size_t i = 0; i < offset && i < text.size(); ++i )
    {
        if ( text[ i ] == '\n' )
        {
            ++line;
            column = 1;
        }
        else
        {
            ++column;
        }
    }
    return { line, column };
}

} // namespace

ProofDocument parse_document( std::string_view text )
{
    json value;
    try
    {
        value = json::parse( text.begin(), text.end() );
    }
    catch ( const json::parse_error& error )
    {
        // nlohmann reports the offset one past the offending character.
        const auto offset = error.byte > 0 ? error.byte - 1 : 0;
        const auto [ line, column ] = line_column( text, offset );
        std::string message = error.what();
        if ( const auto cut = message.rfind( ": " ); cut != std::string::npos )
            message = message.substr( cut + 2 );
        throw ParseError( message, line, column, "", { "valid JSON" } );
    }

    auto doc = reader::document( value );

    auto errors = validate_system( doc.system );
    auto proof_errors = validate_preproof( doc.preproof, doc.system );
    errors.insert( errors.end(), proof_errors.begin(), proof_errors.end() );
    if ( !errors.empty() )
        throw SemanticError( std::move( errors ) );
    return doc;
}

std::string serialize_document( const ProofDocument& document )
{
    json system;
    system[ "predicates" ] = json::array();
    for ( const auto& decl : document.system.predicates )
        system[ "predicates" ].push_back( { { "name", decl.name }, { "arity", decl.arity } } );
    system[ "constructors" ] = json::array();
    for ( const auto& decl : document.system.constructors )
        system[ "constructors" ].push_back( { { "name", decl.name }, { "arity", decl.arity } } );
    system[ "productions" ] = json::array();
    for ( const auto& prod : document.system.productions )
    {
        json premises = json::array();
        for ( const auto& atom : prod.premises )
            premises.push_back( to_json( atom ) );
        system[ "productions" ].push_back( { { "premises", std::move( premises ) }, { "conclusion", to_json( prod.conclusion ) } } );
    }

    json nodes = json::array();
    for ( const auto& [ id, node ] : document.preproof.nodes )
    {
        json lhs = json::array();
        for ( const auto& iaa : node.sequent.antecedent )
            lhs.push_back( { { "pred", iaa.atom.predicate }, { "args", to_json( iaa.atom.args ) }, { "idx", iaa.index } } );
        json rhs = json::array();
        for ( const auto& atom : node.sequent.consequent )
            rhs.push_back( to_json( atom ) );
        nodes.push_back( { { "id", id },
                           { "sequent", { { "lhs", std::move( lhs ) }, { "rhs", std::move( rhs ) } } },
                           { "rule", to_json( node.rule ) } } );
    }

    json buds = json::object();
    for ( const auto& [ bud, companion ] : document.preproof.induction )
        buds[ std::to_string( bud ) ] = companion;

    json metadata = json::object();
    for ( const auto& [ key, value ] : document.metadata )
        metadata[ key ] = value;

    json out{ { "system", std::move( system ) },
              { "nodes", std::move( nodes ) },
              { "root", document.preproof.root },
              { "buds", std::move( buds ) },
              { "metadata", std::move( metadata ) } };
    return out.dump( 2 ) + "\n";
}

ProofDocument load_document( const std::string& path )
{
    std::ifstream in( path, std::ios::binary );
    if ( !in )
        throw std::runtime_error( "cannot open " + path );
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_document( buffer.str() );
}

} // namespace cproof
