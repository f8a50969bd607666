#include "cproof/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <tuple>

namespace cproof
{

void BuchiAutomaton::add_transition( StateId from, Letter letter, StateId to )
{
    auto& next = transitions[ { from, letter } ];
    if ( std::find( next.begin(), next.end(), to ) == next.end() )
        next.push_back( to );
}

const std::vector< StateId >& BuchiAutomaton::successors( StateId from, Letter letter ) const
{
    static const std::vector< StateId > none;
    const auto it = transitions.find( { from, letter } );
    return it == transitions.end() ? none : it->second;
}

std::string to_string( const Lasso& lasso )
{
    std::string out;
    for ( const auto letter : lasso.stem )
        out += std::to_string( letter ) + " ";
    out += "|";
    for ( const auto letter : lasso.loop )
        out += " " + std::to_string( letter );
    return out;
}

namespace
{

std::vector< Letter > vertex_letters( const NormalizedDigraph& digraph )
{
    std::vector< Letter > letters;
    for ( const auto& [ id, vertex ] : digraph.vertices )
        letters.push_back( id );
    return letters;
}

// Successor vertices with the trace pairs of each edge; a back-link edge
// carries the identity on the bud's antecedent.
std::vector< std::pair< NodeId, std::vector< TracePair > > > out_edges( const NormalizedDigraph& digraph, NodeId id )
{
    std::vector< std::pair< NodeId, std::vector< TracePair > > > edges;
    const auto& vertex = digraph.vertex( id );
    for ( std::size_t i = 0; i < vertex.children.size(); ++i )
        edges.emplace_back( vertex.children[ i ], vertex.steps[ i ] );
    if ( vertex.link )
    {
        std::vector< TracePair > identity;
        for ( const auto& iaa : vertex.sequent.antecedent )
            identity.push_back( { iaa.index, iaa.index, false } );
        edges.emplace_back( *vertex.link, identity );
    }
    return edges;
}

} // namespace

BuchiAutomaton path_automaton( const NormalizedDigraph& digraph )
{
    BuchiAutomaton automaton;
    automaton.alphabet = vertex_letters( digraph );

    std::map< NodeId, StateId > state_of;
    automaton.states = 1;
    automaton.initial = { 0 };
    automaton.accepting = { false };
    for ( const auto letter : automaton.alphabet )
    {
        state_of[ letter ] = automaton.states++;
        automaton.accepting.push_back( true );
    }

    automaton.add_transition( 0, digraph.original_root, state_of.at( digraph.original_root ) );
    for ( const auto& [ id, vertex ] : digraph.vertices )
        for ( const auto& [ next, pairs ] : out_edges( digraph, id ) )
            automaton.add_transition( state_of.at( id ), next, state_of.at( next ) );
    return automaton;
}

BuchiAutomaton trace_automaton( const NormalizedDigraph& digraph )
{
    BuchiAutomaton automaton;
    automaton.alphabet = vertex_letters( digraph );
    automaton.states = 1;
    automaton.initial = { 0 };
    automaton.accepting = { false };

    std::map< NodeId, StateId > watch;
    std::map< std::tuple< NodeId, IaaIndex, bool >, StateId > tracking;
    for ( const auto& [ id, vertex ] : digraph.vertices )
    {
        watch[ id ] = automaton.states++;
        automaton.accepting.push_back( false );
        for ( const auto& iaa : vertex.sequent.antecedent )
            for ( const bool progressed : { false, true } )
            {
                tracking[ { id, iaa.index, progressed } ] = automaton.states++;
                automaton.accepting.push_back( progressed );
            }
    }

    // Entering vertex v either keeps watching or starts a trace at v.
    const auto enter = [ & ]( StateId from, NodeId v ) {
        automaton.add_transition( from, v, watch.at( v ) );
        for ( const auto& iaa : digraph.vertex( v ).sequent.antecedent )
            automaton.add_transition( from, v, tracking.at( { v, iaa.index, false } ) );
    };

    enter( 0, digraph.original_root );
    for ( const auto& [ id, vertex ] : digraph.vertices )
        for ( const auto& [ next, pairs ] : out_edges( digraph, id ) )
        {
            enter( watch.at( id ), next );
            for ( const auto& pair : pairs )
                for ( const bool progressed : { false, true } )
                {
                    const auto from = tracking.find( { id, pair.conclusion_index, progressed } );
                    const auto to = tracking.find( { next, pair.premise_index, pair.progressing } );
                    if ( from != tracking.end() && to != tracking.end() )
                        automaton.add_transition( from->second, next, to->second );
                }
        }
    return automaton;
}

bool accepts( const BuchiAutomaton& automaton, const Lasso& lasso )
{
    if ( lasso.loop.empty() )
        return false;

    // Product of automaton states with word positions; position p reads
    // word[p] and moves to p + 1, wrapping from the end to the loop start.
    std::vector< Letter > word = lasso.stem;
    word.insert( word.end(), lasso.loop.begin(), lasso.loop.end() );
    const auto positions = word.size();
    const auto next_position = [ & ]( std::size_t p ) { return p + 1 < positions ? p + 1 : lasso.stem.size(); };
    const auto key = [ & ]( StateId q, std::size_t p ) { return q * positions + p; };

    std::map< std::size_t, std::vector< std::size_t > > graph;
    std::set< std::size_t > reached;
    std::deque< std::pair< StateId, std::size_t > > queue;
    for ( const auto q : automaton.initial )
        if ( reached.insert( key( q, 0 ) ).second )
            queue.emplace_back( q, 0 );
    while ( !queue.empty() )
    {
        const auto [ q, p ] = queue.front();
        queue.pop_front();
        for ( const auto r : automaton.successors( q, word[ p ] ) )
        {
            const auto np = next_position( p );
            graph[ key( q, p ) ].push_back( key( r, np ) );
            if ( reached.insert( key( r, np ) ).second )
                queue.emplace_back( r, np );
        }
    }

    // Accepting iff some reached accepting node lies on a cycle.
    for ( const auto start : reached )
    {
        if ( !automaton.accepting[ start / positions ] )
            continue;
        std::set< std::size_t > seen;
        std::vector< std::size_t > stack{ start };
        while ( !stack.empty() )
        {
            const auto node = stack.back();
            stack.pop_back();
            const auto it = graph.find( node );
            if ( it == graph.end() )
                continue;
            for ( const auto next : it->second )
            {
                if ( next == start )
                    return true;
                if ( seen.insert( next ).second )
                    stack.push_back( next );
            }
        }
    }
    return false;
}

namespace
{

// Transition profile of a word over one automaton: for every source state,
// the targets reachable while reading the word and, separately, those
// reachable through a run that enters an accepting state.
class relation
{
    std::size_t _n = 0;
    std::size_t _words = 0; // 64-bit words per row
    std::vector< std::uint64_t > _bits; // rows: reach then accepting-reach

public:
    relation() = default;
    explicit relation( std::size_t n ) : _n( n ), _words( ( n + 63 ) / 64 ), _bits( 2 * n * _words, 0 ) {}

    [[nodiscard]] std::size_t size() const { return _n; }
    [[nodiscard]] const std::vector< std::uint64_t >& bits() const { return _bits; }

    [[nodiscard]] bool reach( StateId p, StateId q ) const { return test( row( p, false ), q ); }
    [[nodiscard]] bool reach_accepting( StateId p, StateId q ) const { return test( row( p, true ), q ); }

    void set( StateId p, StateId q, bool accepting )
    {
        _bits[ row( p, false ) + q / 64 ] |= std::uint64_t{ 1 } << ( q % 64 );
        if ( accepting )
            _bits[ row( p, true ) + q / 64 ] |= std::uint64_t{ 1 } << ( q % 64 );
    }

    [[nodiscard]] bool empty() const
    {
        return std::all_of( _bits.begin(), _bits.end(), []( std::uint64_t w ) { return w == 0; } );
    }

    [[nodiscard]] relation then( const relation& next ) const
    {
        relation out( _n );
        for ( StateId p = 0; p < _n; ++p )
        {
            const auto reach_row = row( p, false ), acc_row = row( p, true );
            for ( std::size_t w = 0; w < _words; ++w )
            {
                auto reach_bits = _bits[ reach_row + w ];
                const auto acc_bits = _bits[ acc_row + w ];
                while ( reach_bits )
                {
                    const auto q = w * 64 + static_cast< std::size_t >( __builtin_ctzll( reach_bits ) );
                    reach_bits &= reach_bits - 1;
                    const bool via_accepting = acc_bits >> ( q % 64 ) & 1;
                    const auto next_reach = next.row( q, false ), next_acc = next.row( q, true );
                    for ( std::size_t v = 0; v < _words; ++v )
                    {
                        out._bits[ out.row( p, false ) + v ] |= next._bits[ next_reach + v ];
                        out._bits[ out.row( p, true ) + v ] |=
                                via_accepting ? next._bits[ next_reach + v ] : next._bits[ next_acc + v ];
                    }
                }
            }
        }
        return out;
    }

    friend bool operator==( const relation&, const relation& ) = default;

private:
    [[nodiscard]] std::size_t row( StateId p, bool accepting ) const { return ( 2 * p + ( accepting ? 1 : 0 ) ) * _words; }
    [[nodiscard]] bool test( std::size_t row_start, StateId q ) const
    {
        return _bits[ row_start + q / 64 ] >> ( q % 64 ) & 1;
    }
};

relation letter_relation( const BuchiAutomaton& automaton, Letter letter )
{
    relation r( automaton.states );
    for ( StateId p = 0; p < automaton.states; ++p )
        for ( const auto q : automaton.successors( p, letter ) )
            r.set( p, q, automaton.accepting[ q ] );
    return r;
}

struct profile
{
    relation a;
    relation b;
    std::size_t parent = 0; // profile of the word without its last letter
    Letter last = 0;
    bool has_parent = false;
};

// u.v^omega accepted given g = [u], h = [v] with h idempotent and g.h = g.
bool lasso_accepted( const relation& g, const relation& h, const std::vector< StateId >& initial )
{
    for ( const auto p : initial )
        for ( StateId q = 0; q < g.size(); ++q )
            if ( g.reach( p, q ) && h.reach_accepting( q, q ) )
                return true;
    return false;
}

std::vector< Letter > word_of( const std::vector< profile >& profiles, std::size_t index )
{
    std::vector< Letter > word;
    while ( true )
    {
        word.push_back( profiles[ index ].last );
        if ( !profiles[ index ].has_parent )
            break;
        index = profiles[ index ].parent;
    }
    std::reverse( word.begin(), word.end() );
    return word;
}

} // namespace

InclusionResult buchi_inclusion( const BuchiAutomaton& a, const BuchiAutomaton& b, const InclusionLimits& limits )
{
    if ( a.states + b.states > limits.state_bound )
        throw BoundExceeded( "automata have " + std::to_string( a.states + b.states ) + " states, bound is "
                             + std::to_string( limits.state_bound ) );

    std::vector< Letter > letters = a.alphabet;
    letters.insert( letters.end(), b.alphabet.begin(), b.alphabet.end() );
    std::sort( letters.begin(), letters.end() );
    letters.erase( std::unique( letters.begin(), letters.end() ), letters.end() );

    std::vector< std::pair< relation, relation > > letter_profiles;
    for ( const auto letter : letters )
        letter_profiles.emplace_back( letter_relation( a, letter ), letter_relation( b, letter ) );

    // Words A cannot read at all are useless for counterexamples and are
    // pruned together with all their extensions.
    std::vector< profile > profiles;
    std::map< std::pair< std::vector< std::uint64_t >, std::vector< std::uint64_t > >, std::size_t > known;
    const auto check_limits = [ & ] {
        if ( profiles.size() > limits.profile_bound )
            throw BoundExceeded( "more than " + std::to_string( limits.profile_bound ) + " transition profiles" );
        if ( limits.deadline && std::chrono::steady_clock::now() > *limits.deadline )
            throw BoundExceeded( "oracle deadline passed" );
    };
    const auto intern = [ & ]( relation ra, relation rb, std::optional< std::size_t > parent, Letter last ) {
        if ( ra.empty() )
            return;
        auto key = std::make_pair( ra.bits(), rb.bits() );
        if ( known.contains( key ) )
            return;
        known.emplace( std::move( key ), profiles.size() );
        profiles.push_back( { std::move( ra ), std::move( rb ), parent.value_or( 0 ), last, parent.has_value() } );
        check_limits();
    };

    for ( std::size_t i = 0; i < letters.size(); ++i )
        intern( letter_profiles[ i ].first, letter_profiles[ i ].second, std::nullopt, letters[ i ] );
    for ( std::size_t next = 0; next < profiles.size(); ++next )
        for ( std::size_t i = 0; i < letters.size(); ++i )
        {
            auto ra = profiles[ next ].a.then( letter_profiles[ i ].first );
            auto rb = profiles[ next ].b.then( letter_profiles[ i ].second );
            intern( std::move( ra ), std::move( rb ), next, letters[ i ] );
        }

    InclusionResult result;
    result.profiles = profiles.size();
    for ( std::size_t hi = 0; hi < profiles.size(); ++hi )
    {
        const auto& h = profiles[ hi ];
        if ( !( h.a.then( h.a ) == h.a ) || !( h.b.then( h.b ) == h.b ) )
            continue;
        for ( std::size_t gi = 0; gi < profiles.size(); ++gi )
        {
            const auto& g = profiles[ gi ];
            if ( !lasso_accepted( g.a, h.a, a.initial ) || lasso_accepted( g.b, h.b, b.initial ) )
                continue;
            if ( !( g.a.then( h.a ) == g.a ) || !( g.b.then( h.b ) == g.b ) )
                continue;
            result.included = false;
            result.counterexample = Lasso{ word_of( profiles, gi ), word_of( profiles, hi ) };
            return result;
        }
        check_limits();
    }
    return result;
}

std::size_t default_state_bound()
{
    if ( const char* text = std::getenv( "CPROOF_ORACLE_BOUND" ) )
    {
        char* end = nullptr;
        const auto value = std::strtoull( text, &end, 10 );
        if ( end != text && *end == '\0' && value > 0 )
            return static_cast< std::size_t >( value );
    }
    return 400;
}

GtcResult check_gtc( const ProofDocument& document, InclusionLimits limits )
{
    auto errors = validate_system( document.system );
    const auto more = validate_preproof( document.preproof, document.system );
    errors.insert( errors.end(), more.begin(), more.end() );
    if ( !errors.empty() )
        throw SemanticError( std::move( errors ) );

    const auto digraph = normalize( document.preproof );
    const auto paths = path_automaton( digraph );
    const auto traces = trace_automaton( digraph );

    GtcResult result;
    result.states = paths.states + traces.states;
    try
    {
        const auto inclusion = buchi_inclusion( paths, traces, limits );
        if ( inclusion.included )
        {
            result.status = GtcResult::Status::valid;
        }
        else
        {
            result.status = GtcResult::Status::invalid;
            result.lasso = inclusion.counterexample;
        }
        result.detail = std::to_string( inclusion.profiles ) + " transition profiles";
    }
    catch ( const BoundExceeded& error )
    {
        result.status = GtcResult::Status::bound_exceeded;
        result.detail = error.what();
    }
    return result;
}

GtcResult check_gtc( const ProofDocument& document )
{
    InclusionLimits limits;
    limits.state_bound = default_state_bound();
    return check_gtc( document, limits );
}

} // namespace cproof
