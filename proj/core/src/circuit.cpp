#include <xorlin/circuit.hpp>
#include <xorlin/errors.hpp>

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <compare>
#include <utility>

namespace xorlin
{

namespace
{

constexpr node_id no_node = std::numeric_limits<node_id>::max();

/* 128-bit random linear signature of an encoding vector: inputs get random
   words, XOR gates xor their operands.  Equal vectors give equal
   fingerprints; distinct vectors collide with probability 2^-128. */
struct fingerprint
{
  std::uint64_t lo = 0u;
  std::uint64_t hi = 0u;

  bool zero() const noexcept { return ( lo | hi ) == 0u; }
  fingerprint operator^( fingerprint const& o ) const noexcept { return { lo ^ o.lo, hi ^ o.hi }; }
  bool operator==( fingerprint const& ) const = default;
};

std::uint64_t splitmix64( std::uint64_t& state )
{
  auto z = ( state += 0x9e3779b97f4a7c15ull );
  z = ( z ^ ( z >> 30u ) ) * 0xbf58476d1ce4e5b9ull;
  z = ( z ^ ( z >> 27u ) ) * 0x94d049bb133111ebull;
  return z ^ ( z >> 31u );
}

fingerprint input_fingerprint( std::uint32_t index )
{
  std::uint64_t state = 0x5eed'0f'4a11'0000ull + 2u * static_cast<std::uint64_t>( index );
  auto const lo = splitmix64( state );
  auto const hi = splitmix64( state );
  return { lo, hi };
}

class fingerprinter
{
public:
  fingerprint of_input( std::uint32_t index )
  {
    while ( inputs_.size() <= index )
    {
      inputs_.push_back( input_fingerprint( static_cast<std::uint32_t>( inputs_.size() ) ) );
    }
    return inputs_[index];
  }

private:
  std::vector<fingerprint> inputs_;
};

std::vector<fingerprint> fingerprints( circuit const& c )
{
  fingerprinter fp;
  std::vector<fingerprint> result( c.num_nodes() );
  auto const nodes = c.nodes();
  for ( std::size_t n = 0; n < nodes.size(); ++n )
  {
    auto const& g = nodes[n];
    switch ( g.kind )
    {
    case gate_kind::input:
      result[n] = fp.of_input( g.fanin0 );
      break;
    case gate_kind::constant_zero:
      result[n] = {};
      break;
    case gate_kind::xor_gate:
      result[n] = result[g.fanin0] ^ result[g.fanin1];
      break;
    }
  }
  return result;
}

node_id balanced_xor( circuit& c, std::span<node_id const> items )
{
  if ( items.size() == 1u )
  {
    return items.front();
  }
  auto const half = items.size() / 2u;
  auto const left = balanced_xor( c, items.first( half ) );
  auto const right = balanced_xor( c, items.subspan( half ) );
  return c.create_xor( left, right );
}

std::string escape_label( std::string_view label )
{
  std::string out;
  for ( auto ch : label )
  {
    if ( ch == '"' || ch == '\\' )
    {
      out += '\\';
    }
    out += ch;
  }
  return out;
}

} // namespace

/******************************************************************************
 * circuit                                                                    *
 ******************************************************************************/

circuit::circuit( std::uint32_t num_inputs )
    : num_inputs_( num_inputs )
{
  gates_.reserve( num_inputs );
  for ( std::uint32_t i = 0; i < num_inputs; ++i )
  {
    gates_.push_back( { gate_kind::input, i, 0u } );
  }
}

node_id circuit::input( std::uint32_t index ) const
{
  if ( index >= num_inputs_ )
  {
    throw std::out_of_range( "input " + std::to_string( index ) + " of a circuit with " + std::to_string( num_inputs_ ) + " inputs" );
  }
  return index;
}

node_id circuit::create_zero()
{
  gates_.push_back( { gate_kind::constant_zero, 0u, 0u } );
  return static_cast<node_id>( gates_.size() - 1u );
}

node_id circuit::create_xor( node_id a, node_id b )
{
  if ( a >= gates_.size() || b >= gates_.size() )
  {
    throw std::out_of_range( "xor operand refers to a node that does not exist yet" );
  }
  gates_.push_back( { gate_kind::xor_gate, a, b } );
  ++num_xors_;
  return static_cast<node_id>( gates_.size() - 1u );
}

void circuit::add_output( node_id n, std::string label )
{
  if ( n >= gates_.size() )
  {
    throw std::out_of_range( "output refers to node " + std::to_string( n ) + " which does not exist" );
  }
  outputs_.push_back( { n, std::move( label ) } );
}

gate const& circuit::node( node_id n ) const
{
  if ( n >= gates_.size() )
  {
    throw std::out_of_range( "node " + std::to_string( n ) + " does not exist" );
  }
  return gates_[n];
}

/******************************************************************************
 * analysis                                                                   *
 ******************************************************************************/

bit_vec evaluate( circuit const& c, bit_vec const& x )
{
  if ( x.size() != c.num_inputs() )
  {
    throw dimension_error( "circuit has " + std::to_string( c.num_inputs() ) + " inputs, assignment has length " + std::to_string( x.size() ) );
  }
  auto const nodes = c.nodes();
  std::vector<std::uint8_t> value( nodes.size(), 0u );
  for ( std::size_t n = 0; n < nodes.size(); ++n )
  {
    auto const& g = nodes[n];
    switch ( g.kind )
    {
    case gate_kind::input:
      value[n] = x[g.fanin0];
      break;
    case gate_kind::constant_zero:
      value[n] = 0u;
      break;
    case gate_kind::xor_gate:
      value[n] = value[g.fanin0] ^ value[g.fanin1];
      break;
    }
  }
  bit_vec y( c.num_outputs() );
  auto const outputs = c.outputs();
  for ( std::size_t o = 0; o < outputs.size(); ++o )
  {
    if ( value[outputs[o].node] )
    {
      y.set( o );
    }
  }
  return y;
}

std::vector<std::size_t> node_depths( circuit const& c )
{
  auto const nodes = c.nodes();
  std::vector<std::size_t> depth( nodes.size(), 0u );
  for ( std::size_t n = 0; n < nodes.size(); ++n )
  {
    if ( nodes[n].kind == gate_kind::xor_gate )
    {
      depth[n] = 1u + std::max( depth[nodes[n].fanin0], depth[nodes[n].fanin1] );
    }
  }
  return depth;
}

circuit_stats stats( circuit const& c )
{
  circuit_stats s;
  s.size = c.num_xors();
  auto const depth = node_depths( c );
  for ( auto const& o : c.outputs() )
  {
    s.depth = std::max( s.depth, depth[o.node] );
  }
  return s;
}

std::vector<bit_vec> encoding_vectors( circuit const& c )
{
  auto const nodes = c.nodes();
  std::vector<bit_vec> vectors;
  vectors.reserve( nodes.size() );
  for ( std::size_t n = 0; n < nodes.size(); ++n )
  {
    auto const& g = nodes[n];
    switch ( g.kind )
    {
    case gate_kind::input:
      vectors.push_back( bit_vec::unit( c.num_inputs(), g.fanin0 ) );
      break;
    case gate_kind::constant_zero:
      vectors.emplace_back( c.num_inputs() );
      break;
    case gate_kind::xor_gate:
      vectors.push_back( vectors[g.fanin0] ^ vectors[g.fanin1] );
      break;
    }
  }
  return vectors;
}

bit_matrix output_matrix( circuit const& c, std::span<std::size_t const> selected )
{
  auto const vectors = encoding_vectors( c );
  std::vector<bit_vec> columns;
  columns.reserve( selected.size() );
  for ( auto o : selected )
  {
    if ( o >= c.num_outputs() )
    {
      throw std::out_of_range( "output index " + std::to_string( o ) + " out of range" );
    }
    columns.push_back( vectors[c.outputs()[o].node] );
  }
  return bit_matrix::from_columns( columns, c.num_inputs() );
}

bit_matrix output_matrix( circuit const& c )
{
  std::vector<std::size_t> all( c.num_outputs() );
  std::iota( all.begin(), all.end(), std::size_t{ 0 } );
  return output_matrix( c, all );
}

/******************************************************************************
 * passes                                                                     *
 ******************************************************************************/

circuit merge_duplicates( circuit const& c )
{
  auto const nodes = c.nodes();
  auto const fps = fingerprints( c );
  auto const depth = node_depths( c );

  /* group equal fingerprints; within a group the shallowest, then lowest id, comes first */
  struct key
  {
    std::uint64_t lo, hi;
    std::size_t depth;
    node_id id;
    auto operator<=>( key const& ) const = default;
  };
  std::vector<key> keys( nodes.size() );
  for ( node_id n = 0; n < nodes.size(); ++n )
  {
    keys[n] = { fps[n].lo, fps[n].hi, depth[n], n };
  }
  std::sort( keys.begin(), keys.end() );
  std::vector<node_id> rep_of( nodes.size() );
  node_id rep = no_node;
  for ( std::size_t i = 0; i < keys.size(); ++i )
  {
    if ( i == 0u || keys[i].lo != keys[i - 1u].lo || keys[i].hi != keys[i - 1u].hi )
    {
      rep = keys[i].id;
    }
    rep_of[keys[i].id] = rep;
  }

  circuit result( c.num_inputs() );
  std::vector<node_id> new_id( nodes.size(), no_node );
  for ( std::uint32_t i = 0; i < c.num_inputs(); ++i )
  {
    new_id[i] = i;
  }

  /* operands of a representative have strictly smaller depth than it, and so
     do their representatives; the explicit stack therefore terminates */
  std::vector<node_id> stack;
  for ( node_id n = 0; n < nodes.size(); ++n )
  {
    stack.push_back( rep_of[n] );
    while ( !stack.empty() )
    {
      auto const r = stack.back();
      if ( new_id[r] != no_node )
      {
        stack.pop_back();
        continue;
      }
      auto const& g = nodes[r];
      if ( g.kind == gate_kind::constant_zero )
      {
        new_id[r] = result.create_zero();
        stack.pop_back();
        continue;
      }
      auto const a = rep_of[g.fanin0];
      auto const b = rep_of[g.fanin1];
      if ( new_id[a] == no_node )
      {
        stack.push_back( a );
        continue;
      }
      if ( new_id[b] == no_node )
      {
        stack.push_back( b );
        continue;
      }
      new_id[r] = result.create_xor( new_id[a], new_id[b] );
      stack.pop_back();
    }
  }

  for ( auto const& o : c.outputs() )
  {
    result.add_output( new_id[rep_of[o.node]], o.label );
  }
  return result;
}

circuit fold_constants( circuit const& c )
{
  auto const nodes = c.nodes();
  fingerprinter fp;
  circuit result( c.num_inputs() );
  std::vector<fingerprint> result_fp( c.num_inputs() );
  for ( std::uint32_t i = 0; i < c.num_inputs(); ++i )
  {
    result_fp[i] = fp.of_input( i );
  }

  std::vector<node_id> new_id( nodes.size(), no_node );
  node_id zero = no_node;
  auto zero_node = [&]() {
    if ( zero == no_node )
    {
      zero = result.create_zero();
      result_fp.push_back( {} );
    }
    return zero;
  };

  for ( node_id n = 0; n < nodes.size(); ++n )
  {
    auto const& g = nodes[n];
    switch ( g.kind )
    {
    case gate_kind::input:
      new_id[n] = n;
      break;
    case gate_kind::constant_zero:
      new_id[n] = result.create_zero();
      result_fp.push_back( {} );
      if ( zero == no_node )
      {
        zero = new_id[n];
      }
      break;
    case gate_kind::xor_gate:
    {
      auto const a = new_id[g.fanin0];
      auto const b = new_id[g.fanin1];
      auto const fa = result_fp[a];
      auto const fb = result_fp[b];
      if ( fa.zero() )
      {
        new_id[n] = b;
      }
      else if ( fb.zero() )
      {
        new_id[n] = a;
      }
      else if ( fa == fb )
      {
        new_id[n] = zero_node();
      }
      else
      {
        new_id[n] = result.create_xor( a, b );
        result_fp.push_back( fa ^ fb );
      }
      break;
    }
    }
  }

  for ( auto const& o : c.outputs() )
  {
    result.add_output( new_id[o.node], o.label );
  }
  return result;
}

circuit eliminate_dead( circuit const& c )
{
  auto const nodes = c.nodes();
  std::vector<bool> live( nodes.size(), false );
  for ( auto const& o : c.outputs() )
  {
    live[o.node] = true;
  }
  for ( auto n = nodes.size(); n-- > 0u; )
  {
    if ( live[n] && nodes[n].kind == gate_kind::xor_gate )
    {
      live[nodes[n].fanin0] = true;
      live[nodes[n].fanin1] = true;
    }
  }

  circuit result( c.num_inputs() );
  std::vector<node_id> new_id( nodes.size(), no_node );
  for ( node_id n = 0; n < nodes.size(); ++n )
  {
    auto const& g = nodes[n];
    if ( g.kind == gate_kind::input )
    {
      new_id[n] = n;
    }
    else if ( live[n] )
    {
      new_id[n] = g.kind == gate_kind::constant_zero ? result.create_zero()
                                                     : result.create_xor( new_id[g.fanin0], new_id[g.fanin1] );
    }
  }
  for ( auto const& o : c.outputs() )
  {
    result.add_output( new_id[o.node], o.label );
  }
  return result;
}

circuit optimize( circuit const& c )
{
  auto current = eliminate_dead( merge_duplicates( fold_constants( c ) ) );
  while ( true )
  {
    auto next = eliminate_dead( merge_duplicates( fold_constants( current ) ) );
    /* every pass only removes nodes, so an unchanged count is a fixpoint */
    if ( next.num_nodes() == current.num_nodes() )
    {
      return next;
    }
    current = std::move( next );
  }
}

/******************************************************************************
 * transposition                                                              *
 ******************************************************************************/

circuit transpose_circuit( circuit const& c, std::span<std::size_t const> selected )
{
  auto const nodes = c.nodes();
  auto const outputs = c.outputs();

  for ( auto o : selected )
  {
    if ( o >= outputs.size() )
    {
      throw std::out_of_range( "output index " + std::to_string( o ) + " out of range" );
    }
  }

  std::vector<bool> live( nodes.size(), false );
  for ( auto o : selected )
  {
    live[outputs[o].node] = true;
  }
  for ( auto n = nodes.size(); n-- > 0u; )
  {
    auto const& g = nodes[n];
    if ( !live[n] || g.kind != gate_kind::xor_gate )
    {
      continue;
    }
    if ( nodes[g.fanin0].kind == gate_kind::constant_zero || nodes[g.fanin1].kind == gate_kind::constant_zero )
    {
      throw precondition_error( "transpose_circuit: xor gate " + std::to_string( n ) + " reads a constant" );
    }
    live[g.fanin0] = true;
    live[g.fanin1] = true;
  }
  for ( node_id n = 0; n < nodes.size(); ++n )
  {
    if ( nodes[n].kind == gate_kind::xor_gate && !live[n] )
    {
      throw precondition_error( "transpose_circuit: gate " + std::to_string( n ) + " does not reach a selected output" );
    }
  }

  /* zero columns: a selected output with vanishing encoding vector;
     zero rows: an input whose transposed value vanishes */
  auto const fps = fingerprints( c );
  for ( std::size_t j = 0; j < selected.size(); ++j )
  {
    if ( fps[outputs[selected[j]].node].zero() )
    {
      throw precondition_error( "transpose_circuit: output " + std::to_string( selected[j] ) + " is constant zero (zero column)" );
    }
  }
  {
    fingerprinter fp;
    std::vector<fingerprint> back( nodes.size() );
    for ( std::size_t j = 0; j < selected.size(); ++j )
    {
      back[outputs[selected[j]].node] = back[outputs[selected[j]].node] ^ fp.of_input( static_cast<std::uint32_t>( j ) );
    }
    for ( auto n = nodes.size(); n-- > 0u; )
    {
      if ( nodes[n].kind == gate_kind::xor_gate )
      {
        back[nodes[n].fanin0] = back[nodes[n].fanin0] ^ back[n];
        back[nodes[n].fanin1] = back[nodes[n].fanin1] ^ back[n];
      }
    }
    for ( std::uint32_t i = 0; i < c.num_inputs(); ++i )
    {
      if ( back[i].zero() )
      {
        throw precondition_error( "transpose_circuit: input " + std::to_string( i ) + " does not influence the selected outputs (zero row)" );
      }
    }
  }

  /* users of every node, in a fixed order: selected outputs first, then gates */
  std::vector<std::vector<node_id>> gate_users( nodes.size() );
  std::vector<std::vector<node_id>> output_users( nodes.size() );
  for ( std::size_t j = 0; j < selected.size(); ++j )
  {
    output_users[outputs[selected[j]].node].push_back( static_cast<node_id>( j ) );
  }
  for ( node_id n = 0; n < nodes.size(); ++n )
  {
    if ( nodes[n].kind == gate_kind::xor_gate )
    {
      gate_users[nodes[n].fanin0].push_back( n );
      gate_users[nodes[n].fanin1].push_back( n );
    }
  }

  circuit result( static_cast<std::uint32_t>( selected.size() ) );
  std::vector<node_id> transposed( nodes.size(), no_node );
  std::vector<node_id> sources;
  for ( auto n = nodes.size(); n-- > 0u; )
  {
    if ( !live[n] || nodes[n].kind == gate_kind::constant_zero )
    {
      continue;
    }
    sources.clear();
    for ( auto j : output_users[n] )
    {
      sources.push_back( result.input( j ) );
    }
    for ( auto user : gate_users[n] )
    {
      sources.push_back( transposed[user] );
    }
    transposed[n] = balanced_xor( result, sources );
  }

  for ( std::uint32_t i = 0; i < c.num_inputs(); ++i )
  {
    result.add_output( transposed[i], "z" + std::to_string( i ) );
  }
  return result;
}

circuit transpose_circuit( circuit const& c )
{
  std::vector<std::size_t> all( c.num_outputs() );
  std::iota( all.begin(), all.end(), std::size_t{ 0 } );
  return transpose_circuit( c, all );
}

/******************************************************************************
 * export                                                                     *
 ******************************************************************************/

std::string to_dot( circuit const& c )
{
  std::string dot = "digraph circuit {\n";
  auto const nodes = c.nodes();
  if ( !nodes.empty() || c.num_outputs() != 0u )
  {
    dot += "  rankdir=BT;\n";
  }
  for ( node_id n = 0; n < nodes.size(); ++n )
  {
    auto const& g = nodes[n];
    auto const name = "n" + std::to_string( n );
    switch ( g.kind )
    {
    case gate_kind::input:
      dot += "  " + name + " [shape=box, label=\"x" + std::to_string( g.fanin0 ) + "\"];\n";
      break;
    case gate_kind::constant_zero:
      dot += "  " + name + " [shape=diamond, label=\"0\"];\n";
      break;
    case gate_kind::xor_gate:
      dot += "  " + name + " [shape=circle, label=\"⊕\"];\n";
      dot += "  n" + std::to_string( g.fanin0 ) + " -> " + name + ";\n";
      dot += "  n" + std::to_string( g.fanin1 ) + " -> " + name + ";\n";
      break;
    }
  }
  auto const outputs = c.outputs();
  for ( std::size_t o = 0; o < outputs.size(); ++o )
  {
    auto const name = "o" + std::to_string( o );
    dot += "  " + name + " [shape=plaintext, label=\"" + escape_label( outputs[o].label ) + "\"];\n";
    dot += "  n" + std::to_string( outputs[o].node ) + " -> " + name + ";\n";
  }
  dot += "}\n";
  return dot;
}

} // namespace xorlin
