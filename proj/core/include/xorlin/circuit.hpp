/*!
  \file circuit.hpp
  \brief XOR-only signal-flow graphs and the passes that shrink them

  A circuit is an ordered list of nodes.  The first `num_inputs()` nodes are
  the inputs, in index order; every later node is either the constant zero
  or the XOR of two nodes created before it, so the node order is always a
  topological order.  Outputs are (node, label) pairs and may point at any
  node, including inputs and constants; that is how an output equal to a
  message bit costs no gate.

  Size counts XOR gates only.  Depth is the largest number of XOR gates on a
  path from any input to any output; inputs and constants have depth zero.

  All passes are pure: they return a new circuit and never touch their
  argument.
*/

#pragma once

#include <xorlin/gf2.hpp>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace xorlin
{

using node_id = std::uint32_t;

enum class gate_kind : std::uint8_t
{
  input,
  constant_zero,
  xor_gate
};

struct gate
{
  gate_kind kind;
  /* input: input index; xor: operands; constant: unused */
  node_id fanin0 = 0u;
  node_id fanin1 = 0u;

  bool operator==( gate const& ) const = default;
};

struct circuit_output
{
  node_id node;
  std::string label;

  bool operator==( circuit_output const& ) const = default;
};

class circuit
{
public:
  explicit circuit( std::uint32_t num_inputs = 0u );

  node_id input( std::uint32_t index ) const;
  node_id create_zero();
  node_id create_xor( node_id a, node_id b );
  void add_output( node_id n, std::string label );

  std::uint32_t num_inputs() const noexcept { return num_inputs_; }
  std::size_t num_nodes() const noexcept { return gates_.size(); }
  std::size_t num_outputs() const noexcept { return outputs_.size(); }
  std::size_t num_xors() const noexcept { return num_xors_; }

  gate const& node( node_id n ) const;
  std::span<gate const> nodes() const noexcept { return gates_; }
  std::span<circuit_output const> outputs() const noexcept { return outputs_; }

  bool is_input( node_id n ) const noexcept { return n < num_inputs_; }

  bool operator==( circuit const& ) const = default;

private:
  std::uint32_t num_inputs_ = 0u;
  std::size_t num_xors_ = 0u;
  std::vector<gate> gates_;
  std::vector<circuit_output> outputs_;
};

/*! \brief Output values for one input assignment. */
bit_vec evaluate( circuit const& c, bit_vec const& x );

struct circuit_stats
{
  std::size_t size = 0u;
  std::size_t depth = 0u;

  bool operator==( circuit_stats const& ) const = default;
};

circuit_stats stats( circuit const& c );

/*! \brief XOR depth of every node. */
std::vector<std::size_t> node_depths( circuit const& c );

/*! \brief The vector a with value(n) = x a^T, for every node n.

  Dense: memory is num_nodes * num_inputs bits.
*/
std::vector<bit_vec> encoding_vectors( circuit const& c );

/*! \brief Matrix M (inputs x selected outputs) with outputs = x M. */
bit_matrix output_matrix( circuit const& c, std::span<std::size_t const> selected );
bit_matrix output_matrix( circuit const& c );

/*! \brief Collapses nodes that share an encoding vector.

  The representative of each class is its shallowest member (lowest id on
  ties), so neither size nor depth can grow.  Nodes are re-emitted in
  dependency order; with no duplicates the circuit is returned unchanged.
*/
circuit merge_duplicates( circuit const& c );

/*! \brief Replaces `z ^ v` by `v` when z is constant zero and `a ^ b` by the
    constant when its encoding vector vanishes. */
circuit fold_constants( circuit const& c );

/*! \brief Drops gates and constants that reach no output.  Inputs are kept. */
circuit eliminate_dead( circuit const& c );

/*! \brief fold -> merge -> dead-code, repeated until nothing changes. */
circuit optimize( circuit const& c );

/*! \brief Transposition principle on a linear circuit.

  The selected outputs of `c` compute x -> x M for an i x j matrix M.  The
  result has j inputs (one per selected output, in selection order) and i
  outputs, and computes v -> v M^T.  Every edge is reversed and a node with
  fanout f becomes a balanced tree of f - 1 XORs, so

    size(result) = size(c) + j - i.

  Preconditions (precondition_error otherwise): M has no zero row or
  column, every gate of `c` lies in the fanin cone of a selected output,
  and no XOR reads a constant.
*/
circuit transpose_circuit( circuit const& c, std::span<std::size_t const> selected );
circuit transpose_circuit( circuit const& c );

/*! \brief Graphviz rendering: inputs as boxes, XORs as circles, outputs as plain labels. */
std::string to_dot( circuit const& c );

} // namespace xorlin
