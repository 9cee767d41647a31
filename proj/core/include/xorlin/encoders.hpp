/*!
  \file encoders.hpp
  \brief Recursive minimal-XOR encoders for the Hadamard and Hamming families

  Every algorithm exists once, as a kernel generic over its signal type.  The
  functions below run it on bits; `trace` runs the same kernel on circuit
  nodes, so the circuit it returns performs exactly the XORs the bit-level
  encoder performs.  Copies of a signal are wires, never gates.

  Message and parity conventions:

  - p1/gray_hadamard take x of length k, row r of the generator being bit
    k-1-r of the column index;
  - p2/p2_nonsys/gray_punctured take x of length k+1, x_k weighting the extra
    row;
  - p3_parities/p4_parities take the length-2^k vector x of the parity-check
    view, where index 0 and the powers of two are the parity slots;
  - shortened_encode takes the 2^r message bits and returns p_0..p_r.
*/

#pragma once

#include <xorlin/circuit.hpp>
#include <xorlin/gf2.hpp>

#include <cstdint>
#include <string_view>

namespace xorlin
{

bit_vec p1_encode( bit_vec const& x, unsigned k );
bit_vec p2_encode( bit_vec const& x, unsigned k );
bit_vec p2_nonsys_encode( bit_vec const& x, unsigned k );

/*! \brief [p_1, ..., p_k] with p = [0 | H_k] x. */
bit_vec p3_parities( bit_vec const& x, unsigned k );

/*! \brief Spreads 2^k - k - 1 message bits over the non-parity slots of a length-2^k vector. */
bit_vec assemble_hamming_input( bit_vec const& msg, unsigned k );

/*! \brief Codeword of length 2^k - 1 in the column order of pcm_hamming. */
bit_vec hamming_codeword( bit_vec const& msg, unsigned k );

/*! \brief [p_1, ..., p_k, p_{k+1}]; p_{k+1} is the sum of all x_i and all p_i. */
bit_vec p4_parities( bit_vec const& x, unsigned k );

/*! \brief Codeword of length 2^k in the column order of pcm_ext_hamming. */
bit_vec ext_hamming_codeword( bit_vec const& msg, unsigned k );

bit_vec gray_hadamard_encode( bit_vec const& x, unsigned k );
bit_vec gray_punctured_encode( bit_vec const& x, unsigned k );

/*! \brief [p_0, ..., p_r] for the 2^r message bits of the shortened code. */
bit_vec shortened_encode( bit_vec const& msg, unsigned r );

/*! \brief Message followed by shortened_encode, in the column order of pcm_shortened. */
bit_vec shortened_codeword( bit_vec const& msg, unsigned r );

enum class encoder_kind : std::uint8_t
{
  p1,
  p2,
  p2_nonsys,
  p3,
  p4,
  gray_hadamard,
  gray_punctured,
  shortened
};

std::string_view encoder_name( encoder_kind kind );

/*! \brief Circuit performing the encoder's XORs, one gate each.

  p3 and p4 are traced as Hamming encoders: inputs are the 2^k - k - 1
  message bits, the parity slots of x are constant-zero nodes, and the
  outputs are the parities.  All other encoders take their message as
  inputs and output the full codeword (parities for `shortened`).
*/
circuit trace( encoder_kind kind, unsigned k );

} // namespace xorlin
