/*!
  \file codes.hpp
  \brief Generator and parity-check matrices of Hadamard and Hamming code families

  Naming follows the code, not the matrix symbol: `gen_*` builds a generator
  (rows = message symbols), `pcm_*` a parity-check matrix.  Columns are
  zero-based codeword positions.  Column vectors are written most
  significant bit first (see `t_bin`).
*/

#pragma once

#include <xorlin/gf2.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace xorlin
{

enum class code_tag : std::uint8_t
{
  hadamard,                    /* [2^k, k], columns T(0..2^k-1) */
  punctured_hadamard,          /* [2^k, k+1], hadamard plus all-ones row */
  systematic_punctured_hadamard, /* same code, systematic generator */
  hamming,                     /* [2^k-1, 2^k-k-1] */
  extended_hamming,            /* [2^k, 2^k-k-1] */
  shortened_hamming            /* [2^r+r+1, 2^r], parameter is r */
};

struct code_family
{
  code_tag tag;
  unsigned k;

  bool operator==( code_family const& ) const = default;
};

/*! \brief Stable lowercase name used on the command line (e.g. "sys-punct-hadamard"). */
std::string_view family_name( code_tag tag );

/*! \brief Inverse of family_name; returns nullopt for unknown names. */
std::optional<code_tag> parse_family( std::string_view name );

/* the families whose members are constructed here; k is bounded to keep 2^k addressable */
inline constexpr unsigned max_family_parameter = 30u;

bit_matrix gen_hadamard( unsigned k );
bit_matrix gen_punctured( unsigned k );

/*! \brief E_k: symbol j is 1 iff popcount(j) is even. */
bit_vec e_vector( unsigned k );

/*! \brief The (k+1) x (k+1) row operation turning the punctured generator systematic. */
bit_matrix v_matrix( unsigned k );

bit_matrix gen_systematic_punctured( unsigned k );

bit_matrix pcm_hamming( unsigned k );
bit_matrix pcm_ext_hamming( unsigned k );
bit_matrix pcm_systematic_ext_hamming( unsigned k );

/*! \brief Check matrix of the [2^r + r + 1, 2^r] shortened code.

  Message column 0 is T(2^r - 1); message column i >= 1 is T(2^r + i).
  Parity column 2^r + i is T(2^i), so parity p_i covers the message
  positions with bit i set (plus position 0 for i < r).
*/
bit_matrix pcm_shortened( unsigned r );

/*! \brief Generator of the Hamming code in the column order of pcm_hamming.

  Row m carries message bit m, placed at the m-th position (ascending) whose
  column index plus one is not a power of two.
*/
bit_matrix gen_hamming( unsigned k );

/*! \brief Generator of the extended Hamming code in the column order of pcm_ext_hamming. */
bit_matrix gen_ext_hamming( unsigned k );

/*! \brief Systematic generator [I | A^T] matching pcm_shortened. */
bit_matrix gen_shortened( unsigned r );

/*! \brief Hadamard generator with columns in binary-reflected Gray order. */
bit_matrix gray_gen( unsigned k );

/*! \brief gray_gen plus the row that makes every column weight odd. */
bit_matrix gray_systematic_gen( unsigned k );

/*! \brief Codeword x G computed directly from the generator. */
bit_vec naive_encode( bit_matrix const& g, bit_vec const& x );

/*! \brief Minimum weight over the codewords of every nonzero message.

  Enumerates all 2^rows messages in Gray order.  Throws budget_error when
  rows exceed `max_distance_rows`.
*/
inline constexpr std::size_t max_distance_rows = 20u;
std::size_t min_distance( bit_matrix const& g );

/*! \brief Generator of a family member as used by its encoder. */
bit_matrix family_generator( code_family family );

/*! \brief Parity-check matrix of a family member, when one is defined here. */
std::optional<bit_matrix> family_check_matrix( code_family family );

/*! \brief Codeword positions that carry parities for systematic families. */
std::vector<std::size_t> hamming_parity_positions( unsigned k );

} // namespace xorlin
