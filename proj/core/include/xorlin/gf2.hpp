/*!
  \file gf2.hpp
  \brief Bit vectors and bit matrices over GF(2)

  Symbols are addressed by zero-based index.  Storage is packed into 64-bit
  words; bits beyond `size()` in the last word are always zero, so word-wise
  equality and hashing are exact.

  The text format for matrices is one row per line made of the characters
  '0' and '1', every line (including the last) terminated by '\n'.
*/

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace xorlin
{

class bit_vec
{
public:
  using word_type = std::uint64_t;
  static constexpr std::size_t word_bits = 64u;

  bit_vec() = default;
  explicit bit_vec( std::size_t len );

  /*! \brief Parses a string of '0'/'1' characters, index 0 first. */
  static bit_vec from_string( std::string_view bits );

  /*! \brief Vector of length `len` with a single one at `index`. */
  static bit_vec unit( std::size_t len, std::size_t index );

  std::size_t size() const noexcept { return len_; }
  bool empty() const noexcept { return len_ == 0u; }

  /* unchecked access */
  bool operator[]( std::size_t i ) const noexcept
  {
    return ( words_[i / word_bits] >> ( i % word_bits ) ) & 1u;
  }

  /* checked access; throws std::out_of_range */
  bool test( std::size_t i ) const;
  void set( std::size_t i, bool value = true );
  void flip( std::size_t i );

  std::size_t weight() const noexcept;
  bool none() const noexcept;
  bool any() const noexcept { return !none(); }

  /*! \brief Parity of the weight, i.e. the GF(2) sum of all symbols. */
  bool parity() const noexcept;

  /*! \brief GF(2) inner product; lengths must agree. */
  bool dot( bit_vec const& other ) const;

  /*! \brief Concatenation `[*this | other]`. */
  bit_vec concat( bit_vec const& other ) const;

  /*! \brief Symbols `[first, first + count)`. */
  bit_vec slice( std::size_t first, std::size_t count ) const;

  bit_vec& operator^=( bit_vec const& other );
  friend bit_vec operator^( bit_vec lhs, bit_vec const& rhs )
  {
    lhs ^= rhs;
    return lhs;
  }
  bit_vec operator~() const;

  bool operator==( bit_vec const& other ) const = default;
  auto operator<=>( bit_vec const& other ) const = default;

  std::string to_string() const;
  std::span<word_type const> words() const noexcept { return words_; }

private:
  void clear_tail() noexcept;

  std::size_t len_ = 0u;
  std::vector<word_type> words_;
};

struct bit_vec_hash
{
  std::size_t operator()( bit_vec const& v ) const noexcept;
};

class bit_matrix
{
public:
  bit_matrix() = default;
  bit_matrix( std::size_t rows, std::size_t cols );

  static bit_matrix identity( std::size_t n );

  /*! \brief Stacks the given rows; all rows must share one length. */
  static bit_matrix from_rows( std::vector<bit_vec> rows );

  /*! \brief Builds a matrix whose columns are the given vectors. */
  static bit_matrix from_columns( std::vector<bit_vec> const& columns, std::size_t rows );

  /*! \brief Parses the repo text format (see file comment). */
  static bit_matrix parse( std::string_view text );

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  bool get( std::size_t r, std::size_t c ) const;
  void set( std::size_t r, std::size_t c, bool value = true );

  bit_vec const& row( std::size_t r ) const;
  bit_vec column( std::size_t c ) const;

  bit_matrix transpose() const;

  /*! \brief Rows of `*this` followed by rows of `below`. */
  bit_matrix stack( bit_matrix const& below ) const;

  /*! \brief Keeps the listed columns, in the given order. */
  bit_matrix select_columns( std::span<std::size_t const> columns ) const;

  bool operator==( bit_matrix const& other ) const = default;

  /*! \brief Renders the repo text format. */
  std::string to_string() const;

private:
  std::size_t cols_ = 0u;
  std::vector<bit_vec> rows_;
};

/*! \brief Binary representation of `x` with `width` symbols, most significant first.

  Throws std::out_of_range unless 0 <= x < 2^width, and parameter_error for
  width outside [1, 63].
*/
bit_vec t_bin( std::uint64_t x, unsigned width );

/*! \brief Inverse of t_bin: reads the vector as an MSB-first integer. */
std::uint64_t from_bin( bit_vec const& v );

/*! \brief Binary-reflected Gray code, `i ^ (i >> 1)`. */
constexpr std::uint64_t brgc( std::uint64_t i ) noexcept
{
  return i ^ ( i >> 1u );
}

/*! \brief M v for an r x c matrix and a length-c column vector. */
bit_vec mat_vec_mul( bit_matrix const& m, bit_vec const& v );

/*! \brief v M for a length-r row vector and an r x c matrix. */
bit_vec vec_mat_mul( bit_vec const& v, bit_matrix const& m );

/*! \brief A B over GF(2). */
bit_matrix mat_mul( bit_matrix const& a, bit_matrix const& b );

} // namespace xorlin
