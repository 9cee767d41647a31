#include <xorlin/errors.hpp>
#include <xorlin/gf2.hpp>

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

namespace xorlin
{

namespace
{

std::size_t words_for( std::size_t len )
{
  return ( len + bit_vec::word_bits - 1u ) / bit_vec::word_bits;
}

[[noreturn]] void throw_index( std::size_t i, std::size_t len )
{
  throw std::out_of_range( "bit index " + std::to_string( i ) + " out of range for length " + std::to_string( len ) );
}

} // namespace

/******************************************************************************
 * bit_vec                                                                    *
 ******************************************************************************/

bit_vec::bit_vec( std::size_t len )
    : len_( len ), words_( words_for( len ), 0u )
{
}

bit_vec bit_vec::from_string( std::string_view bits )
{
  bit_vec v( bits.size() );
  for ( std::size_t i = 0; i < bits.size(); ++i )
  {
    if ( bits[i] == '1' )
    {
      v.set( i );
    }
    else if ( bits[i] != '0' )
    {
      throw std::invalid_argument( std::string( "unexpected character '" ) + bits[i] + "' in bit string" );
    }
  }
  return v;
}

bit_vec bit_vec::unit( std::size_t len, std::size_t index )
{
  bit_vec v( len );
  v.set( index );
  return v;
}

bool bit_vec::test( std::size_t i ) const
{
  if ( i >= len_ )
  {
    throw_index( i, len_ );
  }
  return ( *this )[i];
}

void bit_vec::set( std::size_t i, bool value )
{
  if ( i >= len_ )
  {
    throw_index( i, len_ );
  }
  auto const mask = word_type{ 1 } << ( i % word_bits );
  if ( value )
  {
    words_[i / word_bits] |= mask;
  }
  else
  {
    words_[i / word_bits] &= ~mask;
  }
}

void bit_vec::flip( std::size_t i )
{
  if ( i >= len_ )
  {
    throw_index( i, len_ );
  }
  words_[i / word_bits] ^= word_type{ 1 } << ( i % word_bits );
}

std::size_t bit_vec::weight() const noexcept
{
  std::size_t w = 0u;
  for ( auto word : words_ )
  {
    w += static_cast<std::size_t>( std::popcount( word ) );
  }
  return w;
}

bool bit_vec::none() const noexcept
{
  for ( auto word : words_ )
  {
    if ( word != 0u )
    {
      return false;
    }
  }
  return true;
}

bool bit_vec::parity() const noexcept
{
  word_type acc = 0u;
  for ( auto word : words_ )
  {
    acc ^= word;
  }
  return std::popcount( acc ) & 1;
}

bool bit_vec::dot( bit_vec const& other ) const
{
  if ( other.len_ != len_ )
  {
    throw dimension_error( "dot product of vectors with lengths " + std::to_string( len_ ) + " and " + std::to_string( other.len_ ) );
  }
  word_type acc = 0u;
  for ( std::size_t w = 0; w < words_.size(); ++w )
  {
    acc ^= words_[w] & other.words_[w];
  }
  return std::popcount( acc ) & 1;
}

bit_vec bit_vec::concat( bit_vec const& other ) const
{
  bit_vec result( len_ + other.len_ );
  std::copy( words_.begin(), words_.end(), result.words_.begin() );
  for ( std::size_t i = 0; i < other.len_; ++i )
  {
    if ( other[i] )
    {
      result.set( len_ + i );
    }
  }
  return result;
}

bit_vec bit_vec::slice( std::size_t first, std::size_t count ) const
{
  if ( first > len_ || count > len_ - first )
  {
    throw std::out_of_range( "slice exceeds vector length" );
  }
  bit_vec result( count );
  for ( std::size_t i = 0; i < count; ++i )
  {
    if ( ( *this )[first + i] )
    {
      result.set( i );
    }
  }
  return result;
}

bit_vec& bit_vec::operator^=( bit_vec const& other )
{
  if ( other.len_ != len_ )
  {
    throw dimension_error( "xor of vectors with lengths " + std::to_string( len_ ) + " and " + std::to_string( other.len_ ) );
  }
  for ( std::size_t w = 0; w < words_.size(); ++w )
  {
    words_[w] ^= other.words_[w];
  }
  return *this;
}

bit_vec bit_vec::operator~() const
{
  bit_vec result = *this;
  for ( auto& word : result.words_ )
  {
    word = ~word;
  }
  result.clear_tail();
  return result;
}

std::string bit_vec::to_string() const
{
  std::string s( len_, '0' );
  for ( std::size_t i = 0; i < len_; ++i )
  {
    if ( ( *this )[i] )
    {
      s[i] = '1';
    }
  }
  return s;
}

void bit_vec::clear_tail() noexcept
{
  if ( auto const rem = len_ % word_bits; rem != 0u )
  {
    words_.back() &= ( word_type{ 1 } << rem ) - 1u;
  }
}

std::size_t bit_vec_hash::operator()( bit_vec const& v ) const noexcept
{
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ v.size();
  for ( auto word : v.words() )
  {
    h ^= word + 0x9e3779b97f4a7c15ull + ( h << 6u ) + ( h >> 2u );
  }
  return static_cast<std::size_t>( h );
}

/******************************************************************************
 * bit_matrix                                                                 *
 ******************************************************************************/

bit_matrix::bit_matrix( std::size_t rows, std::size_t cols )
    : cols_( cols ), rows_( rows, bit_vec( cols ) )
{
}

bit_matrix bit_matrix::identity( std::size_t n )
{
  bit_matrix m( n, n );
  for ( std::size_t i = 0; i < n; ++i )
  {
    m.rows_[i].set( i );
  }
  return m;
}

bit_matrix bit_matrix::from_rows( std::vector<bit_vec> rows )
{
  bit_matrix m;
  m.cols_ = rows.empty() ? 0u : rows.front().size();
  for ( auto const& r : rows )
  {
    if ( r.size() != m.cols_ )
    {
      throw dimension_error( "rows of unequal length" );
    }
  }
  m.rows_ = std::move( rows );
  return m;
}

bit_matrix bit_matrix::from_columns( std::vector<bit_vec> const& columns, std::size_t rows )
{
  bit_matrix m( rows, columns.size() );
  for ( std::size_t c = 0; c < columns.size(); ++c )
  {
    if ( columns[c].size() != rows )
    {
      throw dimension_error( "column " + std::to_string( c ) + " has length " + std::to_string( columns[c].size() ) );
    }
    for ( std::size_t r = 0; r < rows; ++r )
    {
      if ( columns[c][r] )
      {
        m.rows_[r].set( c );
      }
    }
  }
  return m;
}

bit_matrix bit_matrix::parse( std::string_view text )
{
  std::vector<bit_vec> rows;
  while ( !text.empty() )
  {
    auto const eol = text.find( '\n' );
    if ( eol == std::string_view::npos )
    {
      throw std::invalid_argument( "matrix text must be newline-terminated" );
    }
    auto line = text.substr( 0, eol );
    if ( !line.empty() && line.back() == '\r' )
    {
      line.remove_suffix( 1 );
    }
    rows.push_back( bit_vec::from_string( line ) );
    text.remove_prefix( eol + 1u );
  }
  return from_rows( std::move( rows ) );
}

bool bit_matrix::get( std::size_t r, std::size_t c ) const
{
  return row( r ).test( c );
}

void bit_matrix::set( std::size_t r, std::size_t c, bool value )
{
  if ( r >= rows_.size() )
  {
    throw_index( r, rows_.size() );
  }
  rows_[r].set( c, value );
}

bit_vec const& bit_matrix::row( std::size_t r ) const
{
  if ( r >= rows_.size() )
  {
    throw_index( r, rows_.size() );
  }
  return rows_[r];
}

bit_vec bit_matrix::column( std::size_t c ) const
{
  if ( c >= cols_ )
  {
    throw_index( c, cols_ );
  }
  bit_vec v( rows_.size() );
  for ( std::size_t r = 0; r < rows_.size(); ++r )
  {
    if ( rows_[r][c] )
    {
      v.set( r );
    }
  }
  return v;
}

bit_matrix bit_matrix::transpose() const
{
  bit_matrix t( cols_, rows_.size() );
  for ( std::size_t r = 0; r < rows_.size(); ++r )
  {
    for ( std::size_t c = 0; c < cols_; ++c )
    {
      if ( rows_[r][c] )
      {
        t.rows_[c].set( r );
      }
    }
  }
  return t;
}

bit_matrix bit_matrix::stack( bit_matrix const& below ) const
{
  if ( !rows_.empty() && !below.rows_.empty() && below.cols_ != cols_ )
  {
    throw dimension_error( "stacking matrices with different column counts" );
  }
  auto rows = rows_;
  rows.insert( rows.end(), below.rows_.begin(), below.rows_.end() );
  return from_rows( std::move( rows ) );
}

bit_matrix bit_matrix::select_columns( std::span<std::size_t const> columns ) const
{
  bit_matrix m( rows_.size(), columns.size() );
  for ( std::size_t j = 0; j < columns.size(); ++j )
  {
    if ( columns[j] >= cols_ )
    {
      throw_index( columns[j], cols_ );
    }
    for ( std::size_t r = 0; r < rows_.size(); ++r )
    {
      if ( rows_[r][columns[j]] )
      {
        m.rows_[r].set( j );
      }
    }
  }
  return m;
}

std::string bit_matrix::to_string() const
{
  std::string s;
  s.reserve( rows_.size() * ( cols_ + 1u ) );
  for ( auto const& r : rows_ )
  {
    s += r.to_string();
    s += '\n';
  }
  return s;
}

/******************************************************************************
 * free functions                                                             *
 ******************************************************************************/

bit_vec t_bin( std::uint64_t x, unsigned width )
{
  if ( width < 1u || width > 63u )
  {
    throw parameter_error( "t_bin width must lie in [1, 63], got " + std::to_string( width ) );
  }
  if ( x >> width != 0u )
  {
    throw std::out_of_range( std::to_string( x ) + " does not fit in " + std::to_string( width ) + " bits" );
  }
  bit_vec v( width );
  for ( unsigned j = 0; j < width; ++j )
  {
    if ( ( x >> ( width - 1u - j ) ) & 1u )
    {
      v.set( j );
    }
  }
  return v;
}

std::uint64_t from_bin( bit_vec const& v )
{
  if ( v.size() > 64u )
  {
    throw std::out_of_range( "vector too long to read as a 64-bit integer" );
  }
  std::uint64_t x = 0u;
  for ( std::size_t j = 0; j < v.size(); ++j )
  {
    x = ( x << 1u ) | static_cast<std::uint64_t>( v[j] );
  }
  return x;
}

bit_vec mat_vec_mul( bit_matrix const& m, bit_vec const& v )
{
  if ( v.size() != m.cols() )
  {
    throw dimension_error( "matrix has " + std::to_string( m.cols() ) + " columns, vector has length " + std::to_string( v.size() ) );
  }
  bit_vec result( m.rows() );
  for ( std::size_t r = 0; r < m.rows(); ++r )
  {
    if ( m.row( r ).dot( v ) )
    {
      result.set( r );
    }
  }
  return result;
}

bit_vec vec_mat_mul( bit_vec const& v, bit_matrix const& m )
{
  if ( v.size() != m.rows() )
  {
    throw dimension_error( "matrix has " + std::to_string( m.rows() ) + " rows, vector has length " + std::to_string( v.size() ) );
  }
  bit_vec result( m.cols() );
  for ( std::size_t r = 0; r < m.rows(); ++r )
  {
    if ( v[r] )
    {
      result ^= m.row( r );
    }
  }
  return result;
}

bit_matrix mat_mul( bit_matrix const& a, bit_matrix const& b )
{
  if ( a.cols() != b.rows() )
  {
    throw dimension_error( "inner dimensions " + std::to_string( a.cols() ) + " and " + std::to_string( b.rows() ) + " differ" );
  }
  std::vector<bit_vec> rows;
  rows.reserve( a.rows() );
  for ( std::size_t r = 0; r < a.rows(); ++r )
  {
    rows.push_back( vec_mat_mul( a.row( r ), b ) );
  }
  auto result = bit_matrix::from_rows( std::move( rows ) );
  if ( a.rows() == 0u )
  {
    return bit_matrix( 0u, b.cols() );
  }
  return result;
}

} // namespace xorlin
