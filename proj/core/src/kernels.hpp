#pragma once

#include <bit>
#include <cstddef>
#include <span>
#include <vector>

namespace xorlin::kernels
{

/* A backend supplies `signal`, `zero()` and `add(a, b)`; copying a signal is free. */

template<class Backend>
using signals = std::vector<typename Backend::signal>;

template<class Backend>
typename Backend::signal sum( Backend& b, std::span<typename Backend::signal const> items )
{
  if ( items.empty() )
  {
    return b.zero();
  }
  if ( items.size() == 1u )
  {
    return items.front();
  }
  auto const half = items.size() / 2u;
  auto const left = sum( b, items.first( half ) );
  auto const right = sum( b, items.subspan( half ) );
  return b.add( left, right );
}

template<class Backend>
signals<Backend> p1( Backend& b, std::span<typename Backend::signal const> x, unsigned k )
{
  signals<Backend> y{ b.zero(), x[k - 1u] };
  y.reserve( std::size_t{ 1 } << k );
  for ( unsigned level = 2; level <= k; ++level )
  {
    auto const xi = x[k - level];
    auto const half = y.size();
    y.push_back( xi );
    for ( std::size_t j = 1; j < half; ++j )
    {
      y.push_back( b.add( y[j], xi ) );
    }
  }
  return y;
}

template<class Backend>
signals<Backend> p2( Backend& b, std::span<typename Backend::signal const> x, unsigned k )
{
  signals<Backend> y{ x[k], x[k - 1u] };
  y.reserve( std::size_t{ 1 } << k );
  for ( unsigned level = 2; level <= k; ++level )
  {
    auto const t = b.add( x[k - level], x[k] );
    auto const half = y.size();
    /* y[0] = x_k, so y[0] + t is x_{k-level} itself */
    y.push_back( x[k - level] );
    for ( std::size_t j = 1; j < half; ++j )
    {
      y.push_back( b.add( y[j], t ) );
    }
  }
  return y;
}

template<class Backend>
signals<Backend> p2_nonsys( Backend& b, std::span<typename Backend::signal const> x, unsigned k )
{
  signals<Backend> y{ x[k], b.add( x[k], x[k - 1u] ) };
  y.reserve( std::size_t{ 1 } << k );
  for ( unsigned level = 2; level <= k; ++level )
  {
    auto const xi = x[k - level];
    auto const half = y.size();
    for ( std::size_t j = 0; j < half; ++j )
    {
      y.push_back( b.add( y[j], xi ) );
    }
  }
  return y;
}

template<class Backend>
signals<Backend> p3( Backend& b, std::span<typename Backend::signal const> x )
{
  signals<Backend> v( x.begin(), x.end() );
  signals<Backend> p;
  while ( v.size() > 2u )
  {
    auto const h = v.size() / 2u;
    p.push_back( sum( b, std::span<typename Backend::signal const>( v ).subspan( h ) ) );
    for ( std::size_t i = 0; i < h; ++i )
    {
      v[i] = b.add( v[i], v[h + i] );
    }
    v.resize( h );
  }
  p.push_back( v[1] );
  return p;
}

template<class Backend>
signals<Backend> p4( Backend& b, std::span<typename Backend::signal const> x )
{
  signals<Backend> v( x.begin(), x.end() );
  signals<Backend> p;
  while ( v.size() > 2u )
  {
    auto const h = v.size() / 2u;
    auto const alpha = sum( b, std::span<typename Backend::signal const>( v ).subspan( h + 1u ) );
    p.push_back( b.add( v[h], alpha ) );
    v[0] = b.add( v[0], alpha );
    for ( std::size_t i = 1; i < h; ++i )
    {
      v[i] = b.add( v[i], v[h + i] );
    }
    v.resize( h );
  }
  p.push_back( v[1] );
  p.push_back( v[0] );
  return p;
}

template<class Backend>
signals<Backend> gray_hadamard( Backend& b, std::span<typename Backend::signal const> x, unsigned k )
{
  std::size_t const n = std::size_t{ 1 } << k;
  signals<Backend> y;
  y.reserve( n );
  y.push_back( b.zero() );
  for ( std::size_t i = 1; i < n; ++i )
  {
    if ( std::has_single_bit( i + 1u ) )
    {
      y.push_back( x[k - static_cast<unsigned>( std::countr_zero( i + 1u ) )] );
    }
    else
    {
      y.push_back( b.add( y[i - 1u], x[k - 1u - static_cast<unsigned>( std::countr_zero( i ) )] ) );
    }
  }
  return y;
}

template<class Backend>
signals<Backend> gray_punctured( Backend& b, std::span<typename Backend::signal const> x, unsigned k )
{
  std::size_t const n = std::size_t{ 1 } << k;
  signals<Backend> shifted;
  shifted.reserve( k );
  for ( unsigned i = 0; i < k; ++i )
  {
    shifted.push_back( b.add( x[i], x[k] ) );
  }
  signals<Backend> y;
  y.reserve( n );
  y.push_back( x[k] );
  for ( std::size_t i = 1; i < n; ++i )
  {
    if ( std::has_single_bit( i + 1u ) )
    {
      y.push_back( x[k - static_cast<unsigned>( std::countr_zero( i + 1u ) )] );
    }
    else
    {
      y.push_back( b.add( y[i - 1u], shifted[k - 1u - static_cast<unsigned>( std::countr_zero( i ) )] ) );
    }
  }
  return y;
}

template<class Backend>
signals<Backend> shortened( Backend& b, std::span<typename Backend::signal const> msg, unsigned r )
{
  signals<Backend> level( msg.begin(), msg.end() );
  signals<Backend> p;
  signals<Backend> odd;
  for ( unsigned j = 0; j < r; ++j )
  {
    odd.clear();
    for ( std::size_t block = 1; block < level.size(); block += 2u )
    {
      odd.push_back( level[block] );
    }
    p.push_back( sum( b, std::span<typename Backend::signal const>( odd ) ) );

    signals<Backend> next;
    next.reserve( level.size() / 2u );
    for ( std::size_t block = 0; block + 1u < level.size(); block += 2u )
    {
      next.push_back( b.add( level[block], level[block + 1u] ) );
    }
    level = std::move( next );
  }
  p.push_back( level.front() );
  for ( auto& pj : p )
  {
    pj = b.add( pj, msg[0] );
  }
  return p;
}

} // namespace xorlin::kernels
