#include <xorlin/bounds.hpp>
#include <xorlin/errors.hpp>

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <utility>

namespace xorlin
{

std::optional<std::size_t> lower_bound( code_family family )
{
  auto const k = family.k;
  if ( k < 2u || k > max_family_parameter )
  {
    throw parameter_error( "lower_bound requires parameter in [2, " + std::to_string( max_family_parameter ) + "], got " + std::to_string( k ) );
  }
  std::size_t const p = std::size_t{ 1 } << k;
  switch ( family.tag )
  {
  case code_tag::hadamard:
    return p - k - 1u;
  case code_tag::systematic_punctured_hadamard:
    return p - 2u;
  case code_tag::punctured_hadamard:
    return p - 1u;
  case code_tag::hamming:
    return 2u * p - 3u * k - 2u;
  case code_tag::extended_hamming:
    return 2u * p - 2u * k - 4u;
  case code_tag::shortened_hamming:
    return std::nullopt;
  }
  return std::nullopt;
}

encoder_kind family_encoder( code_tag tag )
{
  switch ( tag )
  {
  case code_tag::hadamard:
    return encoder_kind::p1;
  case code_tag::punctured_hadamard:
    return encoder_kind::p2_nonsys;
  case code_tag::systematic_punctured_hadamard:
    return encoder_kind::p2;
  case code_tag::hamming:
    return encoder_kind::p3;
  case code_tag::extended_hamming:
    return encoder_kind::p4;
  case code_tag::shortened_hamming:
    return encoder_kind::shortened;
  }
  throw parameter_error( "unknown code family" );
}

namespace
{

using mask = std::uint32_t;
using clock_type = std::chrono::steady_clock;

constexpr std::uint32_t absent = std::numeric_limits<std::uint32_t>::max();

unsigned worker_count()
{
  unsigned threads = std::max( 1u, std::thread::hardware_concurrency() );
  if ( auto const* env = std::getenv( "XORLIN_THREADS" ) )
  {
    char* end = nullptr;
    auto const cap = std::strtoul( env, &end, 10 );
    if ( end != env && cap > 0u )
    {
      threads = std::min( threads, static_cast<unsigned>( cap ) );
    }
  }
  return threads;
}

struct shared_control
{
  clock_type::time_point deadline;
  std::atomic<bool> stop{ false };
};

/* One search state: the vectors computed so far and how often each is read. */
class slp_state
{
public:
  slp_state( unsigned n, std::vector<mask> const& targets, shared_control& control )
      : control_( control ),
        index_( std::size_t{ 1 } << n, absent ),
        target_( std::size_t{ 1 } << n, 0u )
  {
    for ( unsigned i = 0; i < n; ++i )
    {
      values_.push_back( mask{ 1 } << i );
      index_[mask{ 1 } << i] = i;
      uses_.push_back( 0u );
    }
    /* zero counts as available so no gate ever produces it */
    index_[0] = absent - 1u;
    for ( auto t : targets )
    {
      target_[t] = 1u;
    }
    for ( auto t : targets )
    {
      if ( index_[t] == absent )
      {
        ++missing_;
      }
    }
  }

  std::size_t missing() const noexcept { return missing_; }
  std::uint64_t explored() const noexcept { return explored_; }
  bool aborted() const noexcept { return aborted_; }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> const& gates() const noexcept { return gates_; }
  std::uint32_t index_of( mask v ) const noexcept { return index_[v]; }

  void push( std::uint32_t i, std::uint32_t j )
  {
    auto const v = values_[i] ^ values_[j];
    note_use( i );
    note_use( j );
    index_[v] = static_cast<std::uint32_t>( values_.size() );
    values_.push_back( v );
    uses_.push_back( 0u );
    gates_.emplace_back( i, j );
    if ( target_[v] )
    {
      --missing_;
    }
    else
    {
      ++unused_;
    }
  }

  void pop()
  {
    auto const [i, j] = gates_.back();
    auto const v = values_.back();
    if ( target_[v] )
    {
      ++missing_;
    }
    else if ( uses_.back() == 0u )
    {
      --unused_;
    }
    gates_.pop_back();
    uses_.pop_back();
    values_.pop_back();
    index_[v] = absent;
    drop_use( j );
    drop_use( i );
  }

  /* a pair producing a missing target, if any; taking it never hurts optimality */
  std::optional<std::pair<std::uint32_t, std::uint32_t>> forced() const
  {
    for ( std::uint32_t j = 1; j < values_.size(); ++j )
    {
      for ( std::uint32_t i = 0; i < j; ++i )
      {
        auto const v = values_[i] ^ values_[j];
        if ( target_[v] && index_[v] == absent )
        {
          return std::make_pair( i, j );
        }
      }
    }
    return std::nullopt;
  }

  /* candidate gates in enumeration order; `ordered` applies the canonical-order rule */
  std::vector<std::pair<std::uint32_t, std::uint32_t>> candidates( std::size_t gates_left, bool ordered ) const
  {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    auto const count = static_cast<std::uint32_t>( values_.size() );
    auto const last = count - 1u;
    bool const only_targets = gates_left == missing_;
    for ( std::uint32_t j = 1; j < count; ++j )
    {
      for ( std::uint32_t i = 0; i < j; ++i )
      {
        auto const v = values_[i] ^ values_[j];
        if ( index_[v] != absent )
        {
          continue;
        }
        if ( target_[v] == 0u )
        {
          if ( only_targets )
          {
            continue;
          }
          /* the new gate must itself be read later */
          auto const freed = static_cast<std::size_t>( unused_after( i ) + unused_after( j ) );
          if ( unused_ - freed + 1u > 2u * ( gates_left - 1u ) )
          {
            continue;
          }
        }
        if ( ordered && i != last && j != last && v < values_[last] )
        {
          continue;
        }
        out.emplace_back( i, j );
      }
    }
    return out;
  }

  bool dfs( std::size_t gates_left, bool ordered )
  {
    if ( ( ++explored_ & 0xfffu ) == 0u && ( control_.stop.load( std::memory_order_relaxed ) || clock_type::now() > control_.deadline ) )
    {
      control_.stop.store( true, std::memory_order_relaxed );
    }
    if ( control_.stop.load( std::memory_order_relaxed ) )
    {
      aborted_ = true;
      return false;
    }
    if ( missing_ == 0u )
    {
      return unused_ == 0u;
    }
    if ( gates_left < missing_ || unused_ > 2u * gates_left )
    {
      return false;
    }
    if ( auto const f = forced() )
    {
      push( f->first, f->second );
      if ( dfs( gates_left - 1u, false ) )
      {
        return true;
      }
      pop();
      return false;
    }
    for ( auto const& [i, j] : candidates( gates_left, ordered ) )
    {
      push( i, j );
      if ( dfs( gates_left - 1u, true ) )
      {
        return true;
      }
      pop();
      if ( aborted_ )
      {
        return false;
      }
    }
    return false;
  }

private:
  /* 1 if reading node i would retire it from the unused count */
  unsigned unused_after( std::uint32_t i ) const
  {
    return uses_[i] == 0u && i >= first_gate() && target_[values_[i]] == 0u ? 1u : 0u;
  }

  std::uint32_t first_gate() const noexcept
  {
    return static_cast<std::uint32_t>( values_.size() - gates_.size() );
  }

  void note_use( std::uint32_t i )
  {
    if ( unused_after( i ) )
    {
      --unused_;
    }
    ++uses_[i];
  }

  void drop_use( std::uint32_t i )
  {
    --uses_[i];
    if ( unused_after( i ) )
    {
      ++unused_;
    }
  }

  shared_control& control_;
  std::vector<mask> values_;
  std::vector<std::uint32_t> uses_;
  std::vector<std::uint32_t> index_;
  std::vector<std::uint8_t> target_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> gates_;
  std::size_t missing_ = 0u;
  std::size_t unused_ = 0u;
  std::uint64_t explored_ = 0u;
  bool aborted_ = false;
};

struct level_outcome
{
  bool found = false;
  bool aborted = false;
  std::uint64_t explored = 0u;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> gates;
};

/* runs one iterative-deepening level; the first branching level is shared among workers */
level_outcome search_level( unsigned n, std::vector<mask> const& targets, std::size_t gates, shared_control& control, unsigned threads )
{
  level_outcome result;
  slp_state root( n, targets, control );
  std::size_t left = gates;
  while ( root.missing() > 0u && left >= root.missing() )
  {
    auto const f = root.forced();
    if ( !f )
    {
      break;
    }
    root.push( f->first, f->second );
    --left;
  }
  ++result.explored;
  if ( root.missing() == 0u )
  {
    result.found = true;
    result.gates = root.gates();
    return result;
  }
  if ( left < root.missing() )
  {
    return result;
  }

  auto const branches = root.candidates( left, false );
  std::vector<std::uint64_t> explored( branches.size(), 0u );
  std::atomic<std::size_t> next{ 0u };
  std::atomic<std::size_t> best{ branches.size() };
  std::mutex lock;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> best_gates;
  std::atomic<bool> aborted{ false };

  auto worker = [&]() {
    while ( true )
    {
      auto const b = next.fetch_add( 1u );
      if ( b >= branches.size() || b > best.load() )
      {
        return;
      }
      slp_state state = root;
      state.push( branches[b].first, branches[b].second );
      bool const ok = state.dfs( left - 1u, true );
      explored[b] = state.explored();
      if ( state.aborted() )
      {
        aborted = true;
        return;
      }
      if ( ok )
      {
        std::lock_guard guard( lock );
        if ( b < best.load() )
        {
          best = b;
          best_gates = state.gates();
        }
        return;
      }
    }
  };

  threads = std::max( 1u, std::min<unsigned>( threads, static_cast<unsigned>( branches.size() ) ) );
  if ( threads == 1u )
  {
    worker();
  }
  else
  {
    std::vector<std::thread> pool;
    for ( unsigned t = 0; t < threads; ++t )
    {
      pool.emplace_back( worker );
    }
    for ( auto& t : pool )
    {
      t.join();
    }
  }

  auto const winner = best.load();
  for ( std::size_t b = 0; b < branches.size() && b <= winner; ++b )
  {
    result.explored += explored[b];
  }
  if ( winner < branches.size() )
  {
    result.found = true;
    result.gates = std::move( best_gates );
  }
  else
  {
    result.aborted = aborted.load();
  }
  return result;
}

} // namespace

search_result slp_min_search( std::span<bit_vec const> targets, unsigned n, search_budget const& budget )
{
  if ( n > max_search_inputs )
  {
    throw parameter_error( "slp_min_search supports at most " + std::to_string( max_search_inputs ) + " inputs, got " + std::to_string( n ) );
  }
  std::vector<mask> wanted;
  std::vector<mask> order;
  for ( auto const& t : targets )
  {
    if ( t.size() != n )
    {
      throw precondition_error( "slp_min_search: target of length " + std::to_string( t.size() ) + " over " + std::to_string( n ) + " inputs" );
    }
    mask m = 0u;
    for ( unsigned i = 0; i < n; ++i )
    {
      if ( t[i] )
      {
        m |= mask{ 1 } << i;
      }
    }
    if ( m == 0u )
    {
      throw precondition_error( "slp_min_search: zero target" );
    }
    order.push_back( m );
    if ( std::find( wanted.begin(), wanted.end(), m ) == wanted.end() )
    {
      wanted.push_back( m );
    }
  }

  shared_control control;
  control.deadline = clock_type::now() + std::chrono::duration_cast<clock_type::duration>( std::chrono::duration<double>( budget.max_seconds ) );

  search_result result;
  std::size_t start = 0u;
  for ( auto m : wanted )
  {
    start += std::has_single_bit( m ) ? 0u : 1u;
  }

  auto const threads = worker_count();
  for ( auto g = start; g <= budget.max_gates; ++g )
  {
    auto level = search_level( n, wanted, g, control, threads );
    result.explored += level.explored;
    if ( level.found )
    {
      circuit c( n );
      for ( auto const& [i, j] : level.gates )
      {
        c.create_xor( i, j );
      }
      /* recover node ids from the vectors the gates compute */
      std::vector<mask> values;
      for ( unsigned i = 0; i < n; ++i )
      {
        values.push_back( mask{ 1 } << i );
      }
      for ( auto const& [i, j] : level.gates )
      {
        values.push_back( values[i] ^ values[j] );
      }
      for ( std::size_t t = 0; t < order.size(); ++t )
      {
        auto const it = std::find( values.begin(), values.end(), order[t] );
        c.add_output( static_cast<node_id>( it - values.begin() ), "t" + std::to_string( t ) );
      }
      result.outcome = search_outcome::found;
      result.solution = std::move( c );
      return result;
    }
    if ( level.aborted || control.stop.load() )
    {
      result.outcome = search_outcome::timed_out;
      return result;
    }
  }
  result.outcome = search_outcome::proven_above;
  return result;
}

std::vector<bit_vec> search_targets( code_family family )
{
  auto const g = family_generator( family );
  std::set<bit_vec> seen;
  std::vector<bit_vec> targets;
  for ( std::size_t c = 0; c < g.cols(); ++c )
  {
    auto column = g.column( c );
    if ( column.weight() < 2u )
    {
      continue;
    }
    if ( seen.insert( column ).second )
    {
      targets.push_back( std::move( column ) );
    }
  }
  return targets;
}

std::optional<std::size_t> tightness_report::searched() const
{
  if ( search && search->outcome == search_outcome::found )
  {
    return search->solution->num_xors();
  }
  return std::nullopt;
}

bool tightness_report::consistent() const
{
  auto const s = searched();
  if ( s && lower && *lower > *s )
  {
    return false;
  }
  if ( s && *s > achieved )
  {
    return false;
  }
  if ( lower && *lower > achieved )
  {
    return false;
  }
  return true;
}

bool tightness_report::tight() const
{
  if ( !lower || *lower != achieved )
  {
    return false;
  }
  auto const s = searched();
  return !search || ( s && *s == achieved );
}

std::string tightness_report::to_string() const
{
  std::string line = "lower=" + ( lower ? std::to_string( *lower ) : std::string( "unknown" ) );
  line += " achieved=" + std::to_string( achieved );
  line += " searched=";
  if ( !search )
  {
    line += "skipped";
  }
  else
  {
    switch ( search->outcome )
    {
    case search_outcome::found:
      line += std::to_string( *searched() );
      break;
    case search_outcome::proven_above:
      line += "above-budget";
      break;
    case search_outcome::timed_out:
      line += "timeout";
      break;
    }
  }
  line += tight() ? " tight=yes" : " tight=no";
  return line;
}

tightness_report verify_tightness( code_family family, search_budget const& budget, bool run_search )
{
  tightness_report report{ family, lower_bound( family ), 0u, std::nullopt };
  report.achieved = stats( optimize( trace( family_encoder( family.tag ), family.k ) ) ).size;
  if ( run_search )
  {
    auto const targets = search_targets( family );
    auto const n = static_cast<unsigned>( family_generator( family ).rows() );
    report.search = slp_min_search( targets, n, budget );
  }
  return report;
}

} // namespace xorlin
