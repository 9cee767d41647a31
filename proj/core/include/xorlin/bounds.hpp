/*!
  \file bounds.hpp
  \brief XOR-count lower bounds and an exact minimum-circuit search
*/

#pragma once

#include <xorlin/circuit.hpp>
#include <xorlin/codes.hpp>
#include <xorlin/encoders.hpp>
#include <xorlin/gf2.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace xorlin
{

/*! \brief Minimum XOR count of any encoder for the family member; nullopt when none is known. */
std::optional<std::size_t> lower_bound( code_family family );

/*! \brief Encoder used for a family, traced and optimized to obtain the achieved size. */
encoder_kind family_encoder( code_tag tag );

struct search_budget
{
  std::size_t max_gates = 16u;
  double max_seconds = 60.0;
};

enum class search_outcome : std::uint8_t
{
  found,
  proven_above,
  timed_out
};

struct search_result
{
  search_outcome outcome = search_outcome::timed_out;
  /* set iff outcome is found; inputs are the n variables, outputs the targets in order */
  std::optional<circuit> solution;
  /* search states visited */
  std::uint64_t explored = 0u;
};

/* variables are packed into a machine word during the search */
inline constexpr unsigned max_search_inputs = 16u;

/*! \brief Fewest XOR gates computing every target from n input variables.

  Iterative deepening over the gate count, starting at the number of
  targets that are not input variables.  A target reachable with one gate
  is always taken at once; other gates are enumerated in a canonical order
  and each one must be used by a later gate or be a target.  The result is
  deterministic: worker threads (at most XORLIN_THREADS) only split the
  first branching level, and the lowest successful branch wins.

  Throws precondition_error for a zero target or a length other than n,
  parameter_error when n exceeds max_search_inputs.
*/
search_result slp_min_search( std::span<bit_vec const> targets, unsigned n, search_budget const& budget );

/*! \brief Distinct generator columns that are neither zero nor unit vectors.

  For systematic generators those are exactly the parity columns.
*/
std::vector<bit_vec> search_targets( code_family family );

struct tightness_report
{
  code_family family;
  std::optional<std::size_t> lower;
  std::size_t achieved = 0u;
  std::optional<search_result> search;

  std::optional<std::size_t> searched() const;
  /* lower <= searched <= achieved wherever the values are known */
  bool consistent() const;
  /* achieved equals the lower bound (and the search minimum, when run) */
  bool tight() const;

  /*! \brief "lower=2 achieved=2 searched=2 tight=yes" */
  std::string to_string() const;
};

tightness_report verify_tightness( code_family family, search_budget const& budget, bool run_search );

} // namespace xorlin
