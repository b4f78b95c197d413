#pragma once

// Exact verification engine for the seven sum identities relating the full
// counts to the unbreakable counts, plus the inversion that recovers the
// unbreakable sequence from the full one. Checks run either symbolically
// (exact polynomial equality) or under an integer specialization of the
// color variables; failure is reported as data, never thrown.

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cubetile/poly2.hpp"

namespace cubetile {

enum class SequenceBackend { recurrence, dp };

struct IdentityOptions {
  int n_max = 12;
  int k_cap = 4;    // largest multiplier checked in the kn identity
  int kn_cap = 24;  // symbolic-degree budget for the kn identity
  SequenceBackend backend = SequenceBackend::recurrence;
  // Empty: symbolic mode. Otherwise the (a,b) integer specialization.
  std::optional<std::pair<Rational, Rational>> specialization;
};

struct IdentityFailure {
  std::string params;
  Poly2 lhs;
  Poly2 rhs;
};

struct IdentityReport {
  int identity_id = 0;
  std::string params;  // the parameter range that was checked
  bool passed = false;
  std::optional<IdentityFailure> first_failure;
};

/// Full-board counts 0..up_to from the chosen backend.
std::vector<Poly2> full_count_sequence(SequenceBackend backend, int up_to);
/// Unbreakable counts 0..up_to from the chosen backend.
std::vector<Poly2> unbreakable_count_sequence(SequenceBackend backend, int up_to);

/// Recovers the unbreakable counts from the full counts alone by inverting
/// the breakability convolution: X_n = full_n - sum_{i=1}^{n-1} full_i *
/// X_{n-i}, built up from X_1 = full_1. Index 0 of the result is 1.
std::vector<Poly2> unbreakable_from_breakable_prefix(
    std::span<const Poly2> full_counts, int up_to);

/// Single value of the inversion above at index n (n >= 1);
/// full_counts must cover indices 0..n.
Poly2 unbreakable_from_breakable(std::span<const Poly2> full_counts, int n);

/// Checks one identity (1..7) over every parameter tuple in range.
IdentityReport check_identity(int identity_id, const IdentityOptions& options);
IdentityReport check_identity(int identity_id, int n_max);

/// One report per identity; identity 2 passes only if all three of its
/// equivalent formulas hold.
std::vector<IdentityReport> run_all_identities(const IdentityOptions& options);
std::vector<IdentityReport> run_all_identities(int n_max);

}  // namespace cubetile
