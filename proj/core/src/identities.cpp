#include "cubetile/identities.hpp"

#include <algorithm>
#include <functional>

#include "cubetile/layer_dp.hpp"
#include "cubetile/recurrences.hpp"

namespace cubetile {

std::vector<Poly2> full_count_sequence(SequenceBackend backend, int up_to) {
  if (backend == SequenceBackend::dp) {
    std::vector<Poly2> out;
    out.reserve(up_to + 1);
    for (int n = 0; n <= up_to; ++n) out.push_back(count_dp(n));
    return out;
  }
  return recurrence_values(recurrence_full(), up_to);
}

std::vector<Poly2> unbreakable_count_sequence(SequenceBackend backend, int up_to) {
  if (backend == SequenceBackend::dp) {
    std::vector<Poly2> out;
    out.reserve(up_to + 1);
    for (int n = 0; n <= up_to; ++n) out.push_back(count_unbreakable_dp(n));
    return out;
  }
  return recurrence_values(recurrence_unbreakable(), up_to);
}

std::vector<Poly2> unbreakable_from_breakable_prefix(
    std::span<const Poly2> full_counts, int up_to) {
  if (up_to < 0 || static_cast<int>(full_counts.size()) <= up_to)
    throw std::invalid_argument(
        "unbreakable_from_breakable: full counts must cover 0..up_to");
  std::vector<Poly2> out;
  out.reserve(up_to + 1);
  out.push_back(Poly2(1));
  for (int n = 1; n <= up_to; ++n) {
    Poly2 value = full_counts[n];
    for (int i = 1; i < n; ++i) value -= full_counts[i] * out[n - i];
    out.push_back(std::move(value));
  }
  return out;
}

Poly2 unbreakable_from_breakable(std::span<const Poly2> full_counts, int n) {
  if (n < 1) throw std::invalid_argument("unbreakable_from_breakable: n >= 1");
  return unbreakable_from_breakable_prefix(full_counts, n).back();
}

namespace {

// The checks are written once over an abstract value type: Poly2 for
// symbolic mode, Rational for integer specializations.
template <typename T>
struct Sequences {
  std::vector<T> R;   // full counts
  std::vector<T> Rt;  // unbreakable counts
};

template <typename T>
struct Failure {
  std::string params;
  T lhs;
  T rhs;
};

template <typename T>
using CheckResult = std::optional<Failure<T>>;

template <typename T>
CheckResult<T> mismatch(std::string params, T lhs, T rhs) {
  if (lhs == rhs) return std::nullopt;
  return Failure<T>{std::move(params), std::move(lhs), std::move(rhs)};
}

template <typename T>
T half_of(const T& value) {
  return value * Rational(1, 2);
}

template <typename T>
CheckResult<T> check_convolution(const Sequences<T>& seq, int n_max) {
  for (int n = 1; n <= n_max; ++n) {
    T rhs{};
    for (int i = 0; i < n; ++i) rhs += seq.R[i] * seq.Rt[n - i];
    if (auto f = mismatch("n=" + std::to_string(n), seq.R[n], rhs)) return f;
  }
  return std::nullopt;
}

template <typename T>
CheckResult<T> check_convolution_variants(const Sequences<T>& seq, int n_max) {
  for (int n = 1; n <= n_max; ++n) {
    const std::string params = "n=" + std::to_string(n);
    T rhs1{};
    for (int i = 1; i <= n; ++i) rhs1 += seq.R[n - i] * seq.Rt[i];
    if (auto f = mismatch(params + " (variant 1)", seq.R[n], rhs1)) return f;

    T sum2{};
    for (int i = 0; i <= n; ++i) sum2 += seq.R[i] * seq.Rt[n - i];
    if (auto f = mismatch(params + " (variant 2)", seq.R[n], half_of(sum2)))
      return f;

    T sum3{};
    for (int i = 0; i <= n; ++i) sum3 += seq.R[n - i] * seq.Rt[i];
    if (auto f = mismatch(params + " (variant 3)", seq.R[n], half_of(sum3)))
      return f;
  }
  return std::nullopt;
}

// Shared right-hand side of the split identities:
// R_n*R_m + sum_{i<=n, j<=m} R_{n-i} R_{m-j} Rt_{i+j}.
template <typename T>
T split_rhs(const Sequences<T>& seq, int n, int m) {
  T rhs = seq.R[n] * seq.R[m];
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= m; ++j)
      rhs += seq.R[n - i] * seq.R[m - j] * seq.Rt[i + j];
  return rhs;
}

template <typename T>
CheckResult<T> check_split(const Sequences<T>& seq, int n_max) {
  for (int n = 1; n <= n_max; ++n)
    for (int m = 1; m <= n_max; ++m) {
      auto f = mismatch("n=" + std::to_string(n) + " m=" + std::to_string(m),
                        seq.R[n + m], split_rhs(seq, n, m));
      if (f) return f;
    }
  return std::nullopt;
}

template <typename T>
CheckResult<T> check_successor(const Sequences<T>& seq, int n_max) {
  for (int n = 1; n <= n_max; ++n) {
    T rhs = seq.R[n] * seq.R[1];
    for (int i = 1; i <= n; ++i) rhs += seq.R[n - i] * seq.Rt[i + 1];
    if (auto f = mismatch("n=" + std::to_string(n), seq.R[n + 1], rhs)) return f;
  }
  return std::nullopt;
}

template <typename T>
CheckResult<T> check_multiples(const Sequences<T>& seq, int n_max, int k_cap,
                               int kn_cap) {
  for (int k = 2; k <= k_cap; ++k)
    for (int n = 1; n <= n_max && k * n <= kn_cap; ++n) {
      auto f = mismatch("k=" + std::to_string(k) + " n=" + std::to_string(n),
                        seq.R[k * n], split_rhs(seq, n, (k - 1) * n));
      if (f) return f;
    }
  return std::nullopt;
}

template <typename T>
CheckResult<T> check_symmetric_split(const Sequences<T>& seq, int n_max) {
  for (int n = 1; n <= n_max; ++n)
    for (int k = 0; k < n; ++k) {
      auto f = mismatch("n=" + std::to_string(n) + " k=" + std::to_string(k),
                        seq.R[2 * n], split_rhs(seq, n - k, n + k));
      if (f) return f;
    }
  return std::nullopt;
}

template <typename T>
CheckResult<T> check_partial_sums(const Sequences<T>& seq, int n_max) {
  for (int n = 1; n <= n_max; ++n) {
    T lhs{};
    for (int i = 1; i <= n; ++i) lhs += seq.R[i];
    T rhs{};
    for (int i = 1; i <= n; ++i) {
      T inner{};
      for (int j = 0; j <= n - i; ++j) inner += seq.R[j];
      rhs += seq.Rt[i] * inner;
    }
    if (auto f = mismatch("n=" + std::to_string(n), lhs, rhs)) return f;
  }
  return std::nullopt;
}

// Highest sequence index each identity touches.
int max_index_needed(int identity_id, const IdentityOptions& o) {
  switch (identity_id) {
    case 1:
    case 2:
    case 7:
      return o.n_max;
    case 3:
    case 6:
      return 2 * o.n_max;
    case 4:
      return o.n_max + 1;
    case 5:
      return std::max(2, std::min(o.kn_cap, o.k_cap * o.n_max));
    default:
      throw std::invalid_argument("identity id must be 1..7");
  }
}

template <typename T>
CheckResult<T> dispatch(int identity_id, const Sequences<T>& seq,
                        const IdentityOptions& o) {
  switch (identity_id) {
    case 1:
      return check_convolution(seq, o.n_max);
    case 2:
      return check_convolution_variants(seq, o.n_max);
    case 3:
      return check_split(seq, o.n_max);
    case 4:
      return check_successor(seq, o.n_max);
    case 5:
      return check_multiples(seq, o.n_max, o.k_cap, o.kn_cap);
    case 6:
      return check_symmetric_split(seq, o.n_max);
    case 7:
      return check_partial_sums(seq, o.n_max);
  }
  throw std::invalid_argument("identity id must be 1..7");
}

std::string describe_range(int identity_id, const IdentityOptions& o) {
  const std::string base = "n<=" + std::to_string(o.n_max);
  std::string params;
  switch (identity_id) {
    case 3:
      params = "n,m<=" + std::to_string(o.n_max);
      break;
    case 5:
      params = base + " k<=" + std::to_string(o.k_cap) +
               " kn<=" + std::to_string(o.kn_cap);
      break;
    case 6:
      params = "0<=k<n<=" + std::to_string(o.n_max);
      break;
    default:
      params = base;
      break;
  }
  if (o.specialization)
    params += " at a=" + o.specialization->first.get_str() +
              " b=" + o.specialization->second.get_str();
  else
    params += " symbolic";
  return params;
}

}  // namespace

IdentityReport check_identity(int identity_id, const IdentityOptions& options) {
  if (options.n_max < 1)
    throw std::invalid_argument("check_identity: n_max >= 1");
  const int up_to = max_index_needed(identity_id, options);
  const std::vector<Poly2> full = full_count_sequence(options.backend, up_to);
  const std::vector<Poly2> unbreakable =
      unbreakable_count_sequence(options.backend, up_to);

  IdentityReport report;
  report.identity_id = identity_id;
  report.params = describe_range(identity_id, options);

  if (options.specialization) {
    const auto& [av, bv] = *options.specialization;
    Sequences<Rational> seq;
    seq.R.reserve(full.size());
    seq.Rt.reserve(unbreakable.size());
    for (const Poly2& p : full) seq.R.push_back(p.eval(av, bv));
    for (const Poly2& p : unbreakable) seq.Rt.push_back(p.eval(av, bv));
    if (auto f = dispatch(identity_id, seq, options)) {
      report.passed = false;
      report.first_failure =
          IdentityFailure{f->params, Poly2(f->lhs), Poly2(f->rhs)};
    } else {
      report.passed = true;
    }
    return report;
  }

  Sequences<Poly2> seq{full, unbreakable};
  if (auto f = dispatch(identity_id, seq, options)) {
    report.passed = false;
    report.first_failure = IdentityFailure{f->params, f->lhs, f->rhs};
  } else {
    report.passed = true;
  }
  return report;
}

IdentityReport check_identity(int identity_id, int n_max) {
  IdentityOptions options;
  options.n_max = n_max;
  return check_identity(identity_id, options);
}

std::vector<IdentityReport> run_all_identities(const IdentityOptions& options) {
  std::vector<IdentityReport> reports;
  reports.reserve(7);
  for (int id = 1; id <= 7; ++id) reports.push_back(check_identity(id, options));
  return reports;
}

std::vector<IdentityReport> run_all_identities(int n_max) {
  IdentityOptions options;
  options.n_max = n_max;
  return run_all_identities(options);
}

}  // namespace cubetile
