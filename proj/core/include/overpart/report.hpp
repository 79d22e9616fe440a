#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "overpart/series.hpp"

namespace overpart {

enum class CheckName { th1, th2, bk, abr, oqbinom, relation, cases, proofchain, chu, corollary };

std::string_view to_string(CheckName name);
std::optional<CheckName> parse_check_name(std::string_view text);

using ParamValue = std::variant<std::int64_t, std::string>;

struct IdentityCheck {
  CheckName name = CheckName::th1;
  /// Kept in insertion order; that order is what reports print.
  std::vector<std::pair<std::string, ParamValue>> params;
  int order = 1;

  friend bool operator==(const IdentityCheck&, const IdentityCheck&) = default;
  friend auto operator<=>(const IdentityCheck&, const IdentityCheck&) = default;
};

enum class Status { pass, fail, error };

std::string_view to_string(Status status);

struct FirstMismatch {
  Exponent exponent = 0;
  std::string lhs;
  std::string rhs;
};

/// Outcome of one check. Invariant: status == fail exactly when
/// first_mismatch is set.
struct VerificationReport {
  IdentityCheck check;
  Status status = Status::pass;
  std::optional<FirstMismatch> first_mismatch;
  std::string message;

  bool passed() const { return status == Status::pass; }

  static VerificationReport pass(IdentityCheck check, std::string message = {});
  static VerificationReport fail(IdentityCheck check, const Mismatch& mismatch, std::string message);
  static VerificationReport error(IdentityCheck check, std::string message);
};

}  // namespace overpart
