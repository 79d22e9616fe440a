#include "overpart/report.hpp"

#include <array>

namespace overpart {

namespace {

constexpr std::array<std::pair<CheckName, std::string_view>, 10> kCheckNames{{
    {CheckName::th1, "th1"},
    {CheckName::th2, "th2"},
    {CheckName::bk, "bk"},
    {CheckName::abr, "abr"},
    {CheckName::oqbinom, "oqbinom"},
    {CheckName::relation, "relation"},
    {CheckName::cases, "cases"},
    {CheckName::proofchain, "proofchain"},
    {CheckName::chu, "chu"},
    {CheckName::corollary, "corollary"},
}};

}  // namespace

std::string_view to_string(CheckName name) {
  for (const auto& [n, s] : kCheckNames) {
    if (n == name) return s;
  }
  return "unknown";
}

std::optional<CheckName> parse_check_name(std::string_view text) {
  for (const auto& [n, s] : kCheckNames) {
    if (s == text) return n;
  }
  return std::nullopt;
}

std::string_view to_string(Status status) {
  switch (status) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::error: return "error";
  }
  return "error";
}

VerificationReport VerificationReport::pass(IdentityCheck check, std::string message) {
  return {std::move(check), Status::pass, std::nullopt, std::move(message)};
}

VerificationReport VerificationReport::fail(IdentityCheck check, const Mismatch& mismatch, std::string message) {
  return {std::move(check), Status::fail,
          FirstMismatch{mismatch.exponent, to_string(mismatch.lhs), to_string(mismatch.rhs)}, std::move(message)};
}

VerificationReport VerificationReport::error(IdentityCheck check, std::string message) {
  return {std::move(check), Status::error, std::nullopt, std::move(message)};
}

}  // namespace overpart
