#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace retailsim {

/// Service a customer can ask for: the till block and the two help levels.
enum class RequestKind : std::uint8_t { till = 0, help_normal = 1, help_expert = 2 };

inline constexpr std::array<RequestKind, 3> kAllRequestKinds = {
    RequestKind::till, RequestKind::help_normal, RequestKind::help_expert};

enum class StaffRole : std::uint8_t {
  cashier = 0,
  seller_normal = 1,
  seller_expert = 2,
  section_manager = 3,
};

inline constexpr std::array<StaffRole, 4> kAllStaffRoles = {
    StaffRole::cashier, StaffRole::seller_normal, StaffRole::seller_expert,
    StaffRole::section_manager};

std::string_view to_string(RequestKind kind);
std::string_view to_string(StaffRole role);
std::optional<StaffRole> parse_staff_role(std::string_view name);

inline constexpr bool is_help(RequestKind kind) { return kind != RequestKind::till; }

}  // namespace retailsim
