#include "retailsim/agents/roles.hpp"

namespace retailsim {

std::string_view to_string(RequestKind kind) {
  switch (kind) {
    case RequestKind::till: return "till";
    case RequestKind::help_normal: return "help_normal";
    case RequestKind::help_expert: return "help_expert";
  }
  return "unknown";
}

std::string_view to_string(StaffRole role) {
  switch (role) {
    case StaffRole::cashier: return "cashier";
    case StaffRole::seller_normal: return "seller_normal";
    case StaffRole::seller_expert: return "seller_expert";
    case StaffRole::section_manager: return "section_manager";
  }
  return "unknown";
}

std::optional<StaffRole> parse_staff_role(std::string_view name) {
  for (auto role : kAllStaffRoles) {
    if (to_string(role) == name) return role;
  }
  return std::nullopt;
}

}  // namespace retailsim
