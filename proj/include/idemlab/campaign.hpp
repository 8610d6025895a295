#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace idemlab {

  struct CampaignOptions {
    std::size_t max_order = 3;
    std::size_t workers   = 1;
    bool        timing    = false;
  };

  struct CampaignReport {
    std::string    name;
    // false when a counterexample was found or a verified claim failed
    bool           pass = true;
    nlohmann::json body;
  };

  // ld_no_idempotent, remark_asymmetries, minimal_semiring_gap,
  // identity_entailments
  std::vector<std::string> campaign_names();

  // Throws InvalidArgumentError for an unknown name.
  CampaignReport run_campaign(std::string_view       name,
                              CampaignOptions const& options = {});

  // Writes <dir>/<name>.json (creating dir) and returns the path.
  std::filesystem::path write_campaign_report(CampaignReport const&        r,
                                              std::filesystem::path const& dir);

}  // namespace idemlab
