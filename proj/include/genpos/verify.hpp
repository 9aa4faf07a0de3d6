#ifndef GENPOS_VERIFY_HPP_
#define GENPOS_VERIFY_HPP_

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "genpos/invariants.hpp"

namespace genpos {

  // Status strings used in reports: exact, lower_bound, fail, skipped.
  struct VerifyEntry {
    std::string                                        spec;
    std::uint64_t                                      order = 0;
    std::string                                        status = "exact";
    std::vector<std::pair<std::string, std::uint64_t>> values;
    std::string                                        note;
  };

  struct VerifyReport {
    std::string              target;
    std::uint64_t            max_order = 0;
    std::vector<VerifyEntry> entries;

    std::size_t count(std::string const& status) const;
    std::size_t violations() const {
      return count("fail");
    }
    // Every entry decided and none failed.
    bool clean() const {
      return count("exact") == entries.size();
    }
  };

  // Brute-force m values keyed by descriptor, shared between sweeps so the
  // same group is not searched twice.
  class MCache {
   public:
    std::optional<MResult> find(std::string const& spec) const;
    void                   store(std::string const& spec, MResult const& r);

   private:
    mutable std::mutex             mu_;
    std::map<std::string, MResult> map_;
  };

  struct VerifyOptions {
    std::uint64_t max_order = 0;  // 0: the target's default
    unsigned      threads   = 1;
    double        group_timeout = 0;  // seconds per search, 0 = unlimited
    MCache*       cache     = nullptr;
  };

  // thm1, remark-m2, lemma24, cor23, chain, frattini-invariance.
  std::vector<std::string> verify_targets();
  std::uint64_t            default_max_order(std::string const& target);

  // Entries come out in corpus order whatever the thread count. Throws
  // PreconditionError for an unknown target.
  VerifyReport verify(std::string const& target, VerifyOptions const& opt);

}  // namespace genpos

#endif  // GENPOS_VERIFY_HPP_
