#pragma once
// Memoized groups, class data, structure constants and character tables,
// with an optional on-disk cache for tables.

#include <cstdint>
#include <map>
#include <mutex>
#include <string>

#include "waring/chartab.hpp"
#include "waring/classalg.hpp"
#include "waring/group.hpp"

namespace waring {

struct WorkspaceOptions {
  uint64_t cap = kDefaultCap;
  unsigned threads = 1;
  std::string cache_dir;  // empty disables the table cache
};

// WARING_CACHE_DIR if set, else empty.
std::string cache_dir_from_env();

class Workspace {
 public:
  explicit Workspace(WorkspaceOptions opts = {});

  const WorkspaceOptions& options() const { return opts_; }
  // Projective groups are formed as the central quotient of the memoized
  // linear group. Throws std::length_error above the cap.
  GroupPtr group(const std::string& spec);
  ClassesPtr classes(const std::string& spec);
  AlgebraPtr algebra(const std::string& spec);
  TablePtr table(const std::string& spec);

  uint64_t cache_hits() const { return hits_; }
  uint64_t cache_writes() const { return writes_; }
  std::string cache_path(const std::string& group_name) const;

 private:
  WorkspaceOptions opts_;
  std::recursive_mutex mu_;
  std::map<std::string, GroupPtr> groups_;
  std::map<std::string, ClassesPtr> classes_;
  std::map<std::string, AlgebraPtr> algebras_;
  std::map<std::string, TablePtr> tables_;
  uint64_t hits_ = 0, writes_ = 0;
};

}  // namespace waring
