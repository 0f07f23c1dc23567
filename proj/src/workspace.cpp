#include "waring/workspace.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>

namespace waring {

namespace fs = std::filesystem;

std::string cache_dir_from_env() {
  const char* v = std::getenv("WARING_CACHE_DIR");
  return v ? std::string(v) : std::string();
}

Workspace::Workspace(WorkspaceOptions opts) : opts_(std::move(opts)) {}

GroupPtr Workspace::group(const std::string& text) {
  GroupSpec spec = GroupSpec::parse(text);
  const std::string key = spec.name();
  std::lock_guard<std::recursive_mutex> lock(mu_);
  if (auto it = groups_.find(key); it != groups_.end()) return it->second;
  GroupPtr G;
  if (spec.is_projective()) {
    OrderSplit o = closed_form_order(spec);
    if (o.order > opts_.cap)
      throw std::length_error(key + " has order " + o.order.str() + " above the enumeration cap " +
                              std::to_string(opts_.cap));
    GroupSpec base = spec;
    base.kind = spec.kind == GroupKind::PSL ? GroupKind::SL : spec.kind == GroupKind::PSU ? GroupKind::SU : GroupKind::Sp;
    GroupPtr& L = groups_[base.name()];
    if (!L) L = Group::build(base, std::max<uint64_t>(opts_.cap, static_cast<uint64_t>(closed_form_order(base).order)));
    G = L->central_quotient();
  } else {
    G = Group::build(spec, opts_.cap);
  }
  groups_[key] = G;
  return G;
}

ClassesPtr Workspace::classes(const std::string& text) {
  GroupPtr G = group(text);
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto& slot = classes_[G->name()];
  if (!slot) slot = ClassDecomposition::compute(G);
  return slot;
}

AlgebraPtr Workspace::algebra(const std::string& text) {
  ClassesPtr D = classes(text);
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto& slot = algebras_[D->group().name()];
  if (!slot) slot = StructureConstants::compute(D, opts_.threads);
  return slot;
}

std::string Workspace::cache_path(const std::string& name) const {
  std::string file;
  for (char c : name) file += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  return (fs::path(opts_.cache_dir) / (file + ".chartab.json")).string();
}

TablePtr Workspace::table(const std::string& text) {
  AlgebraPtr A = algebra(text);
  const std::string name = A->classes().group().name();
  std::lock_guard<std::recursive_mutex> lock(mu_);
  if (auto it = tables_.find(name); it != tables_.end()) return it->second;
  TablePtr T;
  if (!opts_.cache_dir.empty()) {
    std::ifstream in(cache_path(name));
    if (in) {
      try {
        T = table_from_json(nlohmann::json::parse(in), A->classes_ptr());
      } catch (const nlohmann::json::exception&) {
        T = nullptr;
      }
      if (T) ++hits_;
    }
  }
  if (!T) {
    T = dixon_table(*A);
    if (!opts_.cache_dir.empty()) {
      fs::create_directories(opts_.cache_dir);
      const std::string path = cache_path(name), tmp = path + ".tmp";
      {
        std::ofstream out(tmp);
        out << table_to_json(*T).dump() << "\n";
      }
      fs::rename(tmp, path);
      ++writes_;
    }
  }
  tables_[name] = T;
  return T;
}

}  // namespace waring
