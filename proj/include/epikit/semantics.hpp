#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "epikit/action_model.hpp"
#include "epikit/dynamic_model.hpp"
#include "epikit/formula.hpp"
#include "epikit/kripke.hpp"

namespace epikit {

using ActionModelMap = std::map<std::string, ActionModel>;

// Evaluates formulas at the worlds of one model. Holds memoized results and
// lazily built updated models, so nested update operators construct M+ (or a
// product) once per context. Single-owner; share the underlying immutable
// models across contexts instead of sharing a context.
class EvalContext {
public:
  explicit EvalContext(const EpistemicModel& model, const ActionModelMap* action_models = nullptr);
  explicit EvalContext(const DynamicModel& model, const ActionModelMap* action_models = nullptr);

  EvalContext(const EvalContext&) = delete;
  EvalContext& operator=(const EvalContext&) = delete;

  bool eval(int world, const FormulaRef& phi);
  bool eval(std::string_view world, const FormulaRef& phi);

  // Worlds satisfying phi, in model order.
  std::vector<std::string> truth_set(const FormulaRef& phi);
  std::vector<bool> truth_mask(const FormulaRef& phi);

  bool is_valid_in(const FormulaRef& phi);

  const EpistemicModel& model() const { return *epi_; }
  bool is_dynamic() const { return dyn_ != nullptr; }

private:
  const EpistemicModel* epi_;
  const DynamicModel* dyn_ = nullptr;
  const ActionModelMap* action_models_;

  struct Key {
    const Formula* formula;
    int world;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return std::hash<const Formula*>()(k.formula) ^ (std::hash<int>()(k.world) * 0x9e3779b9u);
    }
  };

  std::unordered_map<Key, bool, KeyHash> memo_;
  std::vector<FormulaRef> roots_;  // keeps memoized formulas alive

  // Lazily built updated models and their contexts.
  std::unique_ptr<DynamicModel> plus_model_;
  std::unique_ptr<EvalContext> plus_ctx_;
  struct ProductEntry {
    std::unique_ptr<EpistemicModel> model;
    std::unique_ptr<EvalContext> ctx;
  };
  std::map<std::string, ProductEntry> products_;

  bool eval_node(int world, const FormulaRef& phi);
  EvalContext& plus_context();
  EvalContext& product_context(const std::string& model_name);
};

}  // namespace epikit
