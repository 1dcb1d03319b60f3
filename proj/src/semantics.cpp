#include "epikit/semantics.hpp"

#include "epikit/errors.hpp"

namespace epikit {

EvalContext::EvalContext(const EpistemicModel& model, const ActionModelMap* action_models)
    : epi_(&model), action_models_(action_models) {}

EvalContext::EvalContext(const DynamicModel& model, const ActionModelMap* action_models)
    : epi_(&model.base()), dyn_(&model), action_models_(action_models) {}

bool EvalContext::eval(int world, const FormulaRef& phi) {
  if (world < 0 || world >= epi_->world_count())
    throw UnknownWorld(std::to_string(world));
  roots_.push_back(phi);
  return eval_node(world, phi);
}

bool EvalContext::eval(std::string_view world, const FormulaRef& phi) {
  return eval(epi_->world_index(world), phi);
}

std::vector<std::string> EvalContext::truth_set(const FormulaRef& phi) {
  std::vector<std::string> out;
  std::vector<bool> mask = truth_mask(phi);
  for (int w = 0; w < epi_->world_count(); ++w)
    if (mask[w]) out.push_back(epi_->worlds()[w]);
  return out;
}

std::vector<bool> EvalContext::truth_mask(const FormulaRef& phi) {
  std::vector<bool> mask(epi_->world_count());
  for (int w = 0; w < epi_->world_count(); ++w) mask[w] = eval(w, phi);
  return mask;
}

bool EvalContext::is_valid_in(const FormulaRef& phi) {
  for (int w = 0; w < epi_->world_count(); ++w)
    if (!eval(w, phi)) return false;
  return true;
}

EvalContext& EvalContext::plus_context() {
  if (!plus_ctx_) {
    plus_model_ = std::make_unique<DynamicModel>(update_plus(*dyn_));
    plus_ctx_.reset(new EvalContext(*plus_model_, action_models_));
  }
  return *plus_ctx_;
}

EvalContext& EvalContext::product_context(const std::string& model_name) {
  auto it = products_.find(model_name);
  if (it == products_.end()) {
    if (action_models_ == nullptr) throw UnboundActionModel(model_name);
    auto am = action_models_->find(model_name);
    if (am == action_models_->end()) throw UnboundActionModel(model_name);
    ProductEntry entry;
    entry.model = std::make_unique<EpistemicModel>(product_update(*epi_, am->second));
    entry.ctx.reset(new EvalContext(*entry.model, action_models_));
    it = products_.emplace(model_name, std::move(entry)).first;
  }
  return *it->second.ctx;
}

bool EvalContext::eval_node(int world, const FormulaRef& phi) {
  const Key key{phi.get(), world};
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  bool value = false;
  switch (phi->kind()) {
    case Formula::Kind::atom:
      value = epi_->atom_true(phi->prop(), world);
      break;
    case Formula::Kind::xi: {
      if (dyn_ == nullptr)
        throw FragmentMismatch("xi formulas require a dynamic model");
      value = dyn_->xi_holds(phi->agent(), phi->performed(), phi->confusable(), world);
      break;
    }
    case Formula::Kind::lnot:
      value = !eval_node(world, phi->child());
      break;
    case Formula::Kind::land:
      value = eval_node(world, phi->lhs()) && eval_node(world, phi->rhs());
      break;
    case Formula::Kind::knows: {
      const Partition& p = epi_->partition(phi->agent());
      value = true;
      for (int w = 0; w < epi_->world_count(); ++w) {
        if (p.same_block(world, w) && !eval_node(w, phi->child())) {
          value = false;
          break;
        }
      }
      break;
    }
    case Formula::Kind::update_dyn: {
      if (dyn_ == nullptr)
        throw FragmentMismatch("[s] formulas require a dynamic model");
      // Pre(s) is evaluated in the current model; the update is vacuously
      // true where the action cannot be performed.
      const FormulaRef& pre = dyn_->sig().precondition(phi->action());
      if (!eval_node(world, pre)) {
        value = true;
        break;
      }
      EvalContext& plus = plus_context();
      const std::string name = product_world_name(epi_->worlds()[world], phi->action());
      value = plus.eval(name, phi->child());
      break;
    }
    case Formula::Kind::update_am: {
      if (dyn_ != nullptr)
        throw FragmentMismatch("[A:s] formulas are interpreted over epistemic models only");
      if (action_models_ == nullptr) throw UnboundActionModel(phi->model_name());
      auto am = action_models_->find(phi->model_name());
      if (am == action_models_->end()) throw UnboundActionModel(phi->model_name());
      const FormulaRef& pre = am->second.precondition(phi->action());
      if (!eval_node(world, pre)) {
        value = true;
        break;
      }
      EvalContext& product = product_context(phi->model_name());
      const std::string name = product_world_name(epi_->worlds()[world], phi->action());
      value = product.eval(name, phi->child());
      break;
    }
  }

  memo_.emplace(key, value);
  return value;
}

}  // namespace epikit
