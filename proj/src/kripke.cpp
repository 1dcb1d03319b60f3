#include "epikit/kripke.hpp"

#include <algorithm>
#include <set>

#include "epikit/errors.hpp"
#include "epikit/semantics.hpp"

namespace epikit {

EpistemicModel::EpistemicModel(std::vector<std::string> worlds, std::vector<std::string> agents,
                               std::vector<Partition> partitions,
                               std::map<std::string, std::vector<bool>> valuation)
    : worlds_(std::move(worlds)),
      agents_(std::move(agents)),
      partitions_(std::move(partitions)),
      valuation_(std::move(valuation)) {
  for (int i = 0; i < world_count(); ++i) {
    if (!world_index_.emplace(worlds_[i], i).second) throw NameCollision(worlds_[i]);
  }
  check_invariants();
}

int EpistemicModel::world_index(std::string_view name) const {
  auto it = world_index_.find(name);
  if (it == world_index_.end()) throw UnknownWorld(std::string(name));
  return it->second;
}

std::optional<int> EpistemicModel::find_world(std::string_view name) const {
  auto it = world_index_.find(name);
  if (it == world_index_.end()) return std::nullopt;
  return it->second;
}

int EpistemicModel::agent_index(std::string_view name) const {
  auto it = std::find(agents_.begin(), agents_.end(), name);
  if (it == agents_.end()) throw UnknownIdentifier(std::string(name), "agent");
  return static_cast<int>(it - agents_.begin());
}

const Partition& EpistemicModel::partition(std::string_view agent) const {
  return partitions_[agent_index(agent)];
}

bool EpistemicModel::has_prop(std::string_view prop) const {
  return valuation_.find(std::string(prop)) != valuation_.end();
}

bool EpistemicModel::atom_true(std::string_view prop, int world) const {
  auto it = valuation_.find(std::string(prop));
  if (it == valuation_.end()) throw UnknownIdentifier(std::string(prop), "prop");
  return it->second[world];
}

void EpistemicModel::check_invariants() const {
  if (worlds_.empty()) throw EmptyModel("epistemic model has no worlds");
  if (partitions_.size() != agents_.size())
    throw ValidationError("one partition per agent required");
  for (std::size_t j = 0; j < agents_.size(); ++j) {
    if (partitions_[j].size() != world_count())
      throw ValidationError("partition for agent '" + agents_[j] + "' does not cover the worlds");
  }
  for (const auto& [prop, mask] : valuation_) {
    if (static_cast<int>(mask.size()) != world_count())
      throw ValidationError("valuation of '" + prop + "' does not match the world count");
  }
}

bool EpistemicModel::operator==(const EpistemicModel& other) const {
  return worlds_ == other.worlds_ && agents_ == other.agents_ &&
         partitions_ == other.partitions_ && valuation_ == other.valuation_;
}

EpistemicModel build_epistemic_model(
    const std::vector<std::string>& worlds, const std::vector<std::string>& agents,
    const std::vector<LabeledEdge>& edges,
    const std::map<std::string, std::vector<std::string>>& valuation) {
  if (worlds.empty()) throw EmptyModel("epistemic model needs at least one world");

  std::map<std::string, int, std::less<>> index;
  for (int i = 0; i < static_cast<int>(worlds.size()); ++i) {
    if (!index.emplace(worlds[i], i).second) throw NameCollision(worlds[i]);
  }

  std::vector<std::vector<std::pair<int, int>>> pairs(agents.size());
  for (const auto& e : edges) {
    auto a = std::find(agents.begin(), agents.end(), e.agent);
    if (a == agents.end()) throw UnknownIdentifier(e.agent, "agent");
    auto from = index.find(e.from);
    if (from == index.end()) throw UnknownWorld(e.from);
    auto to = index.find(e.to);
    if (to == index.end()) throw UnknownWorld(e.to);
    pairs[a - agents.begin()].push_back({from->second, to->second});
  }

  std::vector<Partition> partitions;
  partitions.reserve(agents.size());
  for (std::size_t j = 0; j < agents.size(); ++j)
    partitions.push_back(Partition::from_pairs(static_cast<int>(worlds.size()), pairs[j]));

  std::map<std::string, std::vector<bool>> val;
  for (const auto& [prop, true_worlds] : valuation) {
    std::vector<bool> mask(worlds.size(), false);
    for (const auto& w : true_worlds) {
      auto it = index.find(w);
      if (it == index.end()) throw UnknownWorld(w);
      mask[it->second] = true;
    }
    val.emplace(prop, std::move(mask));
  }

  return EpistemicModel(worlds, agents, std::move(partitions), std::move(val));
}

EpistemicModel restrict_to(const EpistemicModel& m, const std::vector<bool>& keep) {
  std::vector<int> surviving;
  for (int i = 0; i < m.world_count(); ++i)
    if (keep[i]) surviving.push_back(i);
  if (surviving.empty()) throw EmptyRestriction("no world satisfies the restriction");

  std::vector<std::string> worlds;
  worlds.reserve(surviving.size());
  for (int i : surviving) worlds.push_back(m.worlds()[i]);

  std::vector<Partition> partitions;
  for (std::size_t j = 0; j < m.agents().size(); ++j) {
    std::vector<int> raw;
    raw.reserve(surviving.size());
    for (int i : surviving) raw.push_back(m.partition(static_cast<int>(j)).block(i));
    partitions.push_back(Partition::from_block_of(std::move(raw)));
  }

  std::map<std::string, std::vector<bool>> val;
  for (const auto& [prop, mask] : m.valuation()) {
    std::vector<bool> sub;
    sub.reserve(surviving.size());
    for (int i : surviving) sub.push_back(mask[i]);
    val.emplace(prop, std::move(sub));
  }

  return EpistemicModel(std::move(worlds), m.agents(), std::move(partitions), std::move(val));
}

EpistemicModel restrict(const EpistemicModel& m, const FormulaRef& phi) {
  if (!in_fragment(*phi, Fragment::el))
    throw UnsupportedFragment("restrict takes an L_EL formula");
  EvalContext ctx(m);
  return restrict_to(m, ctx.truth_mask(phi));
}

EpistemicModel disjoint_union(const EpistemicModel& m1, const EpistemicModel& m2) {
  if (m1.agents() != m2.agents())
    throw ValidationError("disjoint_union requires identical agent lists");

  std::vector<std::string> worlds = m1.worlds();
  std::set<std::string> taken(worlds.begin(), worlds.end());
  for (const auto& w : m2.worlds()) {
    std::string name = w;
    while (taken.count(name)) name += "'";
    taken.insert(name);
    worlds.push_back(name);
  }

  const int n1 = m1.world_count();
  const int n = n1 + m2.world_count();

  std::vector<Partition> partitions;
  for (std::size_t j = 0; j < m1.agents().size(); ++j) {
    std::vector<int> raw(n);
    const Partition& p1 = m1.partition(static_cast<int>(j));
    const Partition& p2 = m2.partition(static_cast<int>(j));
    for (int i = 0; i < n1; ++i) raw[i] = p1.block(i);
    for (int i = 0; i < m2.world_count(); ++i) raw[n1 + i] = p1.block_count() + p2.block(i);
    partitions.push_back(Partition::from_block_of(std::move(raw)));
  }

  std::map<std::string, std::vector<bool>> val;
  auto mask_of = [](const EpistemicModel& m, const std::string& prop) {
    auto it = m.valuation().find(prop);
    return it == m.valuation().end() ? std::vector<bool>(m.world_count(), false) : it->second;
  };
  std::set<std::string> props;
  for (const auto& [p, _] : m1.valuation()) props.insert(p);
  for (const auto& [p, _] : m2.valuation()) props.insert(p);
  for (const auto& p : props) {
    std::vector<bool> mask = mask_of(m1, p);
    std::vector<bool> mask2 = mask_of(m2, p);
    mask.insert(mask.end(), mask2.begin(), mask2.end());
    val.emplace(p, std::move(mask));
  }

  return EpistemicModel(std::move(worlds), m1.agents(), std::move(partitions), std::move(val));
}

bool bisimilar(const EpistemicModel& m1, std::string_view w1, const EpistemicModel& m2,
               std::string_view w2) {
  if (m1.agents() != m2.agents())
    throw ValidationError("bisimilar requires identical agent lists");
  const int i1 = m1.world_index(w1);
  const int i2 = m1.world_count() + m2.world_index(w2);

  EpistemicModel u = disjoint_union(m1, m2);
  const int n = u.world_count();
  const int agent_count = static_cast<int>(u.agents().size());

  // Initial partition: group by atom profile.
  std::map<std::vector<bool>, int> profile_block;
  std::vector<int> block(n);
  for (int i = 0; i < n; ++i) {
    std::vector<bool> profile;
    for (const auto& [prop, mask] : u.valuation()) profile.push_back(mask[i]);
    auto [it, _] = profile_block.emplace(profile, static_cast<int>(profile_block.size()));
    block[i] = it->second;
  }

  // Refine until stable: two worlds stay together iff, for every agent, their
  // equivalence classes reach the same set of blocks.
  for (;;) {
    std::map<std::pair<int, std::vector<std::set<int>>>, int> sig_block;
    std::vector<int> next(n);
    for (int i = 0; i < n; ++i) {
      std::vector<std::set<int>> reach(agent_count);
      for (int j = 0; j < agent_count; ++j) {
        const Partition& p = u.partition(j);
        for (int k = 0; k < n; ++k)
          if (p.same_block(i, k)) reach[j].insert(block[k]);
      }
      auto key = std::make_pair(block[i], std::move(reach));
      auto [it, _] = sig_block.emplace(std::move(key), static_cast<int>(sig_block.size()));
      next[i] = it->second;
    }
    if (next == block) break;
    block = std::move(next);
  }

  return block[i1] == block[i2];
}

}  // namespace epikit
